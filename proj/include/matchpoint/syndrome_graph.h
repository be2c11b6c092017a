// Copyright 2026 Matchpoint Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHPOINT_SYNDROME_GRAPH_H
#define MATCHPOINT_SYNDROME_GRAPH_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"

namespace mp {

inline constexpr int32_t kLeftBoundary = -1;
inline constexpr int32_t kRightBoundary = -2;
inline constexpr int32_t kUnmatched = -3;

inline int32_t boundary_code(BoundarySide side) {
    return side == BoundarySide::left ? kLeftBoundary : kRightBoundary;
}
inline BoundarySide boundary_side_of(int32_t code) {
    return code == kLeftBoundary ? BoundarySide::left : code == kRightBoundary ? BoundarySide::right : BoundarySide::none;
}

/// Minimum-weight connection from a defect to the nearest virtual vertex of one side.
struct BoundaryPort {
    VertexId boundary = 0;
    double weight = 0;
    std::vector<EdgeId> path;
};

/// Which predecessor Dijkstra keeps when two shortest paths tie.
enum class WitnessTieBreak : uint8_t { smallest_id, largest_id };

/// Edge of the syndrome graph: defect pair (a, b) with b >= 0, or a boundary port of
/// defect a with b = kLeftBoundary / kRightBoundary.
struct SyndromeEdge {
    uint32_t a = 0;
    int32_t b = 0;

    bool is_boundary() const {
        return b < 0;
    }
    bool operator==(const SyndromeEdge&) const = default;
    auto operator<=>(const SyndromeEdge&) const = default;
};

/// Complete weighted graph over the defects of one syndrome. Defects are addressed by
/// their index 0..n-1; `defect(i)` gives the model-graph vertex.
class SyndromeGraph {
   public:
    SyndromeGraph() = default;

    /// Builds an instance directly from weights (row-major n x n, symmetric). Ports with
    /// infinite weight are absent. No witness paths are attached.
    static SyndromeGraph from_weights(
        size_t n,
        std::vector<double> pair_weights,
        std::vector<double> left_ports,
        std::vector<double> right_ports,
        std::vector<Position> positions = {});

    size_t num_defects() const {
        return defects_.size();
    }
    VertexId defect(size_t i) const {
        return defects_[i];
    }
    const std::vector<VertexId>& defects() const {
        return defects_;
    }
    double weight(size_t i, size_t j) const {
        return weights_[i * defects_.size() + j];
    }
    const std::vector<EdgeId>& witness(size_t i, size_t j) const;
    const std::optional<BoundaryPort>& port(size_t i, BoundarySide side) const {
        return side == BoundarySide::left ? left_[i] : right_[i];
    }
    /// Infinite when the side is unreachable.
    double port_weight(size_t i, BoundarySide side) const;
    double boundary_weight(size_t i) const;
    /// Cheaper port side, left on ties; none when no boundary is reachable.
    BoundarySide nearest_side(size_t i) const;
    double edge_weight(const SyndromeEdge& e) const;
    const Position& position(size_t i) const {
        return positions_[i];
    }
    bool has_witnesses() const {
        return has_witnesses_;
    }
    double max_finite_weight() const;

   private:
    friend SyndromeGraph build_syndrome_graph(const ModelGraph&, const Syndrome&, WitnessTieBreak);

    std::vector<VertexId> defects_;
    std::vector<Position> positions_;
    std::vector<double> weights_;
    std::vector<std::vector<EdgeId>> witnesses_;  // upper triangle, i < j
    std::vector<std::optional<BoundaryPort>> left_;
    std::vector<std::optional<BoundaryPort>> right_;
    bool has_witnesses_ = false;
};

/// Single-source shortest paths from every defect. Throws if a defect is not a
/// stabilizer of `graph`.
SyndromeGraph build_syndrome_graph(
    const ModelGraph& graph, const Syndrome& syndrome, WitnessTieBreak tie_break = WitnessTieBreak::smallest_id);

/// Perfect-matching candidate over a syndrome graph. mate[i] is the partner index,
/// kLeftBoundary / kRightBoundary, or kUnmatched.
struct Matching {
    std::vector<int32_t> mate;

    bool is_perfect() const;
    /// Each pair once (a < b), then boundary ports, in defect order.
    std::vector<SyndromeEdge> edges() const;
    bool operator==(const Matching&) const = default;
};

double matching_weight(const SyndromeGraph& sg, const Matching& matching);

/// GF(2) sum of the witness paths of the selected edges.
ErrorPattern expand(const SyndromeGraph& sg, std::span<const SyndromeEdge> selection);
ErrorPattern expand(const SyndromeGraph& sg, const Matching& matching);

}  // namespace mp

#endif
