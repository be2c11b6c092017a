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

#ifndef MATCHPOINT_MODEL_GRAPH_H
#define MATCHPOINT_MODEL_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mp {

using VertexId = uint32_t;
using EdgeId = uint32_t;

inline constexpr double kInfiniteBias = std::numeric_limits<double>::infinity();

enum class VertexKind : uint8_t { stabilizer, virtual_boundary };

enum class BoundarySide : uint8_t { none, left, right };

enum class CodeKind : uint8_t { css_x, css_z, xzzx, repetition };

/// Lattice coordinates, scaled by two so that edge midpoints are integral.
struct Position {
    int32_t row = 0;
    int32_t col = 0;
    int32_t round = 0;

    bool operator==(const Position&) const = default;
};

struct Vertex {
    VertexId id = 0;
    VertexKind kind = VertexKind::stabilizer;
    BoundarySide side = BoundarySide::none;
    Position pos;

    bool is_boundary() const {
        return kind == VertexKind::virtual_boundary;
    }
    bool operator==(const Vertex&) const = default;
};

/// An independent error source. `weight` is the negative log-odds of `error_prob`;
/// an edge with probability zero never fires and carries infinite weight.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double error_prob = 0;
    double weight = 0;

    VertexId other(VertexId x) const {
        return x == u ? v : u;
    }
    bool operator==(const Edge&) const = default;
};

struct Incidence {
    EdgeId edge;
    VertexId neighbor;
};

/// -ln(p / (1 - p)). Throws unless p is in [0, 0.5].
double weight_from_probability(double p);

/// Inverse of weight_from_probability.
double probability_from_weight(double w);

std::string to_string(CodeKind kind);
CodeKind code_kind_from_string(const std::string& name);
std::string to_string(BoundarySide side);

/// Weighted graph over stabilizer measurements and virtual boundary vertices.
/// Immutable once constructed.
class ModelGraph {
   public:
    ModelGraph() = default;
    ModelGraph(CodeKind code, int distance, int rounds, std::vector<Vertex> vertices, std::vector<Edge> edges);

    CodeKind code_kind() const {
        return code_;
    }
    int distance() const {
        return distance_;
    }
    int rounds() const {
        return rounds_;
    }
    size_t num_vertices() const {
        return vertices_.size();
    }
    size_t num_edges() const {
        return edges_.size();
    }
    size_t num_stabilizers() const {
        return num_stabilizers_;
    }
    const Vertex& vertex(VertexId v) const {
        return vertices_[v];
    }
    const Edge& edge(EdgeId e) const {
        return edges_[e];
    }
    const std::vector<Vertex>& vertices() const {
        return vertices_;
    }
    const std::vector<Edge>& edges() const {
        return edges_;
    }
    std::span<const Incidence> incident(VertexId v) const {
        return {adjacency_.data() + adjacency_start_[v], adjacency_.data() + adjacency_start_[v + 1]};
    }
    bool is_boundary(VertexId v) const {
        return vertices_[v].is_boundary();
    }
    BoundarySide side(VertexId v) const {
        return vertices_[v].side;
    }
    /// Largest finite edge weight (0 when there is none).
    double max_finite_weight() const;

    bool operator==(const ModelGraph& other) const;

   private:
    CodeKind code_ = CodeKind::repetition;
    int distance_ = 0;
    int rounds_ = 1;
    size_t num_stabilizers_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<size_t> adjacency_start_;
    std::vector<Incidence> adjacency_;
};

struct CssGraphs {
    ModelGraph x;  ///< X errors, detected by Z-type ancillas, left/right boundaries.
    ModelGraph z;  ///< Z errors, detected by X-type ancillas, top boundary as left, bottom as right.
};

/// Unrotated CSS patch of odd distance >= 3.
CssGraphs build_css(int distance, double error_prob_x, double error_prob_z);

/// XZZX code capacity graph for the sector whose dominant errors form horizontal chains.
/// Vertical edges carry probability error_prob_z / bias and are omitted for infinite bias.
ModelGraph build_xzzx(int distance, double error_prob_z, double bias = kInfiniteBias);

/// Repetition code chain with one probability per data qubit (`distance` of them).
ModelGraph build_repetition(int distance, std::span<const double> per_edge_probs);
ModelGraph build_repetition(int distance, double error_prob);

/// Stacks `rounds` copies of a single-round graph and links each stabilizer to its
/// next-round copy with a measurement-error edge.
ModelGraph build_phenomenological(const ModelGraph& base, int rounds, double meas_error_prob);

/// Same structure, new weights; probabilities are re-derived from the weights.
ModelGraph reweighted(const ModelGraph& graph, std::span<const double> weights);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const ModelGraph& graph);

}  // namespace mp

#endif
