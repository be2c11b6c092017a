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

#ifndef MATCHPOINT_UNION_FIND_H
#define MATCHPOINT_UNION_FIND_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"

namespace mp {

enum class UfMode : uint8_t { real_weighted, integer_weighted };
enum class GraphVariant : uint8_t { decoding_graph, syndrome_graph };

const char* to_string(UfMode mode);

struct UfConfig {
    UfMode mode = UfMode::real_weighted;
    /// Integer scale. Required in integer mode; in real mode it grows on the same
    /// quantized weights.
    std::optional<int64_t> w_max;
    GraphVariant variant = GraphVariant::decoding_graph;
    bool record_trace = false;
};

/// Final or intermediate cluster. `defects` holds model-graph vertex ids.
struct UfCluster {
    std::vector<uint32_t> defects;
    uint32_t num_vertices = 0;
    bool touches_left = false;
    bool touches_right = false;

    bool odd() const {
        return defects.size() % 2 == 1;
    }
    bool attached() const {
        return touches_left && touches_right;
    }
    bool operator==(const UfCluster&) const = default;
};

/// Cluster state after one growth step that changed the clusters.
struct UfCheckpoint {
    double sigma = 0;
    std::vector<UfCluster> clusters;
    /// Decoding graph: covered fraction of each edge. Syndrome graph: ball radius of
    /// each defect.
    std::vector<double> growth;
};

struct UfTrace {
    std::vector<UfCheckpoint> checkpoints;
    /// Scale from growth units to the original weight units.
    double scale = 1;
};

struct UfResult {
    ErrorPattern correction;
    std::vector<UfCluster> clusters;
    /// Syndrome-graph variant: the peeled syndrome-graph edges (defect indices).
    std::vector<SyndromeEdge> selection;
    UfTrace trace;
    size_t steps = 0;
};

/// floor(w / W * w_max), clamped to at least 1, where W is the largest finite weight.
/// Absent (infinite-weight) edges map to 0.
std::vector<int64_t> integer_weights(const ModelGraph& graph, int64_t w_max);

/// Union-Find decoder on the decoding graph. Clusters start at defects and grow while
/// odd and free of boundary vertices; the correction is peeled from the grown edges.
class UnionFindDecoder {
   public:
    UnionFindDecoder(const ModelGraph& graph, UfConfig cfg = {});

    void load(const Syndrome& syndrome);
    bool can_grow() const;
    /// Grows every growable cluster by one step and returns the increment in growth
    /// units (0.5 in integer mode). Throws when nothing can grow.
    double grow_step();
    /// Peels the correction once growth has stopped.
    UfResult finish();
    UfResult decode(const Syndrome& syndrome);

    const std::vector<double>& weights() const {
        return weights_;
    }
    std::vector<UfCluster> clusters();

   private:
    uint32_t find(uint32_t v);
    void unite(uint32_t a, uint32_t b);
    bool growing(uint32_t root) const;
    void absorb(VertexId v, uint32_t root);
    void checkpoint();

    const ModelGraph& graph_;
    UfConfig cfg_;
    std::vector<double> weights_;
    double tol_ = 0;
    double scale_ = 1;

    std::vector<uint8_t> is_defect_;
    std::vector<int64_t> owner_;  // union-find parent, -1 when unreached
    std::vector<uint32_t> size_;
    std::vector<uint8_t> parity_;
    std::vector<uint8_t> left_;
    std::vector<uint8_t> right_;
    std::vector<std::vector<VertexId>> members_;
    std::vector<std::array<double, 2>> covered_;  // from the u side, from the v side
    std::vector<uint8_t> full_;
    std::vector<VertexId> defects_;
    double sigma_ = 0;
    size_t steps_ = 0;
    UfTrace trace_;
};

UfResult decode_uf(const ModelGraph& graph, const Syndrome& syndrome, const UfConfig& cfg = {});

/// Union-Find growth on the syndrome graph: each defect carries a ball radius that
/// grows while its cluster is growable; two defects touch once their radii cover the
/// pair weight, a defect touches a boundary once its radius covers the port weight.
UfResult decode_uf_on_syndrome_graph(const SyndromeGraph& sg, const UfConfig& cfg = {});

}  // namespace mp

#endif
