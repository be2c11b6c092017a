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

#include "matchpoint/noise.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mp {

const char* to_string(LogicalClass c) {
    switch (c) {
        case LogicalClass::not_logical_operator:
            return "not_logical_operator";
        case LogicalClass::trivial_logical:
            return "trivial_logical";
        case LogicalClass::nontrivial_logical:
            return "nontrivial_logical";
    }
    return "?";
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ErrorPattern sample_iid(const ModelGraph& graph, uint64_t seed) {
    Rng rng(seed);
    return sample_iid(graph, rng);
}

ErrorPattern sample_iid(const ModelGraph& graph, Rng& rng) {
    std::vector<uint32_t> flipped;
    for (size_t e = 0; e < graph.num_edges(); ++e) {
        if (uniform01(rng) < graph.edge(static_cast<EdgeId>(e)).error_prob) {
            flipped.push_back(static_cast<uint32_t>(e));
        }
    }
    return ErrorPattern(std::move(flipped));
}

ErrorPattern sample_bernoulli(std::span<const double> probs, Rng& rng) {
    std::vector<uint32_t> flipped;
    for (size_t e = 0; e < probs.size(); ++e) {
        if (uniform01(rng) < probs[e]) {
            flipped.push_back(static_cast<uint32_t>(e));
        }
    }
    return ErrorPattern(std::move(flipped));
}

namespace {

void check_edge(const ModelGraph& graph, uint32_t e) {
    if (e >= graph.num_edges()) {
        throw std::out_of_range("unknown edge id " + std::to_string(e));
    }
}

}  // namespace

Syndrome syndrome_of(const ModelGraph& graph, const ErrorPattern& pattern) {
    std::vector<uint32_t> hits;
    hits.reserve(2 * pattern.size());
    for (uint32_t e : pattern) {
        check_edge(graph, e);
        const Edge& edge = graph.edge(e);
        if (!graph.is_boundary(edge.u)) {
            hits.push_back(edge.u);
        }
        if (!graph.is_boundary(edge.v)) {
            hits.push_back(edge.v);
        }
    }
    return Syndrome(std::move(hits));
}

Parity parity_of(const ModelGraph& graph, const ErrorPattern& pattern) {
    Parity out;
    for (uint32_t e : pattern) {
        check_edge(graph, e);
        const Edge& edge = graph.edge(e);
        for (VertexId v : {edge.u, edge.v}) {
            if (graph.side(v) == BoundarySide::left) {
                out.left = !out.left;
            } else if (graph.side(v) == BoundarySide::right) {
                out.right = !out.right;
            }
        }
    }
    return out;
}

LogicalClass classify(const ModelGraph& graph, const ErrorPattern& pattern) {
    if (!syndrome_of(graph, pattern).empty()) {
        return LogicalClass::not_logical_operator;
    }
    Parity p = parity_of(graph, pattern);
    return (p.left || p.right) ? LogicalClass::nontrivial_logical : LogicalClass::trivial_logical;
}

double pattern_probability(const ModelGraph& graph, const ErrorPattern& pattern) {
    double prob = 1.0;
    auto it = pattern.begin();
    for (size_t e = 0; e < graph.num_edges(); ++e) {
        double p = graph.edge(static_cast<EdgeId>(e)).error_prob;
        if (it != pattern.end() && *it == e) {
            prob *= p;
            ++it;
        } else {
            prob *= 1.0 - p;
        }
    }
    if (it != pattern.end()) {
        check_edge(graph, *it);
    }
    return prob;
}

double pattern_weight(const ModelGraph& graph, const ErrorPattern& pattern) {
    double w = 0;
    for (uint32_t e : pattern) {
        check_edge(graph, e);
        w += graph.edge(e).weight;
    }
    return w;
}

namespace {

/// Lexicographic order of the sorted edge lists encoded by two masks.
bool mask_lex_less(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    int t = std::countr_zero(diff);
    if ((a >> t) & 1) {
        return (b >> t) != 0;
    }
    return (a >> t) == 0;
}

ErrorPattern pattern_from_mask(uint64_t mask) {
    std::vector<uint32_t> ids;
    while (mask) {
        ids.push_back(static_cast<uint32_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return ErrorPattern(std::move(ids));
}

}  // namespace

CosetDecision brute_force_coset_decode(const ModelGraph& graph, const Syndrome& syndrome) {
    size_t m = graph.num_edges();
    if (m > kMaxEnumerationEdges) {
        throw std::invalid_argument(
            "exhaustive coset decoding supports at most " + std::to_string(kMaxEnumerationEdges) + " edges");
    }
    if (graph.num_stabilizers() > 64) {
        throw std::invalid_argument("exhaustive coset decoding supports at most 64 stabilizers");
    }
    uint64_t target = 0;
    for (uint32_t v : syndrome) {
        if (v >= graph.num_vertices() || graph.is_boundary(v)) {
            throw std::invalid_argument("syndrome contains a non-stabilizer vertex " + std::to_string(v));
        }
        target |= uint64_t{1} << v;
    }
    std::vector<uint64_t> edge_syndrome(m, 0);
    std::vector<bool> edge_left(m, false);
    for (size_t e = 0; e < m; ++e) {
        const Edge& edge = graph.edge(static_cast<EdgeId>(e));
        for (VertexId v : {edge.u, edge.v}) {
            if (!graph.is_boundary(v)) {
                edge_syndrome[e] ^= uint64_t{1} << v;
            } else if (graph.side(v) == BoundarySide::left) {
                edge_left[e] = !edge_left[e];
            }
        }
    }

    // Given the syndrome, left parity alone separates the two cosets.
    std::array<double, 2> mass{0, 0};
    std::array<double, 2> best_prob{-1, -1};
    std::array<uint64_t, 2> best_mask{0, 0};
    uint64_t total = uint64_t{1} << m;
    for (uint64_t mask = 0; mask < total; ++mask) {
        uint64_t s = 0;
        bool left = false;
        double prob = 1.0;
        for (size_t e = 0; e < m; ++e) {
            double p = graph.edge(static_cast<EdgeId>(e)).error_prob;
            if ((mask >> e) & 1) {
                s ^= edge_syndrome[e];
                left ^= edge_left[e];
                prob *= p;
            } else {
                prob *= 1.0 - p;
            }
        }
        if (s != target) {
            continue;
        }
        int k = left ? 1 : 0;
        mass[k] += prob;
        bool better = prob > best_prob[k] * (1 + 1e-12);
        bool same = !better && prob >= best_prob[k] * (1 - 1e-12);
        if (best_prob[k] < 0 || better || (same && mask_lex_less(mask, best_mask[k]))) {
            best_prob[k] = prob;
            best_mask[k] = mask;
        }
    }
    if (best_prob[0] < 0 && best_prob[1] < 0) {
        throw std::logic_error("no error pattern produces the given syndrome");
    }

    int winner;
    CosetDecision out;
    if (best_prob[0] < 0 || best_prob[1] < 0) {
        winner = best_prob[0] < 0 ? 1 : 0;
    } else {
        double hi = std::max(mass[0], mass[1]);
        out.tied = std::abs(mass[0] - mass[1]) <= 1e-12 * hi;
        if (out.tied) {
            winner = mask_lex_less(best_mask[1], best_mask[0]) ? 1 : 0;
        } else {
            winner = mass[1] > mass[0] ? 1 : 0;
        }
    }
    out.correction = pattern_from_mask(best_mask[winner]);
    out.parity = parity_of(graph, out.correction);
    out.winning_mass = mass[winner];
    out.losing_mass = mass[1 - winner];
    return out;
}

}  // namespace mp
