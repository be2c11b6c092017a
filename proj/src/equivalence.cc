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

#include "matchpoint/equivalence.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mp {

EquivalenceVerdict logically_equivalent(const ModelGraph& graph, const ErrorPattern& c1, const ErrorPattern& c2) {
    if (syndrome_of(graph, c1) != syndrome_of(graph, c2)) {
        throw std::invalid_argument("corrections have different syndromes");
    }
    EquivalenceVerdict v;
    ErrorPattern sum = c1 + c2;
    v.sum_class = classify(graph, sum);
    v.equivalent = v.sum_class == LogicalClass::trivial_logical;
    if (!v.equivalent) {
        v.witness = std::move(sum);
    }
    return v;
}

namespace {

std::vector<std::vector<uint32_t>> normalized(std::vector<std::vector<uint32_t>> blocks) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<uint32_t> all_members(const PartitionCheckpoint& cp) {
    std::vector<uint32_t> out;
    for (const auto& b : cp.partition) {
        out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<PartitionCheckpoint> partitions_of(const BlossomTrace& trace, const SyndromeGraph& sg) {
    std::vector<PartitionCheckpoint> out;
    for (const ClusterSnapshot& snap : trace.snapshots) {
        PartitionCheckpoint cp{snap.sigma, {}};
        for (const DualCluster& c : snap.clusters) {
            std::vector<uint32_t> block;
            for (uint32_t i : c.members) {
                block.push_back(sg.defect(i));
            }
            cp.partition.push_back(std::move(block));
        }
        cp.partition = normalized(std::move(cp.partition));
        out.push_back(std::move(cp));
    }
    return out;
}

std::vector<PartitionCheckpoint> partitions_of(const UfTrace& trace) {
    std::vector<PartitionCheckpoint> out;
    for (const UfCheckpoint& c : trace.checkpoints) {
        PartitionCheckpoint cp{c.sigma, {}};
        for (const UfCluster& cl : c.clusters) {
            cp.partition.push_back(cl.defects);
        }
        cp.partition = normalized(std::move(cp.partition));
        out.push_back(std::move(cp));
    }
    return out;
}

Condition1Result check_condition1(
    const std::vector<PartitionCheckpoint>& first, const std::vector<PartitionCheckpoint>& second, double tol) {
    Condition1Result r;
    if (first.empty() || second.empty()) {
        throw std::invalid_argument("partition history is empty");
    }
    if (all_members(first.front()) != all_members(second.front())) {
        throw std::invalid_argument("partition histories come from different instances");
    }
    std::vector<double> sigmas;
    for (const auto& cp : first) {
        sigmas.push_back(cp.sigma);
    }
    for (const auto& cp : second) {
        sigmas.push_back(cp.sigma);
    }
    std::sort(sigmas.begin(), sigmas.end());
    if (tol < 0) {
        tol = 1e-9 * std::max(1.0, std::abs(sigmas.back()));
    }
    auto at = [&](const std::vector<PartitionCheckpoint>& h, double s) -> const PartitionCheckpoint& {
        size_t k = 0;
        for (size_t i = 0; i < h.size(); ++i) {
            if (h[i].sigma <= s + tol) {
                k = i;
            }
        }
        return h[k];
    };
    double last = -std::numeric_limits<double>::infinity();
    for (double s : sigmas) {
        if (s <= last + tol) {
            continue;
        }
        last = s;
        ++r.compared;
        const auto& a = at(first, s);
        const auto& b = at(second, s);
        if (a.partition != b.partition) {
            r.holds = false;
            r.divergence_sigma = s;
            r.first_partition = a.partition;
            r.second_partition = b.partition;
            break;
        }
    }
    return r;
}

std::vector<ErrorPattern> split_by_clusters(
    const ModelGraph& graph, const std::vector<UfCluster>& clusters, const ErrorPattern& correction) {
    std::map<uint32_t, size_t> cluster_of;
    for (size_t k = 0; k < clusters.size(); ++k) {
        for (uint32_t d : clusters[k].defects) {
            cluster_of[d] = k;
        }
    }
    size_t nv = graph.num_vertices();
    std::vector<uint32_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<uint32_t(uint32_t)> find = [&](uint32_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    // Boundary vertices do not connect: paths of two clusters may end on one of them.
    for (uint32_t e : correction) {
        const Edge& edge = graph.edge(e);
        if (!graph.is_boundary(edge.u) && !graph.is_boundary(edge.v)) {
            parent[find(edge.u)] = find(edge.v);
        }
    }
    std::map<uint32_t, std::vector<uint32_t>> components;
    for (uint32_t e : correction) {
        const Edge& edge = graph.edge(e);
        components[find(graph.is_boundary(edge.u) ? edge.v : edge.u)].push_back(e);
    }
    std::vector<ErrorPattern> parts(clusters.size());
    for (auto& [root, edges] : components) {
        ErrorPattern piece(edges);
        std::vector<size_t> owners;
        auto note = [&](uint32_t v) {
            auto it = cluster_of.find(v);
            if (it != cluster_of.end() && std::find(owners.begin(), owners.end(), it->second) == owners.end()) {
                owners.push_back(it->second);
            }
        };
        for (uint32_t v : syndrome_of(graph, piece)) {
            note(v);
        }
        if (owners.empty()) {
            for (uint32_t e : piece) {
                note(graph.edge(e).u);
                note(graph.edge(e).v);
            }
        }
        if (owners.size() != 1) {
            throw std::invalid_argument("correction does not decompose along the cluster partition");
        }
        parts[owners.front()] += piece;
    }
    return parts;
}

Condition2Result check_condition2(
    const ModelGraph& graph,
    const std::vector<UfCluster>& clusters,
    const std::vector<ErrorPattern>& uf_parts,
    const std::vector<ErrorPattern>& mwpm_parts) {
    if (uf_parts.size() != clusters.size() || mwpm_parts.size() != clusters.size()) {
        throw std::invalid_argument("one correction part per cluster required");
    }
    Condition2Result r;
    ErrorPattern total;
    for (size_t k = 0; k < clusters.size(); ++k) {
        if (uf_parts[k] != mwpm_parts[k]) {
            r.differing.push_back(k);
            if (clusters[k].attached()) {
                r.detached_only = false;
            }
            total += uf_parts[k] + mwpm_parts[k];
        }
    }
    r.sum_class = classify(graph, total);
    r.holds = r.detached_only || r.sum_class == LogicalClass::trivial_logical;
    return r;
}

Condition2Result check_condition2(
    const ModelGraph& graph,
    const std::vector<UfCluster>& clusters,
    const ErrorPattern& uf_correction,
    const ErrorPattern& mwpm_correction) {
    return check_condition2(
        graph,
        clusters,
        split_by_clusters(graph, clusters, uf_correction),
        split_by_clusters(graph, clusters, mwpm_correction));
}

std::vector<EnumeratedMatching> enumerate_pm(const SyndromeGraph& sg) {
    size_t n = sg.num_defects();
    if (n > kMaxEnumerationDefects) {
        throw std::invalid_argument("enumerate_pm supports at most 12 defects");
    }
    std::vector<EnumeratedMatching> out;
    std::vector<int32_t> mate(n, kUnmatched);
    std::function<void(double)> rec = [&](double acc) {
        size_t i = 0;
        while (i < n && mate[i] != kUnmatched) {
            ++i;
        }
        if (i == n) {
            out.push_back(EnumeratedMatching{Matching{mate}, acc});
            return;
        }
        BoundarySide side = sg.nearest_side(i);
        if (side != BoundarySide::none) {
            mate[i] = boundary_code(side);
            rec(acc + sg.port_weight(i, side));
            mate[i] = kUnmatched;
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (mate[j] != kUnmatched || std::isinf(sg.weight(i, j))) {
                continue;
            }
            mate[i] = static_cast<int32_t>(j);
            mate[j] = static_cast<int32_t>(i);
            rec(acc + sg.weight(i, j));
            mate[i] = kUnmatched;
            mate[j] = kUnmatched;
        }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const EnumeratedMatching& a, const EnumeratedMatching& b) {
        return a.weight < b.weight;
    });
    return out;
}

bool check_lemma_o(const ModelGraph& graph, const Syndrome& syndrome) {
    SyndromeGraph a = build_syndrome_graph(graph, syndrome, WitnessTieBreak::smallest_id);
    SyndromeGraph b = build_syndrome_graph(graph, syndrome, WitnessTieBreak::largest_id);
    size_t n = a.num_defects();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (std::isinf(a.weight(i, j))) {
                continue;
            }
            ErrorPattern sum = ErrorPattern(a.witness(i, j)) + ErrorPattern(b.witness(i, j));
            if (classify(graph, sum) != LogicalClass::trivial_logical) {
                return false;
            }
        }
        for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
            const auto& pa = a.port(i, s);
            const auto& pb = b.port(i, s);
            if (!pa || !pb) {
                continue;
            }
            ErrorPattern sum = ErrorPattern(pa->path) + ErrorPattern(pb->path);
            if (classify(graph, sum) != LogicalClass::trivial_logical) {
                return false;
            }
        }
    }
    return true;
}

bool check_lemma_i(const ModelGraph& graph, const Syndrome& syndrome, const Matching& matching) {
    SyndromeGraph a = build_syndrome_graph(graph, syndrome, WitnessTieBreak::smallest_id);
    SyndromeGraph b = build_syndrome_graph(graph, syndrome, WitnessTieBreak::largest_id);
    ErrorPattern sum = expand(a, matching) + expand(b, matching);
    return classify(graph, sum) == LogicalClass::trivial_logical;
}

bool check_lemma_ii(const ModelGraph& graph, const Syndrome& syndrome, const Matching& first, const Matching& second) {
    SyndromeGraph sg = build_syndrome_graph(graph, syndrome);
    ErrorPattern sum = expand(sg, first) + expand(sg, second);
    return syndrome_of(graph, sum).empty();
}

}  // namespace mp
