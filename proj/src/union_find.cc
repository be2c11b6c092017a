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

#include "matchpoint/union_find.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tolerance_for(const std::vector<double>& weights) {
    double w = 0;
    for (double x : weights) {
        if (std::isfinite(x)) {
            w = std::max(w, x);
        }
    }
    return w > 0 ? 1e-9 * w : 1e-12;
}

int64_t require_wmax(const UfConfig& cfg) {
    if (!cfg.w_max) {
        throw std::invalid_argument("integer mode requires w_max");
    }
    if (*cfg.w_max < 1) {
        throw std::invalid_argument("w_max must be at least 1");
    }
    return *cfg.w_max;
}

}  // namespace

const char* to_string(UfMode mode) {
    return mode == UfMode::real_weighted ? "real" : "integer";
}

std::vector<int64_t> integer_weights(const ModelGraph& graph, int64_t w_max) {
    if (w_max < 1) {
        throw std::invalid_argument("w_max must be at least 1");
    }
    double big = graph.max_finite_weight();
    std::vector<int64_t> out;
    out.reserve(graph.num_edges());
    for (const Edge& e : graph.edges()) {
        if (!std::isfinite(e.weight)) {
            out.push_back(0);
            continue;
        }
        double scaled = big > 0 ? e.weight / big * static_cast<double>(w_max) : 0;
        out.push_back(std::max<int64_t>(1, static_cast<int64_t>(std::floor(scaled + 1e-9))));
    }
    return out;
}

UnionFindDecoder::UnionFindDecoder(const ModelGraph& graph, UfConfig cfg) : graph_(graph), cfg_(cfg) {
    if (cfg_.mode == UfMode::integer_weighted || cfg_.w_max) {
        int64_t w_max = require_wmax(cfg_);
        for (int64_t w : integer_weights(graph, w_max)) {
            weights_.push_back(w == 0 ? kInf : static_cast<double>(w));
        }
        scale_ = graph.max_finite_weight() / static_cast<double>(w_max);
    } else {
        for (const Edge& e : graph.edges()) {
            weights_.push_back(e.weight);
        }
    }
    tol_ = cfg_.mode == UfMode::integer_weighted ? 0 : tolerance_for(weights_);
    size_t nv = graph.num_vertices();
    is_defect_.assign(nv, 0);
    owner_.assign(nv, -1);
    size_.assign(nv, 0);
    parity_.assign(nv, 0);
    left_.assign(nv, 0);
    right_.assign(nv, 0);
    members_.assign(nv, {});
    covered_.assign(graph.num_edges(), {0, 0});
    full_.assign(graph.num_edges(), 0);
}

void UnionFindDecoder::load(const Syndrome& syndrome) {
    std::fill(is_defect_.begin(), is_defect_.end(), 0);
    std::fill(owner_.begin(), owner_.end(), -1);
    std::fill(size_.begin(), size_.end(), 0);
    std::fill(parity_.begin(), parity_.end(), 0);
    std::fill(left_.begin(), left_.end(), 0);
    std::fill(right_.begin(), right_.end(), 0);
    for (auto& m : members_) {
        m.clear();
    }
    std::fill(covered_.begin(), covered_.end(), std::array<double, 2>{0, 0});
    std::fill(full_.begin(), full_.end(), 0);
    defects_.clear();
    for (uint32_t v : syndrome) {
        if (v >= graph_.num_vertices() || graph_.is_boundary(v)) {
            throw std::invalid_argument("syndrome vertex is not a stabilizer");
        }
        defects_.push_back(v);
        is_defect_[v] = 1;
        owner_[v] = v;
        size_[v] = 1;
        parity_[v] = 1;
        members_[v].push_back(v);
    }
    sigma_ = 0;
    steps_ = 0;
    trace_ = UfTrace{};
    trace_.scale = scale_;
    if (cfg_.record_trace) {
        checkpoint();
    }
}

uint32_t UnionFindDecoder::find(uint32_t v) {
    uint32_t r = v;
    while (owner_[r] != static_cast<int64_t>(r)) {
        r = static_cast<uint32_t>(owner_[r]);
    }
    while (owner_[v] != static_cast<int64_t>(r)) {
        uint32_t next = static_cast<uint32_t>(owner_[v]);
        owner_[v] = r;
        v = next;
    }
    return r;
}

void UnionFindDecoder::unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return;
    }
    if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) {
        std::swap(a, b);
    }
    owner_[b] = a;
    size_[a] += size_[b];
    parity_[a] ^= parity_[b];
    left_[a] |= left_[b];
    right_[a] |= right_[b];
    members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
    members_[b].clear();
}

void UnionFindDecoder::absorb(VertexId v, uint32_t root) {
    owner_[v] = root;
    ++size_[root];
    members_[root].push_back(v);
    BoundarySide side = graph_.side(v);
    if (side == BoundarySide::left) {
        left_[root] = 1;
    } else if (side == BoundarySide::right) {
        right_[root] = 1;
    }
}

bool UnionFindDecoder::growing(uint32_t root) const {
    return parity_[root] && !left_[root] && !right_[root];
}

bool UnionFindDecoder::can_grow() const {
    for (VertexId v : defects_) {
        uint32_t r = v;
        while (owner_[r] != static_cast<int64_t>(r)) {
            r = static_cast<uint32_t>(owner_[r]);
        }
        if (growing(r)) {
            return true;
        }
    }
    return false;
}

double UnionFindDecoder::grow_step() {
    std::vector<uint32_t> roots;
    for (VertexId v : defects_) {
        uint32_t r = find(v);
        if (growing(r) && std::find(roots.begin(), roots.end(), r) == roots.end()) {
            roots.push_back(r);
        }
    }
    if (roots.empty()) {
        throw std::logic_error("grow_step called with no growable cluster");
    }
    // Frontier edges with a bit per growing side (bit 0: from u, bit 1: from v).
    std::map<EdgeId, uint8_t> frontier;
    for (uint32_t r : roots) {
        for (VertexId x : members_[r]) {
            for (const Incidence& inc : graph_.incident(x)) {
                if (full_[inc.edge] || std::isinf(weights_[inc.edge])) {
                    continue;
                }
                VertexId y = inc.neighbor;
                if (owner_[y] >= 0 && find(y) == r) {
                    continue;
                }
                frontier[inc.edge] |= graph_.edge(inc.edge).u == x ? 1 : 2;
            }
        }
    }
    if (frontier.empty()) {
        throw std::logic_error("odd cluster with no reachable boundary");
    }
    double delta = 0.5;
    if (cfg_.mode == UfMode::real_weighted) {
        delta = kInf;
        for (auto [e, mask] : frontier) {
            double remaining = weights_[e] - covered_[e][0] - covered_[e][1];
            int sides = (mask & 1) + ((mask >> 1) & 1);
            delta = std::min(delta, std::max(0.0, remaining) / sides);
        }
    }
    std::vector<EdgeId> filled;
    for (auto [e, mask] : frontier) {
        if (mask & 1) {
            covered_[e][0] += delta;
        }
        if (mask & 2) {
            covered_[e][1] += delta;
        }
        if (covered_[e][0] + covered_[e][1] >= weights_[e] - tol_) {
            filled.push_back(e);
        }
    }
    for (EdgeId e : filled) {
        full_[e] = 1;
        const Edge& edge = graph_.edge(e);
        bool ou = owner_[edge.u] >= 0;
        bool ov = owner_[edge.v] >= 0;
        if (ou && ov) {
            unite(edge.u, edge.v);
        } else if (ou) {
            absorb(edge.v, find(edge.u));
        } else if (ov) {
            absorb(edge.u, find(edge.v));
        }
    }
    sigma_ += delta * static_cast<double>(roots.size()) * scale_;
    ++steps_;
    if (cfg_.record_trace) {
        checkpoint();
    }
    return delta;
}

std::vector<UfCluster> UnionFindDecoder::clusters() {
    std::map<uint32_t, UfCluster> by_root;
    for (VertexId v : defects_) {
        uint32_t r = find(v);
        UfCluster& c = by_root[r];
        c.defects.push_back(v);
        c.num_vertices = size_[r];
        c.touches_left = left_[r] != 0;
        c.touches_right = right_[r] != 0;
    }
    std::vector<UfCluster> out;
    for (auto& [r, c] : by_root) {
        std::sort(c.defects.begin(), c.defects.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const UfCluster& a, const UfCluster& b) {
        return a.defects.front() < b.defects.front();
    });
    return out;
}

void UnionFindDecoder::checkpoint() {
    UfCheckpoint cp;
    cp.sigma = sigma_;
    cp.clusters = clusters();
    cp.growth.resize(covered_.size());
    for (size_t e = 0; e < covered_.size(); ++e) {
        double w = weights_[e];
        double c = covered_[e][0] + covered_[e][1];
        cp.growth[e] = std::isinf(w) ? 0 : w > 0 ? std::min(1.0, c / w) : (full_[e] ? 1.0 : 0.0);
    }
    trace_.checkpoints.push_back(std::move(cp));
}

UfResult UnionFindDecoder::finish() {
    if (can_grow()) {
        throw std::logic_error("finish called while clusters can still grow");
    }
    size_t nv = graph_.num_vertices();
    std::map<uint32_t, std::vector<VertexId>> by_root;
    for (VertexId v = 0; v < nv; ++v) {
        if (owner_[v] >= 0) {
            by_root[find(v)].push_back(v);
        }
    }
    std::vector<uint8_t> flag(is_defect_);
    std::vector<int64_t> parent_edge(nv, -1);
    std::vector<uint8_t> seen(nv, 0);
    std::vector<uint32_t> picked;
    for (auto& [root, verts] : by_root) {
        std::vector<VertexId> sources;
        for (BoundarySide side : {BoundarySide::left, BoundarySide::right}) {
            for (VertexId v : verts) {
                if (graph_.side(v) == side) {
                    sources.push_back(v);
                }
            }
            if (!sources.empty()) {
                break;
            }
        }
        if (sources.empty()) {
            sources.push_back(*std::min_element(verts.begin(), verts.end()));
        }
        std::sort(sources.begin(), sources.end());
        std::vector<VertexId> order;
        std::deque<VertexId> queue;
        for (VertexId s : sources) {
            seen[s] = 1;
            queue.push_back(s);
        }
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (const Incidence& inc : graph_.incident(x)) {
                if (!full_[inc.edge] || seen[inc.neighbor]) {
                    continue;
                }
                seen[inc.neighbor] = 1;
                parent_edge[inc.neighbor] = inc.edge;
                queue.push_back(inc.neighbor);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            VertexId x = *it;
            if (parent_edge[x] < 0 || !flag[x]) {
                continue;
            }
            auto e = static_cast<EdgeId>(parent_edge[x]);
            picked.push_back(e);
            flag[x] = 0;
            flag[graph_.edge(e).other(x)] ^= 1;
        }
        for (VertexId s : sources) {
            if (flag[s] && !graph_.is_boundary(s)) {
                throw std::logic_error("odd cluster with no reachable boundary");
            }
        }
    }
    UfResult result;
    result.correction = ErrorPattern(std::move(picked));
    result.clusters = clusters();
    result.trace = std::move(trace_);
    result.steps = steps_;
    return result;
}

UfResult UnionFindDecoder::decode(const Syndrome& syndrome) {
    load(syndrome);
    while (can_grow()) {
        grow_step();
    }
    return finish();
}

UfResult decode_uf(const ModelGraph& graph, const Syndrome& syndrome, const UfConfig& cfg) {
    if (cfg.variant == GraphVariant::decoding_graph) {
        UnionFindDecoder decoder(graph, cfg);
        return decoder.decode(syndrome);
    }
    if (cfg.mode == UfMode::integer_weighted || cfg.w_max) {
        int64_t w_max = require_wmax(cfg);
        std::vector<double> w;
        for (int64_t x : integer_weights(graph, w_max)) {
            w.push_back(x == 0 ? kInf : static_cast<double>(x));
        }
        ModelGraph quantized = reweighted(graph, w);
        SyndromeGraph sg = build_syndrome_graph(quantized, syndrome);
        UfResult r = decode_uf_on_syndrome_graph(sg, cfg);
        double scale = graph.max_finite_weight() / static_cast<double>(w_max);
        for (UfCheckpoint& cp : r.trace.checkpoints) {
            cp.sigma *= scale;
        }
        r.trace.scale = scale;
        return r;
    }
    SyndromeGraph sg = build_syndrome_graph(graph, syndrome);
    return decode_uf_on_syndrome_graph(sg, cfg);
}

UfResult decode_uf_on_syndrome_graph(const SyndromeGraph& sg, const UfConfig& cfg) {
    size_t n = sg.num_defects();
    double tol = cfg.mode == UfMode::integer_weighted ? 0 : [&] {
        double w = sg.max_finite_weight();
        return w > 0 ? 1e-9 * w : 1e-12;
    }();
    std::vector<double> radius(n, 0);
    std::vector<uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    std::vector<uint8_t> parity(n, 1);
    std::vector<uint8_t> left(n, 0);
    std::vector<uint8_t> right(n, 0);
    auto find = [&](uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent[b] = a;
        parity[a] ^= parity[b];
        left[a] |= left[b];
        right[a] |= right[b];
    };
    auto growing = [&](uint32_t r) {
        return parity[r] && !left[r] && !right[r];
    };
    auto clusters = [&]() {
        std::map<uint32_t, UfCluster> by_root;
        for (uint32_t v = 0; v < n; ++v) {
            uint32_t r = find(v);
            UfCluster& c = by_root[r];
            c.defects.push_back(sg.defect(v));
            ++c.num_vertices;
            c.touches_left = left[r] != 0;
            c.touches_right = right[r] != 0;
        }
        std::vector<UfCluster> out;
        for (auto& [r, c] : by_root) {
            std::sort(c.defects.begin(), c.defects.end());
            out.push_back(std::move(c));
        }
        std::sort(out.begin(), out.end(), [](const UfCluster& a, const UfCluster& b) {
            return a.defects.front() < b.defects.front();
        });
        return out;
    };
    UfResult result;
    double sigma = 0;
    auto checkpoint = [&]() {
        if (cfg.record_trace) {
            result.trace.checkpoints.push_back(UfCheckpoint{sigma, clusters(), radius});
        }
    };
    checkpoint();
    while (true) {
        std::vector<uint8_t> grows(n, 0);
        size_t num_growing = 0;
        for (uint32_t v = 0; v < n; ++v) {
            uint32_t r = find(v);
            grows[v] = growing(r);
            if (grows[v] && r == v) {
                ++num_growing;
            }
        }
        if (num_growing == 0) {
            break;
        }
        double delta = 0.5;
        if (cfg.mode == UfMode::real_weighted) {
            delta = kInf;
            for (uint32_t i = 0; i < n; ++i) {
                for (uint32_t j = i + 1; j < n; ++j) {
                    int sides = grows[i] + grows[j];
                    double w = sg.weight(i, j);
                    if (sides == 0 || std::isinf(w) || find(i) == find(j)) {
                        continue;
                    }
                    delta = std::min(delta, std::max(0.0, w - radius[i] - radius[j]) / sides);
                }
                if (grows[i]) {
                    for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
                        double w = sg.port_weight(i, s);
                        if (std::isfinite(w)) {
                            delta = std::min(delta, std::max(0.0, w - radius[i]));
                        }
                    }
                }
            }
            if (std::isinf(delta)) {
                throw std::logic_error("odd cluster with no reachable boundary");
            }
        }
        for (uint32_t v = 0; v < n; ++v) {
            if (grows[v]) {
                radius[v] += delta;
            }
        }
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) {
                double w = sg.weight(i, j);
                if ((grows[i] || grows[j]) && std::isfinite(w) && radius[i] + radius[j] >= w - tol) {
                    unite(i, j);
                }
            }
        }
        for (uint32_t i = 0; i < n; ++i) {
            if (!grows[i]) {
                continue;
            }
            for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
                double w = sg.port_weight(i, s);
                if (std::isfinite(w) && radius[i] >= w - tol) {
                    (s == BoundarySide::left ? left : right)[find(i)] = 1;
                }
            }
        }
        sigma += delta * static_cast<double>(num_growing);
        ++result.steps;
        checkpoint();
    }

    // Peel the touch graph of each cluster, rooted at a boundary pseudo-vertex when the
    // cluster touches one (left preferred).
    std::vector<uint8_t> flag(n, 1);
    std::vector<int64_t> up(n, -2);  // -1: boundary pseudo-root, -2: none
    std::vector<uint8_t> seen(n, 0);
    std::set<SyndromeEdge> selection;
    auto toggle = [&](SyndromeEdge e) {
        if (!selection.erase(e)) {
            selection.insert(e);
        }
    };
    auto touching = [&](uint32_t i, uint32_t j) {
        double w = sg.weight(i, j);
        return std::isfinite(w) && radius[i] + radius[j] >= w - tol;
    };
    auto port_touching = [&](uint32_t i, BoundarySide s) {
        double w = sg.port_weight(i, s);
        return std::isfinite(w) && radius[i] >= w - tol;
    };
    std::map<uint32_t, std::vector<uint32_t>> groups;
    for (uint32_t v = 0; v < n; ++v) {
        groups[find(v)].push_back(v);
    }
    for (auto& [root, members] : groups) {
        BoundarySide side = BoundarySide::none;
        for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
            for (uint32_t v : members) {
                if (port_touching(v, s)) {
                    side = s;
                    break;
                }
            }
            if (side != BoundarySide::none) {
                break;
            }
        }
        std::vector<uint32_t> order;
        std::deque<uint32_t> queue;
        if (side != BoundarySide::none) {
            for (uint32_t v : members) {
                if (port_touching(v, side)) {
                    seen[v] = 1;
                    up[v] = -1;
                    queue.push_back(v);
                }
            }
        } else {
            seen[members.front()] = 1;
            queue.push_back(members.front());
        }
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (uint32_t y : members) {
                if (!seen[y] && y != x && touching(x, y)) {
                    seen[y] = 1;
                    up[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (order.size() != members.size()) {
            throw std::logic_error("cluster touch graph is disconnected");
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            uint32_t x = *it;
            if (!flag[x] || up[x] == -2) {
                continue;
            }
            flag[x] = 0;
            if (up[x] == -1) {
                toggle(SyndromeEdge{x, boundary_code(side)});
            } else {
                auto p = static_cast<uint32_t>(up[x]);
                toggle(SyndromeEdge{std::min(x, p), static_cast<int32_t>(std::max(x, p))});
                flag[p] ^= 1;
            }
        }
        if (side == BoundarySide::none && flag[members.front()]) {
            throw std::logic_error("odd cluster with no reachable boundary");
        }
    }
    result.selection.assign(selection.begin(), selection.end());
    if (sg.has_witnesses()) {
        result.correction = expand(sg, result.selection);
    }
    result.clusters = clusters();
    return result;
}

}  // namespace mp
