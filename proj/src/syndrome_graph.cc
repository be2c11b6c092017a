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

#include "matchpoint/syndrome_graph.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace mp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

size_t triangle_index(size_t n, size_t i, size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

struct ShortestPaths {
    std::vector<double> dist;
    std::vector<int64_t> pred_edge;
};

bool ties(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
}

ShortestPaths dijkstra(const ModelGraph& graph, VertexId source, WitnessTieBreak tie_break) {
    size_t n = graph.num_vertices();
    ShortestPaths sp{std::vector<double>(n, kInf), std::vector<int64_t>(n, -1)};
    std::vector<bool> done(n, false);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    sp.dist[source] = 0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (done[u]) {
            continue;
        }
        done[u] = true;
        // Paths end at virtual boundary vertices.
        if (graph.is_boundary(u)) {
            continue;
        }
        for (const Incidence& inc : graph.incident(u)) {
            double w = graph.edge(inc.edge).weight;
            if (!std::isfinite(w)) {
                continue;
            }
            VertexId v = inc.neighbor;
            double nd = d + w;
            double& cur = sp.dist[v];
            if (std::isinf(cur) || (nd < cur && !ties(nd, cur))) {
                cur = nd;
                sp.pred_edge[v] = inc.edge;
                queue.emplace(nd, v);
            } else if (!done[v] && ties(nd, cur)) {
                VertexId old = graph.edge(static_cast<EdgeId>(sp.pred_edge[v])).other(v);
                bool prefer = tie_break == WitnessTieBreak::smallest_id ? u < old : u > old;
                if (prefer) {
                    sp.pred_edge[v] = inc.edge;
                }
            }
        }
    }
    return sp;
}

std::vector<EdgeId> trace_path(const ModelGraph& graph, const ShortestPaths& sp, VertexId target) {
    std::vector<EdgeId> path;
    VertexId v = target;
    while (sp.pred_edge[v] >= 0) {
        auto e = static_cast<EdgeId>(sp.pred_edge[v]);
        path.push_back(e);
        v = graph.edge(e).other(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

void check_weight(double w, const char* what) {
    if (std::isnan(w) || w < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
    }
}

}  // namespace

SyndromeGraph SyndromeGraph::from_weights(
    size_t n,
    std::vector<double> pair_weights,
    std::vector<double> left_ports,
    std::vector<double> right_ports,
    std::vector<Position> positions) {
    if (pair_weights.size() != n * n || left_ports.size() != n || right_ports.size() != n) {
        throw std::invalid_argument("syndrome graph weight arrays have the wrong size");
    }
    if (positions.empty()) {
        for (size_t i = 0; i < n; ++i) {
            positions.push_back(Position{0, static_cast<int32_t>(4 * i), 0});
        }
    }
    if (positions.size() != n) {
        throw std::invalid_argument("one position per defect required");
    }
    SyndromeGraph sg;
    for (size_t i = 0; i < n; ++i) {
        sg.defects_.push_back(static_cast<VertexId>(i));
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                pair_weights[i * n + j] = 0;
                continue;
            }
            check_weight(pair_weights[i * n + j], "pair weight");
            if (pair_weights[i * n + j] != pair_weights[j * n + i]) {
                throw std::invalid_argument("pair weights must be symmetric");
            }
        }
        check_weight(left_ports[i], "port weight");
        check_weight(right_ports[i], "port weight");
        sg.left_.push_back(std::isinf(left_ports[i]) ? std::nullopt
                                                     : std::optional<BoundaryPort>(BoundaryPort{0, left_ports[i], {}}));
        sg.right_.push_back(
            std::isinf(right_ports[i]) ? std::nullopt : std::optional<BoundaryPort>(BoundaryPort{0, right_ports[i], {}}));
    }
    sg.weights_ = std::move(pair_weights);
    sg.positions_ = std::move(positions);
    sg.witnesses_.assign(n * (n - (n > 0 ? 1 : 0)) / 2, {});
    return sg;
}

const std::vector<EdgeId>& SyndromeGraph::witness(size_t i, size_t j) const {
    if (i == j) {
        throw std::invalid_argument("no witness for a self pair");
    }
    return witnesses_[triangle_index(defects_.size(), i, j)];
}

double SyndromeGraph::port_weight(size_t i, BoundarySide side) const {
    const auto& p = port(i, side);
    return p ? p->weight : kInf;
}

double SyndromeGraph::boundary_weight(size_t i) const {
    return std::min(port_weight(i, BoundarySide::left), port_weight(i, BoundarySide::right));
}

BoundarySide SyndromeGraph::nearest_side(size_t i) const {
    double l = port_weight(i, BoundarySide::left);
    double r = port_weight(i, BoundarySide::right);
    if (std::isinf(l) && std::isinf(r)) {
        return BoundarySide::none;
    }
    return l <= r ? BoundarySide::left : BoundarySide::right;
}

double SyndromeGraph::edge_weight(const SyndromeEdge& e) const {
    if (e.is_boundary()) {
        return port_weight(e.a, boundary_side_of(e.b));
    }
    return weight(e.a, static_cast<size_t>(e.b));
}

double SyndromeGraph::max_finite_weight() const {
    double best = 0;
    for (double w : weights_) {
        if (std::isfinite(w)) {
            best = std::max(best, w);
        }
    }
    for (size_t i = 0; i < defects_.size(); ++i) {
        for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
            double w = port_weight(i, s);
            if (std::isfinite(w)) {
                best = std::max(best, w);
            }
        }
    }
    return best;
}

SyndromeGraph build_syndrome_graph(const ModelGraph& graph, const Syndrome& syndrome, WitnessTieBreak tie_break) {
    SyndromeGraph sg;
    for (uint32_t v : syndrome) {
        if (v >= graph.num_vertices() || graph.is_boundary(v)) {
            throw std::invalid_argument("syndrome vertex " + std::to_string(v) + " is not a stabilizer");
        }
        sg.defects_.push_back(v);
        sg.positions_.push_back(graph.vertex(v).pos);
    }
    size_t n = sg.defects_.size();
    sg.weights_.assign(n * n, 0);
    sg.witnesses_.assign(n > 0 ? n * (n - 1) / 2 : 0, {});
    sg.left_.assign(n, std::nullopt);
    sg.right_.assign(n, std::nullopt);
    sg.has_witnesses_ = true;

    for (size_t i = 0; i < n; ++i) {
        ShortestPaths sp = dijkstra(graph, sg.defects_[i], tie_break);
        for (size_t j = i + 1; j < n; ++j) {
            VertexId target = sg.defects_[j];
            double d = sp.dist[target];
            sg.weights_[i * n + j] = d;
            sg.weights_[j * n + i] = d;
            if (std::isfinite(d)) {
                sg.witnesses_[triangle_index(n, i, j)] = trace_path(graph, sp, target);
            }
        }
        for (VertexId b = static_cast<VertexId>(graph.num_stabilizers()); b < graph.num_vertices(); ++b) {
            double d = sp.dist[b];
            if (!std::isfinite(d)) {
                continue;
            }
            auto& slot = graph.side(b) == BoundarySide::left ? sg.left_[i] : sg.right_[i];
            if (!slot || (d < slot->weight && !ties(d, slot->weight))) {
                slot = BoundaryPort{b, d, trace_path(graph, sp, b)};
            }
        }
    }
    return sg;
}

bool Matching::is_perfect() const {
    for (size_t i = 0; i < mate.size(); ++i) {
        int32_t m = mate[i];
        if (m == kUnmatched) {
            return false;
        }
        if (m >= 0) {
            if (static_cast<size_t>(m) >= mate.size() || static_cast<size_t>(m) == i ||
                mate[static_cast<size_t>(m)] != static_cast<int32_t>(i)) {
                return false;
            }
        } else if (m != kLeftBoundary && m != kRightBoundary) {
            return false;
        }
    }
    return true;
}

std::vector<SyndromeEdge> Matching::edges() const {
    std::vector<SyndromeEdge> out;
    for (size_t i = 0; i < mate.size(); ++i) {
        if (mate[i] >= 0 && static_cast<size_t>(mate[i]) > i) {
            out.push_back(SyndromeEdge{static_cast<uint32_t>(i), mate[i]});
        }
    }
    for (size_t i = 0; i < mate.size(); ++i) {
        if (mate[i] == kLeftBoundary || mate[i] == kRightBoundary) {
            out.push_back(SyndromeEdge{static_cast<uint32_t>(i), mate[i]});
        }
    }
    return out;
}

double matching_weight(const SyndromeGraph& sg, const Matching& matching) {
    double total = 0;
    for (const SyndromeEdge& e : matching.edges()) {
        total += sg.edge_weight(e);
    }
    return total;
}

ErrorPattern expand(const SyndromeGraph& sg, std::span<const SyndromeEdge> selection) {
    if (!sg.has_witnesses()) {
        throw std::invalid_argument("syndrome graph carries no witness paths");
    }
    std::vector<uint32_t> ids;
    for (const SyndromeEdge& e : selection) {
        if (e.is_boundary()) {
            const auto& p = sg.port(e.a, boundary_side_of(e.b));
            if (!p) {
                throw std::invalid_argument("selected boundary port does not exist");
            }
            ids.insert(ids.end(), p->path.begin(), p->path.end());
        } else {
            if (!std::isfinite(sg.weight(e.a, static_cast<size_t>(e.b)))) {
                throw std::invalid_argument("selected pair is disconnected");
            }
            const auto& w = sg.witness(e.a, static_cast<size_t>(e.b));
            ids.insert(ids.end(), w.begin(), w.end());
        }
    }
    return ErrorPattern(std::move(ids));
}

ErrorPattern expand(const SyndromeGraph& sg, const Matching& matching) {
    auto edges = matching.edges();
    return expand(sg, edges);
}

}  // namespace mp
