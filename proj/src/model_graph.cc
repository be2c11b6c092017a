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

#include "matchpoint/model_graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mp {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw std::invalid_argument(std::string(what) + " must be in [0, 0.5], got " + std::to_string(p));
    }
}

void check_css_distance(int distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument("distance must be an odd integer >= 3, got " + std::to_string(distance));
    }
}

Edge make_edge(VertexId u, VertexId v, double p) {
    return Edge{u, v, p, weight_from_probability(p)};
}

/// Collects stabilizers placed on the (2d-1) x (2d-1) grid of an unrotated patch and
/// hands out boundary vertices after them.
class LatticeBuilder {
   public:
    LatticeBuilder(int distance, std::vector<std::pair<int, int>> stabilizer_sites) : distance_(distance) {
        int span = 2 * distance - 1;
        site_to_id_.assign(static_cast<size_t>(span * span), -1);
        for (auto [r, c] : stabilizer_sites) {
            site_to_id_[static_cast<size_t>(r * span + c)] = static_cast<int>(vertices_.size());
            vertices_.push_back(Vertex{
                static_cast<VertexId>(vertices_.size()), VertexKind::stabilizer, BoundarySide::none, {2 * r, 2 * c, 0}});
        }
        num_stabilizers_ = vertices_.size();
    }

    VertexId stabilizer(int r, int c) const {
        int span = 2 * distance_ - 1;
        int id = site_to_id_[static_cast<size_t>(r * span + c)];
        if (id < 0) {
            throw std::logic_error("no stabilizer at lattice site");
        }
        return static_cast<VertexId>(id);
    }

    VertexId add_boundary(BoundarySide side, int r, int c) {
        boundaries_.push_back(Vertex{0, VertexKind::virtual_boundary, side, {2 * r, 2 * c, 0}});
        return static_cast<VertexId>(num_stabilizers_ + boundaries_.size() - 1);
    }

    void add_edge(VertexId u, VertexId v, double p) {
        edges_.push_back(make_edge(u, v, p));
    }

    ModelGraph finish(CodeKind code) {
        for (auto& b : boundaries_) {
            b.id = static_cast<VertexId>(vertices_.size());
            vertices_.push_back(b);
        }
        return ModelGraph(code, distance_, 1, std::move(vertices_), std::move(edges_));
    }

   private:
    int distance_;
    size_t num_stabilizers_ = 0;
    std::vector<int> site_to_id_;
    std::vector<Vertex> vertices_;
    std::vector<Vertex> boundaries_;
    std::vector<Edge> edges_;
};

/// Graph of horizontal-chain errors: stabilizers at (even row, odd col), edges for data
/// qubits at (even, even) horizontally and (odd, odd) vertically.
ModelGraph build_row_chain_lattice(CodeKind code, int d, double p_horizontal, double p_vertical, bool vertical) {
    int last = 2 * d - 2;
    std::vector<std::pair<int, int>> sites;
    for (int r = 0; r <= last; r += 2) {
        for (int c = 1; c < last; c += 2) {
            sites.emplace_back(r, c);
        }
    }
    LatticeBuilder b(d, sites);
    for (int r = 0; r <= last; ++r) {
        for (int c = 0; c <= last; ++c) {
            if ((r + c) % 2 != 0) {
                continue;
            }
            if (r % 2 == 0) {
                VertexId lhs = c > 0 ? b.stabilizer(r, c - 1) : b.add_boundary(BoundarySide::left, r, -1);
                VertexId rhs = c < last ? b.stabilizer(r, c + 1) : b.add_boundary(BoundarySide::right, r, last + 1);
                if (c == 0) {
                    b.add_edge(rhs, lhs, p_horizontal);
                } else {
                    b.add_edge(lhs, rhs, p_horizontal);
                }
            } else if (vertical) {
                b.add_edge(b.stabilizer(r - 1, c), b.stabilizer(r + 1, c), p_vertical);
            }
        }
    }
    return b.finish(code);
}

}  // namespace

double weight_from_probability(double p) {
    check_probability(p, "error probability");
    if (p == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    if (p == 0.5) {
        return 0.0;
    }
    return std::log((1.0 - p) / p);
}

double probability_from_weight(double w) {
    if (std::isnan(w) || w < 0) {
        throw std::invalid_argument("edge weight must be nonnegative");
    }
    if (std::isinf(w)) {
        return 0.0;
    }
    return 1.0 / (1.0 + std::exp(w));
}

std::string to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::css_x:
            return "css_x";
        case CodeKind::css_z:
            return "css_z";
        case CodeKind::xzzx:
            return "xzzx";
        case CodeKind::repetition:
            return "repetition";
    }
    return "?";
}

CodeKind code_kind_from_string(const std::string& name) {
    if (name == "css_x") return CodeKind::css_x;
    if (name == "css_z") return CodeKind::css_z;
    if (name == "xzzx") return CodeKind::xzzx;
    if (name == "repetition") return CodeKind::repetition;
    throw std::invalid_argument("unknown code kind: " + name);
}

std::string to_string(BoundarySide side) {
    switch (side) {
        case BoundarySide::none:
            return "none";
        case BoundarySide::left:
            return "left";
        case BoundarySide::right:
            return "right";
    }
    return "?";
}

ModelGraph::ModelGraph(CodeKind code, int distance, int rounds, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : code_(code), distance_(distance), rounds_(rounds), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (rounds_ < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    size_t n = vertices_.size();
    num_stabilizers_ = 0;
    bool seen_boundary = false;
    for (size_t i = 0; i < n; ++i) {
        const Vertex& v = vertices_[i];
        if (v.id != i) {
            throw std::invalid_argument("vertex ids must be contiguous from 0");
        }
        if ((v.side == BoundarySide::none) != (v.kind == VertexKind::stabilizer)) {
            throw std::invalid_argument("vertex " + std::to_string(i) + ": boundary side must be set iff virtual");
        }
        if (v.is_boundary()) {
            seen_boundary = true;
        } else {
            if (seen_boundary) {
                throw std::invalid_argument("stabilizer vertices must precede virtual boundary vertices");
            }
            ++num_stabilizers_;
        }
    }

    std::vector<size_t> degree(n + 1, 0);
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.u >= n || edge.v >= n) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has an unknown endpoint");
        }
        if (edge.u == edge.v) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is a self loop");
        }
        if (is_boundary(edge.u) && is_boundary(edge.v)) {
            throw std::invalid_argument("edge " + std::to_string(e) + " joins two virtual boundary vertices");
        }
        check_probability(edge.error_prob, "error probability");
        double expected = weight_from_probability(edge.error_prob);
        bool consistent = std::isinf(expected) ? std::isinf(edge.weight)
                                                : std::abs(edge.weight - expected) <= 1e-12 * std::max(1.0, expected);
        if (!consistent) {
            throw std::invalid_argument("edge " + std::to_string(e) + " weight does not match its probability");
        }
        ++degree[edge.u];
        ++degree[edge.v];
    }
    adjacency_start_.assign(n + 1, 0);
    for (size_t i = 0; i < n; ++i) {
        adjacency_start_[i + 1] = adjacency_start_[i] + degree[i];
    }
    adjacency_.resize(adjacency_start_[n]);
    std::vector<size_t> fill(adjacency_start_.begin(), adjacency_start_.end() - 1);
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        adjacency_[fill[edge.u]++] = Incidence{static_cast<EdgeId>(e), edge.v};
        adjacency_[fill[edge.v]++] = Incidence{static_cast<EdgeId>(e), edge.u};
    }

    for (const auto& component : connected_components(*this)) {
        bool has_boundary = std::any_of(component.begin(), component.end(), [&](VertexId v) {
            return is_boundary(v);
        });
        if (!has_boundary) {
            throw std::invalid_argument(
                "component containing vertex " + std::to_string(component.front()) + " has no virtual boundary");
        }
    }
}

double ModelGraph::max_finite_weight() const {
    double best = 0;
    for (const auto& e : edges_) {
        if (std::isfinite(e.weight)) {
            best = std::max(best, e.weight);
        }
    }
    return best;
}

bool ModelGraph::operator==(const ModelGraph& other) const {
    return code_ == other.code_ && distance_ == other.distance_ && rounds_ == other.rounds_ &&
           vertices_ == other.vertices_ && edges_ == other.edges_;
}

CssGraphs build_css(int distance, double error_prob_x, double error_prob_z) {
    check_css_distance(distance);
    check_probability(error_prob_x, "error_prob_x");
    check_probability(error_prob_z, "error_prob_z");
    ModelGraph x = build_row_chain_lattice(CodeKind::css_x, distance, error_prob_x, error_prob_x, true);

    // Z errors are caught by X-type ancillas at (odd row, even col). The top boundary
    // plays the left role and the bottom boundary the right role.
    int d = distance;
    int last = 2 * d - 2;
    std::vector<std::pair<int, int>> sites;
    for (int r = 1; r < last; r += 2) {
        for (int c = 0; c <= last; c += 2) {
            sites.emplace_back(r, c);
        }
    }
    LatticeBuilder b(d, sites);
    for (int r = 0; r <= last; ++r) {
        for (int c = 0; c <= last; ++c) {
            if ((r + c) % 2 != 0) {
                continue;
            }
            if (r % 2 == 0) {
                VertexId up = r > 0 ? b.stabilizer(r - 1, c) : b.add_boundary(BoundarySide::left, -1, c);
                VertexId down = r < last ? b.stabilizer(r + 1, c) : b.add_boundary(BoundarySide::right, last + 1, c);
                if (r == 0) {
                    b.add_edge(down, up, error_prob_z);
                } else {
                    b.add_edge(up, down, error_prob_z);
                }
            } else {
                b.add_edge(b.stabilizer(r, c - 1), b.stabilizer(r, c + 1), error_prob_z);
            }
        }
    }
    return CssGraphs{std::move(x), b.finish(CodeKind::css_z)};
}

ModelGraph build_xzzx(int distance, double error_prob_z, double bias) {
    check_css_distance(distance);
    check_probability(error_prob_z, "error_prob_z");
    if (!(bias > 0)) {
        throw std::invalid_argument("bias must be positive");
    }
    bool finite = std::isfinite(bias);
    double p_vertical = finite ? error_prob_z / bias : 0.0;
    if (finite) {
        check_probability(p_vertical, "error_prob_z / bias");
    }
    return build_row_chain_lattice(CodeKind::xzzx, distance, error_prob_z, p_vertical, finite);
}

ModelGraph build_repetition(int distance, std::span<const double> per_edge_probs) {
    if (distance < 2) {
        throw std::invalid_argument("repetition distance must be >= 2");
    }
    if (per_edge_probs.size() != static_cast<size_t>(distance)) {
        throw std::invalid_argument(
            "expected " + std::to_string(distance) + " per-edge probabilities, got " +
            std::to_string(per_edge_probs.size()));
    }
    auto d = static_cast<VertexId>(distance);
    std::vector<Vertex> vertices;
    for (VertexId i = 0; i + 1 < d; ++i) {
        vertices.push_back(
            Vertex{i, VertexKind::stabilizer, BoundarySide::none, {0, 2 * (2 * static_cast<int32_t>(i) + 1), 0}});
    }
    VertexId left = d - 1;
    VertexId right = d;
    vertices.push_back(Vertex{left, VertexKind::virtual_boundary, BoundarySide::left, {0, -2, 0}});
    vertices.push_back(Vertex{right, VertexKind::virtual_boundary, BoundarySide::right, {0, 2 * (2 * distance - 1), 0}});
    std::vector<Edge> edges;
    for (VertexId j = 0; j < d; ++j) {
        double p = per_edge_probs[j];
        check_probability(p, "per-edge probability");
        if (j == 0) {
            edges.push_back(make_edge(0, left, p));
        } else if (j + 1 == d) {
            edges.push_back(make_edge(j - 1, right, p));
        } else {
            edges.push_back(make_edge(j - 1, j, p));
        }
    }
    return ModelGraph(CodeKind::repetition, distance, 1, std::move(vertices), std::move(edges));
}

ModelGraph build_repetition(int distance, double error_prob) {
    std::vector<double> probs(static_cast<size_t>(std::max(distance, 0)), error_prob);
    return build_repetition(distance, probs);
}

ModelGraph build_phenomenological(const ModelGraph& base, int rounds, double meas_error_prob) {
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    if (base.rounds() != 1) {
        throw std::invalid_argument("base graph must be a single-round graph");
    }
    check_probability(meas_error_prob, "meas_error_prob");
    if (rounds == 1) {
        return base;
    }
    auto r_count = static_cast<VertexId>(rounds);
    auto s_count = static_cast<VertexId>(base.num_stabilizers());
    auto b_count = static_cast<VertexId>(base.num_vertices()) - s_count;
    auto map_vertex = [&](VertexId t, VertexId v) -> VertexId {
        return v < s_count ? t * s_count + v : r_count * s_count + t * b_count + (v - s_count);
    };

    std::vector<Vertex> vertices(static_cast<size_t>(r_count) * base.num_vertices());
    std::vector<Edge> edges;
    for (VertexId t = 0; t < r_count; ++t) {
        for (const Vertex& v : base.vertices()) {
            Vertex copy = v;
            copy.id = map_vertex(t, v.id);
            copy.pos.round = static_cast<int32_t>(t);
            vertices[copy.id] = copy;
        }
        for (const Edge& e : base.edges()) {
            edges.push_back(Edge{map_vertex(t, e.u), map_vertex(t, e.v), e.error_prob, e.weight});
        }
    }
    for (VertexId t = 0; t + 1 < r_count; ++t) {
        for (VertexId s = 0; s < s_count; ++s) {
            edges.push_back(make_edge(map_vertex(t, s), map_vertex(t + 1, s), meas_error_prob));
        }
    }
    return ModelGraph(base.code_kind(), base.distance(), rounds, std::move(vertices), std::move(edges));
}

ModelGraph reweighted(const ModelGraph& graph, std::span<const double> weights) {
    if (weights.size() != graph.num_edges()) {
        throw std::invalid_argument("weight count does not match edge count");
    }
    std::vector<Edge> edges = graph.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        edges[e].error_prob = probability_from_weight(weights[e]);
        edges[e].weight = weights[e];
    }
    return ModelGraph(graph.code_kind(), graph.distance(), graph.rounds(), graph.vertices(), std::move(edges));
}

std::vector<std::vector<VertexId>> connected_components(const ModelGraph& graph) {
    size_t n = graph.num_vertices();
    std::vector<int> label(n, -1);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (label[start] >= 0) {
            continue;
        }
        int id = static_cast<int>(out.size());
        out.emplace_back();
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (const Incidence& inc : graph.incident(v)) {
                if (label[inc.neighbor] < 0) {
                    label[inc.neighbor] = id;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}  // namespace mp
