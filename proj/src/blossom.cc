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

#include "matchpoint/blossom.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace mp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Label : uint8_t { free, even, odd };

// Event categories in processing order.
enum Category : int { kBoundary = 0, kBlossom = 1, kAugment = 2, kGrow = 3, kExpand = 4 };

struct Event {
    int category = 0;
    uint32_t key1 = 0;
    uint32_t key2 = 0;
    int32_t u = 0;
    int32_t v = 0;
    BlossomEventKind kind = BlossomEventKind::grow;

    auto key() const {
        return std::make_tuple(category, key1, key2, u, v);
    }
};

class Solver {
   public:
    Solver(const SyndromeGraph& sg, bool record) : sg_(sg), n_(sg.num_defects()), record_(record) {
        tol_ = mwpm_tolerance(sg);
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) {
                double w = sg.weight(i, j);
                if (std::isnan(w) || w < 0) {
                    throw std::invalid_argument("syndrome graph has a negative or NaN weight");
                }
            }
            for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
                double w = sg.port_weight(i, s);
                if (std::isnan(w) || w < 0) {
                    throw std::invalid_argument("syndrome graph has a negative or NaN port weight");
                }
            }
        }
        nodes_.resize(n_);
        for (size_t v = 0; v < n_; ++v) {
            nodes_[v].base = static_cast<int>(v);
            nodes_[v].min_member = static_cast<uint32_t>(v);
        }
        mate_.assign(n_, kUnmatched);
        cl_parent_.resize(n_);
        for (size_t v = 0; v < n_; ++v) {
            cl_parent_[v] = static_cast<uint32_t>(v);
        }
        cl_left_.assign(n_, 0);
        cl_right_.assign(n_, 0);
    }

    MwpmResult run() {
        reset_stage();
        snapshot();
        bool dirty = false;
        while (has_exposed()) {
            Event ev;
            double delta = kInf;
            if (find_event(ev, delta)) {
                process(ev);
                dirty = true;
                continue;
            }
            if (dirty) {
                snapshot();
                dirty = false;
            }
            if (!std::isfinite(delta)) {
                throw std::logic_error("defect cannot reach a partner or boundary");
            }
            grow(delta);
        }
        if (dirty || trace_.snapshots.empty()) {
            snapshot();
        }
        return result();
    }

   private:
    struct Node {
        int parent = -1;
        std::vector<int> children;
        // cycle[k] joins a vertex of children[k] to a vertex of children[k + 1 mod m].
        std::vector<std::pair<int, int>> cycle;
        int base = 0;
        double y = 0;
        bool alive = true;
        Label label = Label::free;
        int root = -1;
        // (vertex in this node, vertex in the tree parent); (-1, -1) for roots.
        std::pair<int, int> tparent{-1, -1};
        uint32_t min_member = 0;
    };

    bool is_blossom(int b) const {
        return static_cast<size_t>(b) >= n_;
    }

    int top(int v) const {
        while (nodes_[v].parent != -1) {
            v = nodes_[v].parent;
        }
        return v;
    }

    int child_containing(int b, int v) const {
        while (nodes_[v].parent != b) {
            v = nodes_[v].parent;
        }
        return v;
    }

    double reach(int v) const {
        double total = 0;
        for (int x = v; x != -1; x = nodes_[x].parent) {
            total += nodes_[x].y;
        }
        return total;
    }

    bool exposed(int b) const {
        return mate_[nodes_[b].base] == kUnmatched;
    }

    std::vector<int> top_nodes() const {
        std::vector<int> out;
        for (size_t b = 0; b < nodes_.size(); ++b) {
            if (nodes_[b].alive && nodes_[b].parent == -1) {
                out.push_back(static_cast<int>(b));
            }
        }
        return out;
    }

    bool has_exposed() const {
        for (int m : mate_) {
            if (m == kUnmatched) {
                return true;
            }
        }
        return false;
    }

    double sigma() const {
        double total = 0;
        for (const Node& node : nodes_) {
            if (node.alive) {
                total += node.y;
            }
        }
        return total;
    }

    uint32_t find(uint32_t v) {
        while (cl_parent_[v] != v) {
            cl_parent_[v] = cl_parent_[cl_parent_[v]];
            v = cl_parent_[v];
        }
        return v;
    }

    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (b < a) {
            std::swap(a, b);
        }
        cl_parent_[b] = a;
        cl_left_[a] |= cl_left_[b];
        cl_right_[a] |= cl_right_[b];
    }

    void touch(uint32_t v, BoundarySide side) {
        uint32_t r = find(v);
        (side == BoundarySide::left ? cl_left_ : cl_right_)[r] = 1;
    }

    // Expands zero-dual top blossoms, then makes every exposed top node an even root.
    void reset_stage() {
        bool again = true;
        while (again) {
            again = false;
            for (int b : top_nodes()) {
                if (is_blossom(b) && nodes_[b].y <= tol_) {
                    dissolve(b);
                    again = true;
                }
            }
        }
        for (int b : top_nodes()) {
            Node& node = nodes_[b];
            node.tparent = {-1, -1};
            if (exposed(b)) {
                node.label = Label::even;
                node.root = node.base;
            } else {
                node.label = Label::free;
                node.root = -1;
            }
        }
    }

    void dissolve(int b) {
        for (int c : nodes_[b].children) {
            nodes_[c].parent = -1;
        }
        nodes_[b].alive = false;
        nodes_[b].y = 0;
    }

    bool find_event(Event& best, double& delta) const {
        std::vector<int> tops(n_);
        std::vector<double> ytot(n_);
        for (size_t v = 0; v < n_; ++v) {
            tops[v] = top(static_cast<int>(v));
            ytot[v] = reach(static_cast<int>(v));
        }
        bool found = false;
        auto consider = [&](const Event& e) {
            if (!found || e.key() < best.key()) {
                best = e;
                found = true;
            }
        };
        for (size_t v = 0; v < n_; ++v) {
            const Node& t = nodes_[tops[v]];
            if (t.label != Label::even) {
                continue;
            }
            for (BoundarySide side : {BoundarySide::left, BoundarySide::right}) {
                double w = sg_.port_weight(v, side);
                if (std::isinf(w)) {
                    continue;
                }
                double s = w - ytot[v];
                if (s <= tol_) {
                    consider(Event{
                        kBoundary,
                        t.min_member,
                        side == BoundarySide::left ? 0u : 1u,
                        static_cast<int32_t>(v),
                        boundary_code(side),
                        BlossomEventKind::boundary});
                } else {
                    delta = std::min(delta, s);
                }
            }
        }
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = i + 1; j < n_; ++j) {
                int ti = tops[i];
                int tj = tops[j];
                if (ti == tj) {
                    continue;
                }
                double w = sg_.weight(i, j);
                if (std::isinf(w)) {
                    continue;
                }
                Label li = nodes_[ti].label;
                Label lj = nodes_[tj].label;
                if (li != Label::even && lj != Label::even) {
                    continue;
                }
                double s = w - ytot[i] - ytot[j];
                uint32_t mi = nodes_[ti].min_member;
                uint32_t mj = nodes_[tj].min_member;
                uint32_t k1 = std::min(mi, mj);
                uint32_t k2 = std::max(mi, mj);
                if (li == Label::even && lj == Label::even) {
                    if (s <= tol_) {
                        bool same_tree = nodes_[ti].root == nodes_[tj].root;
                        consider(Event{
                            same_tree ? kBlossom : kAugment,
                            k1,
                            k2,
                            static_cast<int32_t>(i),
                            static_cast<int32_t>(j),
                            same_tree ? BlossomEventKind::blossom : BlossomEventKind::augment});
                    } else {
                        delta = std::min(delta, s / 2);
                    }
                    continue;
                }
                // One side even; the other is odd (constant slack) or free.
                size_t e = li == Label::even ? i : j;
                size_t f = li == Label::even ? j : i;
                int tf = tops[f];
                if (nodes_[tf].label != Label::free) {
                    continue;
                }
                if (s <= tol_) {
                    bool on_boundary = mate_[nodes_[tf].base] < 0;
                    consider(Event{
                        on_boundary ? kAugment : kGrow,
                        k1,
                        k2,
                        static_cast<int32_t>(e),
                        static_cast<int32_t>(f),
                        on_boundary ? BlossomEventKind::steal : BlossomEventKind::grow});
                } else {
                    delta = std::min(delta, s);
                }
            }
        }
        for (size_t b = n_; b < nodes_.size(); ++b) {
            const Node& node = nodes_[b];
            if (!node.alive || node.parent != -1 || node.label != Label::odd) {
                continue;
            }
            if (node.y <= tol_) {
                consider(Event{
                    kExpand, node.min_member, 0, static_cast<int32_t>(b), -1, BlossomEventKind::expand});
            } else {
                delta = std::min(delta, node.y);
            }
        }
        return found;
    }

    void grow(double delta) {
        for (int b : top_nodes()) {
            Node& node = nodes_[b];
            if (node.label == Label::even) {
                node.y += delta;
            } else if (node.label == Label::odd) {
                node.y -= delta;
                if (is_blossom(b) && node.y < 0) {
                    node.y = 0;
                }
            }
        }
    }

    void record(const Event& ev) {
        if (!record_) {
            return;
        }
        uint32_t u = static_cast<uint32_t>(ev.u);
        if (ev.kind == BlossomEventKind::expand) {
            u = nodes_[ev.u].min_member;
        }
        trace_.events.push_back(BlossomEvent{ev.kind, sigma(), u, ev.v});
    }

    void process(const Event& ev) {
        record(ev);
        switch (ev.kind) {
            case BlossomEventKind::boundary: {
                BoundarySide side = boundary_side_of(ev.v);
                touch(static_cast<uint32_t>(ev.u), side);
                augment_from(ev.u, ev.v);
                reset_stage();
                break;
            }
            case BlossomEventKind::augment:
                unite(static_cast<uint32_t>(ev.u), static_cast<uint32_t>(ev.v));
                augment_from(ev.u, ev.v);
                augment_from(ev.v, ev.u);
                reset_stage();
                break;
            case BlossomEventKind::steal: {
                unite(static_cast<uint32_t>(ev.u), static_cast<uint32_t>(ev.v));
                int f = top(ev.v);
                if (is_blossom(f)) {
                    augment_blossom(f, ev.v);
                }
                mate_[ev.v] = ev.u;
                augment_from(ev.u, ev.v);
                reset_stage();
                break;
            }
            case BlossomEventKind::grow: {
                unite(static_cast<uint32_t>(ev.u), static_cast<uint32_t>(ev.v));
                int t = top(ev.u);
                int f = top(ev.v);
                int root = nodes_[t].root;
                Node& fn = nodes_[f];
                fn.label = Label::odd;
                fn.root = root;
                fn.tparent = {ev.v, ev.u};
                int fb = fn.base;
                int g = top(mate_[fb]);
                Node& gn = nodes_[g];
                gn.label = Label::even;
                gn.root = root;
                gn.tparent = {mate_[fb], fb};
                break;
            }
            case BlossomEventKind::blossom:
                unite(static_cast<uint32_t>(ev.u), static_cast<uint32_t>(ev.v));
                form_blossom(ev.u, ev.v);
                break;
            case BlossomEventKind::expand:
                expand_odd(ev.u);
                break;
        }
    }

    // Flips the alternating path from vertex s (in an even node) up to its tree root,
    // matching s to j.
    void augment_from(int s, int j) {
        while (true) {
            int bs = top(s);
            if (is_blossom(bs)) {
                augment_blossom(bs, s);
            }
            mate_[s] = j;
            auto tp = nodes_[bs].tparent;
            if (tp.first < 0) {
                break;
            }
            int bt = top(tp.second);
            auto tp2 = nodes_[bt].tparent;
            int j2 = tp2.first;
            int s2 = tp2.second;
            if (is_blossom(bt)) {
                augment_blossom(bt, j2);
            }
            mate_[j2] = s2;
            s = s2;
            j = j2;
        }
    }

    // Rematches blossom b so that vertex v becomes its base.
    void augment_blossom(int b, int v) {
        int t = child_containing(b, v);
        if (is_blossom(t)) {
            augment_blossom(t, v);
        }
        Node& node = nodes_[b];
        int m = static_cast<int>(node.children.size());
        int i = static_cast<int>(std::find(node.children.begin(), node.children.end(), t) - node.children.begin());
        auto match_edge = [&](int edge) {
            auto [a, c] = nodes_[b].cycle[edge];
            int ca = nodes_[b].children[edge];
            int cc = nodes_[b].children[(edge + 1) % m];
            if (is_blossom(ca)) {
                augment_blossom(ca, a);
            }
            if (is_blossom(cc)) {
                augment_blossom(cc, c);
            }
            mate_[a] = c;
            mate_[c] = a;
        };
        if (i % 2 == 0) {
            for (int k = i - 1; k >= 1; k -= 2) {
                match_edge(k - 1);
            }
        } else {
            for (int k = i + 1; k < m; k += 2) {
                match_edge(k);
            }
        }
        Node& nb = nodes_[b];
        std::rotate(nb.children.begin(), nb.children.begin() + i, nb.children.end());
        std::rotate(nb.cycle.begin(), nb.cycle.begin() + i, nb.cycle.end());
        nb.base = v;
    }

    void form_blossom(int u, int v) {
        int tu = top(u);
        int tv = top(v);
        auto tree_parent = [&](int x) {
            return nodes_[x].tparent.first < 0 ? -1 : top(nodes_[x].tparent.second);
        };
        std::vector<int> path_u{tu};
        while (tree_parent(path_u.back()) != -1) {
            path_u.push_back(tree_parent(path_u.back()));
        }
        std::vector<int> path_v{tv};
        while (std::find(path_u.begin(), path_u.end(), path_v.back()) == path_u.end()) {
            path_v.push_back(tree_parent(path_v.back()));
        }
        int lca = path_v.back();
        path_v.pop_back();
        path_u.resize(static_cast<size_t>(std::find(path_u.begin(), path_u.end(), lca) - path_u.begin()) + 1);

        Node blossom;
        blossom.children.assign(path_u.rbegin(), path_u.rend());
        for (size_t k = path_u.size() - 1; k >= 1; --k) {
            auto tp = nodes_[path_u[k - 1]].tparent;
            blossom.cycle.emplace_back(tp.second, tp.first);
        }
        blossom.cycle.emplace_back(u, v);
        for (int x : path_v) {
            blossom.children.push_back(x);
            blossom.cycle.push_back(nodes_[x].tparent);
        }
        const Node& base_node = nodes_[lca];
        blossom.base = base_node.base;
        blossom.label = Label::even;
        blossom.root = base_node.root;
        blossom.tparent = base_node.tparent;
        blossom.min_member = base_node.min_member;
        for (int c : blossom.children) {
            blossom.min_member = std::min(blossom.min_member, nodes_[c].min_member);
        }
        int id = static_cast<int>(nodes_.size());
        for (int c : blossom.children) {
            nodes_[c].parent = id;
        }
        nodes_.push_back(std::move(blossom));
    }

    // Dissolves an odd blossom whose dual reached zero, keeping the alternating tree.
    void expand_odd(int b) {
        Node node = nodes_[b];
        int m = static_cast<int>(node.children.size());
        int t = child_containing(b, node.tparent.first);
        int j = static_cast<int>(std::find(node.children.begin(), node.children.end(), t) - node.children.begin());
        dissolve(b);
        for (int c : node.children) {
            nodes_[c].label = Label::free;
            nodes_[c].root = -1;
            nodes_[c].tparent = {-1, -1};
        }
        bool forward = j % 2 == 1;
        int steps = forward ? m - j : j;
        for (int i = 0; i <= steps; ++i) {
            int idx = forward ? (j + i) % m : j - i;
            Node& c = nodes_[node.children[idx]];
            c.label = i % 2 == 0 ? Label::odd : Label::even;
            c.root = node.root;
            if (i == 0) {
                c.tparent = node.tparent;
            } else if (forward) {
                auto e = node.cycle[(j + i - 1) % m];
                c.tparent = {e.second, e.first};
            } else {
                c.tparent = node.cycle[j - i];
            }
        }
    }

    void snapshot() {
        std::vector<double> ytot(n_);
        for (size_t v = 0; v < n_; ++v) {
            ytot[v] = reach(static_cast<int>(v));
        }
        // Regions touch along every tight edge, whether or not an event used it.
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = i + 1; j < n_; ++j) {
                double w = sg_.weight(i, j);
                if (std::isfinite(w) && top(static_cast<int>(i)) != top(static_cast<int>(j)) &&
                    w - ytot[i] - ytot[j] <= tol_) {
                    unite(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
                }
            }
        }
        for (size_t v = 0; v < n_; ++v) {
            for (BoundarySide side : {BoundarySide::left, BoundarySide::right}) {
                double w = sg_.port_weight(v, side);
                if (std::isfinite(w) && w - ytot[v] <= tol_) {
                    touch(static_cast<uint32_t>(v), side);
                }
            }
        }
        if (!record_) {
            return;
        }
        ClusterSnapshot snap;
        snap.sigma = sigma();
        snap.clusters = clusters();
        snap.reach = std::move(ytot);
        snap.mate = mate_;
        trace_.snapshots.push_back(std::move(snap));
    }

    std::vector<DualCluster> clusters() {
        std::map<uint32_t, DualCluster> by_root;
        for (size_t v = 0; v < n_; ++v) {
            uint32_t r = find(static_cast<uint32_t>(v));
            DualCluster& c = by_root[r];
            c.members.push_back(static_cast<uint32_t>(v));
            c.size += nodes_[v].y;
            c.touches_left = cl_left_[r] != 0;
            c.touches_right = cl_right_[r] != 0;
        }
        for (size_t b = n_; b < nodes_.size(); ++b) {
            if (nodes_[b].alive) {
                by_root[find(nodes_[b].min_member)].size += nodes_[b].y;
            }
        }
        std::vector<DualCluster> out;
        for (auto& [r, c] : by_root) {
            out.push_back(std::move(c));
        }
        return out;
    }

    void collect_members(int b, std::vector<uint32_t>& out) const {
        if (!is_blossom(b)) {
            out.push_back(static_cast<uint32_t>(b));
            return;
        }
        for (int c : nodes_[b].children) {
            collect_members(c, out);
        }
    }

    MwpmResult result() {
        MwpmResult r;
        r.matching.mate = mate_;
        r.weight = matching_weight(sg_, r.matching);
        r.duals.vertex_y.resize(n_);
        for (size_t v = 0; v < n_; ++v) {
            r.duals.vertex_y[v] = nodes_[v].y;
        }
        std::vector<int64_t> index(nodes_.size(), -1);
        for (size_t b = n_; b < nodes_.size(); ++b) {
            if (nodes_[b].alive) {
                index[b] = static_cast<int64_t>(n_ + r.duals.blossoms.size());
                r.duals.blossoms.emplace_back();
            }
        }
        auto ref = [&](int x) {
            return static_cast<uint32_t>(is_blossom(x) ? index[x] : x);
        };
        for (size_t b = n_; b < nodes_.size(); ++b) {
            if (!nodes_[b].alive) {
                continue;
            }
            DualBlossom& db = r.duals.blossoms[static_cast<size_t>(index[b]) - n_];
            db.y = nodes_[b].y;
            collect_members(static_cast<int>(b), db.members);
            std::sort(db.members.begin(), db.members.end());
            for (int c : nodes_[b].children) {
                db.children.push_back(ref(c));
            }
            db.parent = nodes_[b].parent == -1 ? -1 : static_cast<int64_t>(ref(nodes_[b].parent));
        }
        r.clusters = clusters();
        r.trace = std::move(trace_);
        return r;
    }

    const SyndromeGraph& sg_;
    size_t n_;
    bool record_;
    double tol_ = 0;
    std::vector<Node> nodes_;
    std::vector<int32_t> mate_;
    std::vector<uint32_t> cl_parent_;
    std::vector<uint8_t> cl_left_;
    std::vector<uint8_t> cl_right_;
    BlossomTrace trace_;
};

}  // namespace

double DualState::objective() const {
    double total = 0;
    for (double y : vertex_y) {
        total += y;
    }
    for (const DualBlossom& b : blossoms) {
        total += b.y;
    }
    return total;
}

const char* to_string(BlossomEventKind kind) {
    switch (kind) {
        case BlossomEventKind::boundary:
            return "boundary";
        case BlossomEventKind::blossom:
            return "blossom";
        case BlossomEventKind::augment:
            return "augment";
        case BlossomEventKind::steal:
            return "steal";
        case BlossomEventKind::grow:
            return "grow";
        case BlossomEventKind::expand:
            return "expand";
    }
    return "unknown";
}

double mwpm_tolerance(const SyndromeGraph& sg) {
    double w = sg.max_finite_weight();
    return w > 0 ? 1e-9 * w : 1e-12;
}

MwpmResult solve_mwpm(const SyndromeGraph& sg, bool record_trace) {
    Solver solver(sg, record_trace);
    return solver.run();
}

CertificateReport verify_certificate(const SyndromeGraph& sg, const Matching& matching, const DualState& duals) {
    CertificateReport report;
    auto fail = [&](const std::string& reason) {
        report.ok = false;
        if (std::find(report.reasons.begin(), report.reasons.end(), reason) == report.reasons.end()) {
            report.reasons.push_back(reason);
        }
    };
    size_t n = sg.num_defects();
    double tol = mwpm_tolerance(sg);
    if (duals.vertex_y.size() != n || matching.mate.size() != n) {
        fail("size mismatch");
        return report;
    }
    std::vector<std::vector<char>> inside;
    for (const DualBlossom& b : duals.blossoms) {
        if (b.y < -tol) {
            fail("negative blossom dual");
        }
        if (b.members.size() < 3 || b.members.size() % 2 == 0) {
            fail("blossom is not an odd set");
        }
        std::vector<char> in(n, 0);
        for (uint32_t m : b.members) {
            if (m >= n) {
                fail("blossom member out of range");
                return report;
            }
            in[m] = 1;
        }
        inside.push_back(std::move(in));
    }
    auto pair_load = [&](size_t i, size_t j) {
        double total = duals.vertex_y[i] + duals.vertex_y[j];
        for (size_t k = 0; k < inside.size(); ++k) {
            if (inside[k][i] != inside[k][j]) {
                total += duals.blossoms[k].y;
            }
        }
        return total;
    };
    auto port_load = [&](size_t i) {
        double total = duals.vertex_y[i];
        for (size_t k = 0; k < inside.size(); ++k) {
            if (inside[k][i]) {
                total += duals.blossoms[k].y;
            }
        }
        return total;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double w = sg.weight(i, j);
            if (std::isfinite(w) && pair_load(i, j) > w + tol) {
                fail("dual infeasible");
            }
        }
        for (BoundarySide s : {BoundarySide::left, BoundarySide::right}) {
            double w = sg.port_weight(i, s);
            if (std::isfinite(w) && port_load(i) > w + tol) {
                fail("dual infeasible");
            }
        }
    }
    if (!matching.is_perfect()) {
        fail("matching not perfect");
        return report;
    }
    std::vector<int> crossing(inside.size(), 0);
    for (const SyndromeEdge& e : matching.edges()) {
        double w = sg.edge_weight(e);
        if (!std::isfinite(w)) {
            fail("matched edge absent");
            continue;
        }
        double load = e.is_boundary() ? port_load(e.a) : pair_load(e.a, static_cast<size_t>(e.b));
        if (w - load > tol) {
            fail("slack>0");
        }
        for (size_t k = 0; k < inside.size(); ++k) {
            bool a_in = inside[k][e.a] != 0;
            bool b_in = !e.is_boundary() && inside[k][static_cast<size_t>(e.b)] != 0;
            if (a_in != b_in) {
                ++crossing[k];
            }
        }
    }
    for (size_t k = 0; k < inside.size(); ++k) {
        if (duals.blossoms[k].y > tol && crossing[k] != 1) {
            fail("blossom not crossed exactly once");
        }
    }
    double gap = matching_weight(sg, matching) - duals.objective();
    if (gap > tol * static_cast<double>(n + 1)) {
        fail("duality gap");
    }
    return report;
}

const std::vector<ClusterSnapshot>& cluster_snapshots(const BlossomTrace& trace) {
    return trace.snapshots;
}

ErrorPattern decode_mwpm(const ModelGraph& graph, const Syndrome& syndrome) {
    SyndromeGraph sg = build_syndrome_graph(graph, syndrome);
    MwpmResult r = solve_mwpm(sg);
    return expand(sg, r.matching);
}

}  // namespace mp
