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

#include "matchpoint/fowler_svg.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mp {

namespace {

constexpr double kUnit = 24;  // pixels per lattice step
constexpr double kMargin = 36;
constexpr double kTitle = 22;
const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2", "#edc948", "#9c755f", "#e15759"};

struct Box {
    int32_t min_row = 0;
    int32_t max_row = 0;
    int32_t min_col = 0;
    int32_t max_col = 0;
    int32_t rounds = 1;
};

Box bounds(const std::vector<Position>& pos) {
    Box b;
    if (pos.empty()) {
        return b;
    }
    b.min_row = b.max_row = pos[0].row;
    b.min_col = b.max_col = pos[0].col;
    for (const Position& p : pos) {
        b.min_row = std::min(b.min_row, p.row);
        b.max_row = std::max(b.max_row, p.row);
        b.min_col = std::min(b.min_col, p.col);
        b.max_col = std::max(b.max_col, p.col);
        b.rounds = std::max(b.rounds, p.round + 1);
    }
    return b;
}

/// Places frames in a grid and slices inside each frame.
class Canvas {
   public:
    Canvas(const Box& box, size_t frames, double pad) : box_(box), pad_(pad) {
        slice_w_ = (box.max_col - box.min_col) / 2.0 * kUnit + 2 * pad + 2 * kMargin;
        frame_w_ = slice_w_ * box.rounds;
        frame_h_ = (box.max_row - box.min_row) / 2.0 * kUnit + 2 * pad + 2 * kMargin + kTitle;
        cols_ = std::max<size_t>(1, std::min<size_t>(frames, std::max<size_t>(1, static_cast<size_t>(1200 / frame_w_))));
        rows_ = (frames + cols_ - 1) / cols_;
    }

    double width() const {
        return frame_w_ * static_cast<double>(cols_);
    }
    double height() const {
        return frame_h_ * static_cast<double>(std::max<size_t>(rows_, 1));
    }
    double frame_x(size_t f) const {
        return frame_w_ * static_cast<double>(f % cols_);
    }
    double frame_y(size_t f) const {
        return frame_h_ * static_cast<double>(f / cols_);
    }
    double frame_w() const {
        return frame_w_;
    }
    double frame_h() const {
        return frame_h_;
    }
    double x(size_t f, const Position& p) const {
        return frame_x(f) + slice_w_ * p.round + kMargin + pad_ + (p.col - box_.min_col) / 2.0 * kUnit;
    }
    double y(size_t f, const Position& p) const {
        return frame_y(f) + kTitle + kMargin + pad_ + (p.row - box_.min_row) / 2.0 * kUnit;
    }
    double slice_left(size_t f, int32_t round) const {
        return frame_x(f) + slice_w_ * round + kMargin / 2;
    }
    double slice_right(size_t f, int32_t round) const {
        return frame_x(f) + slice_w_ * (round + 1) - kMargin / 2;
    }

   private:
    Box box_;
    double pad_;
    double slice_w_ = 0;
    double frame_w_ = 0;
    double frame_h_ = 0;
    size_t cols_ = 1;
    size_t rows_ = 1;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

void header(std::ostringstream& out, const Canvas& c) {
    out << R"SVG(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")SVG" << fmt(c.width())
        << R"SVG(" height=")SVG" << fmt(c.height()) << "\">\n";
    out << R"SVG(<rect x="0" y="0" width="100%" height="100%" fill="white"/>)SVG" << '\n';
}

void open_frame(std::ostringstream& out, const Canvas& c, size_t f, const std::string& title) {
    out << "<g class=\"frame\" id=\"frame" << f << "\">\n";
    out << " <rect x=\"" << fmt(c.frame_x(f) + 2) << "\" y=\"" << fmt(c.frame_y(f) + 2) << "\" width=\""
        << fmt(c.frame_w() - 4) << "\" height=\"" << fmt(c.frame_h() - 4) << "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    out << " <text x=\"" << fmt(c.frame_x(f) + 8) << "\" y=\"" << fmt(c.frame_y(f) + 18)
        << "\" font-family=\"monospace\" font-size=\"14\">(" << f + 1 << ") " << title << "</text>\n";
}

void diamond(std::ostringstream& out, double cx, double cy, double r, const char* fill) {
    out << " <polygon points=\"" << fmt(cx - r) << "," << fmt(cy) << " " << fmt(cx) << "," << fmt(cy - r) << " "
        << fmt(cx + r) << "," << fmt(cy) << " " << fmt(cx) << "," << fmt(cy + r) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.35\" stroke=\"" << fill << "\" stroke-width=\"1\"/>\n";
}

void dot(std::ostringstream& out, double cx, double cy, const char* fill) {
    out << " <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2, const char* stroke, double width,
          const char* extra = "") {
    out << " <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\"" << extra << "/>\n";
}

int l1(const Position& a, const Position& b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

/// Pixels per unit of weight, from the median ratio of lattice to weight distance.
double pixels_per_weight(const SyndromeGraph& sg) {
    std::vector<double> ratios;
    for (size_t i = 0; i < sg.num_defects(); ++i) {
        for (size_t j = i + 1; j < sg.num_defects(); ++j) {
            double w = sg.weight(i, j);
            const Position& a = sg.position(i);
            const Position& b = sg.position(j);
            if (std::isfinite(w) && w > 0 && a.round == b.round && l1(a, b) > 0) {
                ratios.push_back(l1(a, b) / 2.0 * kUnit / w);
            }
        }
    }
    if (ratios.empty()) {
        double w = sg.max_finite_weight();
        return w > 0 ? kUnit / w : kUnit;
    }
    std::nth_element(ratios.begin(), ratios.begin() + static_cast<long>(ratios.size() / 2), ratios.end());
    return ratios[ratios.size() / 2];
}

std::vector<Position> positions_of(const SyndromeGraph& sg) {
    std::vector<Position> out;
    for (size_t i = 0; i < sg.num_defects(); ++i) {
        out.push_back(sg.position(i));
    }
    return out;
}

}  // namespace

std::string blossom_fowler_svg(const SyndromeGraph& sg, const BlossomTrace& trace) {
    if (trace.snapshots.empty()) {
        throw std::invalid_argument("trace has no snapshots; solve with record_trace");
    }
    size_t n = sg.num_defects();
    for (const ClusterSnapshot& s : trace.snapshots) {
        if (s.reach.size() != n || s.mate.size() != n) {
            throw std::invalid_argument("trace does not match the syndrome graph");
        }
    }
    double ppw = pixels_per_weight(sg);
    double max_reach = 0;
    for (const ClusterSnapshot& s : trace.snapshots) {
        for (double r : s.reach) {
            max_reach = std::max(max_reach, r);
        }
    }
    std::vector<Position> pos = positions_of(sg);
    Canvas canvas(bounds(pos), trace.snapshots.size(), std::min(max_reach * ppw, 6 * kUnit));
    std::ostringstream out;
    header(out, canvas);
    for (size_t f = 0; f < trace.snapshots.size(); ++f) {
        const ClusterSnapshot& s = trace.snapshots[f];
        open_frame(out, canvas, f, "sum y = " + fmt(s.sigma));
        std::vector<size_t> color(n, 0);
        for (size_t k = 0; k < s.clusters.size(); ++k) {
            for (uint32_t m : s.clusters[k].members) {
                color[m] = k;
            }
        }
        for (size_t i = 0; i < n; ++i) {
            if (s.reach[i] > 0) {
                diamond(out, canvas.x(f, pos[i]), canvas.y(f, pos[i]), s.reach[i] * ppw, kPalette[color[i] % 8]);
            }
        }
        for (size_t i = 0; i < n; ++i) {
            int32_t m = s.mate[i];
            double x = canvas.x(f, pos[i]);
            double y = canvas.y(f, pos[i]);
            if (m >= 0 && static_cast<size_t>(m) > i) {
                line(out, x, y, canvas.x(f, pos[m]), canvas.y(f, pos[m]), "#d62728", 3, " class=\"matched\"");
            } else if (m == kLeftBoundary) {
                line(out, x, y, canvas.slice_left(f, pos[i].round), y, "#d62728", 3, " class=\"matched\"");
            } else if (m == kRightBoundary) {
                line(out, x, y, canvas.slice_right(f, pos[i].round), y, "#d62728", 3, " class=\"matched\"");
            }
        }
        for (size_t i = 0; i < n; ++i) {
            dot(out, canvas.x(f, pos[i]), canvas.y(f, pos[i]), "black");
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string uf_fowler_svg(
    const ModelGraph& graph,
    const Syndrome& syndrome,
    const UfTrace& trace,
    const std::optional<ErrorPattern>& correction) {
    if (trace.checkpoints.empty()) {
        throw std::invalid_argument("trace has no checkpoints; decode with record_trace");
    }
    std::vector<Position> pos;
    for (const Vertex& v : graph.vertices()) {
        pos.push_back(v.pos);
    }
    std::vector<uint32_t> defects(syndrome.begin(), syndrome.end());
    bool edge_mode = trace.checkpoints.front().growth.size() == graph.num_edges();
    if (!edge_mode && trace.checkpoints.front().growth.size() != defects.size()) {
        throw std::invalid_argument("trace does not match the graph and syndrome");
    }
    double ppw = 0;
    if (!edge_mode) {
        double w = 0;
        size_t k = 0;
        for (const Edge& e : graph.edges()) {
            if (std::isfinite(e.weight)) {
                w += e.weight;
                ++k;
            }
        }
        ppw = k > 0 && w > 0 ? kUnit * static_cast<double>(k) / w / trace.scale : kUnit;
    }
    Canvas canvas(bounds(pos), trace.checkpoints.size(), kUnit / 2);
    std::ostringstream out;
    header(out, canvas);
    for (size_t f = 0; f < trace.checkpoints.size(); ++f) {
        const UfCheckpoint& cp = trace.checkpoints[f];
        open_frame(out, canvas, f, "sum = " + fmt(cp.sigma));
        std::map<uint32_t, size_t> color;
        for (size_t k = 0; k < cp.clusters.size(); ++k) {
            for (uint32_t d : cp.clusters[k].defects) {
                color[d] = k;
            }
        }
        for (EdgeId e = 0; e < graph.num_edges(); ++e) {
            const Edge& edge = graph.edge(e);
            if (!std::isfinite(edge.weight)) {
                continue;
            }
            const Position& a = pos[edge.u];
            const Position& b = pos[edge.v];
            double g = edge_mode ? cp.growth[e] : 0;
            const char* cls = g >= 1 ? " class=\"grown\"" : g > 0 ? " class=\"half-grown\" stroke-dasharray=\"4 3\"" : "";
            line(out, canvas.x(f, a), canvas.y(f, a), canvas.x(f, b), canvas.y(f, b), g > 0 ? "black" : "#bbbbbb",
                 g >= 1 ? 3 : 1, cls);
        }
        if (!edge_mode) {
            for (size_t i = 0; i < defects.size(); ++i) {
                if (cp.growth[i] > 0) {
                    const Position& p = pos[defects[i]];
                    diamond(out, canvas.x(f, p), canvas.y(f, p), cp.growth[i] * ppw, kPalette[color[defects[i]] % 8]);
                }
            }
        }
        if (correction && f + 1 == trace.checkpoints.size()) {
            for (uint32_t e : *correction) {
                const Edge& edge = graph.edge(e);
                line(out, canvas.x(f, pos[edge.u]), canvas.y(f, pos[edge.u]), canvas.x(f, pos[edge.v]),
                     canvas.y(f, pos[edge.v]), "#d62728", 3, " class=\"matched\"");
            }
        }
        for (const Vertex& v : graph.vertices()) {
            if (v.is_boundary()) {
                out << " <rect x=\"" << fmt(canvas.x(f, v.pos) - 3) << "\" y=\"" << fmt(canvas.y(f, v.pos) - 3)
                    << "\" width=\"6\" height=\"6\" fill=\"#888888\"/>\n";
            }
        }
        for (uint32_t d : defects) {
            dot(out, canvas.x(f, pos[d]), canvas.y(f, pos[d]), kPalette[color[d] % 8]);
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

size_t count_frames(const std::string& svg) {
    size_t count = 0;
    for (size_t at = svg.find("class=\"frame\""); at != std::string::npos; at = svg.find("class=\"frame\"", at + 1)) {
        ++count;
    }
    return count;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace mp
