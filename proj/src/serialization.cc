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

#include "matchpoint/serialization.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mp {

namespace {

Json number_or_null(double x) {
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

void expect_schema(const Json& j, const char* schema) {
    if (!j.is_object() || j.value("schema", "") != schema) {
        throw std::invalid_argument(std::string("expected schema ") + schema);
    }
}

const char* kind_name(VertexKind k) {
    return k == VertexKind::stabilizer ? "stabilizer" : "virtual_boundary";
}

Json position_json(const Position& p) {
    return Json{{"row", p.row}, {"col", p.col}, {"round", p.round}};
}

Json cluster_json(const std::vector<uint32_t>& members, bool left, bool right) {
    return Json{{"members", members}, {"touches_left", left}, {"touches_right", right}, {"attached", left && right}};
}

}  // namespace

Json model_graph_to_json(const ModelGraph& graph) {
    Json vertices = Json::array();
    for (const Vertex& v : graph.vertices()) {
        vertices.push_back(Json{
            {"id", v.id},
            {"kind", kind_name(v.kind)},
            {"side", to_string(v.side)},
            {"row", v.pos.row},
            {"col", v.pos.col},
            {"round", v.pos.round}});
    }
    Json edges = Json::array();
    for (const Edge& e : graph.edges()) {
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"p", e.error_prob}, {"w", number_or_null(e.weight)}});
    }
    return Json{
        {"schema", "model_graph_v1"},
        {"code", to_string(graph.code_kind())},
        {"distance", graph.distance()},
        {"rounds", graph.rounds()},
        {"vertices", vertices},
        {"edges", edges}};
}

ModelGraph model_graph_from_json(const Json& j) {
    expect_schema(j, "model_graph_v1");
    try {
        std::vector<Vertex> vertices;
        for (const Json& v : j.at("vertices")) {
            Vertex x;
            x.id = v.at("id").get<VertexId>();
            std::string kind = v.at("kind").get<std::string>();
            if (kind != "stabilizer" && kind != "virtual_boundary") {
                throw std::invalid_argument("unknown vertex kind " + kind);
            }
            x.kind = kind == "stabilizer" ? VertexKind::stabilizer : VertexKind::virtual_boundary;
            std::string side = v.at("side").get<std::string>();
            x.side = side == "left" ? BoundarySide::left : side == "right" ? BoundarySide::right : BoundarySide::none;
            x.pos = Position{v.at("row").get<int32_t>(), v.at("col").get<int32_t>(), v.at("round").get<int32_t>()};
            vertices.push_back(x);
        }
        std::vector<Edge> edges;
        for (const Json& e : j.at("edges")) {
            Edge x;
            x.u = e.at("u").get<VertexId>();
            x.v = e.at("v").get<VertexId>();
            x.error_prob = e.at("p").get<double>();
            x.weight = e.at("w").is_null() ? weight_from_probability(x.error_prob) : e.at("w").get<double>();
            edges.push_back(x);
        }
        return ModelGraph(
            code_kind_from_string(j.at("code").get<std::string>()),
            j.at("distance").get<int>(),
            j.at("rounds").get<int>(),
            std::move(vertices),
            std::move(edges));
    } catch (const Json::exception& ex) {
        throw std::invalid_argument(std::string("malformed model_graph_v1: ") + ex.what());
    }
}

Json pattern_to_json(const ErrorPattern& pattern) {
    return Json{{"schema", "pattern_v1"}, {"edges", pattern.ids()}};
}

ErrorPattern pattern_from_json(const Json& j) {
    expect_schema(j, "pattern_v1");
    return ErrorPattern(j.at("edges").get<std::vector<uint32_t>>());
}

Json syndrome_to_json(const Syndrome& syndrome) {
    return Json{{"schema", "syndrome_v1"}, {"defects", syndrome.ids()}};
}

Syndrome syndrome_from_json(const Json& j) {
    expect_schema(j, "syndrome_v1");
    return Syndrome(j.at("defects").get<std::vector<uint32_t>>());
}

Json syndrome_graph_to_json(const SyndromeGraph& sg) {
    size_t n = sg.num_defects();
    Json positions = Json::array();
    Json weights = Json::array();
    Json ports = Json::array();
    for (size_t i = 0; i < n; ++i) {
        positions.push_back(position_json(sg.position(i)));
        Json row = Json::array();
        for (size_t j = 0; j < n; ++j) {
            row.push_back(number_or_null(sg.weight(i, j)));
        }
        weights.push_back(row);
        Json port = Json::object();
        for (BoundarySide side : {BoundarySide::left, BoundarySide::right}) {
            const auto& p = sg.port(i, side);
            Json pj{{"weight", number_or_null(sg.port_weight(i, side))}};
            if (p && sg.has_witnesses()) {
                pj["boundary"] = p->boundary;
                pj["path"] = p->path;
            }
            port[to_string(side)] = pj;
        }
        ports.push_back(port);
    }
    Json witnesses = Json::array();
    if (sg.has_witnesses()) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                witnesses.push_back(Json{{"a", i}, {"b", j}, {"path", sg.witness(i, j)}});
            }
        }
    }
    return Json{
        {"schema", "syndrome_graph_v1"},
        {"defects", sg.defects()},
        {"positions", positions},
        {"weights", weights},
        {"ports", ports},
        {"witnesses", witnesses}};
}

Json blossom_trace_to_json(const SyndromeGraph& sg, const MwpmResult& result) {
    Json events = Json::array();
    for (const BlossomEvent& e : result.trace.events) {
        events.push_back(Json{{"kind", to_string(e.kind)}, {"sigma", e.sigma}, {"u", e.u}, {"v", e.v}});
    }
    Json snapshots = Json::array();
    for (const ClusterSnapshot& s : result.trace.snapshots) {
        Json clusters = Json::array();
        for (const DualCluster& c : s.clusters) {
            Json cj = cluster_json(c.members, c.touches_left, c.touches_right);
            cj["size"] = c.size;
            clusters.push_back(cj);
        }
        snapshots.push_back(Json{{"sigma", s.sigma}, {"clusters", clusters}, {"reach", s.reach}, {"mate", s.mate}});
    }
    Json blossoms = Json::array();
    for (const DualBlossom& b : result.duals.blossoms) {
        blossoms.push_back(Json{{"members", b.members}, {"children", b.children}, {"parent", b.parent}, {"y", b.y}});
    }
    Json positions = Json::array();
    for (size_t i = 0; i < sg.num_defects(); ++i) {
        positions.push_back(position_json(sg.position(i)));
    }
    return Json{
        {"schema", "blossom_trace_v1"},
        {"defects", sg.defects()},
        {"positions", positions},
        {"mate", result.matching.mate},
        {"weight", result.weight},
        {"vertex_y", result.duals.vertex_y},
        {"blossoms", blossoms},
        {"events", events},
        {"snapshots", snapshots}};
}

Json uf_trace_to_json(const UfResult& result) {
    auto clusters_json = [](const std::vector<UfCluster>& clusters) {
        Json out = Json::array();
        for (const UfCluster& c : clusters) {
            Json cj = cluster_json(c.defects, c.touches_left, c.touches_right);
            cj["num_vertices"] = c.num_vertices;
            out.push_back(cj);
        }
        return out;
    };
    Json checkpoints = Json::array();
    for (const UfCheckpoint& c : result.trace.checkpoints) {
        checkpoints.push_back(Json{{"sigma", c.sigma}, {"clusters", clusters_json(c.clusters)}, {"growth", c.growth}});
    }
    Json selection = Json::array();
    for (const SyndromeEdge& e : result.selection) {
        selection.push_back(Json::array({e.a, e.b}));
    }
    return Json{
        {"schema", "uf_trace_v1"},
        {"scale", result.trace.scale},
        {"steps", result.steps},
        {"correction", result.correction.ids()},
        {"selection", selection},
        {"clusters", clusters_json(result.clusters)},
        {"checkpoints", checkpoints}};
}

Json equivalence_report_to_json(
    const EquivalenceVerdict& verdict, const Condition1Result* condition1, const Condition2Result* condition2) {
    Json j{
        {"schema", "equiv_report_v1"},
        {"equivalent", verdict.equivalent},
        {"sum_class", to_string(verdict.sum_class)},
        {"detached_only", verdict.detached_only},
        {"witness", verdict.witness ? Json(verdict.witness->ids()) : Json(nullptr)}};
    if (condition1) {
        j["condition1"] = Json{
            {"holds", condition1->holds},
            {"compared", condition1->compared},
            {"divergence_sigma",
             condition1->divergence_sigma ? Json(*condition1->divergence_sigma) : Json(nullptr)},
            {"first_partition", condition1->first_partition},
            {"second_partition", condition1->second_partition}};
    }
    if (condition2) {
        j["condition2"] = Json{
            {"holds", condition2->holds},
            {"detached_only", condition2->detached_only},
            {"differing", condition2->differing},
            {"sum_class", to_string(condition2->sum_class)}};
    }
    return j;
}

}  // namespace mp
