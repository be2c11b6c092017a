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

#include <cmath>
#include <gtest/gtest.h>
#include <set>
#include <stdexcept>

using namespace mp;

namespace {

size_t count_boundary(const ModelGraph& g) {
    size_t n = 0;
    for (const Vertex& v : g.vertices()) {
        n += v.is_boundary();
    }
    return n;
}

size_t degree(const ModelGraph& g, VertexId v) {
    return g.incident(v).size();
}

}  // namespace

TEST(ModelGraph, WeightFromProbability) {
    EXPECT_DOUBLE_EQ(weight_from_probability(0.1), std::log(9.0));
    EXPECT_EQ(weight_from_probability(0.5), 0.0);
    EXPECT_TRUE(std::isinf(weight_from_probability(0.0)));
    EXPECT_NEAR(probability_from_weight(std::log(9.0)), 0.1, 1e-15);
    EXPECT_EQ(probability_from_weight(INFINITY), 0.0);
    EXPECT_THROW(weight_from_probability(0.6), std::invalid_argument);
    EXPECT_THROW(weight_from_probability(-0.1), std::invalid_argument);
    EXPECT_THROW(probability_from_weight(-1), std::invalid_argument);
}

TEST(ModelGraph, CssDistance3MatchesHandCount) {
    // Unrotated d=3 patch on a 5x5 grid: data qubits at (r+c) even (9 + 4 = 13),
    // Z-type ancillas at (even row, odd col) (3 rows x 2 = 6), X-type ancillas at
    // (odd row, even col) (2 x 3 = 6). Each of the 3 data rows ends in a left and a
    // right boundary edge; likewise for the 3 data columns top and bottom.
    CssGraphs g = build_css(3, 0.01, 0.02);
    EXPECT_EQ(g.x.num_stabilizers(), 6u);
    EXPECT_EQ(g.x.num_edges(), 13u);
    EXPECT_EQ(count_boundary(g.x), 6u);
    EXPECT_EQ(g.z.num_stabilizers(), 6u);
    EXPECT_EQ(g.z.num_edges(), 13u);
    EXPECT_EQ(count_boundary(g.z), 6u);
    EXPECT_EQ(g.x.code_kind(), CodeKind::css_x);
    EXPECT_EQ(g.z.code_kind(), CodeKind::css_z);
    for (const Edge& e : g.x.edges()) {
        EXPECT_DOUBLE_EQ(e.error_prob, 0.01);
    }
    for (const Edge& e : g.z.edges()) {
        EXPECT_DOUBLE_EQ(e.error_prob, 0.02);
    }
}

TEST(ModelGraph, CssInteriorDegreeAndBoundarySides) {
    for (int d : {3, 5, 7}) {
        CssGraphs g = build_css(d, 0.05, 0.05);
        for (const ModelGraph* m : {&g.x, &g.z}) {
            size_t left = 0;
            size_t right = 0;
            for (const Vertex& v : m->vertices()) {
                if (v.is_boundary()) {
                    EXPECT_EQ(degree(*m, v.id), 1u);
                    left += v.side == BoundarySide::left;
                    right += v.side == BoundarySide::right;
                } else {
                    // Every ancilla of the unrotated patch touches 3 or 4 data qubits.
                    EXPECT_GE(degree(*m, v.id), 3u);
                    EXPECT_LE(degree(*m, v.id), 4u);
                }
            }
            EXPECT_EQ(left, static_cast<size_t>(d));
            EXPECT_EQ(right, static_cast<size_t>(d));
            EXPECT_EQ(m->num_stabilizers(), static_cast<size_t>(d * (d - 1)));
            EXPECT_EQ(m->num_edges(), static_cast<size_t>(d * d + (d - 1) * (d - 1)));
        }
    }
}

TEST(ModelGraph, CssHalfProbabilityGivesZeroWeights) {
    CssGraphs g = build_css(3, 0.5, 0.5);
    for (const Edge& e : g.x.edges()) {
        EXPECT_EQ(e.weight, 0.0);
    }
    EXPECT_EQ(g.x.max_finite_weight(), 0.0);
}

TEST(ModelGraph, CssUniformSharesOneWeight) {
    CssGraphs g = build_css(5, 0.03, 0.03);
    std::set<double> weights;
    for (const Edge& e : g.x.edges()) {
        weights.insert(e.weight);
    }
    for (const Edge& e : g.z.edges()) {
        weights.insert(e.weight);
    }
    EXPECT_EQ(weights.size(), 1u);
}

TEST(ModelGraph, RejectsBadArguments) {
    EXPECT_THROW(build_css(4, 0.1, 0.1), std::invalid_argument);
    EXPECT_THROW(build_css(1, 0.1, 0.1), std::invalid_argument);
    EXPECT_THROW(build_css(3, 0.6, 0.1), std::invalid_argument);
    EXPECT_THROW(build_css(3, 0.1, -0.1), std::invalid_argument);
    EXPECT_THROW(build_xzzx(2, 0.1), std::invalid_argument);
    EXPECT_THROW(build_xzzx(3, 0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(build_repetition(3, std::vector<double>{0.1, 0.1}), std::invalid_argument);
    EXPECT_THROW(build_phenomenological(build_repetition(3, 0.1), 0, 0.1), std::invalid_argument);
}

TEST(ModelGraph, XzzxInfiniteBiasIsDisjointChains) {
    for (int d : {3, 5, 7}) {
        ModelGraph g = build_xzzx(d, 0.1);
        auto comps = connected_components(g);
        EXPECT_EQ(comps.size(), static_cast<size_t>(d));
        for (const auto& comp : comps) {
            size_t left = 0;
            size_t right = 0;
            for (VertexId v : comp) {
                EXPECT_LE(degree(g, v), 2u);
                left += g.side(v) == BoundarySide::left;
                right += g.side(v) == BoundarySide::right;
            }
            EXPECT_EQ(left, 1u);
            EXPECT_EQ(right, 1u);
            // d - 1 stabilizers plus two boundary vertices.
            EXPECT_EQ(comp.size(), static_cast<size_t>(d + 1));
        }
        EXPECT_EQ(g.num_edges(), static_cast<size_t>(d * d));
    }
}

TEST(ModelGraph, XzzxFiniteBiasAddsVerticalEdges) {
    ModelGraph g = build_xzzx(3, 0.1, 10.0);
    EXPECT_EQ(connected_components(g).size(), 1u);
    std::set<double> probs;
    for (const Edge& e : g.edges()) {
        probs.insert(e.error_prob);
    }
    ASSERT_EQ(probs.size(), 2u);
    EXPECT_NEAR(*probs.begin(), 0.01, 1e-15);
    EXPECT_EQ(*probs.rbegin(), 0.1);
    EXPECT_EQ(g.num_edges(), 13u);
}

TEST(ModelGraph, RepetitionLayout) {
    std::vector<double> probs{0.1, 0.2, 0.3};
    ModelGraph g = build_repetition(3, probs);
    EXPECT_EQ(g.num_stabilizers(), 2u);
    EXPECT_EQ(g.num_vertices(), 4u);
    ASSERT_EQ(g.num_edges(), 3u);
    for (size_t e = 0; e < 3; ++e) {
        EXPECT_DOUBLE_EQ(g.edge(e).error_prob, probs[e]);
        EXPECT_DOUBLE_EQ(g.edge(e).weight, std::log((1 - probs[e]) / probs[e]));
    }
    EXPECT_EQ(g.side(g.edge(0).other(0)), BoundarySide::left);
    EXPECT_EQ(g.side(g.edge(2).other(1)), BoundarySide::right);
}

TEST(ModelGraph, ZeroProbabilityGivesInfiniteWeight) {
    ModelGraph g = build_repetition(3, std::vector<double>{0.0, 0.1, 0.1});
    EXPECT_TRUE(std::isinf(g.edge(0).weight));
    EXPECT_DOUBLE_EQ(g.max_finite_weight(), std::log(9.0));
}

TEST(ModelGraph, PhenomenologicalRounds) {
    ModelGraph base = build_repetition(5, 0.1);
    ModelGraph g = build_phenomenological(base, 3, 0.2);
    EXPECT_EQ(g.rounds(), 3);
    EXPECT_EQ(g.num_stabilizers(), 3 * base.num_stabilizers());
    EXPECT_EQ(g.num_edges(), 3 * base.num_edges() + 2 * base.num_stabilizers());
    size_t time_like = 0;
    for (const Edge& e : g.edges()) {
        if (e.error_prob == 0.2) {
            ++time_like;
            EXPECT_EQ(g.vertex(e.v).pos.round, g.vertex(e.u).pos.round + 1);
        }
    }
    EXPECT_EQ(time_like, 2 * base.num_stabilizers());
    EXPECT_EQ(build_phenomenological(base, 1, 0.2), base);
}

TEST(ModelGraph, BuildIsDeterministic) {
    EXPECT_EQ(build_css(5, 0.01, 0.02).x, build_css(5, 0.01, 0.02).x);
    EXPECT_EQ(build_xzzx(5, 0.1, 3.0), build_xzzx(5, 0.1, 3.0));
}

TEST(ModelGraph, ReweightedRoundTripsProbabilities) {
    ModelGraph g = build_repetition(3, 0.1);
    std::vector<double> w{1.0, 2.0, INFINITY};
    ModelGraph r = reweighted(g, w);
    EXPECT_DOUBLE_EQ(r.edge(1).weight, 2.0);
    EXPECT_NEAR(r.edge(0).error_prob, 1 / (1 + std::exp(1.0)), 1e-15);
    EXPECT_EQ(r.edge(2).error_prob, 0.0);
    EXPECT_THROW(reweighted(g, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(ModelGraph, CodeKindNames) {
    for (CodeKind k : {CodeKind::css_x, CodeKind::css_z, CodeKind::xzzx, CodeKind::repetition}) {
        EXPECT_EQ(code_kind_from_string(to_string(k)), k);
    }
    EXPECT_THROW(code_kind_from_string("toric"), std::invalid_argument);
}
