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

#include <cmath>
#include <gtest/gtest.h>
#include <stdexcept>

#include "matchpoint/model_graph.h"

using namespace mp;

namespace {

/// Edges of the first horizontal chain of an XZZX patch, i.e. a left-to-right path.
ErrorPattern spanning_chain(const ModelGraph& g) {
    auto comps = connected_components(g);
    std::vector<uint32_t> ids;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        for (VertexId v : comps[0]) {
            if (g.edge(e).u == v) {
                ids.push_back(e);
            }
        }
    }
    return ErrorPattern(ids);
}

}  // namespace

TEST(Noise, Gf2SetCancelsPairs) {
    ErrorPattern a({3, 1, 3, 2, 1, 1});
    EXPECT_EQ(a.ids(), (std::vector<uint32_t>{1, 2}));
    ErrorPattern b{2, 5};
    EXPECT_EQ((a + b).ids(), (std::vector<uint32_t>{1, 5}));
    EXPECT_TRUE((a + a).empty());
    a.toggle(7);
    EXPECT_TRUE(a.contains(7));
    a.toggle(7);
    EXPECT_FALSE(a.contains(7));
}

TEST(Noise, SampleZeroProbabilityIsEmpty) {
    ModelGraph g = build_repetition(5, 0.0);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_TRUE(sample_iid(g, seed).empty());
    }
}

TEST(Noise, SampleHalfProbabilityMean) {
    ModelGraph g = build_css(3, 0.5, 0.5).x;
    Rng rng(7);
    const int samples = 100000;
    uint64_t hits = 0;
    for (int i = 0; i < samples; ++i) {
        hits += sample_iid(g, rng).contains(4);
    }
    double mean = static_cast<double>(hits) / samples;
    double sigma = std::sqrt(0.25 / samples);
    EXPECT_LT(std::abs(mean - 0.5), 3 * sigma);
}

TEST(Noise, SampleIsDeterministic) {
    ModelGraph g = build_css(5, 0.2, 0.2).x;
    EXPECT_EQ(sample_iid(g, 123), sample_iid(g, 123));
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Noise, SyndromeOfSingleEdges) {
    ModelGraph g = build_css(3, 0.1, 0.1).x;
    EXPECT_TRUE(syndrome_of(g, {}).empty());
    bool saw_interior = false;
    bool saw_boundary = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        Syndrome s = syndrome_of(g, ErrorPattern{e});
        if (!g.is_boundary(edge.u) && !g.is_boundary(edge.v)) {
            EXPECT_EQ(s, (Syndrome{edge.u, edge.v}));
            saw_interior = true;
        } else {
            EXPECT_EQ(s.size(), 1u);
            saw_boundary = true;
        }
        EXPECT_EQ(classify(g, ErrorPattern{e}), LogicalClass::not_logical_operator);
    }
    EXPECT_TRUE(saw_interior);
    EXPECT_TRUE(saw_boundary);
    EXPECT_THROW(syndrome_of(g, ErrorPattern{static_cast<uint32_t>(g.num_edges())}), std::out_of_range);
}

TEST(Noise, ParityOfSimplePatterns) {
    ModelGraph g = build_repetition(3, 0.1);
    EXPECT_EQ(parity_of(g, {}), (Parity{false, false}));
    EXPECT_EQ(parity_of(g, ErrorPattern{0}), (Parity{true, false}));
    EXPECT_EQ(parity_of(g, ErrorPattern{2}), (Parity{false, true}));
    EXPECT_EQ(parity_of(g, ErrorPattern{0, 1, 2}), (Parity{true, true}));
    EXPECT_EQ(classify(g, ErrorPattern{0, 1, 2}), LogicalClass::nontrivial_logical);
    EXPECT_EQ(classify(g, {}), LogicalClass::trivial_logical);
}

TEST(Noise, SpanningChainIsNontrivial) {
    ModelGraph g = build_xzzx(5, 0.1);
    ErrorPattern chain = spanning_chain(g);
    EXPECT_EQ(chain.size(), 5u);
    EXPECT_EQ(classify(g, chain), LogicalClass::nontrivial_logical);
}

TEST(Noise, PlaquetteCircleIsTrivial) {
    // The four edges around one data qubit face of the X graph meet every vertex twice.
    ModelGraph g = build_css(3, 0.1, 0.1).x;
    for (VertexId a = 0; a < g.num_stabilizers(); ++a) {
        for (auto ia : g.incident(a)) {
            VertexId b = ia.neighbor;
            if (g.is_boundary(b) || b <= a) {
                continue;
            }
            // Look for a 4-cycle a-b-c-d-a.
            for (auto ib : g.incident(b)) {
                for (auto ic : g.incident(ib.neighbor)) {
                    for (auto id : g.incident(ic.neighbor)) {
                        if (id.neighbor != a || ib.edge == ia.edge || ic.edge == ib.edge || id.edge == ic.edge ||
                            id.edge == ia.edge || ib.neighbor == a || ic.neighbor == b) {
                            continue;
                        }
                        ErrorPattern circle{ia.edge, ib.edge, ic.edge, id.edge};
                        ASSERT_EQ(circle.size(), 4u);
                        EXPECT_EQ(classify(g, circle), LogicalClass::trivial_logical);
                        return;
                    }
                }
            }
        }
    }
    FAIL() << "no 4-cycle found";
}

TEST(Noise, LinearityAndParitySyndromeRelation) {
    ModelGraph g = build_css(5, 0.15, 0.15).z;
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        ErrorPattern e1 = sample_iid(g, rng);
        ErrorPattern e2 = sample_iid(g, rng);
        EXPECT_EQ(syndrome_of(g, e1 + e2), syndrome_of(g, e1) + syndrome_of(g, e2));
        EXPECT_EQ(parity_of(g, e1 + e2), parity_of(g, e1) ^ parity_of(g, e2));
        Parity p = parity_of(g, e1);
        EXPECT_EQ((p.left + p.right) % 2, static_cast<int>(syndrome_of(g, e1).size() % 2));
    }
}

TEST(Noise, PatternProbabilityAndWeight) {
    ModelGraph g = build_repetition(3, std::vector<double>{0.1, 0.2, 0.3});
    EXPECT_NEAR(pattern_probability(g, ErrorPattern{1}), 0.9 * 0.2 * 0.7, 1e-15);
    EXPECT_NEAR(pattern_weight(g, ErrorPattern{0, 2}), std::log(9.0) + std::log(7.0 / 3.0), 1e-12);
}

TEST(Noise, CosetEmptySyndromePicksIdentity) {
    ModelGraph g = build_repetition(5, 0.2);
    CosetDecision c = brute_force_coset_decode(g, {});
    EXPECT_TRUE(c.correction.empty());
    EXPECT_FALSE(c.tied);
    EXPECT_GT(c.winning_mass, c.losing_mass);
}

TEST(Noise, CosetSingleDefectPicksShortSide) {
    // d=3 chain: B0 -e0- s0 -e1- s1 -e2- B1. Defect at s0 alone: {e0} (p) vs {e1,e2} (p^2).
    ModelGraph g = build_repetition(3, 0.1);
    CosetDecision c = brute_force_coset_decode(g, Syndrome{0});
    EXPECT_EQ(c.correction, (ErrorPattern{0}));
    EXPECT_NEAR(c.winning_mass, 0.1 * 0.9 * 0.9, 1e-15);
    EXPECT_NEAR(c.losing_mass, 0.9 * 0.1 * 0.1, 1e-15);
}

TEST(Noise, CosetTieAtHalfIsLexLeast) {
    ModelGraph g = build_repetition(3, 0.5);
    CosetDecision c = brute_force_coset_decode(g, {});
    EXPECT_TRUE(c.tied);
    EXPECT_DOUBLE_EQ(c.winning_mass, 0.125);
    EXPECT_DOUBLE_EQ(c.losing_mass, 0.125);
    EXPECT_TRUE(c.correction.empty());
}

TEST(Noise, CosetRejectsLargeGraphs) {
    EXPECT_THROW(brute_force_coset_decode(build_css(5, 0.1, 0.1).x, {}), std::invalid_argument);
}
