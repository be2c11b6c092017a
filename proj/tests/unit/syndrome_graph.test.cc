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

#include <cmath>
#include <gtest/gtest.h>
#include <stdexcept>

#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"

using namespace mp;

namespace {

/// Chain with explicit weights; edge j joins stabilizer j-1 and stabilizer j.
ModelGraph weighted_chain(const std::vector<double>& w) {
    ModelGraph g = build_repetition(static_cast<int>(w.size()), 0.1);
    return reweighted(g, w);
}

double sum_range(const std::vector<double>& w, size_t from, size_t to) {
    double s = 0;
    for (size_t j = from; j < to; ++j) {
        s += w[j];
    }
    return s;
}

}  // namespace

TEST(SyndromeGraph, EmptySyndrome) {
    SyndromeGraph sg = build_syndrome_graph(build_repetition(5, 0.1), {});
    EXPECT_EQ(sg.num_defects(), 0u);
    EXPECT_TRUE(expand(sg, std::vector<SyndromeEdge>{}).empty());
}

TEST(SyndromeGraph, AdjacentDefectsOnUnitChain) {
    ModelGraph g = weighted_chain({1, 1, 1, 1, 1});
    SyndromeGraph sg = build_syndrome_graph(g, Syndrome{1, 2});
    ASSERT_EQ(sg.num_defects(), 2u);
    EXPECT_DOUBLE_EQ(sg.weight(0, 1), 1.0);
    EXPECT_EQ(sg.witness(0, 1), (std::vector<EdgeId>{2}));
    EXPECT_DOUBLE_EQ(sg.port_weight(0, BoundarySide::left), 2.0);
    EXPECT_DOUBLE_EQ(sg.port_weight(1, BoundarySide::right), 2.0);
    EXPECT_EQ(sg.nearest_side(0), BoundarySide::left);
}

TEST(SyndromeGraph, ChainDistancesMatchDirectSummation) {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        size_t d = 3 + rng() % 9;
        std::vector<double> w(d);
        for (double& x : w) {
            x = 0.1 + 9.9 * uniform01(rng);
        }
        ModelGraph g = weighted_chain(w);
        std::vector<uint32_t> ids;
        for (uint32_t s = 0; s + 1 < d; ++s) {
            if (rng() % 2) {
                ids.push_back(s);
            }
        }
        Syndrome syn(ids);
        SyndromeGraph sg = build_syndrome_graph(g, syn);
        for (size_t i = 0; i < sg.num_defects(); ++i) {
            VertexId a = sg.defect(i);
            EXPECT_NEAR(sg.port_weight(i, BoundarySide::left), sum_range(w, 0, a + 1), 1e-9);
            EXPECT_NEAR(sg.port_weight(i, BoundarySide::right), sum_range(w, a + 1, d), 1e-9);
            for (size_t j = i + 1; j < sg.num_defects(); ++j) {
                VertexId b = sg.defect(j);
                EXPECT_NEAR(sg.weight(i, j), sum_range(w, a + 1, b + 1), 1e-9);
                for (size_t k = j + 1; k < sg.num_defects(); ++k) {
                    EXPECT_NEAR(sg.weight(i, k), sg.weight(i, j) + sg.weight(j, k), 1e-9);
                }
            }
        }
    }
}

TEST(SyndromeGraph, WitnessesRealizeWeightsAndSyndromes) {
    ModelGraph g = build_css(5, 0.1, 0.1).x;
    std::vector<double> w(g.num_edges());
    Rng rng(5);
    for (double& x : w) {
        x = 0.1 + 5 * uniform01(rng);
    }
    g = reweighted(g, w);
    for (int trial = 0; trial < 100; ++trial) {
        Syndrome syn = syndrome_of(g, sample_iid(build_css(5, 0.08, 0.08).x, rng));
        SyndromeGraph sg = build_syndrome_graph(g, syn);
        size_t n = sg.num_defects();
        for (size_t i = 0; i < n; ++i) {
            for (BoundarySide side : {BoundarySide::left, BoundarySide::right}) {
                const auto& port = sg.port(i, side);
                ASSERT_TRUE(port.has_value());
                ErrorPattern path(std::vector<uint32_t>(port->path.begin(), port->path.end()));
                EXPECT_NEAR(pattern_weight(g, path), port->weight, 1e-9);
                EXPECT_EQ(syndrome_of(g, path), (Syndrome{sg.defect(i)}));
                EXPECT_EQ(g.side(port->boundary), side);
                std::vector<SyndromeEdge> sel{{static_cast<uint32_t>(i), boundary_code(side)}};
                EXPECT_EQ(expand(sg, sel), path);
            }
            for (size_t j = i + 1; j < n; ++j) {
                ErrorPattern path(std::vector<uint32_t>(sg.witness(i, j).begin(), sg.witness(i, j).end()));
                EXPECT_NEAR(pattern_weight(g, path), sg.weight(i, j), 1e-9);
                EXPECT_EQ(syndrome_of(g, path), (Syndrome{sg.defect(i), sg.defect(j)}));
                for (size_t k = 0; k < n; ++k) {
                    if (k != i && k != j) {
                        EXPECT_LE(sg.weight(i, j), sg.weight(i, k) + sg.weight(k, j) + 1e-9);
                    }
                }
            }
        }
    }
}

TEST(SyndromeGraph, ExpandCancelsSharedEdges) {
    ModelGraph g = weighted_chain({1, 1, 1, 1, 1});
    SyndromeGraph sg = build_syndrome_graph(g, Syndrome{0, 2, 3});
    // Pairs (0,2) and (0,1) share edges 1 and 2 of the chain; their sum is the pair (2,3).
    std::vector<SyndromeEdge> sel{{0, 1}, {0, 2}};
    ErrorPattern e = expand(sg, sel);
    EXPECT_EQ(e, (ErrorPattern{3}));
    EXPECT_EQ(syndrome_of(g, e), (Syndrome{2, 3}));
}

TEST(SyndromeGraph, PerfectMatchingExpansionReproducesSyndrome) {
    ModelGraph g = build_css(5, 0.1, 0.1).z;
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Syndrome syn = syndrome_of(g, sample_iid(g, rng));
        SyndromeGraph sg = build_syndrome_graph(g, syn);
        Matching m;
        size_t n = sg.num_defects();
        m.mate.assign(n, kUnmatched);
        for (size_t i = 0; i + 1 < n; i += 2) {
            m.mate[i] = static_cast<int32_t>(i + 1);
            m.mate[i + 1] = static_cast<int32_t>(i);
        }
        if (n % 2 == 1) {
            m.mate[n - 1] = boundary_code(sg.nearest_side(n - 1));
        }
        ASSERT_TRUE(m.is_perfect());
        EXPECT_EQ(syndrome_of(g, expand(sg, m)), syn);
    }
}

TEST(SyndromeGraph, TieBreakVariantsGiveSameWeights) {
    ModelGraph g = build_css(5, 0.1, 0.1).x;
    Syndrome syn{0, 9, 14};
    SyndromeGraph a = build_syndrome_graph(g, syn, WitnessTieBreak::smallest_id);
    SyndromeGraph b = build_syndrome_graph(g, syn, WitnessTieBreak::largest_id);
    bool differ = false;
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
            EXPECT_DOUBLE_EQ(a.weight(i, j), b.weight(i, j));
            differ |= a.witness(i, j) != b.witness(i, j);
        }
    }
    EXPECT_TRUE(differ);
}

TEST(SyndromeGraph, FromWeightsValidation) {
    SyndromeGraph sg = SyndromeGraph::from_weights(2, {0, 1, 1, 0}, {2, INFINITY}, {INFINITY, 3});
    EXPECT_FALSE(sg.has_witnesses());
    EXPECT_EQ(sg.nearest_side(0), BoundarySide::left);
    EXPECT_EQ(sg.nearest_side(1), BoundarySide::right);
    EXPECT_FALSE(sg.port(0, BoundarySide::right).has_value());
    EXPECT_DOUBLE_EQ(sg.max_finite_weight(), 3.0);
    EXPECT_THROW(expand(sg, std::vector<SyndromeEdge>{{0, 1}}), std::invalid_argument);
    EXPECT_THROW(SyndromeGraph::from_weights(2, {0, 1, 2, 0}, {1, 1}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(SyndromeGraph::from_weights(2, {0, -1, -1, 0}, {1, 1}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(build_syndrome_graph(build_repetition(3, 0.1), Syndrome{3}), std::invalid_argument);
}

TEST(SyndromeGraph, MatchingEdgesOrder) {
    Matching m{{kLeftBoundary, 2, 1, kRightBoundary}};
    EXPECT_TRUE(m.is_perfect());
    std::vector<SyndromeEdge> expected{{1, 2}, {0, kLeftBoundary}, {3, kRightBoundary}};
    EXPECT_EQ(m.edges(), expected);
    EXPECT_FALSE((Matching{{kUnmatched}}).is_perfect());
}
