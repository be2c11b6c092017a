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

#include <cmath>
#include <gtest/gtest.h>
#include <stdexcept>

#include "matchpoint/blossom.h"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"
#include "matchpoint/union_find.h"

using namespace mp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PartitionCheckpoint cp(double sigma, std::vector<std::vector<uint32_t>> partition) {
    return PartitionCheckpoint{sigma, std::move(partition)};
}

}  // namespace

TEST(Equivalence, IdenticalCorrectionsAreEquivalent) {
    ModelGraph g = build_css(3, 0.1, 0.1).x;
    ErrorPattern c{1, 4, 7};
    EquivalenceVerdict v = logically_equivalent(g, c, c);
    EXPECT_TRUE(v.equivalent);
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_EQ(v.sum_class, LogicalClass::trivial_logical);
}

TEST(Equivalence, TwoWitnessPathsAreEquivalent) {
    // Diagonal defects on the X graph have two minimum-weight paths.
    ModelGraph g = build_css(5, 0.1, 0.1).x;
    Syndrome syn{0, 5};
    SyndromeGraph a = build_syndrome_graph(g, syn, WitnessTieBreak::smallest_id);
    SyndromeGraph b = build_syndrome_graph(g, syn, WitnessTieBreak::largest_id);
    ErrorPattern pa(a.witness(0, 1));
    ErrorPattern pb(b.witness(0, 1));
    ASSERT_NE(pa, pb);
    EXPECT_TRUE(logically_equivalent(g, pa, pb).equivalent);
    EXPECT_TRUE(check_lemma_o(g, syn));
}

TEST(Equivalence, ComplementaryBoundaryChoiceIsNotEquivalent) {
    // A single defect halfway along a chain: left and right corrections differ by the
    // spanning chain.
    ModelGraph g = build_repetition(2, 0.1);
    EquivalenceVerdict v = logically_equivalent(g, ErrorPattern{0}, ErrorPattern{1});
    EXPECT_FALSE(v.equivalent);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, (ErrorPattern{0, 1}));
    EXPECT_EQ(v.sum_class, LogicalClass::nontrivial_logical);
    EXPECT_THROW(logically_equivalent(g, ErrorPattern{0}, ErrorPattern{}), std::invalid_argument);
}

TEST(Equivalence, EnumerateSmallCases) {
    SyndromeGraph empty = SyndromeGraph::from_weights(0, {}, {}, {});
    auto e0 = enumerate_pm(empty);
    ASSERT_EQ(e0.size(), 1u);
    EXPECT_EQ(e0[0].weight, 0.0);

    SyndromeGraph two = SyndromeGraph::from_weights(2, {0, 1, 1, 0}, {2, 2}, {3, 3});
    auto e2 = enumerate_pm(two);
    ASSERT_EQ(e2.size(), 2u);
    EXPECT_DOUBLE_EQ(e2[0].weight, 1.0);
    EXPECT_EQ(e2[0].matching.mate, (std::vector<int32_t>{1, 0}));
    EXPECT_DOUBLE_EQ(e2[1].weight, 4.0);
    EXPECT_EQ(e2[1].matching.mate, (std::vector<int32_t>{kLeftBoundary, kLeftBoundary}));
}

TEST(Equivalence, EnumerateChainOfFour) {
    // Defects 1..4 with interior weights 1, 1, 1 and boundary ports of weight 5 and up.
    const size_t n = 4;
    std::vector<double> pw(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            pw[i * n + j] = std::abs(static_cast<double>(i) - static_cast<double>(j));
        }
    }
    std::vector<double> left{5, 6, 7, 8};
    std::vector<double> right{8, 7, 6, 5};
    auto all = enumerate_pm(SyndromeGraph::from_weights(n, pw, left, right));
    // Count by hand: pairings of 4 with optional boundary moves = 10 perfect matchings.
    EXPECT_EQ(all.size(), 10u);
    EXPECT_DOUBLE_EQ(all[0].weight, 2.0);
    EXPECT_EQ(all[0].matching.mate, (std::vector<int32_t>{1, 0, 3, 2}));
    for (size_t k = 1; k < all.size(); ++k) {
        EXPECT_LE(all[k - 1].weight, all[k].weight);
    }
    EXPECT_THROW(enumerate_pm(SyndromeGraph::from_weights(13, std::vector<double>(169, 1), std::vector<double>(13, 1),
                                                          std::vector<double>(13, 1))),
                 std::invalid_argument);
}

TEST(Equivalence, LemmasOnRandomSyndromes) {
    ModelGraph g = build_css(5, 0.08, 0.08).z;
    Rng rng(99);
    int checked = 0;
    while (checked < 100) {
        Syndrome syn = syndrome_of(g, sample_iid(g, rng));
        if (syn.size() > 8) {
            continue;
        }
        ++checked;
        EXPECT_TRUE(check_lemma_o(g, syn));
        SyndromeGraph sg = build_syndrome_graph(g, syn);
        auto all = enumerate_pm(sg);
        ASSERT_FALSE(all.empty());
        EXPECT_TRUE(check_lemma_i(g, syn, all.front().matching));
        EXPECT_TRUE(check_lemma_ii(g, syn, all.front().matching, all.back().matching));
    }
}

TEST(Equivalence, Condition1IdenticalHistories) {
    std::vector<PartitionCheckpoint> a{cp(0, {{1}, {2}, {3}}), cp(2, {{1, 2}, {3}})};
    std::vector<PartitionCheckpoint> b{cp(0, {{1}, {2}, {3}}), cp(1, {{1}, {2}, {3}}), cp(2, {{1, 2}, {3}})};
    Condition1Result r = check_condition1(a, b);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.compared, 3u);
}

TEST(Equivalence, Condition1ReportsFirstDivergence) {
    std::vector<PartitionCheckpoint> a{cp(0, {{1}, {2}, {3}}), cp(2, {{1, 2}, {3}})};
    std::vector<PartitionCheckpoint> b{cp(0, {{1}, {2}, {3}}), cp(2, {{1}, {2, 3}})};
    Condition1Result r = check_condition1(a, b);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.divergence_sigma.has_value());
    EXPECT_DOUBLE_EQ(*r.divergence_sigma, 2.0);
    EXPECT_EQ(r.first_partition, (std::vector<std::vector<uint32_t>>{{1, 2}, {3}}));
    EXPECT_THROW(check_condition1(a, {cp(0, {{1}, {2}})}), std::invalid_argument);
    EXPECT_THROW(check_condition1({}, a), std::invalid_argument);
}

TEST(Equivalence, Condition1HoldsOnChains) {
    ModelGraph g = build_repetition(9, 0.1);
    Rng rng(6);
    std::vector<double> w(g.num_edges());
    for (int trial = 0; trial < 200; ++trial) {
        for (double& x : w) {
            x = 0.5 + 4 * uniform01(rng);
        }
        ModelGraph h = reweighted(g, w);
        Syndrome syn = syndrome_of(h, sample_iid(build_repetition(9, 0.25), rng));
        if (syn.empty()) {
            continue;
        }
        SyndromeGraph sg = build_syndrome_graph(h, syn);
        MwpmResult m = solve_mwpm(sg, true);
        UfConfig cfg;
        cfg.record_trace = true;
        UfResult u = decode_uf(h, syn, cfg);
        EXPECT_TRUE(check_condition1(partitions_of(m.trace, sg), partitions_of(u.trace)).holds);
    }
}

TEST(Equivalence, Condition2Cases) {
    ModelGraph g = build_repetition(2, 0.1);
    UfCluster attached{{0}, 3, true, true};
    Condition2Result same = check_condition2(g, {attached}, ErrorPattern{0}, ErrorPattern{0});
    EXPECT_TRUE(same.holds);
    EXPECT_TRUE(same.differing.empty());

    Condition2Result diff = check_condition2(g, {attached}, ErrorPattern{0}, ErrorPattern{1});
    EXPECT_FALSE(diff.holds);
    EXPECT_FALSE(diff.detached_only);
    EXPECT_EQ(diff.sum_class, LogicalClass::nontrivial_logical);

    // Two witness paths of a diagonal pair inside one detached cluster.
    ModelGraph x = build_css(5, 0.1, 0.1).x;
    Syndrome syn{0, 5};
    SyndromeGraph a = build_syndrome_graph(x, syn, WitnessTieBreak::smallest_id);
    SyndromeGraph b = build_syndrome_graph(x, syn, WitnessTieBreak::largest_id);
    UfCluster detached{{0, 5}, 4, false, false};
    Condition2Result inner = check_condition2(x, {detached}, ErrorPattern(a.witness(0, 1)), ErrorPattern(b.witness(0, 1)));
    EXPECT_TRUE(inner.holds);
    EXPECT_TRUE(inner.detached_only);
    EXPECT_EQ(inner.differing, (std::vector<size_t>{0}));
}

TEST(Equivalence, SplitRejectsMixedComponents) {
    ModelGraph g = build_repetition(5, 0.1);
    std::vector<UfCluster> clusters{UfCluster{{0}, 1, true, false}, UfCluster{{1}, 1, false, false}};
    // Edge 1 joins stabilizers 0 and 1, which sit in different clusters.
    EXPECT_THROW(split_by_clusters(g, clusters, ErrorPattern{1}), std::invalid_argument);
    // Two boundary paths ending on the same left vertex stay separate.
    std::vector<UfCluster> sides{UfCluster{{0}, 2, true, false}, UfCluster{{3}, 2, false, true}};
    auto parts = split_by_clusters(g, sides, ErrorPattern{0, 4});
    EXPECT_EQ(parts[0], (ErrorPattern{0}));
    EXPECT_EQ(parts[1], (ErrorPattern{4}));
}

TEST(Equivalence, PartitionsFromTraces) {
    SyndromeGraph sg = SyndromeGraph::from_weights(2, {0, 2, 2, 0}, {kInf, kInf}, {kInf, kInf});
    MwpmResult m = solve_mwpm(sg, true);
    auto parts = partitions_of(m.trace, sg);
    ASSERT_FALSE(parts.empty());
    EXPECT_EQ(parts.back().partition.size(), 1u);
}
