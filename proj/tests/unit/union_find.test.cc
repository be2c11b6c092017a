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

#include <cmath>
#include <gtest/gtest.h>
#include <stdexcept>

#include "matchpoint/blossom.h"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"

using namespace mp;

namespace {

ModelGraph chain(const std::vector<double>& w) {
    return reweighted(build_repetition(static_cast<int>(w.size()), 0.1), w);
}

ModelGraph nonuniform_css_x(int d, uint64_t seed) {
    ModelGraph g = build_css(d, 0.05, 0.05).x;
    Rng rng(seed);
    std::vector<double> w(g.num_edges());
    for (double& x : w) {
        x = weight_from_probability(0.01 + 0.09 * uniform01(rng));
    }
    return reweighted(g, w);
}

}  // namespace

TEST(UnionFind, EmptySyndromeGivesEmptyCorrection) {
    ModelGraph g = build_css(3, 0.1, 0.1).x;
    UfResult r = decode_uf(g, {});
    EXPECT_TRUE(r.correction.empty());
    EXPECT_TRUE(r.clusters.empty());
    EXPECT_EQ(r.steps, 0u);
}

TEST(UnionFind, SingleDefectNextToBoundary) {
    ModelGraph g = chain({1, 3, 3, 3, 3});
    UfResult r = decode_uf(g, Syndrome{0});
    EXPECT_EQ(r.correction, (ErrorPattern{0}));
    ASSERT_EQ(r.clusters.size(), 1u);
    EXPECT_TRUE(r.clusters[0].touches_left);
    EXPECT_FALSE(r.clusters[0].touches_right);
}

TEST(UnionFind, TwoDefectPathMatchesMwpm) {
    ModelGraph g = chain({5, 1, 2, 1, 5});
    Syndrome syn{1, 3};
    UfResult r = decode_uf(g, syn);
    EXPECT_EQ(r.correction, (ErrorPattern{2, 3}));
    EXPECT_EQ(r.correction, decode_mwpm(g, syn));
}

TEST(UnionFind, RealStepCoversHalfTheEdge) {
    const double s = 2.6;
    ModelGraph g = chain({10, s, 10});
    UnionFindDecoder dec(g);
    dec.load(Syndrome{0, 1});
    ASSERT_TRUE(dec.can_grow());
    EXPECT_NEAR(dec.grow_step(), s / 2, 1e-12);
    EXPECT_FALSE(dec.can_grow());
    EXPECT_THROW(dec.grow_step(), std::logic_error);
    UfResult r = dec.finish();
    EXPECT_EQ(r.correction, (ErrorPattern{1}));
    ASSERT_EQ(r.clusters.size(), 1u);
    EXPECT_EQ(r.clusters[0].defects, (std::vector<uint32_t>{0, 1}));
}

TEST(UnionFind, IntegerStepIsHalf) {
    ModelGraph g = chain({4, 2, 4});
    UfConfig cfg;
    cfg.mode = UfMode::integer_weighted;
    cfg.w_max = 4;
    UnionFindDecoder dec(g, cfg);
    EXPECT_EQ(dec.weights(), (std::vector<double>{4, 2, 4}));
    dec.load(Syndrome{0, 1});
    int steps = 0;
    while (dec.can_grow()) {
        EXPECT_EQ(dec.grow_step(), 0.5);
        ++steps;
    }
    // Two clusters meet in the middle of a weight-2 edge after two half steps.
    EXPECT_EQ(steps, 2);
    EXPECT_EQ(dec.finish().correction, (ErrorPattern{1}));
}

TEST(UnionFind, IntegerModeRequiresScale) {
    UfConfig cfg;
    cfg.mode = UfMode::integer_weighted;
    EXPECT_THROW(UnionFindDecoder(build_repetition(3, 0.1), cfg), std::invalid_argument);
}

TEST(UnionFind, IntegerWeightsQuantization) {
    ModelGraph g = chain({1.0, 0.001, 2.5, 10.0, INFINITY});
    EXPECT_EQ(integer_weights(g, 10), (std::vector<int64_t>{1, 1, 2, 10, 0}));
    EXPECT_EQ(integer_weights(g, 4), (std::vector<int64_t>{1, 1, 1, 4, 0}));
}

TEST(UnionFind, CorrectionsReproduceSyndrome) {
    for (int d : {3, 5, 7}) {
        ModelGraph g = nonuniform_css_x(d, static_cast<uint64_t>(d));
        Rng rng(40 + d);
        for (int trial = 0; trial < 300; ++trial) {
            Syndrome syn = syndrome_of(g, sample_iid(g, rng));
            for (UfMode mode : {UfMode::real_weighted, UfMode::integer_weighted}) {
                UfConfig cfg;
                cfg.mode = mode;
                cfg.w_max = 12;
                EXPECT_EQ(syndrome_of(g, decode_uf(g, syn, cfg).correction), syn);
            }
        }
    }
}

TEST(UnionFind, ClustersEndEvenOrOnBoundary) {
    ModelGraph g = nonuniform_css_x(5, 8);
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        Syndrome syn = syndrome_of(g, sample_iid(g, rng));
        UfResult r = decode_uf(g, syn);
        size_t total = 0;
        for (const UfCluster& c : r.clusters) {
            total += c.defects.size();
            EXPECT_TRUE(!c.odd() || c.touches_left || c.touches_right);
        }
        EXPECT_EQ(total, syn.size());
    }
}

TEST(UnionFind, VariantsAgreeOnPartitions) {
    ModelGraph g = nonuniform_css_x(5, 3);
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        Syndrome syn = syndrome_of(g, sample_iid(g, rng));
        UfResult a = decode_uf(g, syn);
        SyndromeGraph sg = build_syndrome_graph(g, syn);
        UfConfig cfg;
        cfg.variant = GraphVariant::syndrome_graph;
        UfResult b = decode_uf_on_syndrome_graph(sg, cfg);
        ASSERT_EQ(a.clusters.size(), b.clusters.size());
        for (size_t i = 0; i < a.clusters.size(); ++i) {
            EXPECT_EQ(a.clusters[i].defects, b.clusters[i].defects);
        }
        EXPECT_EQ(syndrome_of(g, b.correction), syn);
    }
}

TEST(UnionFind, TraceSigmaIsMonotone) {
    ModelGraph g = nonuniform_css_x(5, 4);
    Rng rng(4);
    UfConfig cfg;
    cfg.record_trace = true;
    for (int trial = 0; trial < 50; ++trial) {
        Syndrome syn = syndrome_of(g, sample_iid(g, rng));
        UfResult r = decode_uf(g, syn, cfg);
        double prev = -1;
        for (const auto& cp : r.trace.checkpoints) {
            EXPECT_GE(cp.sigma, prev);
            prev = cp.sigma;
            EXPECT_EQ(cp.growth.size(), g.num_edges());
            for (double f : cp.growth) {
                EXPECT_GE(f, 0.0);
                EXPECT_LE(f, 1.0 + 1e-12);
            }
        }
    }
}

TEST(UnionFind, ModeNames) {
    EXPECT_STREQ(to_string(UfMode::real_weighted), "real");
    EXPECT_STREQ(to_string(UfMode::integer_weighted), "integer");
}
