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

#ifndef MATCHPOINT_EQUIVALENCE_H
#define MATCHPOINT_EQUIVALENCE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "matchpoint/blossom.h"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"
#include "matchpoint/union_find.h"

namespace mp {

struct EquivalenceVerdict {
    bool equivalent = true;
    /// c1 + c2 when it is not a trivial logical operator.
    std::optional<ErrorPattern> witness;
    /// Whether every differing cluster was detached (set by the condition-2 check).
    bool detached_only = true;
    LogicalClass sum_class = LogicalClass::trivial_logical;
};

/// Throws std::invalid_argument when the corrections have different syndromes.
EquivalenceVerdict logically_equivalent(const ModelGraph& graph, const ErrorPattern& c1, const ErrorPattern& c2);

/// Defect partition at one growth value. Blocks and their members are sorted.
struct PartitionCheckpoint {
    double sigma = 0;
    std::vector<std::vector<uint32_t>> partition;
};

std::vector<PartitionCheckpoint> partitions_of(const BlossomTrace& trace, const SyndromeGraph& sg);
std::vector<PartitionCheckpoint> partitions_of(const UfTrace& trace);

struct Condition1Result {
    bool holds = true;
    size_t compared = 0;
    /// First growth value at which the partitions differ.
    std::optional<double> divergence_sigma;
    std::vector<std::vector<uint32_t>> first_partition;
    std::vector<std::vector<uint32_t>> second_partition;
};

/// Compares two partition histories at the union of their checkpoints; each history
/// is read at its latest checkpoint not beyond the compared value. Throws when the
/// histories cover different defects. A negative tolerance selects 1e-9 of the largest
/// growth value.
Condition1Result check_condition1(
    const std::vector<PartitionCheckpoint>& first, const std::vector<PartitionCheckpoint>& second, double tol = -1);

struct Condition2Result {
    bool holds = true;
    bool detached_only = true;
    /// Indices of clusters where the corrections differ.
    std::vector<size_t> differing;
    LogicalClass sum_class = LogicalClass::trivial_logical;
};

/// Splits both corrections into connected components, assigns each to the cluster
/// holding its defects, and checks that differences sit only in detached clusters or
/// that the total difference is trivial. Throws when a component touches no cluster or
/// several.
Condition2Result check_condition2(
    const ModelGraph& graph,
    const std::vector<UfCluster>& clusters,
    const ErrorPattern& uf_correction,
    const ErrorPattern& mwpm_correction);

/// Same check with corrections already split per cluster.
Condition2Result check_condition2(
    const ModelGraph& graph,
    const std::vector<UfCluster>& clusters,
    const std::vector<ErrorPattern>& uf_parts,
    const std::vector<ErrorPattern>& mwpm_parts);

/// Component-wise split of a correction along the clusters.
std::vector<ErrorPattern> split_by_clusters(
    const ModelGraph& graph, const std::vector<UfCluster>& clusters, const ErrorPattern& correction);

inline constexpr size_t kMaxEnumerationDefects = 12;

struct EnumeratedMatching {
    Matching matching;
    double weight = 0;
};

/// Every perfect matching of the syndrome graph, each defect pairing with another or
/// with its nearest boundary (left on ties), sorted by weight. At most 12 defects.
std::vector<EnumeratedMatching> enumerate_pm(const SyndromeGraph& sg);

/// Witness paths of one pair found under both tie-breaks sum to a trivial operator,
/// for every pair and boundary port of the syndrome.
bool check_lemma_o(const ModelGraph& graph, const Syndrome& syndrome);

/// Two expansions of one matching (under both tie-breaks) sum to a trivial operator.
bool check_lemma_i(const ModelGraph& graph, const Syndrome& syndrome, const Matching& matching);

/// Expansions of two matchings of one syndrome sum to a logical operator.
bool check_lemma_ii(const ModelGraph& graph, const Syndrome& syndrome, const Matching& first, const Matching& second);

}  // namespace mp

#endif
