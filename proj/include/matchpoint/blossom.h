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

#ifndef MATCHPOINT_BLOSSOM_H
#define MATCHPOINT_BLOSSOM_H

#include <cstdint>
#include <string>
#include <vector>

#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"

namespace mp {

/// A blossom of the final dual solution. Node ids below n are defects; a node id
/// n + k refers to blossoms[k].
struct DualBlossom {
    std::vector<uint32_t> members;
    std::vector<uint32_t> children;
    int64_t parent = -1;
    double y = 0;
};

struct DualState {
    std::vector<double> vertex_y;
    std::vector<DualBlossom> blossoms;

    double objective() const;
};

/// Maximal set of defects whose dual regions touch transitively.
struct DualCluster {
    std::vector<uint32_t> members;
    double size = 0;
    bool touches_left = false;
    bool touches_right = false;

    bool odd() const {
        return members.size() % 2 == 1;
    }
    bool attached() const {
        return touches_left && touches_right;
    }
    bool operator==(const DualCluster&) const = default;
};

/// Cluster state once all events at one dual objective value are processed.
struct ClusterSnapshot {
    double sigma = 0;
    std::vector<DualCluster> clusters;
    /// Total dual reach of each defect (own dual plus enclosing blossoms).
    std::vector<double> reach;
    std::vector<int32_t> mate;
};

enum class BlossomEventKind : uint8_t { boundary, blossom, augment, steal, grow, expand };

const char* to_string(BlossomEventKind kind);

/// `v` holds the other defect, a boundary code, or -1 for expansions.
struct BlossomEvent {
    BlossomEventKind kind = BlossomEventKind::grow;
    double sigma = 0;
    uint32_t u = 0;
    int32_t v = 0;
};

struct BlossomTrace {
    std::vector<BlossomEvent> events;
    std::vector<ClusterSnapshot> snapshots;
};

struct MwpmResult {
    Matching matching;
    DualState duals;
    std::vector<DualCluster> clusters;
    BlossomTrace trace;
    double weight = 0;
};

/// Slack tolerance used by the solver and the certificate check.
double mwpm_tolerance(const SyndromeGraph& sg);

/// Minimum-weight perfect matching with boundary ports, by the primal-dual blossom
/// algorithm growing all alternating trees at one common rate. Throws on negative or
/// NaN weights; infinite weights mark absent edges.
MwpmResult solve_mwpm(const SyndromeGraph& sg, bool record_trace = false);

struct CertificateReport {
    bool ok = true;
    std::vector<std::string> reasons;
};

/// Checks dual feasibility, complementary slackness and a zero duality gap.
CertificateReport verify_certificate(const SyndromeGraph& sg, const Matching& matching, const DualState& duals);

const std::vector<ClusterSnapshot>& cluster_snapshots(const BlossomTrace& trace);

/// Builds the syndrome graph, matches it and expands the witness paths.
ErrorPattern decode_mwpm(const ModelGraph& graph, const Syndrome& syndrome);

}  // namespace mp

#endif
