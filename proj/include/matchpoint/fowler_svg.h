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

#ifndef MATCHPOINT_FOWLER_SVG_H
#define MATCHPOINT_FOWLER_SVG_H

#include <optional>
#include <string>

#include "matchpoint/blossom.h"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"
#include "matchpoint/union_find.h"

namespace mp {

/// Fowler diagram of a blossom trace: one frame per snapshot, each defect drawn with an
/// L1 region of its dual reach and matched pairs in a red stroke. Distances are drawn
/// so that lattice spacing tracks edge weight. Multi-round syndromes are drawn as one
/// slice per round. Throws when the trace has no snapshots.
std::string blossom_fowler_svg(const SyndromeGraph& sg, const BlossomTrace& trace);

/// Union-Find frames: decoding-graph traces draw grown, half-grown and unoccupied
/// edges; syndrome-graph traces draw ball regions. The correction, when given, is drawn
/// on the last frame.
std::string uf_fowler_svg(
    const ModelGraph& graph,
    const Syndrome& syndrome,
    const UfTrace& trace,
    const std::optional<ErrorPattern>& correction = std::nullopt);

/// Number of frames in an emitted diagram.
size_t count_frames(const std::string& svg);

void write_file(const std::string& path, const std::string& content);

}  // namespace mp

#endif
