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

#ifndef MATCHPOINT_SERIALIZATION_H
#define MATCHPOINT_SERIALIZATION_H

#include "json.hpp"
#include "matchpoint/blossom.h"
#include "matchpoint/equivalence.h"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/syndrome_graph.h"
#include "matchpoint/union_find.h"

namespace mp {

using Json = nlohmann::json;

/// Schema "model_graph_v1". Infinite weights are written as null.
Json model_graph_to_json(const ModelGraph& graph);
/// Throws std::invalid_argument on a wrong schema tag or an invalid graph.
ModelGraph model_graph_from_json(const Json& j);

/// Schema "pattern_v1".
Json pattern_to_json(const ErrorPattern& pattern);
ErrorPattern pattern_from_json(const Json& j);

/// Schema "syndrome_v1".
Json syndrome_to_json(const Syndrome& syndrome);
Syndrome syndrome_from_json(const Json& j);

/// Schema "syndrome_graph_v1".
Json syndrome_graph_to_json(const SyndromeGraph& sg);

/// Schema "blossom_trace_v1": matching, duals, events and cluster snapshots.
Json blossom_trace_to_json(const SyndromeGraph& sg, const MwpmResult& result);

/// Schema "uf_trace_v1": checkpoints, final clusters and correction.
Json uf_trace_to_json(const UfResult& result);

/// Schema "equiv_report_v1". Either condition may be omitted.
Json equivalence_report_to_json(
    const EquivalenceVerdict& verdict,
    const Condition1Result* condition1 = nullptr,
    const Condition2Result* condition2 = nullptr);

}  // namespace mp

#endif
