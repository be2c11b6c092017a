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

#ifndef MATCHPOINT_HARNESS_H
#define MATCHPOINT_HARNESS_H

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matchpoint/model_graph.h"
#include "matchpoint/noise.h"
#include "matchpoint/union_find.h"

namespace mp {

enum class DecoderKind : uint8_t { mwpm, uf_real, uf_int };

struct DecoderSpec {
    DecoderKind kind = DecoderKind::mwpm;
    /// Integer scale for uf_int; falls back to SimConfig::w_max.
    std::optional<int64_t> w_max;

    /// "mwpm", "uf_real" or "uf_int:<w_max>".
    std::string name() const;
    bool operator==(const DecoderSpec&) const = default;
};

/// Parses "mwpm", "uf_real", "uf_int" or "uf_int:<w_max>".
DecoderSpec parse_decoder(const std::string& text);

struct SimConfig {
    /// "css", "xzzx" or "repetition".
    std::string code = "css";
    int distance = 3;
    int rounds = 1;
    double p = 0.01;
    /// Measurement error probability when rounds > 1; defaults to p.
    std::optional<double> q;
    double bias = kInfiniteBias;
    std::vector<DecoderSpec> decoders{DecoderSpec{}};
    uint64_t shots = 1000;
    uint64_t seed = 0;
    int64_t w_max = 16;
    /// 0 selects MATCHPOINT_THREADS or the hardware concurrency.
    size_t threads = 0;
    bool timing = true;

    void validate() const;
};

struct DecoderStats {
    DecoderSpec decoder;
    uint64_t shots = 0;
    uint64_t failures = 0;
    double rate = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    double mean_ns = 0;
    double p99_ns = 0;
};

struct SimResult {
    SimConfig cfg;
    std::vector<DecoderStats> stats;
};

inline constexpr uint64_t kShardSize = 1024;
inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Graphs decoded per shot: the X and Z graphs for CSS, one graph otherwise.
std::vector<ModelGraph> build_sectors(const SimConfig& cfg);

/// Monte Carlo run. Shots are split into fixed shards with derived seeds, so results
/// do not depend on the worker count. A shot fails when the correction plus the sampled
/// error is a nontrivial logical operator in any sector. Throws std::runtime_error if a
/// correction does not reproduce its syndrome.
SimResult run(const SimConfig& cfg);
SimResult run(const std::vector<ModelGraph>& sectors, const SimConfig& cfg);

/// Exact failure probabilities by enumerating every error pattern of each connected
/// component (at most 20 edges each); components and sectors are combined as
/// independent flips. `shots` counts enumerated patterns and `failures` failing ones.
SimResult sweep(const SimConfig& cfg);
SimResult sweep(const std::vector<ModelGraph>& sectors, const SimConfig& cfg);

/// Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(uint64_t k, uint64_t n, double z = kWilsonZ95);

/// Worker count from MATCHPOINT_THREADS, else the hardware concurrency (at least 1).
size_t default_worker_count();

std::string csv_header();
std::string to_csv(const SimResult& result);
nlohmann::json to_json(const SimResult& result);

/// Applies keys of a JSON object (same names as the CLI flags) onto a config.
void apply_json(SimConfig& cfg, const nlohmann::json& j);

/// Decodes one syndrome with the given decoder.
ErrorPattern decode_with(const DecoderSpec& spec, int64_t default_w_max, const ModelGraph& graph, const Syndrome& syndrome);

}  // namespace mp

#endif
