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

#include "matchpoint/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "matchpoint/blossom.h"

namespace mp {

std::string DecoderSpec::name() const {
    switch (kind) {
        case DecoderKind::mwpm:
            return "mwpm";
        case DecoderKind::uf_real:
            return "uf_real";
        case DecoderKind::uf_int:
            return w_max ? "uf_int:" + std::to_string(*w_max) : "uf_int";
    }
    return "unknown";
}

DecoderSpec parse_decoder(const std::string& text) {
    if (text == "mwpm") {
        return DecoderSpec{DecoderKind::mwpm, std::nullopt};
    }
    if (text == "uf_real" || text == "uf") {
        return DecoderSpec{DecoderKind::uf_real, std::nullopt};
    }
    if (text == "uf_int") {
        return DecoderSpec{DecoderKind::uf_int, std::nullopt};
    }
    if (text.rfind("uf_int:", 0) == 0) {
        std::string digits = text.substr(7);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return c >= '0' && c <= '9';
            })) {
            throw std::invalid_argument("bad w_max in decoder " + text);
        }
        int64_t w = std::stoll(digits);
        if (w < 1) {
            throw std::invalid_argument("w_max must be at least 1");
        }
        return DecoderSpec{DecoderKind::uf_int, w};
    }
    throw std::invalid_argument("unknown decoder " + text);
}

void SimConfig::validate() const {
    if (code != "css" && code != "xzzx" && code != "repetition") {
        throw std::invalid_argument("unknown code " + code);
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (decoders.empty()) {
        throw std::invalid_argument("at least one decoder is required");
    }
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be at least 1");
    }
    if (w_max < 1) {
        throw std::invalid_argument("w_max must be at least 1");
    }
    if (!(p >= 0 && p <= 0.5) || (q && !(*q >= 0 && *q <= 0.5))) {
        throw std::invalid_argument("probabilities must lie in [0, 0.5]");
    }
    if (!(bias > 0)) {
        throw std::invalid_argument("bias must be positive");
    }
}

std::vector<ModelGraph> build_sectors(const SimConfig& cfg) {
    cfg.validate();
    std::vector<ModelGraph> sectors;
    if (cfg.code == "css") {
        CssGraphs g = build_css(cfg.distance, cfg.p, cfg.p);
        sectors.push_back(std::move(g.x));
        sectors.push_back(std::move(g.z));
    } else if (cfg.code == "xzzx") {
        sectors.push_back(build_xzzx(cfg.distance, cfg.p, cfg.bias));
    } else {
        sectors.push_back(build_repetition(cfg.distance, cfg.p));
    }
    if (cfg.rounds > 1) {
        for (ModelGraph& g : sectors) {
            g = build_phenomenological(g, cfg.rounds, cfg.q.value_or(cfg.p));
        }
    }
    return sectors;
}

ErrorPattern decode_with(const DecoderSpec& spec, int64_t default_w_max, const ModelGraph& graph, const Syndrome& syndrome) {
    switch (spec.kind) {
        case DecoderKind::mwpm:
            return decode_mwpm(graph, syndrome);
        case DecoderKind::uf_real:
            return decode_uf(graph, syndrome).correction;
        case DecoderKind::uf_int: {
            UfConfig cfg;
            cfg.mode = UfMode::integer_weighted;
            cfg.w_max = spec.w_max.value_or(default_w_max);
            return decode_uf(graph, syndrome, cfg).correction;
        }
    }
    throw std::logic_error("unknown decoder kind");
}

namespace {

/// Decoder bound to one sector graph, reusing Union-Find buffers across shots.
class SectorDecoder {
   public:
    SectorDecoder(const DecoderSpec& spec, int64_t default_w_max, const ModelGraph& graph) : spec_(spec), graph_(graph) {
        if (spec.kind != DecoderKind::mwpm) {
            UfConfig cfg;
            if (spec.kind == DecoderKind::uf_int) {
                cfg.mode = UfMode::integer_weighted;
                cfg.w_max = spec.w_max.value_or(default_w_max);
            }
            uf_ = std::make_unique<UnionFindDecoder>(graph, cfg);
        }
    }

    ErrorPattern decode(const Syndrome& syndrome) {
        if (uf_) {
            return uf_->decode(syndrome).correction;
        }
        return decode_mwpm(graph_, syndrome);
    }

   private:
    DecoderSpec spec_;
    const ModelGraph& graph_;
    std::unique_ptr<UnionFindDecoder> uf_;
};

struct ShardResult {
    std::vector<uint64_t> failures;
    std::vector<std::vector<double>> times;
};

std::vector<std::vector<SectorDecoder>> make_decoders(const std::vector<ModelGraph>& sectors, const SimConfig& cfg) {
    std::vector<std::vector<SectorDecoder>> out;
    for (const DecoderSpec& spec : cfg.decoders) {
        std::vector<SectorDecoder> row;
        for (const ModelGraph& g : sectors) {
            row.emplace_back(spec, cfg.w_max, g);
        }
        out.push_back(std::move(row));
    }
    return out;
}

void run_shard(
    const std::vector<ModelGraph>& sectors,
    const SimConfig& cfg,
    std::vector<std::vector<SectorDecoder>>& decoders,
    uint64_t shard,
    ShardResult& out) {
    size_t nd = cfg.decoders.size();
    out.failures.assign(nd, 0);
    out.times.assign(nd, {});
    Rng rng(derive_seed(cfg.seed, shard));
    uint64_t begin = shard * kShardSize;
    uint64_t end = std::min(cfg.shots, begin + kShardSize);
    std::vector<ErrorPattern> errors(sectors.size());
    std::vector<Syndrome> syndromes(sectors.size());
    for (uint64_t shot = begin; shot < end; ++shot) {
        for (size_t s = 0; s < sectors.size(); ++s) {
            errors[s] = sample_iid(sectors[s], rng);
            syndromes[s] = syndrome_of(sectors[s], errors[s]);
        }
        for (size_t d = 0; d < nd; ++d) {
            bool failed = false;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<ErrorPattern> corrections;
            for (size_t s = 0; s < sectors.size(); ++s) {
                corrections.push_back(decoders[d][s].decode(syndromes[s]));
            }
            auto t1 = std::chrono::steady_clock::now();
            for (size_t s = 0; s < sectors.size(); ++s) {
                if (syndrome_of(sectors[s], corrections[s]) != syndromes[s]) {
                    std::ostringstream msg;
                    msg << cfg.decoders[d].name() << " produced an invalid correction at shot " << shot << " (seed "
                        << cfg.seed << ", shard " << shard << ")";
                    throw std::runtime_error(msg.str());
                }
                if (classify(sectors[s], corrections[s] + errors[s]) == LogicalClass::nontrivial_logical) {
                    failed = true;
                }
            }
            out.failures[d] += failed ? 1 : 0;
            if (cfg.timing) {
                out.times[d].push_back(static_cast<double>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
            }
        }
    }
}

DecoderStats finalize(const DecoderSpec& spec, uint64_t shots, uint64_t failures, std::vector<double> times) {
    DecoderStats st;
    st.decoder = spec;
    st.shots = shots;
    st.failures = failures;
    st.rate = static_cast<double>(failures) / static_cast<double>(shots);
    std::tie(st.ci_lo, st.ci_hi) = wilson_interval(failures, shots);
    if (!times.empty()) {
        double total = 0;
        for (double t : times) {
            total += t;
        }
        st.mean_ns = total / static_cast<double>(times.size());
        std::sort(times.begin(), times.end());
        size_t rank = static_cast<size_t>(std::ceil(0.99 * static_cast<double>(times.size())));
        st.p99_ns = times[std::max<size_t>(rank, 1) - 1];
    }
    return st;
}

}  // namespace

size_t default_worker_count() {
    if (const char* env = std::getenv("MATCHPOINT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            return static_cast<size_t>(v);
        }
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

SimResult run(const SimConfig& cfg) {
    return run(build_sectors(cfg), cfg);
}

SimResult run(const std::vector<ModelGraph>& sectors, const SimConfig& cfg) {
    cfg.validate();
    uint64_t num_shards = (cfg.shots + kShardSize - 1) / kShardSize;
    std::vector<ShardResult> shards(num_shards);
    size_t workers = cfg.threads > 0 ? cfg.threads : default_worker_count();
    workers = std::max<size_t>(1, std::min<size_t>(workers, num_shards));
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        try {
            auto decoders = make_decoders(sectors, cfg);
            for (uint64_t k = next++; k < num_shards; k = next++) {
                run_shard(sectors, cfg, decoders, k, shards[k]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = num_shards;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    SimResult result;
    result.cfg = cfg;
    for (size_t d = 0; d < cfg.decoders.size(); ++d) {
        uint64_t failures = 0;
        std::vector<double> times;
        for (const ShardResult& s : shards) {
            failures += s.failures[d];
            times.insert(times.end(), s.times[d].begin(), s.times[d].end());
        }
        result.stats.push_back(finalize(cfg.decoders[d], cfg.shots, failures, std::move(times)));
    }
    return result;
}

SimResult sweep(const SimConfig& cfg) {
    return sweep(build_sectors(cfg), cfg);
}

SimResult sweep(const std::vector<ModelGraph>& sectors, const SimConfig& cfg) {
    cfg.validate();
    // Edge lists of each connected component, per sector.
    std::vector<std::vector<std::vector<EdgeId>>> components(sectors.size());
    for (size_t s = 0; s < sectors.size(); ++s) {
        const ModelGraph& g = sectors[s];
        std::vector<int64_t> comp_of(g.num_vertices(), -1);
        auto comps = connected_components(g);
        for (size_t c = 0; c < comps.size(); ++c) {
            for (VertexId v : comps[c]) {
                comp_of[v] = static_cast<int64_t>(c);
            }
        }
        components[s].resize(comps.size());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            components[s][static_cast<size_t>(comp_of[g.edge(e).u])].push_back(e);
        }
        for (const auto& edges : components[s]) {
            if (edges.size() > kMaxEnumerationEdges) {
                throw std::invalid_argument("sweep needs components of at most 20 edges");
            }
        }
    }
    auto decoders = make_decoders(sectors, cfg);
    SimResult result;
    result.cfg = cfg;
    for (size_t d = 0; d < cfg.decoders.size(); ++d) {
        uint64_t patterns = 0;
        uint64_t failing = 0;
        double success_all = 1;
        for (size_t s = 0; s < sectors.size(); ++s) {
            const ModelGraph& g = sectors[s];
            double no_flip_bias = 1;  // product of (1 - 2 q_c)
            for (const auto& edges : components[s]) {
                double q = 0;
                uint64_t count = uint64_t{1} << edges.size();
                for (uint64_t mask = 0; mask < count; ++mask) {
                    std::vector<uint32_t> ids;
                    double prob = 1;
                    for (size_t k = 0; k < edges.size(); ++k) {
                        double pe = g.edge(edges[k]).error_prob;
                        if ((mask >> k) & 1) {
                            ids.push_back(edges[k]);
                            prob *= pe;
                        } else {
                            prob *= 1 - pe;
                        }
                    }
                    ErrorPattern error(std::move(ids));
                    Syndrome syndrome = syndrome_of(g, error);
                    ErrorPattern correction = decoders[d][s].decode(syndrome);
                    if (syndrome_of(g, correction) != syndrome) {
                        throw std::runtime_error(cfg.decoders[d].name() + " produced an invalid correction in sweep");
                    }
                    ++patterns;
                    if (classify(g, correction + error) == LogicalClass::nontrivial_logical) {
                        ++failing;
                        q += prob;
                    }
                }
                no_flip_bias *= 1 - 2 * q;
            }
            double sector_fail = (1 - no_flip_bias) / 2;
            success_all *= 1 - sector_fail;
        }
        DecoderStats st;
        st.decoder = cfg.decoders[d];
        st.shots = patterns;
        st.failures = failing;
        st.rate = 1 - success_all;
        st.ci_lo = st.rate;
        st.ci_hi = st.rate;
        result.stats.push_back(st);
    }
    return result;
}

std::pair<double, double> wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0, 1};
    }
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    double lo = k == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = k == n ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

std::string csv_header() {
    return "code,distance,rounds,p,decoder,shots,failures,rate,ci_lo,ci_hi,seed,mean_ns,p99_ns\n";
}

std::string to_csv(const SimResult& result) {
    std::ostringstream out;
    out << std::setprecision(12);
    for (const DecoderStats& st : result.stats) {
        out << result.cfg.code << ',' << result.cfg.distance << ',' << result.cfg.rounds << ',' << result.cfg.p << ','
            << st.decoder.name() << ',' << st.shots << ',' << st.failures << ',' << st.rate << ',' << st.ci_lo << ','
            << st.ci_hi << ',' << result.cfg.seed << ',' << std::llround(st.mean_ns) << ',' << std::llround(st.p99_ns)
            << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const SimResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DecoderStats& st : result.stats) {
        rows.push_back(nlohmann::json{
            {"decoder", st.decoder.name()},
            {"shots", st.shots},
            {"failures", st.failures},
            {"rate", st.rate},
            {"ci_lo", st.ci_lo},
            {"ci_hi", st.ci_hi},
            {"mean_ns", st.mean_ns},
            {"p99_ns", st.p99_ns}});
    }
    const SimConfig& c = result.cfg;
    return nlohmann::json{
        {"code", c.code},
        {"distance", c.distance},
        {"rounds", c.rounds},
        {"p", c.p},
        {"bias", std::isfinite(c.bias) ? nlohmann::json(c.bias) : nlohmann::json("inf")},
        {"seed", c.seed},
        {"results", rows}};
}

void apply_json(SimConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& key = it.key();
            const nlohmann::json& v = it.value();
            if (key == "code") {
                cfg.code = v.get<std::string>();
            } else if (key == "distance" || key == "d") {
                cfg.distance = v.get<int>();
            } else if (key == "rounds") {
                cfg.rounds = v.get<int>();
            } else if (key == "p") {
                cfg.p = v.get<double>();
            } else if (key == "q") {
                cfg.q = v.get<double>();
            } else if (key == "bias") {
                cfg.bias = v.is_string() && v.get<std::string>() == "inf" ? kInfiniteBias : v.get<double>();
            } else if (key == "decoders" || key == "decoder") {
                cfg.decoders.clear();
                for (const auto& name : v.is_array() ? v : nlohmann::json::array({v})) {
                    cfg.decoders.push_back(parse_decoder(name.get<std::string>()));
                }
            } else if (key == "shots") {
                cfg.shots = v.get<uint64_t>();
            } else if (key == "seed") {
                cfg.seed = v.get<uint64_t>();
            } else if (key == "wmax" || key == "w_max") {
                cfg.w_max = v.get<int64_t>();
            } else if (key == "threads") {
                cfg.threads = v.get<size_t>();
            } else if (key == "timing") {
                cfg.timing = v.get<bool>();
            } else {
                throw std::invalid_argument("unknown config key " + key);
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad config value: ") + ex.what());
    }
}

}  // namespace mp
