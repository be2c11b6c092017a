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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matchpoint/blossom.h"
#include "matchpoint/equivalence.h"
#include "matchpoint/fowler_svg.h"
#include "matchpoint/harness.h"
#include "matchpoint/serialization.h"
#include "matchpoint/union_find.h"

namespace {

struct Flags {
    std::string code = "css";
    int distance = 3;
    int rounds = 1;
    double p = 0.01;
    double q = -1;
    std::string bias = "inf";
    std::vector<std::string> decoders;
    uint64_t shots = 1000;
    uint64_t seed = 0;
    int64_t w_max = 16;
    std::string out;
    bool json = false;
    bool csv = false;
    std::string config;
    bool no_timing = false;
    size_t threads = 0;
    // diagram / equivalence
    std::string defects;
    std::string trace_out;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--code", f.code, "css, xzzx or repetition")->check(CLI::IsMember({"css", "xzzx", "repetition"}));
    cmd->add_option("-d,--distance", f.distance, "code distance");
    cmd->add_option("--rounds", f.rounds, "measurement rounds (phenomenological noise when > 1)");
    cmd->add_option("-p", f.p, "physical error probability");
    cmd->add_option("--q", f.q, "measurement error probability (defaults to p)");
    cmd->add_option("--bias", f.bias, "XZZX noise bias, a number or inf");
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--wmax", f.w_max, "integer scale for uf_int");
    cmd->add_option("--out", f.out, "output path (stdout when omitted)");
    cmd->add_option("--config", f.config, "JSON config file; its keys override flags");
}

mp::SimConfig to_config(const Flags& f) {
    mp::SimConfig cfg;
    cfg.code = f.code;
    cfg.distance = f.distance;
    cfg.rounds = f.rounds;
    cfg.p = f.p;
    if (f.q >= 0) {
        cfg.q = f.q;
    }
    cfg.bias = f.bias == "inf" ? mp::kInfiniteBias : std::stod(f.bias);
    if (!f.decoders.empty()) {
        cfg.decoders.clear();
        for (const std::string& name : f.decoders) {
            cfg.decoders.push_back(mp::parse_decoder(name));
        }
    }
    cfg.shots = f.shots;
    cfg.seed = f.seed;
    cfg.w_max = f.w_max;
    cfg.threads = f.threads;
    cfg.timing = !f.no_timing;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) {
            throw std::runtime_error("cannot read config " + f.config);
        }
        mp::apply_json(cfg, nlohmann::json::parse(in));
    }
    return cfg;
}

void emit(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
    } else {
        mp::write_file(f.out, text);
    }
}

std::vector<uint32_t> parse_ids(const std::string& text) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(static_cast<uint32_t>(std::stoul(item)));
        }
    }
    return out;
}

int simulate(const Flags& f, bool exhaustive) {
    mp::SimConfig cfg = to_config(f);
    mp::SimResult r = exhaustive ? mp::sweep(cfg) : mp::run(cfg);
    if (f.json) {
        emit(f, mp::to_json(r).dump(2) + "\n");
    } else {
        emit(f, mp::csv_header() + mp::to_csv(r));
    }
    return 0;
}

int equivalence(const Flags& f) {
    mp::SimConfig cfg = to_config(f);
    std::vector<mp::ModelGraph> sectors = mp::build_sectors(cfg);
    mp::Rng rng(cfg.seed);
    uint64_t equivalent = 0;
    uint64_t cond1 = 0;
    uint64_t cond2 = 0;
    nlohmann::json reports = nlohmann::json::array();
    for (uint64_t shot = 0; shot < cfg.shots; ++shot) {
        bool eq = true;
        bool c1 = true;
        bool c2 = true;
        for (const mp::ModelGraph& g : sectors) {
            mp::Syndrome syn = mp::syndrome_of(g, mp::sample_iid(g, rng));
            mp::SyndromeGraph sg = mp::build_syndrome_graph(g, syn);
            mp::MwpmResult m = mp::solve_mwpm(sg, true);
            mp::UfConfig uc;
            uc.record_trace = true;
            mp::UfResult u = mp::decode_uf(g, syn, uc);
            mp::ErrorPattern mc = mp::expand(sg, m.matching);
            mp::EquivalenceVerdict v = mp::logically_equivalent(g, u.correction, mc);
            mp::Condition1Result r1 = mp::check_condition1(mp::partitions_of(m.trace, sg), mp::partitions_of(u.trace));
            mp::Condition2Result r2;
            try {
                r2 = mp::check_condition2(g, u.clusters, u.correction, mc);
            } catch (const std::invalid_argument&) {
                r2.holds = false;
            }
            v.detached_only = r2.detached_only;
            eq = eq && v.equivalent;
            c1 = c1 && r1.holds;
            c2 = c2 && r2.holds;
            if ((!v.equivalent || !r1.holds) && reports.size() < 20) {
                nlohmann::json rep = mp::equivalence_report_to_json(v, &r1, &r2);
                rep["shot"] = shot;
                rep["syndrome"] = syn.ids();
                reports.push_back(rep);
            }
        }
        equivalent += eq;
        cond1 += c1;
        cond2 += c2;
    }
    nlohmann::json out{
        {"code", cfg.code},
        {"distance", cfg.distance},
        {"p", cfg.p},
        {"seed", cfg.seed},
        {"shots", cfg.shots},
        {"equivalent", equivalent},
        {"condition1_holds", cond1},
        {"condition2_holds", cond2},
        {"reports", reports}};
    emit(f, out.dump(2) + "\n");
    return 0;
}

int diagram(const Flags& f) {
    mp::SimConfig cfg = to_config(f);
    mp::ModelGraph g = mp::build_sectors(cfg).front();
    mp::Syndrome syn;
    if (!f.defects.empty()) {
        syn = mp::Syndrome(parse_ids(f.defects));
    } else {
        mp::Rng rng(cfg.seed);
        syn = mp::syndrome_of(g, mp::sample_iid(g, rng));
    }
    const mp::DecoderSpec spec = cfg.decoders.front();
    std::string svg;
    nlohmann::json trace;
    if (spec.kind == mp::DecoderKind::mwpm) {
        mp::SyndromeGraph sg = mp::build_syndrome_graph(g, syn);
        mp::MwpmResult r = mp::solve_mwpm(sg, true);
        svg = mp::blossom_fowler_svg(sg, r.trace);
        trace = mp::blossom_trace_to_json(sg, r);
    } else {
        mp::UfConfig uc;
        uc.record_trace = true;
        if (spec.kind == mp::DecoderKind::uf_int) {
            uc.mode = mp::UfMode::integer_weighted;
            uc.w_max = spec.w_max.value_or(cfg.w_max);
        }
        mp::UfResult r = mp::decode_uf(g, syn, uc);
        svg = mp::uf_fowler_svg(g, syn, r.trace, r.correction);
        trace = mp::uf_trace_to_json(r);
    }
    emit(f, svg);
    if (!f.trace_out.empty()) {
        mp::write_file(f.trace_out, trace.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchpoint: MWPM and Union-Find surface code decoders"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo logical error rates");
    add_common(sim, f);
    sim->add_option("--decoder", f.decoders, "mwpm, uf_real, uf_int or uf_int:<w_max> (repeatable)");
    sim->add_option("--shots", f.shots, "number of shots");
    sim->add_option("--threads", f.threads, "worker threads (default MATCHPOINT_THREADS or all cores)");
    sim->add_flag("--no-timing", f.no_timing, "write zero timing columns so reruns are byte-identical");
    auto* sim_fmt = sim->add_option_group("format");
    sim_fmt->add_flag("--json", f.json, "JSON output");
    sim_fmt->add_flag("--csv", f.csv, "CSV output (default)");
    sim_fmt->require_option(0, 1);

    CLI::App* sweep = app.add_subcommand("sweep", "Exact logical error rates over every error pattern");
    add_common(sweep, f);
    sweep->add_option("--decoder", f.decoders, "mwpm, uf_real, uf_int or uf_int:<w_max> (repeatable)");
    auto* sweep_fmt = sweep->add_option_group("format");
    sweep_fmt->add_flag("--json", f.json, "JSON output");
    sweep_fmt->add_flag("--csv", f.csv, "CSV output (default)");
    sweep_fmt->require_option(0, 1);

    CLI::App* eq = app.add_subcommand("equivalence", "Compare UF and MWPM corrections and clusters per shot");
    add_common(eq, f);
    eq->add_option("--shots", f.shots, "number of shots");

    CLI::App* dia = app.add_subcommand("diagram", "Fowler diagram SVG of one decoding");
    add_common(dia, f);
    dia->add_option("--decoder", f.decoders, "mwpm (blossom frames) or uf_real / uf_int (growth frames)");
    dia->add_option("--defects", f.defects, "comma-separated defect vertex ids (sampled when omitted)");
    dia->add_option("--trace", f.trace_out, "also write the JSON trace to this path");

    CLI11_PARSE(app, argc, argv);
    try {
        if (sim->parsed()) {
            return simulate(f, false);
        }
        if (sweep->parsed()) {
            return simulate(f, true);
        }
        if (eq->parsed()) {
            return equivalence(f);
        }
        if (dia->parsed()) {
            return diagram(f);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
