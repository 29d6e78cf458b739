// Copyright 2026 The bitensemble Authors
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

#include "bitensemble/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "CLI11.hpp"

#include "bitensemble/bitcore.h"
#include "bitensemble/dynamics.h"
#include "bitensemble/errors.h"
#include "bitensemble/experiments.h"
#include "bitensemble/numtheory.h"
#include "bitensemble/record.h"
#include "bitensemble/rng.h"
#include "bitensemble/states.h"

namespace bitensemble {

namespace {

constexpr std::size_t kMaxInlineSymbols = 4096;

struct Common {
    std::uint64_t n = 0;
    std::uint64_t nx = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
    std::uint64_t max_candidates = 10000;
    bool wall_time = false;
};

struct Options {
    Common common;
    // shared harness parameters
    std::uint64_t m = 0, phase = 0, m_a = 0, m_b = 0;
    int k = 1;
    std::string tree, binary_out;
    std::string alpha0 = "0", alpha1 = "1/4", beta0 = "1/8", beta1 = "7/8";
    bool triple = false, include_exceptions = false, allow_exceptions = false, dependent = false;
    bool cosine = false, require_prime = false;
    std::uint64_t pool_max_den = 36, trials = 1, base = 0;
    std::string phi = "0", epsilon = "1/50", mode = "interference-first", exact_phi;
    std::string preset = "generic";
    std::string value;
    std::string r_ab, r_bc, phi_b;
    std::string r_x0y0, r_x0y1, r_x1y0, phi_x0, phi_x1;
    std::string program = "[]", rle;
    std::string u, v;
    std::optional<double> energy_ratio, mass_kg;
    std::string scale_preset, length = "1e62", kmax_n = "1";
    // sweep
    std::string harness;
    std::vector<std::uint64_t> ns;
    std::vector<std::string> fixed;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--n", c.n, "quarter length N (0 = harness default)");
    sub->add_option("--nx", c.nx, "null count n_X");
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "output file (relative paths resolve against $BITENSEMBLE_OUT_DIR)");
    sub->add_option("--max-candidates", c.max_candidates, "census enumeration cap");
    sub->add_flag("--wall-time", c.wall_time, "include wall_time_ms in the record");
}

EnsembleParams params_or(const Common &c, std::uint64_t fallback) {
    return EnsembleParams(c.n == 0 ? fallback : c.n, c.nx);
}

std::vector<std::uint64_t> parse_digits(const std::string &text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad digit list '" + text + "'");
        }
        out.push_back(std::stoull(item));
    }
    if (out.empty()) {
        throw ParseError("empty digit list");
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_tree(const std::string &text, int k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (text.empty()) {
        out.assign((std::size_t{1} << k) - 1, {0, 0});
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ParseError("tree entries are m:n pairs separated by commas");
        }
        auto m = parse_digits(item.substr(0, colon));
        auto n = parse_digits(item.substr(colon + 1));
        out.emplace_back(m.at(0), n.at(0));
    }
    return out;
}

RationalAngle angle_arg(const std::string &s) {
    return RationalAngle(parse_rational(s));
}

RationalCosine cosine_arg(const std::string &s) {
    return RationalCosine(parse_rational(s));
}

std::string render(const ExperimentRecord &rec, const std::string &format) {
    if (format == "csv") {
        return rec.to_csv();
    }
    if (format == "text") {
        return rec.to_text();
    }
    return rec.to_json().dump(2) + "\n";
}

void emit(const std::string &text, const Common &c, std::ostream &out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(c.out);
    if (path.is_relative()) {
        if (const char *dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open output file " + path.string());
    }
    f << text;
}

nlohmann::json string_json(const BitString &s) {
    nlohmann::json out = {{"length", s.size()}};
    if (s.size() <= kMaxInlineSymbols) {
        out["rle"] = s.to_rle();
    }
    return out;
}

ExperimentRecord qubit_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 8);
    SkeletonPoint pt(o.m, o.phase, params);
    BitString s = bloch_state(pt);
    EnsembleStats st = ensemble_stats(s);
    Rational corr = correlation(s, BitString::ones(params));
    ExperimentRecord rec;
    rec.experiment = "qubit";
    rec.config = {{"N", params.n()}, {"n_X", params.null_count()}, {"m", o.m}, {"phase", o.phase}};
    rec.statistics = {
        {"string", string_json(s)},
        {"minus_fraction", rational_json(st.minus_fraction)},
        {"mean", rational_json(st.mean)},
        {"stddev", st.stddev},
        {"correlation_with_ones", rational_json(corr)},
        {"cos_theta", rational_json(pt.cosine())},
        {"phi_turns", rational_json(pt.turns())},
    };
    rec.verdicts["statistics_law"] = st.minus_fraction == pt.minus_fraction() && corr == pt.cosine();
    return rec;
}

ExperimentRecord kqubit_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 4);
    MultiQubitState state = kqubit_build(o.k, parse_tree(o.tree, o.k), params);
    ExperimentRecord rec;
    rec.experiment = "kqubit";
    rec.config = state.sidecar();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : state.strings) {
        rows.push_back(string_json(row));
    }
    rec.statistics = {
        {"rows", rows},
        {"string_length", state.strings.front().size()},
        {"degrees_of_freedom", state.degrees_of_freedom()},
    };
    if (!o.binary_out.empty()) {
        auto bytes = state.to_binary();
        std::ofstream bin(o.binary_out, std::ios::binary);
        std::ofstream side(o.binary_out + ".json");
        if (!bin || !side) {
            throw DomainError("cannot write " + o.binary_out);
        }
        bin.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        side << state.sidecar().dump(2) << "\n";
        rec.statistics["binary_bytes"] = bytes.size();
    }
    return rec;
}

ExperimentRecord bell_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 8);
    BellPair pair = bell_pair(o.m_a, o.m_b, params);
    Rational corr = correlation(pair.b_a, pair.b_b);
    std::uint64_t gap = o.m_a > o.m_b ? o.m_a - o.m_b : o.m_b - o.m_a;
    Rational law = Rational(BigInt(gap), BigInt(params.n())) - 1;
    ExperimentRecord rec;
    rec.experiment = "bell";
    rec.config = {{"N", params.n()}, {"n_X", params.null_count()}, {"m_a", o.m_a}, {"m_b", o.m_b}};
    rec.statistics = {
        {"B_a", string_json(pair.b_a)},
        {"B_b", string_json(pair.b_b)},
        {"correlation", rational_json(corr)},
        {"minus_count_a", pair.b_a.count(Bit::Minus)},
        {"plus_count_a", pair.b_a.count(Bit::Plus)},
        {"minus_count_b", pair.b_b.count(Bit::Minus)},
        {"plus_count_b", pair.b_b.count(Bit::Plus)},
    };
    rec.verdicts["correlation_law"] = corr == law;
    rec.verdicts["balanced"] = pair.b_a.count(Bit::Minus) == pair.b_a.count(Bit::Plus) &&
                               pair.b_b.count(Bit::Minus) == pair.b_b.count(Bit::Plus);
    return rec;
}

ExperimentRecord chsh_record(const Options &o) {
    ChshConfig cfg;
    cfg.params = params_or(o.common, 1000);
    cfg.alpha0 = angle_arg(o.alpha0);
    cfg.alpha1 = angle_arg(o.alpha1);
    cfg.beta0 = angle_arg(o.beta0);
    cfg.beta1 = angle_arg(o.beta1);
    cfg.seed = o.common.seed;
    return chsh_run(cfg);
}

ExperimentRecord census_record(const Options &o) {
    if (o.triple) {
        SiTripleConfig cfg = default_si_triple_config();
        cfg.params = params_or(o.common, 200);
        cfg.cap = o.common.max_candidates;
        cfg.pool_max_den = o.pool_max_den;
        cfg.include_exceptions = o.include_exceptions;
        cfg.seed = o.common.seed;
        return si_census_triple(cfg);
    }
    SiCensusConfig cfg = default_si_config();
    cfg.params = params_or(o.common, 200);
    cfg.cap = o.common.max_candidates;
    cfg.pool_max_den = o.pool_max_den;
    cfg.include_exceptions = o.include_exceptions;
    cfg.seed = o.common.seed;
    return si_census(cfg);
}

ExperimentRecord mz_record(const Options &o) {
    MzConfig cfg;
    cfg.params = params_or(o.common, 100);
    cfg.nominal_phi = angle_arg(o.phi);
    cfg.epsilon = parse_rational(o.epsilon);
    cfg.mode = o.mode == "which-way-first" ? MzMode::WhichWayFirst : MzMode::InterferenceFirst;
    if (!o.exact_phi.empty()) {
        cfg.exact_phi = angle_arg(o.exact_phi);
    }
    cfg.allow_exceptions = o.allow_exceptions;
    cfg.seed = o.common.seed;
    return mz_complementarity(cfg);
}

ExperimentRecord sg_record(const Options &o) {
    SgConfig cfg = default_sg_config();
    if (o.preset == "collinear") {
        Rational eps(1, 50);
        cfg.disks = {
            EpsilonDisk{Rational(4, 5), Rational(0), eps},
            EpsilonDisk{Rational(0), Rational(0), eps},
            EpsilonDisk{Rational(-4, 5), Rational(0), eps},
        };
    }
    cfg.params = params_or(o.common, 100);
    cfg.pool_max_den = o.pool_max_den;
    cfg.include_exceptions = o.include_exceptions;
    cfg.trials = o.trials;
    cfg.seed = o.common.seed;
    ExperimentRecord rec = sg_noncommutativity(cfg);
    rec.config["preset"] = o.preset;
    return rec;
}

ExperimentRecord uncertainty_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 100);
    return uncertainty_harness(SkeletonPoint(o.m, o.phase, params));
}

ExperimentRecord ghz_record(const Options &o) {
    if (o.cosine) {
        return ghz_conflict(cosine_arg(o.value));
    }
    return ghz_conflict(angle_arg(o.value));
}

ExperimentRecord niven_record(const Options &o) {
    RationalAngle a = angle_arg(o.value);
    ExperimentRecord rec;
    rec.experiment = "niven";
    rec.config = {{"phi", to_fraction_string(a.turns())}};
    rec.statistics = {{"cos_approx", std::cos(a.radians())}, {"denominator", a.denominator().str()}};
    rec.verdicts["niven"] = verdict_json(niven_classify(a));
    return rec;
}

ExperimentRecord triangle_record(const Options &o) {
    TriangleInstance t{cosine_arg(o.r_ab), cosine_arg(o.r_bc), angle_arg(o.phi_b)};
    ExperimentRecord rec;
    rec.experiment = "triangle";
    rec.config = {{"r_ab", o.r_ab}, {"r_bc", o.r_bc}, {"phi_b", o.phi_b}};
    rec.verdicts["cos_ac"] = verdict_json(triangle_verdict(t));
    return rec;
}

ExperimentRecord quadruple_record(const Options &o) {
    QuadrupleInstance q{
        cosine_arg(o.r_x0y0), cosine_arg(o.r_x0y1), cosine_arg(o.r_x1y0), angle_arg(o.phi_x0), angle_arg(o.phi_x1),
        !o.dependent};
    ExperimentRecord rec;
    rec.experiment = "quadruple";
    rec.config = {
        {"r_x0y0", o.r_x0y0}, {"r_x0y1", o.r_x0y1}, {"r_x1y0", o.r_x1y0},
        {"phi_x0", o.phi_x0}, {"phi_x1", o.phi_x1}, {"independent", !o.dependent},
    };
    rec.verdicts["cos_x1y1"] = verdict_json(quadruple_verdict(q));
    return rec;
}

BitString start_string(const Options &o, const EnsembleParams &params) {
    if (!o.rle.empty()) {
        return BitString::from_rle(o.rle);
    }
    return BitString::ones(params);
}

nlohmann::json image_json(const BitString &s) {
    auto img = is_unitary_image(s);
    if (!img) {
        return nullptr;
    }
    return {{"m", img->first}, {"n", img->second}};
}

ExperimentRecord evolve_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 4);
    UnitaryProgram program = UnitaryProgram::from_json(nlohmann::json::parse(o.program));
    BitString start = start_string(o, params);
    BitString end = evolve(program, start);
    ExperimentRecord rec;
    rec.experiment = "evolve";
    rec.config = {{"N", start.params().n()}, {"n_X", start.params().null_count()}, {"program", program.to_json()}};
    rec.statistics = {{"start", string_json(start)}, {"end", string_json(end)}, {"unitary_image", image_json(end)}};
    rec.verdicts["round_trip"] = invert(program, end) == start;
    return rec;
}

ExperimentRecord measure_record(const Options &o) {
    EnsembleParams params = params_or(o.common, 4);
    BitString start = o.rle.empty() ? bloch_state(SkeletonPoint(o.m, o.phase, params)) : BitString::from_rle(o.rle);
    ClusterOutcome c = measure_cluster(start, o.common.seed);
    ExperimentRecord rec;
    rec.experiment = "measure";
    rec.seed = o.common.seed;
    rec.config = {{"N", start.params().n()}, {"n_X", start.params().null_count()}, {"start", string_json(start)}};
    rec.statistics = c.to_json();
    rec.statistics["disordered"] = string_json(c.disordered);
    rec.statistics["unitary_image"] = image_json(c.disordered);
    rec.verdicts["counts_conserved"] = c.plus == start.count(Bit::Plus) && c.minus == start.count(Bit::Minus);
    rec.verdicts["ordered"] = is_unitary_image(c.disordered).has_value();
    return rec;
}

ExperimentRecord padic_record(const Options &o) {
    auto du = parse_digits(o.u);
    auto dv = parse_digits(o.v);
    PAdicLabel lu = o.base != 0 ? PAdicLabel(o.base, du)
                                : PAdicLabel::for_params(params_or(o.common, 1), du, o.require_prime);
    PAdicLabel lv(lu.base, dv);
    PAdicDistance d = padic_distance(lu, lv);
    ExperimentRecord rec;
    rec.experiment = "padic";
    rec.config = {{"base", lu.base}, {"u", du}, {"v", dv}};
    rec.statistics = {{"common_prefix", d.k ? nlohmann::json(*d.k) : nlohmann::json(nullptr)}, {"distance", d.value()}};
    return rec;
}

ExperimentRecord scale_record(const Options &o) {
    ScaleInput in;
    in.energy_ratio = o.energy_ratio;
    in.mass_kg = o.mass_kg;
    if (!o.scale_preset.empty()) {
        in.preset = o.scale_preset;
    }
    in.max_length = parse_scientific_integer(o.length);
    in.kmax_n = parse_scientific_integer(o.kmax_n);
    return scale_estimates(in);
}

using Builder = ExperimentRecord (*)(const Options &);

const std::map<std::string, Builder> &builders() {
    static const std::map<std::string, Builder> table{
        {"qubit", qubit_record},         {"kqubit", kqubit_record},     {"bell", bell_record},
        {"chsh", chsh_record},           {"si-census", census_record},  {"mz", mz_record},
        {"sg", sg_record},               {"uncertainty", uncertainty_record}, {"ghz", ghz_record},
        {"niven", niven_record},         {"triangle", triangle_record}, {"quadruple", quadruple_record},
        {"evolve", evolve_record},       {"measure", measure_record},   {"padic", padic_record},
        {"scale", scale_record},
    };
    return table;
}

// Columns that summarise one sweep row, per harness.
std::vector<std::pair<std::string, std::string>> headline(const std::string &harness, const nlohmann::json &rec) {
    const auto &st = rec.at("statistics");
    const auto &vd = rec.at("verdicts");
    if (harness == "chsh") {
        return {
            {"S", st.at("S").at("exact").get<std::string>()},
            {"S_approx", st.at("S").at("approx").dump()},
            {"S_cont", st.at("S_cont").dump()},
            {"abs_S_minus_2sqrt2", st.at("abs_S_minus_2sqrt2").dump()},
        };
    }
    if (harness == "si-census") {
        const auto &c = st.at("counts");
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto &[k, v] : c.items()) {
            out.emplace_back("count_" + k, v.dump());
        }
        out.emplace_back("si_violated", vd.at("si_violated").dump());
        return out;
    }
    if (harness == "uncertainty") {
        return {{"margin", st.at("margin").dump()}, {"inequality", vd.at("inequality").get<std::string>()}};
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (auto &kv : flatten(vd)) {
        out.push_back(std::move(kv));
    }
    return out;
}

int run_sweep(const Options &o, std::ostream &out, std::ostream &err) {
    if (o.ns.empty()) {
        err << "sweep: --ns needs at least one N\n";
        return kExitUsage;
    }
    for (std::size_t i = 0; i < o.ns.size(); i++) {
        if (o.ns[i] == 0 || (i > 0 && o.ns[i] <= o.ns[i - 1])) {
            err << "sweep: N values must be positive and strictly increasing\n";
            return kExitUsage;
        }
    }
    if (o.harness == "sweep" || !builders().count(o.harness)) {
        err << "sweep: unknown harness '" << o.harness << "'\n";
        return kExitUsage;
    }
    struct Row {
        int code;
        std::string json;
        std::string error;
        std::uint64_t seed;
    };
    std::vector<std::future<Row>> futures;
    for (std::size_t i = 0; i < o.ns.size(); i++) {
        std::uint64_t seed = derive_seed(o.common.seed, i);
        std::vector<std::string> args{o.harness, "--n", std::to_string(o.ns[i]), "--seed", std::to_string(seed),
                                      "--nx", std::to_string(o.common.nx)};
        args.insert(args.end(), o.fixed.begin(), o.fixed.end());
        futures.push_back(std::async(std::launch::async, [args, seed] {
            std::ostringstream row_out, row_err;
            int code = run_cli(args, row_out, row_err);
            return Row{code, row_out.str(), row_err.str(), seed};
        }));
    }
    std::ostringstream table;
    std::vector<std::string> header;
    for (std::size_t i = 0; i < futures.size(); i++) {
        Row row = futures[i].get();
        if (row.code != kExitOk) {
            emit(table.str(), o.common, out);
            err << "sweep: row N=" << o.ns[i] << " failed: " << row.error;
            return row.code;
        }
        auto cols = headline(o.harness, nlohmann::json::parse(row.json));
        if (header.empty()) {
            table << "N,seed";
            for (const auto &[k, v] : cols) {
                header.push_back(k);
                table << "," << k;
            }
            table << "\n";
        }
        table << o.ns[i] << "," << row.seed;
        for (const auto &[k, v] : cols) {
            table << "," << v;
        }
        table << "\n";
    }
    emit(table.str(), o.common, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Finite bit-string ensembles with exact rational arithmetic", "bitensemble"};
    app.require_subcommand(1, 1);

    auto *qubit = app.add_subcommand("qubit", "single-qubit string B = cyc_shift(interp_i1(1, m), phase)");
    qubit->add_option("--m", o.m, "amplitude index m in [0, 2N]");
    qubit->add_option("--phase", o.phase, "phase index in [0, p)");

    auto *kqubit = app.add_subcommand("kqubit", "K-qubit state from a preorder (m, n) tree");
    kqubit->add_option("--k", o.k, "number of qubits K");
    kqubit->add_option("--tree", o.tree, "m:n pairs in preorder, comma separated (default all 0:0)");
    kqubit->add_option("--binary-out", o.binary_out, "write rows in binary plus a .json sidecar");

    auto *bell = app.add_subcommand("bell", "Bell string pair and its correlation");
    bell->add_option("--ma", o.m_a, "Alice's m");
    bell->add_option("--mb", o.m_b, "Bob's m");

    auto *chsh = app.add_subcommand("chsh", "CHSH S value from four grid-rounded Bell pairs");
    chsh->add_option("--alpha0", o.alpha0, "Alice setting 0 (turns)");
    chsh->add_option("--alpha1", o.alpha1, "Alice setting 1 (turns)");
    chsh->add_option("--beta0", o.beta0, "Bob setting 0 (turns)");
    chsh->add_option("--beta1", o.beta1, "Bob setting 1 (turns)");

    auto *census = app.add_subcommand("si-census", "statistical-independence census over exact settings");
    census->add_flag("--triple", o.triple, "three-disk variant");
    census->add_option("--pool-max-den", o.pool_max_den, "largest vertex-angle denominator");
    census->add_flag("--include-exceptions", o.include_exceptions, "keep Niven-exception vertex angles");

    auto *mz = app.add_subcommand("mz", "Mach-Zehnder complementarity");
    mz->add_option("--phi", o.phi, "nominal phase (turns)");
    mz->add_option("--epsilon", o.epsilon, "nominal accuracy");
    mz->add_option("--mode", o.mode, "measured mode")->check(CLI::IsMember({"interference-first", "which-way-first"}));
    mz->add_option("--exact-phi", o.exact_phi, "exact setting (turns), skipping the sampler");
    mz->add_flag("--allow-exceptions", o.allow_exceptions, "let the sampler draw Niven-exception settings");

    auto *sg = app.add_subcommand("sg", "sequential Stern-Gerlach non-commutativity");
    sg->add_option("--preset", o.preset, "disk layout")->check(CLI::IsMember({"generic", "collinear"}));
    sg->add_option("--pool-max-den", o.pool_max_den, "largest vertex-angle denominator");
    sg->add_flag("--include-exceptions", o.include_exceptions, "keep Niven-exception vertex angles");
    sg->add_option("--trials", o.trials, "number of sampled triples");

    auto *unc = app.add_subcommand("uncertainty", "uncertainty inequality at one skeleton point");
    unc->add_option("--m", o.m, "amplitude index m");
    unc->add_option("--phase", o.phase, "phase index");

    auto *ghz = app.add_subcommand("ghz", "linear vs circular polarisation admissibility");
    ghz->add_option("value", o.value, "angle in turns, or cos(2 phi) with --cosine")->required();
    ghz->add_flag("--cosine", o.cosine, "interpret the value as cos(2 phi)");

    auto *niven = app.add_subcommand("niven", "Niven classification of a rational angle");
    niven->add_option("value", o.value, "angle in turns, e.g. 1/5")->required();

    auto *tri = app.add_subcommand("triangle", "Impossible Triangle verdict");
    tri->add_option("--r-ab", o.r_ab, "cos(theta_ab)")->required();
    tri->add_option("--r-bc", o.r_bc, "cos(theta_bc)")->required();
    tri->add_option("--phi-b", o.phi_b, "vertex angle at b (turns)")->required();

    auto *quad = app.add_subcommand("quadruple", "CHSH quadruple verdict");
    quad->add_option("--r-x0y0", o.r_x0y0)->required();
    quad->add_option("--r-x0y1", o.r_x0y1)->required();
    quad->add_option("--r-x1y0", o.r_x1y0)->required();
    quad->add_option("--phi-x0", o.phi_x0)->required();
    quad->add_option("--phi-x1", o.phi_x1)->required();
    quad->add_flag("--dependent", o.dependent, "vertex angles are not independent");

    auto *evo = app.add_subcommand("evolve", "apply a unitary program and check it inverts");
    evo->add_option("--program", o.program, "JSON array of [m, n] steps");
    evo->add_option("--rle", o.rle, "start string in run-length form (default ones)");

    auto *meas = app.add_subcommand("measure", "measurement as seeded disorder");
    meas->add_option("--m", o.m, "amplitude index of the start string");
    meas->add_option("--phase", o.phase, "phase index of the start string");
    meas->add_option("--rle", o.rle, "start string in run-length form");

    auto *padic = app.add_subcommand("padic", "p-adic label distance");
    padic->add_option("--u", o.u, "digits of u, comma separated")->required();
    padic->add_option("--v", o.v, "digits of v, comma separated")->required();
    padic->add_option("--base", o.base, "base p (default 4N + n_X)");
    padic->add_flag("--require-prime", o.require_prime, "reject composite p");

    auto *scale = app.add_subcommand("scale", "N, classical limit and K_max estimates");
    scale->add_option("--energy-ratio", o.energy_ratio, "E / E_Planck");
    scale->add_option("--mass-kg", o.mass_kg, "rest mass in kg");
    scale->add_option("--preset", o.scale_preset, "infrared-photon or planck");
    scale->add_option("--length", o.length, "largest string length L, e.g. 1e62");
    scale->add_option("--kmax-n", o.kmax_n, "quarter length for K_max");

    auto *sweep = app.add_subcommand("sweep", "CSV table of one harness over several N");
    sweep->add_option("harness", o.harness, "harness subcommand")->required();
    sweep->add_option("--ns", o.ns, "N values, comma separated, increasing")->delimiter(',');
    sweep->footer("Flags after a bare -- are passed unchanged to every row.");

    for (auto *sub : app.get_subcommands([](CLI::App *) { return true; })) {
        add_common(sub, o.common);
    }

    // Everything after a bare "--" belongs to the sweep rows, not to this parser.
    auto split = std::find(args.begin(), args.end(), std::string("--"));
    if (split != args.end()) {
        o.fixed.assign(split + 1, args.end());
    }
    std::vector<std::string> reversed(std::make_reverse_iterator(split), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    CLI::App *chosen = app.get_subcommands().front();
    std::string name = chosen->get_name();
    try {
        if (!o.fixed.empty() && name != "sweep") {
            err << name << ": a bare -- is only meaningful for sweep\n";
            return kExitUsage;
        }
        if (name == "sweep") {
            return run_sweep(o, out, err);
        }
        auto t0 = std::chrono::steady_clock::now();
        ExperimentRecord rec = builders().at(name)(o);
        rec.seed = o.common.seed;
        if (o.common.wall_time) {
            rec.wall_time_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
        emit(render(rec, o.common.format), o.common, out);
        return kExitOk;
    } catch (const NoCandidateError &e) {
        err << name << ": no candidate: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const ConfigError &e) {
        err << name << ": inconsistent configuration: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const std::invalid_argument &e) {
        err << name << ": " << e.what() << "\n\n" << chosen->help();
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << name << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        err << name << ": bad JSON: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bitensemble
