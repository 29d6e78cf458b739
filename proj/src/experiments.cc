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

#include "bitensemble/experiments.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "bitensemble/errors.h"
#include "bitensemble/rng.h"

namespace bitensemble {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr std::int64_t kNominalDen = 1'000'000'000'000;

nlohmann::json disk_json(const EpsilonDisk &d) {
    return {
        {"cos_center", to_fraction_string(d.cos_center)},
        {"turn_center", to_fraction_string(d.turn_center)},
        {"epsilon", to_fraction_string(d.epsilon)},
    };
}

nlohmann::json params_json(const EnsembleParams &p) {
    return {{"N", p.n()}, {"n_X", p.null_count()}, {"p", p.period()}};
}

double circular_turn_gap(double a, double b) {
    double d = std::fmod(std::fabs(a - b), 1.0);
    return std::min(d, 1.0 - d);
}

// Exact cos(2 pi t) when Niven allows it, otherwise a 1e-12 rational approximation.
Rational nominal_cosine(const RationalAngle &a) {
    Verdict v = niven_classify(a);
    if (v.status == VerdictStatus::Rational) {
        return *v.value;
    }
    return rational_near(std::cos(a.radians()), kNominalDen);
}

std::string swapped_label(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Rational:
            return "ADMISSIBLE";
        case VerdictStatus::Irrational:
            return "INADMISSIBLE";
        case VerdictStatus::Exception:
            return "EXCEPTION";
        case VerdictStatus::Degenerate:
            return "DEGENERATE";
    }
    return "?";
}

void require_disjoint(const std::vector<const EpsilonDisk *> &disks) {
    for (std::size_t i = 0; i < disks.size(); i++) {
        for (std::size_t j = i + 1; j < disks.size(); j++) {
            if (disks_overlap(*disks[i], *disks[j])) {
                throw ConfigError("disks " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
            }
        }
    }
}

}  // namespace

Vec3 disk_centre(const EpsilonDisk &d) {
    double c = to_double(d.cos_center);
    double s = std::sqrt(std::max(0.0, 1 - c * c));
    double phi = kTwoPi * to_double(d.turn_center);
    return {s * std::cos(phi), s * std::sin(phi), c};
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double vertex_turns(const Vec3 &p, const Vec3 &q, const Vec3 &r) {
    double pq = dot(p, q);
    double pr = dot(p, r);
    Vec3 tq{q.x - pq * p.x, q.y - pq * p.y, q.z - pq * p.z};
    Vec3 tr{r.x - pr * p.x, r.y - pr * p.y, r.z - pr * p.z};
    double nq = std::sqrt(dot(tq, tq));
    double nr = std::sqrt(dot(tr, tr));
    if (nq == 0 || nr == 0) {
        return 0;
    }
    double c = std::clamp(dot(tq, tr) / (nq * nr), -1.0, 1.0);
    return std::acos(c) / kTwoPi;
}

bool disks_overlap(const EpsilonDisk &a, const EpsilonDisk &b) {
    Rational reach = a.epsilon + b.epsilon;
    Rational dc = a.cos_center - b.cos_center;
    if (abs(dc) > reach) {
        return false;
    }
    Rational dt = a.turn_center - b.turn_center;
    dt = dt - Rational(floor_of(dt));
    Rational gap = std::min(dt, Rational(1 - dt));
    return gap <= reach;
}

std::vector<Rational> grid_cosines(double centre, const Rational &width, std::uint64_t quarter_length) {
    EpsilonDisk band{rational_near(centre, kNominalDen), Rational(0), width};
    auto [lo, hi] = disk_m_range(band, EnsembleParams(quarter_length));
    std::vector<Rational> out;
    for (std::int64_t m = lo; m <= hi; m++) {
        Rational c = 1 - Rational(BigInt(m), BigInt(quarter_length));
        if (c > -1 && c < 1) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<RationalAngle> pool_window(const std::vector<RationalAngle> &pool, double centre, const Rational &width) {
    std::vector<RationalAngle> out;
    double w = to_double(width);
    for (const auto &a : pool) {
        if (a.turns() <= 0 || a.turns() >= Rational(1, 2)) {
            continue;
        }
        if (circular_turn_gap(to_double(a.turns()), centre) <= w) {
            out.push_back(a);
        }
    }
    return out;
}

// ---- Mach-Zehnder ----------------------------------------------------------------------------

ExperimentRecord mz_complementarity(const MzConfig &cfg) {
    const EnsembleParams &params = cfg.params;
    std::uint64_t big_n = params.n();
    ExperimentRecord rec;
    rec.experiment = "mz";
    rec.seed = cfg.seed;
    rec.config = {
        {"params", params_json(params)},
        {"nominal_phi", to_fraction_string(cfg.nominal_phi.turns())},
        {"epsilon", to_fraction_string(cfg.epsilon)},
        {"mode", cfg.mode == MzMode::InterferenceFirst ? "interference-first" : "which-way-first"},
        {"allow_exceptions", cfg.allow_exceptions},
    };
    if (cfg.exact_phi) {
        rec.config["exact_phi"] = to_fraction_string(cfg.exact_phi->turns());
    }
    SeededSource rng(cfg.seed);

    if (cfg.mode == MzMode::InterferenceFirst) {
        // Interference needs cos^2(phi*/2) = 1 - m/2N, i.e. cos(phi*) = 1 - m/N on the grid.
        std::uint64_t m;
        if (cfg.exact_phi) {
            Verdict v = niven_classify(*cfg.exact_phi);
            if (v.status != VerdictStatus::Rational) {
                throw ConfigError("exact phi has an irrational cosine; not an interference setting");
            }
            Rational mr = Rational(BigInt(big_n)) * (1 - *v.value);
            if (denominator(mr) != 1) {
                throw ConfigError("exact phi's cosine is not on the 1/N grid");
            }
            m = numerator(mr).convert_to<std::uint64_t>();
        } else {
            EpsilonDisk band{nominal_cosine(cfg.nominal_phi), Rational(0), cfg.epsilon};
            auto [lo, hi] = disk_m_range(band, params);
            std::vector<std::uint64_t> ms;
            for (std::int64_t k = lo; k <= hi; k++) {
                Rational c = 1 - Rational(BigInt(k), BigInt(big_n));
                if (cfg.allow_exceptions || !cosine_is_exception(RationalCosine(c))) {
                    ms.push_back(static_cast<std::uint64_t>(k));
                }
            }
            if (ms.empty()) {
                throw NoCandidateError("no grid cosine inside the interference window");
            }
            rec.statistics["candidates"] = ms.size();
            m = ms[rng.uniform(ms.size())];
        }
        SkeletonPoint pt(m, 0, params);
        EnsembleStats st = ensemble_stats(bloch_state(pt));
        Rational cos_star = pt.cosine();
        bool exception = cosine_is_exception(RationalCosine(cos_star));
        rec.statistics["m"] = m;
        rec.statistics["cos_phi_star"] = rational_json(cos_star);
        rec.statistics["minus_fraction"] = rational_json(st.minus_fraction);
        rec.statistics["mean"] = rational_json(st.mean);
        rec.statistics["stddev"] = st.stddev;
        rec.verdicts["interference"] = "ADMISSIBLE";
        rec.verdicts["which_way"] = exception ? "EXCEPTION" : "INADMISSIBLE";
        return rec;
    }

    // Which-way needs phi* itself rational: phi* = n/p on the phase lattice, equatorial string.
    std::uint64_t p = params.period();
    std::uint64_t n;
    if (cfg.exact_phi) {
        Rational np = Rational(BigInt(p)) * cfg.exact_phi->turns();
        if (denominator(np) != 1) {
            throw ConfigError("exact phi is not on the n/p phase lattice");
        }
        n = numerator(np).convert_to<std::uint64_t>();
    } else {
        EpsilonDisk band{Rational(0), cfg.nominal_phi.turns(), cfg.epsilon};
        std::vector<std::uint64_t> ns;
        for (std::uint64_t k : disk_n_values(band, params)) {
            RationalAngle a{Rational(BigInt(k), BigInt(p))};
            if (cfg.allow_exceptions || niven_classify(a).status != VerdictStatus::Rational) {
                ns.push_back(k);
            }
        }
        if (ns.empty()) {
            throw NoCandidateError("no lattice phase inside the which-way window");
        }
        rec.statistics["candidates"] = ns.size();
        n = ns[rng.uniform(ns.size())];
    }
    SkeletonPoint pt(big_n, n, params);
    EnsembleStats st = ensemble_stats(bloch_state(pt));
    Verdict cf = niven_classify(RationalAngle(pt.turns()));
    rec.statistics["n"] = n;
    rec.statistics["phi_star"] = rational_json(pt.turns());
    rec.statistics["minus_fraction"] = rational_json(st.minus_fraction);
    rec.statistics["mean"] = rational_json(st.mean);
    rec.statistics["stddev"] = st.stddev;
    rec.verdicts["which_way"] = "ADMISSIBLE";
    rec.verdicts["interference"] = cf.status == VerdictStatus::Rational ? "EXCEPTION" : "INADMISSIBLE";
    return rec;
}

// ---- sequential Stern-Gerlach ----------------------------------------------------------------

SgConfig default_sg_config() {
    SgConfig cfg;
    Rational eps(1, 50);
    cfg.disks = {
        EpsilonDisk{Rational(4, 5), Rational(0), eps},
        EpsilonDisk{Rational(1, 10), Rational(1, 10), eps},
        EpsilonDisk{Rational(-1, 2), Rational(3, 10), eps},
    };
    return cfg;
}

ExperimentRecord sg_noncommutativity(const SgConfig &cfg) {
    const auto &[a, b, c] = cfg.disks;
    require_disjoint({&a, &b, &c});
    ExperimentRecord rec;
    rec.experiment = "sg";
    rec.seed = cfg.seed;
    rec.config = {
        {"params", params_json(cfg.params)},
        {"disks", {disk_json(a), disk_json(b), disk_json(c)}},
        {"pool_max_den", cfg.pool_max_den},
        {"include_exceptions", cfg.include_exceptions},
        {"trials", cfg.trials},
    };
    Vec3 va = disk_centre(a), vb = disk_centre(b), vc = disk_centre(c);
    double r_ab_nom = dot(va, vb);
    double r_bc_nom = dot(vb, vc);
    double phi_nom = vertex_turns(vb, va, vc);
    rec.statistics["nominal"] = {{"r_ab", r_ab_nom}, {"r_bc", r_bc_nom}, {"phi_b", phi_nom}, {"r_ac", dot(va, vc)}};

    Vec3 cross{vb.y * vc.z - vb.z * vc.y, vb.z * vc.x - vb.x * vc.z, vb.x * vc.y - vb.y * vc.x};
    if (std::fabs(dot(va, cross)) < 1e-12) {
        // All three centres on one great circle: the vertex angle is 0 or 1/2 turn.
        std::uint64_t big_n = cfg.params.n();
        auto grid = [&](double x) {
            return 1 - Rational(BigInt(nearest_grid_m(rational_near(x, kNominalDen), big_n)), BigInt(big_n));
        };
        TriangleInstance t{
            RationalCosine(grid(r_ab_nom)), RationalCosine(grid(r_bc_nom)),
            RationalAngle(phi_nom < 0.25 ? Rational(0) : Rational(1, 2))};
        Verdict v = triangle_verdict(t);
        rec.verdicts["measured_chain"] = "ADMISSIBLE";
        rec.verdicts["swapped_chain"] = verdict_json(v);
        rec.verdicts["swapped_order"] = swapped_label(v.status);
        rec.statistics["census"] = {{"RATIONAL", 0}, {"IRRATIONAL", 0}, {"EXCEPTION", 0}, {"DEGENERATE", 1}};
        return rec;
    }

    auto rab = grid_cosines(r_ab_nom, a.epsilon + b.epsilon, cfg.params.n());
    auto rbc = grid_cosines(r_bc_nom, b.epsilon + c.epsilon, cfg.params.n());
    auto phis = pool_window(
        vertex_angle_pool(cfg.pool_max_den, cfg.include_exceptions), phi_nom, a.epsilon + b.epsilon + c.epsilon);
    rec.statistics["candidates"] = {{"r_ab", rab.size()}, {"r_bc", rbc.size()}, {"phi_b", phis.size()}};
    if (rab.empty() || rbc.empty() || phis.empty()) {
        throw NoCandidateError("no exact triple with rational measured-chain cosines inside the disks");
    }
    if (cfg.trials == 0) {
        throw ConfigError("trials must be positive");
    }
    SeededSource rng(cfg.seed);
    std::map<std::string, std::uint64_t> census{{"RATIONAL", 0}, {"IRRATIONAL", 0}, {"EXCEPTION", 0}, {"DEGENERATE", 0}};
    for (std::uint64_t trial = 0; trial < cfg.trials; trial++) {
        TriangleInstance t{
            RationalCosine(rab[rng.uniform(rab.size())]), RationalCosine(rbc[rng.uniform(rbc.size())]),
            phis[rng.uniform(phis.size())]};
        Verdict v = triangle_verdict(t);
        census[status_name(v.status)]++;
        if (trial == 0) {
            rec.statistics["exact"] = {
                {"r_ab", to_fraction_string(t.r_ab.value())},
                {"r_bc", to_fraction_string(t.r_bc.value())},
                {"phi_b", to_fraction_string(t.phi_b.turns())},
            };
            rec.verdicts["measured_chain"] = "ADMISSIBLE";
            rec.verdicts["swapped_chain"] = verdict_json(v);
            rec.verdicts["swapped_order"] = swapped_label(v.status);
        }
    }
    rec.statistics["census"] = census;
    return rec;
}

// ---- uncertainty -----------------------------------------------------------------------------

UncertaintyResult uncertainty_check(const SkeletonPoint &q) {
    Rational mean_z = ensemble_stats(bloch_state(q)).mean;
    double cz = to_double(q.cosine());
    double sz = std::sqrt(std::max(0.0, 1 - cz * cz));
    double phi = kTwoPi * to_double(q.turns());
    double cx = sz * std::cos(phi);
    double cy = sz * std::sin(phi);
    double dx = std::sqrt(std::max(0.0, 1 - cx * cx));
    double dy = std::sqrt(std::max(0.0, 1 - cy * cy));
    bool holds = dx * dy >= std::fabs(to_double(mean_z)) - 1e-12;
    TriangleInstance t{RationalCosine(q.cosine()), RationalCosine(Rational(0)), RationalAngle(q.turns())};
    return {mean_z, dx, dy, holds, triangle_verdict(t)};
}

ExperimentRecord uncertainty_harness(const SkeletonPoint &q) {
    ExperimentRecord rec;
    rec.experiment = "uncertainty";
    rec.config = {{"params", params_json(q.params())}, {"m", q.m()}, {"n", q.n()}};
    UncertaintyResult r = uncertainty_check(q);
    EnsembleStats st = ensemble_stats(bloch_state(q));
    rec.statistics = {
        {"mean_z", rational_json(r.mean_z)},
        {"stddev_z", st.stddev},
        {"delta_x", r.delta_x},
        {"delta_y", r.delta_y},
        {"product", r.delta_x * r.delta_y},
        {"margin", r.delta_x * r.delta_y - std::fabs(to_double(r.mean_z))},
    };
    rec.verdicts = {
        {"inequality", r.holds ? "HOLDS" : "VIOLATED"},
        {"contextuality", verdict_json(r.contextuality)},
    };
    return rec;
}

// ---- CHSH ------------------------------------------------------------------------------------

ChshResult chsh_compute(const ChshConfig &cfg) {
    const EnsembleParams &params = cfg.params;
    if (params.n() < 8) {
        throw ConfigError("CHSH needs N >= 8");
    }
    BigInt p(params.period());
    auto lattice = [&](const RationalAngle &a) { return round_half_even(Rational(p) * a.turns()) % p; };
    if (lattice(cfg.alpha0) == lattice(cfg.alpha1)) {
        throw ConfigError("Alice's settings coincide on the phase lattice");
    }
    if (lattice(cfg.beta0) == lattice(cfg.beta1)) {
        throw ConfigError("Bob's settings coincide on the phase lattice");
    }
    std::array<RationalAngle, 2> alpha{cfg.alpha0, cfg.alpha1};
    std::array<RationalAngle, 2> beta{cfg.beta0, cfg.beta1};
    ChshResult out;
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            Rational t = RationalAngle(beta[y].turns() - alpha[x].turns()).turns();
            if (t > Rational(1, 2)) {
                t = 1 - t;
            }
            RationalAngle rel(t);
            Rational c = nominal_cosine(rel);
            std::uint64_t dm = nearest_grid_m(c, params.n());
            BellPair pair = bell_pair(0, dm, params);
            out.e[x][y] = correlation(pair.b_a, pair.b_b);
            out.delta_m[x][y] = dm;
            out.cos_nominal[x][y] = std::cos(rel.radians());
        }
    }
    out.s = abs(out.e[0][0] + out.e[0][1] + out.e[1][0] - out.e[1][1]);
    // Continuum reference with E = -cos(theta).
    const auto &cn = out.cos_nominal;
    out.s_cont = std::fabs(-cn[0][0] - cn[0][1] - cn[1][0] + cn[1][1]);
    return out;
}

ExperimentRecord chsh_run(const ChshConfig &cfg) {
    ChshResult r = chsh_compute(cfg);
    ExperimentRecord rec;
    rec.experiment = "chsh";
    rec.seed = cfg.seed;
    rec.config = {
        {"params", params_json(cfg.params)},
        {"alpha0", to_fraction_string(cfg.alpha0.turns())},
        {"alpha1", to_fraction_string(cfg.alpha1.turns())},
        {"beta0", to_fraction_string(cfg.beta0.turns())},
        {"beta1", to_fraction_string(cfg.beta1.turns())},
    };
    double tsirelson = 2 * std::numbers::sqrt2;
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            std::string key = "E" + std::to_string(x) + std::to_string(y);
            rec.statistics[key] = rational_json(r.e[x][y]);
            rec.statistics["delta_m"][key] = r.delta_m[x][y];
        }
    }
    rec.statistics["S"] = rational_json(r.s);
    rec.statistics["S_cont"] = r.s_cont;
    rec.statistics["abs_S_minus_2sqrt2"] = std::fabs(to_double(r.s) - tsirelson);
    rec.statistics["abs_S_minus_S_cont"] = std::fabs(to_double(r.s) - r.s_cont);
    rec.statistics["convention"] = "E = correlation(B_a, B_b) = -cos(theta); S = |E00 + E01 + E10 - E11|";
    rec.verdicts["exceeds_classical_bound"] = r.s > 2;
    return rec;
}

// ---- GHZ -------------------------------------------------------------------------------------

ExperimentRecord ghz_conflict(const GhzSpec &spec) {
    ExperimentRecord rec;
    rec.experiment = "ghz";
    double phi;
    bool exception;
    if (const auto *angle = std::get_if<RationalAngle>(&spec)) {
        // Circular measurement holds (phi rational); linear needs cos(2 phi) rational.
        Verdict v = niven_classify(angle->doubled());
        exception = v.status == VerdictStatus::Rational;
        phi = angle->radians();
        rec.config = {{"phi", to_fraction_string(angle->turns())}};
        rec.verdicts["linear"] = verdict_json(v);
    } else {
        // Linear measurement holds (cos 2 phi rational); circular needs phi rational.
        const auto &cosine = std::get<RationalCosine>(spec);
        exception = cosine_is_exception(cosine);
        phi = std::acos(to_double(cosine.value())) / 2;
        rec.config = {{"cos_2phi", to_fraction_string(cosine.value())}};
        rec.verdicts["circular_rational_angle"] = exception;
    }
    rec.verdicts["joint"] = exception ? "EXCEPTION" : "CONFLICT";

    using C = std::complex<double>;
    const C i(0, 1);
    std::array<std::array<C, 2>, 2> lr{{{C(1), -i}, {C(1), i}}};
    std::array<std::array<C, 2>, 2> rot{{{C(std::cos(phi)), C(std::sin(phi))}, {C(-std::sin(phi)), C(std::cos(phi))}}};
    std::array<std::array<C, 2>, 2> closed{
        {{std::exp(i * phi), std::exp(i * (phi - std::numbers::pi / 2))},
         {std::exp(-i * phi), std::exp(-i * (phi - std::numbers::pi / 2))}}};
    double unit_dev = 0;
    double closed_dev = 0;
    nlohmann::json entries = nlohmann::json::array();
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            C v = lr[r][0] * rot[0][c] + lr[r][1] * rot[1][c];
            unit_dev = std::max(unit_dev, std::fabs(std::abs(v) - 1));
            closed_dev = std::max(closed_dev, std::abs(v - closed[r][c]));
            entries.push_back({{"re", v.real()}, {"im", v.imag()}, {"modulus", std::abs(v)}});
        }
    }
    rec.statistics = {
        {"phi_radians", phi},
        {"transform", entries},
        {"max_unit_modulus_deviation", unit_dev},
        {"max_closed_form_deviation", closed_dev},
    };
    rec.verdicts["unit_modulus"] = unit_dev < 1e-12;
    return rec;
}

// ---- scale -----------------------------------------------------------------------------------

std::uint64_t k_max(const BigInt &max_length, const BigInt &quarter_length) {
    if (quarter_length < 1) {
        throw DomainError("quarter length must be positive");
    }
    std::uint64_t k = 0;
    BigInt len = 4 * quarter_length;  // 2^(K+1) N at K = 1
    while (len <= max_length) {
        k++;
        len *= 2;
    }
    return k;
}

BigInt parse_scientific_integer(const std::string &text) {
    auto e = text.find_first_of("eE");
    Rational mantissa = parse_rational(text.substr(0, e));
    if (e != std::string::npos) {
        BigInt exponent = parse_rational(text.substr(e + 1)).convert_to<BigInt>();
        if (exponent < 0 || exponent > 10000) {
            throw ParseError("exponent out of range in '" + text + "'");
        }
        mantissa *= boost::multiprecision::pow(BigInt(10), exponent.convert_to<unsigned>());
    }
    if (denominator(mantissa) != 1) {
        throw ParseError("'" + text + "' is not an integer");
    }
    return numerator(mantissa);
}

ExperimentRecord scale_estimates(const ScaleInput &input) {
    ExperimentRecord rec;
    rec.experiment = "scale";
    BigInt length = input.max_length ? *input.max_length : boost::multiprecision::pow(BigInt(10), 62);
    rec.config = {{"max_length", length.str()}, {"kmax_n", input.kmax_n.str()}};

    std::optional<double> ratio = input.energy_ratio;
    if (input.preset) {
        rec.config["preset"] = *input.preset;
        if (*input.preset == "infrared-photon") {
            ratio = 1e-26;
        } else if (*input.preset == "planck") {
            ratio = 1.0;
        } else {
            throw ConfigError("unknown preset '" + *input.preset + "' (infrared-photon, planck)");
        }
    }
    if (input.mass_kg) {
        if (!(*input.mass_kg > 0)) {
            throw DomainError("mass must be positive");
        }
        rec.config["mass_kg"] = *input.mass_kg;
        ratio = *input.mass_kg / kPlanckMassKg;
    } else if (input.energy_ratio) {
        rec.config["energy_ratio"] = *input.energy_ratio;
    }
    if (ratio) {
        if (!(*ratio > 0) || !std::isfinite(*ratio)) {
            throw DomainError("energy ratio must be positive and finite");
        }
        double n_est = 1 / *ratio;
        rec.statistics["N_estimate"] = n_est;
        rec.statistics["log10_N"] = std::log10(n_est);
        rec.verdicts["classical"] = n_est <= 1;
    }
    std::uint64_t k = k_max(length, input.kmax_n);
    rec.statistics["K_max"] = k;
    rec.statistics["degrees_of_freedom_at_K_max"] =
        k == 0 ? std::string("0") : BigInt(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k + 1)) - 2).str();
    rec.statistics["classical_threshold_mass_ug"] = kPlanckMassKg * 1e9;
    return rec;
}

}  // namespace bitensemble
