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

#include <limits>
#include <map>
#include <set>

#include "bitensemble/errors.h"
#include "bitensemble/experiments.h"
#include "bitensemble/rng.h"

namespace bitensemble {

namespace {

nlohmann::json disk_json(const EpsilonDisk &d) {
    return {
        {"cos_center", to_fraction_string(d.cos_center)},
        {"turn_center", to_fraction_string(d.turn_center)},
        {"epsilon", to_fraction_string(d.epsilon)},
    };
}

// Mixed-radix decoding of a flat enumeration index, last digit fastest.
std::vector<std::uint64_t> decode(std::uint64_t index, const std::vector<std::uint64_t> &radix) {
    std::vector<std::uint64_t> out(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
        out[k] = index % radix[k];
        index /= radix[k];
    }
    return out;
}

std::vector<std::uint64_t> enumeration(
    const std::vector<std::uint64_t> &radix, std::uint64_t cap, std::uint64_t seed, bool *sampled) {
    std::uint64_t total = 1;
    for (auto r : radix) {
        if (r != 0 && total > std::numeric_limits<std::uint64_t>::max() / r) {
            throw ConfigError("census enumeration space overflows 64 bits");
        }
        total *= r;
    }
    *sampled = total > cap;
    if (!*sampled) {
        std::vector<std::uint64_t> all(total);
        for (std::uint64_t i = 0; i < total; i++) {
            all[i] = i;
        }
        return all;
    }
    return sample_indices(total, cap, seed);
}

// A Niven exception leaves the fourth cosine undecided, so it counts as a possible completion.
bool admissible_fourth(const Verdict &v) {
    return v.status == VerdictStatus::Rational || v.status == VerdictStatus::Exception;
}

}  // namespace

std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count, std::uint64_t seed) {
    if (count > total) {
        throw DomainError("cannot sample more indices than exist");
    }
    SeededSource rng(seed);
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = total - count; j < total; j++) {
        std::uint64_t t = rng.uniform(j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    return {chosen.begin(), chosen.end()};
}

SiCensusConfig default_si_config() {
    SiCensusConfig cfg;
    Rational eps(1, 50);
    cfg.x0 = {Rational(3, 5), Rational(0), eps};
    cfg.y0 = {Rational(1, 5), Rational(1, 10), eps};
    cfg.x1 = {Rational(-1, 5), Rational(1, 5), eps};
    cfg.y1 = {Rational(1, 2), Rational(3, 10), eps};
    cfg.seed = 20260101;
    return cfg;
}

SiTripleConfig default_si_triple_config() {
    SiTripleConfig cfg;
    Rational eps(1, 50);
    cfg.disks = {
        EpsilonDisk{Rational(4, 5), Rational(0), eps},
        EpsilonDisk{Rational(1, 10), Rational(1, 10), eps},
        EpsilonDisk{Rational(-1, 2), Rational(3, 10), eps},
    };
    cfg.seed = 20260101;
    return cfg;
}

ExperimentRecord si_census(const SiCensusConfig &cfg) {
    const std::array<const EpsilonDisk *, 4> disks{&cfg.x0, &cfg.x1, &cfg.y0, &cfg.y1};
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            if (disks_overlap(*disks[i], *disks[j])) {
                throw ConfigError("census disks must be pairwise disjoint");
            }
        }
    }
    ExperimentRecord rec;
    rec.experiment = "si-census";
    rec.seed = cfg.seed;
    rec.config = {
        {"params", {{"N", cfg.params.n()}, {"n_X", cfg.params.null_count()}}},
        {"x0", disk_json(cfg.x0)},
        {"x1", disk_json(cfg.x1)},
        {"y0", disk_json(cfg.y0)},
        {"y1", disk_json(cfg.y1)},
        {"pool_max_den", cfg.pool_max_den},
        {"include_exceptions", cfg.include_exceptions},
        {"cap", cfg.cap},
    };
    Vec3 x0 = disk_centre(cfg.x0), x1 = disk_centre(cfg.x1), y0 = disk_centre(cfg.y0), y1 = disk_centre(cfg.y1);
    std::uint64_t big_n = cfg.params.n();
    auto r00 = grid_cosines(dot(x0, y0), cfg.x0.epsilon + cfg.y0.epsilon, big_n);
    auto r01 = grid_cosines(dot(x0, y1), cfg.x0.epsilon + cfg.y1.epsilon, big_n);
    auto r10 = grid_cosines(dot(x1, y0), cfg.x1.epsilon + cfg.y0.epsilon, big_n);
    auto pool = vertex_angle_pool(cfg.pool_max_den, cfg.include_exceptions);
    auto phi0 = pool_window(pool, vertex_turns(x0, y0, y1), cfg.x0.epsilon + cfg.y0.epsilon + cfg.y1.epsilon);
    auto phi1 = pool_window(pool, vertex_turns(x1, y0, y1), cfg.x1.epsilon + cfg.y0.epsilon + cfg.y1.epsilon);
    rec.statistics["candidates"] = {
        {"r_x0y0", r00.size()}, {"r_x0y1", r01.size()}, {"r_x1y0", r10.size()},
        {"phi_x0", phi0.size()}, {"phi_x1", phi1.size()},
    };
    std::vector<std::uint64_t> radix{r00.size(), r01.size(), r10.size(), phi0.size(), phi1.size()};
    bool sampled = false;
    auto indices = enumeration(radix, cfg.cap, cfg.seed, &sampled);

    std::uint64_t lambdas = 0, n00 = 0, n01 = 0, n10 = 0, n11 = 0;
    std::map<std::string, std::uint64_t> fourth{{"RATIONAL", 0}, {"IRRATIONAL", 0}, {"EXCEPTION", 0}, {"DEGENERATE", 0}};
    std::uint64_t dependent = 0;
    for (std::uint64_t idx : indices) {
        auto d = decode(idx, radix);
        if (phi0[d[3]] == phi1[d[4]]) {
            dependent++;
            continue;
        }
        lambdas++;
        QuadrupleInstance q{
            RationalCosine(r00[d[0]]), RationalCosine(r01[d[1]]), RationalCosine(r10[d[2]]), phi0[d[3]], phi1[d[4]],
            true};
        // Each measured pair is admissible exactly when its cosine sits on the 1/N grid.
        auto on_grid = [&](const RationalCosine &r) {
            return denominator(Rational(BigInt(big_n)) * (1 - r.value())) == 1;
        };
        n00 += on_grid(q.r_x0y0);
        n01 += on_grid(q.r_x0y1);
        n10 += on_grid(q.r_x1y0);
        Verdict v = quadruple_verdict(q);
        fourth[status_name(v.status)]++;
        n11 += admissible_fourth(v);
    }
    if (lambdas == 0) {
        throw NoCandidateError("census found no exact-setting quadruple inside the disks");
    }

    // Alice's x0 string is built from lambda and x alone, whichever y Bob picks.
    std::uint64_t dm00 = nearest_grid_m(r00.front(), big_n);
    std::uint64_t dm01 = nearest_grid_m(r01.front(), big_n);
    bool locality = bell_pair(0, dm00, cfg.params).b_a == bell_pair(0, dm01, cfg.params).b_a;

    rec.statistics["lambdas"] = lambdas;
    rec.statistics["skipped_dependent"] = dependent;
    rec.statistics["sampled"] = sampled;
    rec.statistics["counts"] = {{"00", n00}, {"01", n01}, {"10", n10}, {"11", n11}};
    rec.statistics["fourth_pair_verdicts"] = fourth;
    rec.verdicts["si_violated"] = n00 > 0 && n01 > 0 && n10 > 0 && n11 == 0;
    rec.verdicts["exception_flagged"] = fourth["EXCEPTION"] > 0;
    rec.verdicts["locality"] = locality;
    return rec;
}

ExperimentRecord si_census_triple(const SiTripleConfig &cfg) {
    const auto &[a, b, c] = cfg.disks;
    if (disks_overlap(a, b) || disks_overlap(b, c) || disks_overlap(a, c)) {
        throw ConfigError("census disks must be pairwise disjoint");
    }
    ExperimentRecord rec;
    rec.experiment = "si-census-triple";
    rec.seed = cfg.seed;
    rec.config = {
        {"params", {{"N", cfg.params.n()}, {"n_X", cfg.params.null_count()}}},
        {"disks", {disk_json(a), disk_json(b), disk_json(c)}},
        {"pool_max_den", cfg.pool_max_den},
        {"include_exceptions", cfg.include_exceptions},
        {"cap", cfg.cap},
    };
    Vec3 va = disk_centre(a), vb = disk_centre(b), vc = disk_centre(c);
    std::uint64_t big_n = cfg.params.n();
    auto rab = grid_cosines(dot(va, vb), a.epsilon + b.epsilon, big_n);
    auto rbc = grid_cosines(dot(vb, vc), b.epsilon + c.epsilon, big_n);
    auto phis = pool_window(
        vertex_angle_pool(cfg.pool_max_den, cfg.include_exceptions), vertex_turns(vb, va, vc),
        a.epsilon + b.epsilon + c.epsilon);
    rec.statistics["candidates"] = {{"r_ab", rab.size()}, {"r_bc", rbc.size()}, {"phi_b", phis.size()}};
    std::vector<std::uint64_t> radix{rab.size(), rbc.size(), phis.size()};
    bool sampled = false;
    auto indices = enumeration(radix, cfg.cap, cfg.seed, &sampled);
    if (indices.empty()) {
        throw NoCandidateError("census found no exact-setting triple inside the disks");
    }
    std::uint64_t n_ab = 0, n_bc = 0, n_ac = 0;
    std::map<std::string, std::uint64_t> third{{"RATIONAL", 0}, {"IRRATIONAL", 0}, {"EXCEPTION", 0}, {"DEGENERATE", 0}};
    for (std::uint64_t idx : indices) {
        auto d = decode(idx, radix);
        TriangleInstance t{RationalCosine(rab[d[0]]), RationalCosine(rbc[d[1]]), phis[d[2]]};
        n_ab++;
        n_bc++;
        Verdict v = triangle_verdict(t);
        third[status_name(v.status)]++;
        n_ac += v.value.has_value();
    }
    rec.statistics["lambdas"] = indices.size();
    rec.statistics["sampled"] = sampled;
    rec.statistics["counts"] = {{"ab", n_ab}, {"bc", n_bc}, {"ac", n_ac}};
    rec.statistics["third_pair_verdicts"] = third;
    rec.verdicts["si_violated"] = n_ab > 0 && n_bc > 0 && n_ac == 0;
    rec.verdicts["exception_flagged"] = third["EXCEPTION"] > 0;
    return rec;
}

}  // namespace bitensemble
