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

#include "bitensemble/dynamics.h"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "bitensemble/errors.h"
#include "bitensemble/rng.h"

namespace bitensemble {

nlohmann::json UnitaryProgram::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &s : steps) {
        out.push_back({s.m, s.n});
    }
    return out;
}

UnitaryProgram UnitaryProgram::from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw ParseError("program must be a JSON array of [m, n] pairs");
    }
    UnitaryProgram out;
    for (const auto &pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
            throw ParseError("program step must be [m, n] with nonnegative integers");
        }
        out.steps.push_back({pair[0].get<std::uint64_t>(), pair[1].get<std::uint64_t>()});
    }
    return out;
}

UnitaryProgram UnitaryProgram::then(const UnitaryProgram &next) const {
    UnitaryProgram out = *this;
    out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
    return out;
}

namespace {

void check_step(const UnitaryStep &step, const EnsembleParams &params) {
    if (step.m > 2 * params.n() || step.n >= params.period()) {
        throw DomainError(
            "step (" + std::to_string(step.m) + ", " + std::to_string(step.n) + ") out of range for N = " +
            std::to_string(params.n()));
    }
}

}  // namespace

BitString evolve(const UnitaryProgram &program, const BitString &start) {
    BitString s = start;
    for (const auto &step : program.steps) {
        check_step(step, s.params());
        s = cyc_shift(interp_i1(s, step.m), static_cast<std::int64_t>(step.n));
    }
    return s;
}

BitString invert(const UnitaryProgram &program, const BitString &end) {
    BitString s = end;
    for (auto it = program.steps.rbegin(); it != program.steps.rend(); ++it) {
        check_step(*it, s.params());
        s = interp_i1_inverse(cyc_shift(s, -static_cast<std::int64_t>(it->n)), it->m);
    }
    return s;
}

std::string ClusterOutcome::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : permutation) {
        for (int k = 0; k < 4; k++) {
            h ^= (v >> (8 * k)) & 0xFF;
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json ClusterOutcome::to_json() const {
    return {
        {"seed", seed},
        {"permutation_digest", digest()},
        {"counts", {{"plus", plus}, {"minus", minus}, {"null", null}}},
    };
}

ClusterOutcome measure_cluster(const BitString &s, std::uint64_t seed) {
    std::vector<std::uint32_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0u);
    SeededSource rng(seed);
    for (std::size_t i = perm.size(); i > 1; i--) {
        std::swap(perm[i - 1], perm[rng.uniform(i)]);
    }
    BitString disordered = permute(s, perm);
    ClusterOutcome out{seed, {}, perm, disordered, 0, 0, 0};
    out.labels.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        switch (disordered.at(i)) {
            case Bit::Plus:
                out.labels.push_back(1);
                out.plus++;
                break;
            case Bit::Minus:
                out.labels.push_back(-1);
                out.minus++;
                break;
            case Bit::Null:
                out.labels.push_back(0);
                out.null++;
                break;
        }
    }
    return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> is_unitary_image(const BitString &s) {
    const EnsembleParams &params = s.params();
    // interp_i1(ones, m) holds exactly 2m minus signs and every shift preserves that.
    std::size_t minus = s.count(Bit::Minus);
    if (minus % 2 != 0 || minus / 2 > 2 * params.n() || s.count(Bit::Null) != params.null_count()) {
        return std::nullopt;
    }
    std::uint64_t m = minus / 2;
    BitString base = interp_i1(BitString::ones(params), m);
    for (std::uint64_t n = 0; n < params.period(); n++) {
        if (cyc_shift(base, static_cast<std::int64_t>(n)) == s) {
            return std::pair{m, n};
        }
    }
    return std::nullopt;
}

PAdicLabel::PAdicLabel(std::uint64_t base_, std::vector<std::uint64_t> digits_)
    : base(base_), digits(std::move(digits_)) {
    if (base < 2) {
        throw DomainError("p-adic base must be at least 2");
    }
    if (digits.empty()) {
        throw ShapeError("p-adic label needs at least one digit");
    }
    for (auto d : digits) {
        if (d >= base) {
            throw DomainError("p-adic digit " + std::to_string(d) + " not below base " + std::to_string(base));
        }
    }
}

PAdicLabel PAdicLabel::for_params(const EnsembleParams &params, std::vector<std::uint64_t> digits, bool require_prime) {
    if (require_prime && !is_prime(params.period())) {
        throw DomainError("p = " + std::to_string(params.period()) + " is not prime");
    }
    return PAdicLabel(params.period(), std::move(digits));
}

double PAdicDistance::value() const {
    if (!k) {
        return 0.0;
    }
    return std::pow(static_cast<double>(base), -static_cast<double>(*k));
}

PAdicDistance padic_distance(const PAdicLabel &u, const PAdicLabel &v) {
    if (u.base != v.base) {
        throw ShapeError("p-adic labels with different bases");
    }
    if (u.digits.size() != v.digits.size()) {
        throw ShapeError("p-adic labels with different lengths");
    }
    for (std::size_t k = 0; k < u.digits.size(); k++) {
        if (u.digits[k] != v.digits[k]) {
            return {u.base, k};
        }
    }
    return {u.base, std::nullopt};
}

}  // namespace bitensemble
