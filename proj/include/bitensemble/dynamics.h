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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bitensemble/bitcore.h"

namespace bitensemble {

struct UnitaryStep {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    bool operator==(const UnitaryStep &) const = default;
};

/// Steps applied left to right, each s -> cyc_shift(interp_i1(s, m), n).
struct UnitaryProgram {
    std::vector<UnitaryStep> steps;

    /// JSON array of [m, n] pairs.
    nlohmann::json to_json() const;
    static UnitaryProgram from_json(const nlohmann::json &j);
    UnitaryProgram then(const UnitaryProgram &next) const;
};

BitString evolve(const UnitaryProgram &program, const BitString &start);
/// Undoes `program`: steps in reverse, each a shift by -n then the inverse interpolant.
BitString invert(const UnitaryProgram &program, const BitString &end);

struct ClusterOutcome {
    std::uint64_t seed = 0;
    /// +1, -1 or 0 (null) per position of the disordered string.
    std::vector<std::int8_t> labels;
    /// disordered[i] = input[permutation[i]].
    std::vector<std::uint32_t> permutation;
    BitString disordered;
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t null = 0;

    /// FNV-1a 64 over the permutation as little-endian u32, in hex.
    std::string digest() const;
    nlohmann::json to_json() const;
};

/// Measurement as loss of ordering: a seeded uniform shuffle, then clustering by symbol.
ClusterOutcome measure_cluster(const BitString &s, std::uint64_t seed);

/// (m, n) with s == cyc_shift(interp_i1(ones, m), n), smallest n for that m; nullopt otherwise.
std::optional<std::pair<std::uint64_t, std::uint64_t>> is_unitary_image(const BitString &s);

struct PAdicLabel {
    std::uint64_t base;
    std::vector<std::uint64_t> digits;

    PAdicLabel(std::uint64_t base, std::vector<std::uint64_t> digits);
    /// Base p = 4N + n_X; with `require_prime` a composite p is a DomainError.
    static PAdicLabel for_params(const EnsembleParams &params, std::vector<std::uint64_t> digits, bool require_prime = false);
};

struct PAdicDistance {
    std::uint64_t base;
    /// Length of the common prefix; nullopt when the labels are identical (distance 0).
    std::optional<std::size_t> k;

    double value() const;
    bool operator==(const PAdicDistance &) const = default;
};

PAdicDistance padic_distance(const PAdicLabel &u, const PAdicLabel &v);

}  // namespace bitensemble
