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
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bitensemble/bitcore.h"
#include "bitensemble/rational.h"
#include "bitensemble/rng.h"

namespace bitensemble {

/// Lattice point (m, n) of the skeleton: cos(theta) = 1 - m/N, phi = n/p turns.
class SkeletonPoint {
   public:
    SkeletonPoint(std::uint64_t m, std::uint64_t n, const EnsembleParams &params);

    std::uint64_t m() const {
        return m_;
    }
    std::uint64_t n() const {
        return n_;
    }
    const EnsembleParams &params() const {
        return params_;
    }
    Rational cosine() const;
    Rational turns() const;
    /// sin^2(theta/2) = m / 2N.
    Rational minus_fraction() const;

    bool operator==(const SkeletonPoint &other) const {
        return m_ == other.m_ && n_ == other.n_ && params_ == other.params_;
    }

   private:
    std::uint64_t m_;
    std::uint64_t n_;
    EnsembleParams params_;
};

/// cyc_shift(interp_i1(ones, m), n).
BitString bloch_state(const SkeletonPoint &pt);

/// m = round(N(1 - c)) with ties to even, clamped to [0, 2N].
std::uint64_t nearest_grid_m(const Rational &cosine, std::uint64_t quarter_length);

struct MultiQubitState {
    int k = 0;
    EnsembleParams params{1};
    /// Rows top to bottom as displayed: leaves first, the root qubit's row last.
    std::vector<BitString> strings;
    /// Preorder parameter tree: root, then the left (K-1)-subtree, then the right one.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tree;

    std::uint64_t degrees_of_freedom() const {
        return 2 * tree.size();
    }

    /// Rows in order, each in the BitString binary format.
    std::vector<std::uint8_t> to_binary() const;
    nlohmann::json sidecar() const;
    static MultiQubitState from_binary(std::span<const std::uint8_t> data, const nlohmann::json &sidecar);
};

MultiQubitState kqubit_build(
    int k, const std::vector<std::pair<std::uint64_t, std::uint64_t>> &tree, const EnsembleParams &params);

struct BellPair {
    BitString b_a;
    BitString b_b;
    std::uint64_t m_a;
    std::uint64_t m_b;
};

/// B_a = interp(1, m_a) || interp(-1, m_a); B_b = interp(-1, m_b) || interp(1, m_b).
BellPair bell_pair(std::uint64_t m_a, std::uint64_t m_b, const EnsembleParams &params);

/// Exact rational box of nominal accuracy: |cos(theta) - cos_center| <= epsilon and
/// circular |turns - turn_center| <= epsilon.
struct EpsilonDisk {
    Rational cos_center;
    Rational turn_center;
    Rational epsilon;
};

/// Any lattice point in the box; cos(theta) is measured from `reference`.
struct RationalCosineWrt {
    std::string reference = "z";
};
/// Equatorial points (m = N) whose phase n/p lies in the turn band.
struct RationalAnglePhase {};

using SettingConstraint = std::variant<RationalCosineWrt, RationalAnglePhase>;

/// Integer m range [lo, hi] whose cosines lie in the disk's cosine window; empty if lo > hi.
std::pair<std::int64_t, std::int64_t> disk_m_range(const EpsilonDisk &disk, const EnsembleParams &params);
/// Phase indices n in [0, p) inside the disk's turn band, ascending.
std::vector<std::uint64_t> disk_n_values(const EpsilonDisk &disk, const EnsembleParams &params);

/// Uniform draw over the admissible lattice points; throws NoCandidateError if there are none.
SkeletonPoint sample_exact_setting(
    const EpsilonDisk &disk, const SettingConstraint &constraint, const EnsembleParams &params, SeededSource &rng);

}  // namespace bitensemble
