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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "bitensemble/bitcore.h"
#include "bitensemble/numtheory.h"
#include "bitensemble/record.h"
#include "bitensemble/states.h"

namespace bitensemble {

// ---- nominal geometry ------------------------------------------------------------------

struct Vec3 {
    double x, y, z;
};

/// Unit vector of a disk centre: polar cosine cos_center, azimuth turn_center.
Vec3 disk_centre(const EpsilonDisk &d);
double dot(const Vec3 &a, const Vec3 &b);
/// Internal angle at `p` between the great circles towards `q` and `r`, in turns within [0, 1/2].
double vertex_turns(const Vec3 &p, const Vec3 &q, const Vec3 &r);
/// True if the two rational boxes share a point.
bool disks_overlap(const EpsilonDisk &a, const EpsilonDisk &b);

/// Grid cosines 1 - k/N within [centre - width, centre + width], strictly inside (-1, 1).
std::vector<Rational> grid_cosines(double centre, const Rational &width, std::uint64_t quarter_length);
/// Pool angles inside (0, 1/2) within `width` turns of `centre`.
std::vector<RationalAngle> pool_window(const std::vector<RationalAngle> &pool, double centre, const Rational &width);

// ---- Mach-Zehnder ------------------------------------------------------------------------

enum class MzMode { InterferenceFirst, WhichWayFirst };

struct MzConfig {
    EnsembleParams params{100};
    RationalAngle nominal_phi;
    Rational epsilon{1, 50};
    MzMode mode = MzMode::InterferenceFirst;
    /// Skips sampling; must lie on the lattice of the chosen mode.
    std::optional<RationalAngle> exact_phi;
    /// Sampling keeps Niven-exception settings only when set.
    bool allow_exceptions = false;
    std::uint64_t seed = 0;
};

ExperimentRecord mz_complementarity(const MzConfig &cfg);

// ---- sequential Stern-Gerlach ------------------------------------------------------------

struct SgConfig {
    EnsembleParams params{100};
    std::array<EpsilonDisk, 3> disks;
    std::uint64_t pool_max_den = 36;
    bool include_exceptions = false;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

SgConfig default_sg_config();
ExperimentRecord sg_noncommutativity(const SgConfig &cfg);

// ---- uncertainty -------------------------------------------------------------------------

struct UncertaintyResult {
    Rational mean_z;
    double delta_x;
    double delta_y;
    bool holds;
    Verdict contextuality;
};

/// Mean along z from the exact bit string; spreads along x and y at nominal geometry.
UncertaintyResult uncertainty_check(const SkeletonPoint &q);
ExperimentRecord uncertainty_harness(const SkeletonPoint &q);

// ---- CHSH --------------------------------------------------------------------------------

struct ChshConfig {
    EnsembleParams params{1000};
    RationalAngle alpha0 = RationalAngle::from_fraction(0, 1);
    RationalAngle alpha1 = RationalAngle::from_fraction(1, 4);
    RationalAngle beta0 = RationalAngle::from_fraction(1, 8);
    RationalAngle beta1 = RationalAngle::from_fraction(7, 8);
    std::uint64_t seed = 0;
};

struct ChshResult {
    /// E[x][y] = correlation(B_a, B_b) for Alice setting x and Bob setting y.
    std::array<std::array<Rational, 2>, 2> e;
    std::array<std::array<std::uint64_t, 2>, 2> delta_m;
    std::array<std::array<double, 2>, 2> cos_nominal;
    Rational s;
    double s_cont;
};

ChshResult chsh_compute(const ChshConfig &cfg);
ExperimentRecord chsh_run(const ChshConfig &cfg);

// ---- statistical-independence census ----------------------------------------------------

struct SiCensusConfig {
    EnsembleParams params{200};
    EpsilonDisk x0, x1, y0, y1;
    std::uint64_t pool_max_den = 36;
    bool include_exceptions = false;
    std::uint64_t cap = 10000;
    std::uint64_t seed = 0;
};

struct SiTripleConfig {
    EnsembleParams params{200};
    std::array<EpsilonDisk, 3> disks;
    std::uint64_t pool_max_den = 36;
    bool include_exceptions = false;
    std::uint64_t cap = 10000;
    std::uint64_t seed = 0;
};

SiCensusConfig default_si_config();
SiTripleConfig default_si_triple_config();
ExperimentRecord si_census(const SiCensusConfig &cfg);
ExperimentRecord si_census_triple(const SiTripleConfig &cfg);

/// `count` distinct indices from [0, total), ascending (Floyd's algorithm).
std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count, std::uint64_t seed);

// ---- GHZ ---------------------------------------------------------------------------------

/// A linear-polarisation angle, or the rational cosine of the doubled angle.
using GhzSpec = std::variant<RationalAngle, RationalCosine>;

ExperimentRecord ghz_conflict(const GhzSpec &spec);

// ---- scale -------------------------------------------------------------------------------

/// Planck mass in kilograms.
inline constexpr double kPlanckMassKg = 2.176434e-8;

struct ScaleInput {
    /// E / E_Planck; the quarter length estimate is its reciprocal.
    std::optional<double> energy_ratio;
    std::optional<double> mass_kg;
    std::optional<std::string> preset;
    /// Largest admissible string length L (exact); 10^62 when unset.
    std::optional<BigInt> max_length;
    /// Quarter length used for K_max.
    BigInt kmax_n = 1;
};

/// max{K >= 1 : 2^(K+1) N <= L}, or 0 when even K = 1 does not fit.
std::uint64_t k_max(const BigInt &max_length, const BigInt &quarter_length);
/// Parses "1e62", "5E3", "12345" and similar into an exact integer.
BigInt parse_scientific_integer(const std::string &text);

ExperimentRecord scale_estimates(const ScaleInput &input);

}  // namespace bitensemble
