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

#include <gtest/gtest.h>

#include "bitensemble/errors.h"
#include "bitensemble/rng.h"
#include "bitensemble/states.h"
#include "support/oracle.h"

using namespace bitensemble;

TEST(Skeleton, StatisticsLawOnEveryPoint) {
    for (std::uint64_t n : {1u, 3u, 8u}) {
        for (std::uint64_t nx : {0u, 1u, 3u}) {
            EnsembleParams p(n, nx);
            for (std::uint64_t m = 0; m <= 2 * n; m++) {
                for (std::uint64_t k = 0; k < p.period(); k++) {
                    SkeletonPoint pt(m, k, p);
                    BitString s = bloch_state(pt);
                    EXPECT_EQ(ensemble_stats(s).minus_fraction, pt.minus_fraction());
                    EXPECT_EQ(s.count(Bit::Null), nx);
                    auto ref = oracle::rotate(oracle::interp(oracle::ones(n, nx), n, m), static_cast<std::int64_t>(k));
                    EXPECT_EQ(oracle::from_library(s), ref);
                }
            }
        }
    }
}

TEST(Skeleton, RangeChecks) {
    EnsembleParams p(4);
    EXPECT_THROW(SkeletonPoint(9, 0, p), DomainError);
    EXPECT_THROW(SkeletonPoint(0, 16, p), DomainError);
    EXPECT_EQ(SkeletonPoint(2, 4, p).cosine(), Rational(1, 2));
    EXPECT_EQ(SkeletonPoint(2, 4, p).turns(), Rational(1, 4));
}

TEST(NearestGrid, RoundsHalfToEvenAndClamps) {
    EXPECT_EQ(nearest_grid_m(Rational(1, 2), 4), 2u);
    // 1 - c = 3/8 at N = 4 gives m = 1.5, which rounds to 2.
    EXPECT_EQ(nearest_grid_m(Rational(5, 8), 4), 2u);
    // 1 - c = 1/8 gives 0.5, which rounds to 0.
    EXPECT_EQ(nearest_grid_m(Rational(7, 8), 4), 0u);
    EXPECT_EQ(nearest_grid_m(Rational(-1), 4), 8u);
}

TEST(KQubit, ShapesAndRootRow) {
    EnsembleParams p(2);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tree{{1, 1}, {2, 0}, {3, 5}};
    MultiQubitState st = kqubit_build(2, tree, p);
    ASSERT_EQ(st.strings.size(), 2u);
    EXPECT_EQ(st.strings[0].size(), 16u);
    EXPECT_EQ(st.degrees_of_freedom(), 6u);
    BitString root = bloch_state(SkeletonPoint(1, 1, p));
    EXPECT_EQ(st.strings[1], concat(root, root));
    EXPECT_EQ(st.strings[0], concat(bloch_state(SkeletonPoint(2, 0, p)), bloch_state(SkeletonPoint(3, 5, p))));
    EXPECT_THROW(kqubit_build(2, {{0, 0}}, p), ShapeError);
    EXPECT_THROW(kqubit_build(0, {}, p), DomainError);
}

TEST(KQubit, DegreesOfFreedomFormula) {
    for (int k = 1; k <= 6; k++) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> tree((std::size_t{1} << k) - 1, {0, 0});
        MultiQubitState st = kqubit_build(k, tree, EnsembleParams(1));
        EXPECT_EQ(st.degrees_of_freedom(), 2 * ((std::uint64_t{1} << k) - 1));
        for (const auto &row : st.strings) {
            EXPECT_EQ(row.size(), (std::size_t{1} << (k + 1)));
        }
    }
}

TEST(KQubit, BinaryRoundTrip) {
    EnsembleParams p(3, 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tree{{1, 2}, {4, 0}, {6, 12}, {0, 3}, {5, 5}, {2, 2}, {3, 1}};
    MultiQubitState st = kqubit_build(3, tree, p);
    auto bytes = st.to_binary();
    MultiQubitState back = MultiQubitState::from_binary(bytes, st.sidecar());
    EXPECT_EQ(back.strings, st.strings);
    EXPECT_EQ(back.tree, st.tree);
    auto side = st.sidecar();
    side["tree"][0][0] = 2;
    EXPECT_THROW(MultiQubitState::from_binary(bytes, side), ParseError);
}

TEST(BellPair, BalancedStringsAndLaw) {
    EnsembleParams p(5);
    for (std::uint64_t ma = 0; ma <= 10; ma++) {
        for (std::uint64_t mb = 0; mb <= 10; mb++) {
            BellPair b = bell_pair(ma, mb, p);
            EXPECT_EQ(b.b_a.size(), 40u);
            EXPECT_EQ(b.b_a.count(Bit::Minus), 20u);
            EXPECT_EQ(b.b_b.count(Bit::Plus), 20u);
            std::uint64_t gap = ma > mb ? ma - mb : mb - ma;
            EXPECT_EQ(correlation(b.b_a, b.b_b), Rational(BigInt(gap), BigInt(5)) - 1);
        }
    }
    EXPECT_THROW(bell_pair(11, 0, p), DomainError);
}

TEST(Disk, MRangeAndWrappedPhases) {
    EnsembleParams p(10);
    EpsilonDisk d{Rational(1, 2), Rational(0), Rational(1, 10)};
    auto [lo, hi] = disk_m_range(d, p);
    EXPECT_EQ(lo, 4);
    EXPECT_EQ(hi, 6);
    // Turn band [-1/10, 1/10] on p = 40 wraps through 0.
    auto ns = disk_n_values(d, p);
    EXPECT_EQ(ns, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 36, 37, 38, 39}));
    EpsilonDisk wide{Rational(0), Rational(0), Rational(1, 2)};
    EXPECT_EQ(disk_n_values(wide, p).size(), 40u);
}

TEST(Disk, SampledSettingsStayInside) {
    EnsembleParams p(50);
    EpsilonDisk d{Rational(1, 5), Rational(3, 10), Rational(1, 50)};
    SeededSource rng(42);
    for (int i = 0; i < 100; i++) {
        SkeletonPoint pt = sample_exact_setting(d, RationalCosineWrt{}, p, rng);
        EXPECT_LE(abs(pt.cosine() - d.cos_center), d.epsilon);
        EXPECT_LE(abs(pt.turns() - d.turn_center), d.epsilon);
        SkeletonPoint eq = sample_exact_setting(d, RationalAnglePhase{}, p, rng);
        EXPECT_EQ(eq.m(), 50u);
    }
}

TEST(Disk, EmptyWindowHasNoCandidate) {
    EnsembleParams p(2);
    EpsilonDisk d{Rational(1, 4), Rational(1, 16), Rational(1, 100)};
    SeededSource rng(1);
    EXPECT_THROW(sample_exact_setting(d, RationalCosineWrt{}, p, rng), NoCandidateError);
}
