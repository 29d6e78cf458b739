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

#include <random>
#include <set>

#include "bitensemble/dynamics.h"
#include "bitensemble/errors.h"
#include "bitensemble/rng.h"
#include "bitensemble/states.h"
#include "support/oracle.h"

using namespace bitensemble;

TEST(Program, JsonRoundTrip) {
    UnitaryProgram p{{{1, 2}, {7, 3}}};
    EXPECT_EQ(p.to_json().dump(), "[[1,2],[7,3]]");
    EXPECT_EQ(UnitaryProgram::from_json(p.to_json()).steps, p.steps);
    EXPECT_THROW(UnitaryProgram::from_json(nlohmann::json::parse("[[1]]")), ParseError);
    EXPECT_THROW(UnitaryProgram::from_json(nlohmann::json::parse("{\"m\": 1}")), ParseError);
    EXPECT_THROW(UnitaryProgram::from_json(nlohmann::json::parse("[[-1, 0]]")), ParseError);
}

TEST(Program, ThenConcatenates) {
    UnitaryProgram a{{{1, 0}}}, b{{{2, 1}}};
    EXPECT_EQ(a.then(b).steps, (std::vector<UnitaryStep>{{1, 0}, {2, 1}}));
}

TEST(Evolve, MatchesReferenceAndInverts) {
    std::mt19937_64 gen(21);
    for (int i = 0; i < 100; i++) {
        std::uint64_t n = 1 + gen() % 20;
        EnsembleParams params(n);
        oracle::Str start = oracle::random_string(n, 0, gen);
        UnitaryProgram prog;
        oracle::Str ref = start;
        for (int j = 0; j < 5; j++) {
            UnitaryStep st{gen() % (2 * n + 1), gen() % params.period()};
            prog.steps.push_back(st);
            ref = oracle::rotate(oracle::interp(ref, n, st.m), static_cast<std::int64_t>(st.n));
        }
        BitString s = oracle::to_library(start, params);
        BitString end = evolve(prog, s);
        EXPECT_EQ(oracle::from_library(end), ref);
        EXPECT_EQ(invert(prog, end), s);
    }
}

TEST(Evolve, RejectsOutOfRangeSteps) {
    UnitaryProgram bad{{{9, 0}}};
    EXPECT_THROW(evolve(bad, BitString::ones(EnsembleParams(4))), DomainError);
    // A shift carries a null into the structured prefix, where the interpolant is undefined.
    UnitaryProgram rotated{{{0, 1}, {1, 0}}};
    EXPECT_THROW(evolve(rotated, BitString::ones(EnsembleParams(2, 1))), UnsupportedSymbolError);
}

TEST(Measure, SeededAndCountPreserving) {
    BitString s = bloch_state(SkeletonPoint(5, 3, EnsembleParams(6, 2)));
    ClusterOutcome a = measure_cluster(s, 77), b = measure_cluster(s, 77), c = measure_cluster(s, 78);
    EXPECT_EQ(a.permutation, b.permutation);
    EXPECT_EQ(a.digest(), b.digest());
    EXPECT_NE(a.digest(), c.digest());
    EXPECT_EQ(a.plus, s.count(Bit::Plus));
    EXPECT_EQ(a.minus, s.count(Bit::Minus));
    EXPECT_EQ(a.null, 2u);
    std::set<std::uint32_t> seen(a.permutation.begin(), a.permutation.end());
    EXPECT_EQ(seen.size(), s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        EXPECT_EQ(a.disordered.at(i), s.at(a.permutation[i]));
    }
}

TEST(UnitaryImage, RecognisesEverySkeletonPoint) {
    EnsembleParams p(3, 1);
    for (std::uint64_t m = 0; m <= 6; m++) {
        for (std::uint64_t k = 0; k < p.period(); k++) {
            auto img = is_unitary_image(bloch_state(SkeletonPoint(m, k, p)));
            ASSERT_TRUE(img.has_value());
            EXPECT_EQ(img->first, m);
            EXPECT_EQ(bloch_state(SkeletonPoint(img->first, img->second, p)), bloch_state(SkeletonPoint(m, k, p)));
            EXPECT_LE(img->second, k);
        }
    }
    EXPECT_FALSE(is_unitary_image(BitString::from_symbols("+--+++++", EnsembleParams(2))).has_value());
}

TEST(PAdic, DistanceFromCommonPrefix) {
    PAdicLabel u(5, {1, 2, 3}), v(5, {1, 2, 4}), w(5, {0, 2, 3});
    EXPECT_EQ(padic_distance(u, v).k, 2u);
    EXPECT_DOUBLE_EQ(padic_distance(u, v).value(), 1.0 / 25);
    EXPECT_DOUBLE_EQ(padic_distance(u, w).value(), 1.0);
    EXPECT_DOUBLE_EQ(padic_distance(u, u).value(), 0.0);
    EXPECT_FALSE(padic_distance(u, u).k.has_value());
}

TEST(PAdic, Validation) {
    EXPECT_THROW(PAdicLabel(1, {0}), DomainError);
    EXPECT_THROW(PAdicLabel(5, {}), ShapeError);
    EXPECT_THROW(PAdicLabel(5, {5}), DomainError);
    EXPECT_THROW(padic_distance(PAdicLabel(5, {1}), PAdicLabel(7, {1})), ShapeError);
    EXPECT_THROW(padic_distance(PAdicLabel(5, {1}), PAdicLabel(5, {1, 2})), ShapeError);
    EXPECT_EQ(PAdicLabel::for_params(EnsembleParams(3, 1), {0}).base, 13u);
    EXPECT_THROW(PAdicLabel::for_params(EnsembleParams(3), {0}, true), DomainError);
}

TEST(Rng, DeriveSeedIsSplitmixSequence) {
    std::uint64_t state = 99;
    std::uint64_t first = splitmix64(state);
    std::uint64_t second = splitmix64(state);
    EXPECT_EQ(derive_seed(99, 0), first);
    EXPECT_EQ(derive_seed(99, 1), second);
    // Published first output of splitmix64 from state 0.
    std::uint64_t zero = 0;
    EXPECT_EQ(splitmix64(zero), 0xe220a8397b1dcdafULL);
}

TEST(Rng, UniformStaysInBounds) {
    SeededSource rng(3);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; i++) {
        hits[rng.uniform(7)]++;
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
    }
}
