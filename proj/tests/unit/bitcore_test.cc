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

#include "bitensemble/bitcore.h"
#include "bitensemble/errors.h"
#include "support/oracle.h"

using namespace bitensemble;

namespace {

oracle::Str random_with_nulls(std::size_t n, std::size_t nx, std::mt19937_64 &gen) {
    return oracle::random_string(n, nx, gen);
}

Rational fraction(const oracle::Fraction &f) {
    return Rational(f.num, f.den);
}

}  // namespace

TEST(EnsembleParams, PeriodCountsNulls) {
    EnsembleParams p(5, 3);
    EXPECT_EQ(p.period(), 23u);
    EXPECT_THROW(EnsembleParams(0), DomainError);
    EXPECT_THROW(EnsembleParams(4, 0, true), DomainError);
    EXPECT_NO_THROW(EnsembleParams(4, 1, true));
}

TEST(BitString, OnesHasNullTail) {
    BitString s = BitString::ones(EnsembleParams(2, 3));
    EXPECT_EQ(s.str(), "++++++++xxx");
    EXPECT_EQ(s.count(Bit::Null), 3u);
    EXPECT_FALSE(s.has_null_in_prefix());
}

TEST(BitString, FromSymbolsRoundTripsAndRejectsJunk) {
    EnsembleParams p(1, 1);
    BitString s = BitString::from_symbols("+-x+X", p);
    EXPECT_EQ(s.str(), "+-x+x");
    EXPECT_TRUE(s.has_null_in_prefix());
    EXPECT_THROW(BitString::from_symbols("+-?+x", p), ParseError);
    EXPECT_THROW(BitString::from_symbols("+-+", p), ShapeError);
}

TEST(BitString, NullRequiresNullBudget) {
    std::vector<Bit> bits{Bit::Plus, Bit::Null, Bit::Minus, Bit::Plus};
    EXPECT_THROW(BitString::from_bits(bits, EnsembleParams(1)), UnsupportedSymbolError);
}

TEST(BitString, RleRoundTrip) {
    std::mt19937_64 gen(3);
    for (int i = 0; i < 50; i++) {
        std::size_t n = 1 + gen() % 40, nx = gen() % 5;
        BitString s = oracle::to_library(random_with_nulls(n, nx, gen), EnsembleParams(n, nx));
        EXPECT_EQ(BitString::from_rle(s.to_rle()), s);
    }
    EXPECT_EQ(BitString::from_rle("2,1:3+2-3+x").str(), "+++--+++x");
    EXPECT_THROW(BitString::from_rle("2,1:3+2-3+"), ShapeError);
    EXPECT_THROW(BitString::from_rle("2,1:3+2-3+x+"), ParseError);
}

TEST(BitString, BinaryRoundTripAndValidation) {
    std::mt19937_64 gen(4);
    for (std::size_t n : {1, 15, 16, 17, 100}) {
        BitString s = oracle::to_library(random_with_nulls(n, 3, gen), EnsembleParams(n, 3));
        auto bytes = s.to_binary();
        std::size_t used = 0;
        EXPECT_EQ(BitString::from_binary(bytes, &used), s);
        EXPECT_EQ(used, bytes.size());
        auto truncated = bytes;
        truncated.pop_back();
        EXPECT_THROW(BitString::from_binary(truncated), ParseError);
        auto bad_magic = bytes;
        bad_magic[0] ^= 1;
        EXPECT_THROW(BitString::from_binary(bad_magic), ParseError);
    }
    // A set padding bit in the value plane is not a canonical encoding.
    auto bytes = BitString::ones(EnsembleParams(1)).to_binary();
    bytes[8] |= 0x80;
    EXPECT_THROW(BitString::from_binary(bytes), ParseError);
}

TEST(Quaternion, MatchesReference) {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + gen() % 90, nx = gen() % 4;
        oracle::Str s = random_with_nulls(n, nx, gen);
        BitString b = oracle::to_library(s, EnsembleParams(n, nx));
        EXPECT_EQ(oracle::from_library(quaternion_apply(Quaternion::I1, b)), oracle::i1(s, n));
        EXPECT_EQ(oracle::from_library(quaternion_apply(Quaternion::I2, b)), oracle::i2(s, n));
        EXPECT_EQ(oracle::from_library(quaternion_apply(Quaternion::I3, b)), oracle::i3(s, n));
    }
}

TEST(Quaternion, ProductSigns) {
    std::mt19937_64 gen(6);
    BitString s = oracle::to_library(oracle::random_string(7, 0, gen), EnsembleParams(7));
    BitString i3 = quaternion_apply(Quaternion::I3, s);
    EXPECT_EQ(quaternion_apply(Quaternion::I1, quaternion_apply(Quaternion::I2, s)), i3);
    EXPECT_EQ(quaternion_apply(Quaternion::I2, quaternion_apply(Quaternion::I1, s)), -i3);
}

TEST(PartialConcat, Endpoints) {
    std::vector<Bit> b{Bit::Plus, Bit::Plus, Bit::Plus};
    std::vector<Bit> c{Bit::Minus, Bit::Minus, Bit::Minus};
    EXPECT_EQ(partial_concat(b, c, 0), b);
    EXPECT_EQ(partial_concat(b, c, 3), c);
    EXPECT_EQ(partial_concat(b, c, 1), (Quarter{Bit::Plus, Bit::Plus, Bit::Minus}));
    EXPECT_THROW(partial_concat(b, c, 4), DomainError);
}

TEST(Interpolant, MatchesReferenceAndInverts) {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 300; i++) {
        std::size_t n = 1 + gen() % 130, nx = gen() % 3;
        oracle::Str s = random_with_nulls(n, nx, gen);
        BitString b = oracle::to_library(s, EnsembleParams(n, nx));
        std::uint64_t m = gen() % (2 * n + 1);
        BitString t = interp_i1(b, m);
        EXPECT_EQ(oracle::from_library(t), oracle::interp(s, n, m)) << "N=" << n << " m=" << m;
        EXPECT_EQ(interp_i1_inverse(t, m), b);
    }
}

TEST(Interpolant, Landmarks) {
    std::mt19937_64 gen(8);
    BitString s = oracle::to_library(oracle::random_string(9, 0, gen), EnsembleParams(9));
    EXPECT_EQ(interp_i1(s, 0), s);
    EXPECT_EQ(interp_i1(s, 9), quaternion_apply(Quaternion::I1, s));
    EXPECT_EQ(interp_i1(s, 18), -s);
    EXPECT_THROW(interp_i1(s, 19), DomainError);
}

TEST(CycShift, MatchesReferenceForAnyIntegerShift) {
    std::mt19937_64 gen(9);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + gen() % 70, nx = gen() % 5;
        oracle::Str s = random_with_nulls(n, nx, gen);
        BitString b = oracle::to_library(s, EnsembleParams(n, nx));
        auto shift = static_cast<std::int64_t>(gen() % 1000) - 500;
        EXPECT_EQ(oracle::from_library(cyc_shift(b, shift)), oracle::rotate(s, shift));
    }
}

TEST(Correlation, MatchesReferenceWithNulls) {
    std::mt19937_64 gen(10);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + gen() % 100, nx = gen() % 4;
        EnsembleParams p(n, nx);
        oracle::Str x = random_with_nulls(n, nx, gen);
        oracle::Str y = oracle::rotate(random_with_nulls(n, nx, gen), static_cast<std::int64_t>(gen() % 7));
        EXPECT_EQ(correlation(oracle::to_library(x, p), oracle::to_library(y, p)),
                  fraction(oracle::correlation(x, y)));
    }
}

TEST(Correlation, UndefinedWithoutValidPositions) {
    EnsembleParams p(1, 4);
    BitString a = BitString::from_symbols("xxxx++++", p);
    BitString b = BitString::from_symbols("++++xxxx", p);
    EXPECT_THROW(correlation(a, b), UndefinedStatisticError);
    EXPECT_THROW(correlation(BitString::ones(EnsembleParams(2)), BitString::ones(EnsembleParams(3))), ShapeError);
}

TEST(Concat, ParamsAdd) {
    BitString s = concat(BitString::ones(EnsembleParams(2, 1)), -BitString::ones(EnsembleParams(1, 2)));
    EXPECT_EQ(s.params(), EnsembleParams(3, 3));
    EXPECT_EQ(s.str(), "++++++++x----xx");
}

TEST(Permute, MovesSymbolsAndValidates) {
    BitString s = BitString::from_symbols("+-+-", EnsembleParams(1));
    std::vector<std::uint32_t> perm{1, 3, 0, 2};
    EXPECT_EQ(permute(s, perm).str(), "--++");
    std::vector<std::uint32_t> bad{0, 0, 1, 2};
    EXPECT_THROW(permute(s, bad), DomainError);
}

TEST(EnsembleStats, MeanAndSpread) {
    EnsembleStats st = ensemble_stats(BitString::from_symbols("+--+---x", EnsembleParams(1, 4)));
    EXPECT_EQ(st.minus_fraction, Rational(5, 7));
    EXPECT_EQ(st.mean, Rational(-3, 7));
    EXPECT_NEAR(st.stddev, std::sqrt(1.0 - 9.0 / 49.0), 1e-15);
}
