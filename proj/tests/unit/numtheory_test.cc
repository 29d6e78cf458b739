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

#include <numeric>

#include "bitensemble/errors.h"
#include "bitensemble/numtheory.h"

using namespace bitensemble;

namespace {

Verdict tri(const char *a, const char *b, std::int64_t num, std::int64_t den) {
    return triangle_verdict(
        {RationalCosine(parse_rational(a)), RationalCosine(parse_rational(b)), RationalAngle::from_fraction(num, den)});
}

}  // namespace

TEST(RationalAngle, NormalizesIntoUnitInterval) {
    EXPECT_EQ(RationalAngle::from_fraction(7, 5).turns(), Rational(2, 5));
    EXPECT_EQ(RationalAngle::from_fraction(-1, 4).turns(), Rational(3, 4));
    EXPECT_EQ(RationalAngle::from_fraction(3, 4).doubled().turns(), Rational(1, 2));
    EXPECT_THROW(RationalAngle::from_fraction(1, 0), DomainError);
}

TEST(RationalCosine, RejectsOutOfRange) {
    EXPECT_NO_THROW(RationalCosine(Rational(-1)));
    EXPECT_THROW(RationalCosine(Rational(5, 4)), DomainError);
}

TEST(Niven, ExactlyTheFiveDenominators) {
    const std::map<std::int64_t, Rational> expected{{1, 1}, {2, -1}, {3, Rational(-1, 2)}, {4, 0}, {6, Rational(1, 2)}};
    for (std::int64_t d = 1; d <= 60; d++) {
        for (std::int64_t n = 0; n < d; n++) {
            if (std::gcd(n, d) != 1) {
                continue;
            }
            Verdict v = niven_classify(RationalAngle::from_fraction(n, d));
            auto it = expected.find(d);
            if (it == expected.end()) {
                EXPECT_EQ(v.status, VerdictStatus::Irrational) << n << "/" << d;
                EXPECT_FALSE(v.value.has_value());
            } else {
                ASSERT_EQ(v.status, VerdictStatus::Rational) << n << "/" << d;
                EXPECT_EQ(*v.value, it->second);
            }
        }
    }
}

TEST(Niven, ExceptionCosines) {
    for (const char *c : {"0", "1/2", "-1/2", "1", "-1"}) {
        EXPECT_TRUE(cosine_is_exception(RationalCosine(parse_rational(c)))) << c;
    }
    EXPECT_FALSE(cosine_is_exception(RationalCosine(Rational(1, 3))));
}

TEST(Triangle, GenericIsIrrational) {
    EXPECT_EQ(tri("1/2", "1/3", 1, 5).status, VerdictStatus::Irrational);
    EXPECT_EQ(tri("0", "0", 1, 8).status, VerdictStatus::Irrational);
}

TEST(Triangle, NivenVertexGivesTaggedValue) {
    // cos(ac) = ab + sqrt((1-a^2)(1-b^2)) cos(phi); phi = 1/4 turn kills the second term.
    Verdict v = tri("1/2", "1/3", 1, 4);
    EXPECT_EQ(v.status, VerdictStatus::Exception);
    ASSERT_TRUE(v.value);
    EXPECT_EQ(*v.value, Rational(1, 6));
    EXPECT_EQ(v.exception.value_or(""), "phi_b denominator 4");
}

TEST(Triangle, NivenVertexWithIrrationalSide) {
    Verdict v = tri("1/2", "1/3", 1, 6);
    EXPECT_EQ(v.status, VerdictStatus::Exception);
    EXPECT_FALSE(v.value.has_value());
}

TEST(Triangle, EighthTurnCanStillBeRational) {
    // a = 0, b = 1/3: S^2 = (8/9)(1/2) = 4/9, and cos(3/8 turn) < 0.
    Verdict v = tri("0", "1/3", 1, 8);
    EXPECT_EQ(v.status, VerdictStatus::Exception);
    EXPECT_EQ(*v.value, Rational(2, 3));
    EXPECT_EQ(*tri("0", "1/3", 3, 8).value, Rational(-2, 3));
}

TEST(Triangle, Degenerate) {
    EXPECT_EQ(tri("1", "1/3", 1, 5).status, VerdictStatus::Degenerate);
    EXPECT_EQ(tri("1/2", "1/3", 1, 2).status, VerdictStatus::Degenerate);
    EXPECT_EQ(tri("1/2", "1/3", 0, 1).status, VerdictStatus::Degenerate);
}

TEST(Quadruple, Verdicts) {
    auto q = [](std::int64_t n0, std::int64_t d0, std::int64_t n1, std::int64_t d1, bool independent = true) {
        return quadruple_verdict({RationalCosine(Rational(1, 2)), RationalCosine(Rational(1, 3)),
                                  RationalCosine(Rational(1, 4)), RationalAngle::from_fraction(n0, d0),
                                  RationalAngle::from_fraction(n1, d1), independent});
    };
    EXPECT_EQ(q(1, 5, 2, 7).status, VerdictStatus::Irrational);
    EXPECT_EQ(q(1, 5, 1, 5).status, VerdictStatus::Degenerate);
    EXPECT_EQ(q(1, 5, 2, 7, false).status, VerdictStatus::Degenerate);
    Verdict e = q(1, 8, 2, 7);
    EXPECT_EQ(e.status, VerdictStatus::Exception);
    EXPECT_EQ(e.exception.value_or(""), "phi_x0 denominator 8");
}

TEST(RationalReconstruct, FindsSmallFractionsAndRejectsIrrationals) {
    HighPrecision third = HighPrecision(1) / 3;
    EXPECT_EQ(rational_reconstruct(third, BigInt(1000)), Rational(1, 3));
    EXPECT_EQ(rational_reconstruct(HighPrecision(-7) / 11, BigInt(1000)), Rational(-7, 11));
    EXPECT_FALSE(rational_reconstruct(boost::multiprecision::sqrt(HighPrecision(2)), BigInt(1000000000)).has_value());
}

TEST(RationalReconstruct, PrecisionContract) {
    HighPrecision x = HighPrecision(1) / 7;
    EXPECT_THROW(rational_reconstruct(x, BigInt(1000), 80), PrecisionError);
    EXPECT_THROW(rational_reconstruct(x, BigInt("1000000000000000000000"), 40), PrecisionError);
    EXPECT_THROW(rational_reconstruct(x, BigInt(0)), DomainError);
}

TEST(VertexPool, SortedReducedAndFiltered) {
    auto pool = vertex_angle_pool(12);
    ASSERT_FALSE(pool.empty());
    for (std::size_t i = 0; i < pool.size(); i++) {
        auto d = pool[i].denominator();
        EXPECT_TRUE(d != 3 && d != 4 && d != 6 && d != 8 && d != 12);
        EXPECT_GT(pool[i].turns(), 0);
        if (i > 0) {
            EXPECT_LT(pool[i - 1].turns(), pool[i].turns());
        }
    }
    auto with = vertex_angle_pool(12, true);
    EXPECT_GT(with.size(), pool.size());
}

TEST(StatusName, Spelling) {
    EXPECT_EQ(status_name(VerdictStatus::Rational), "RATIONAL");
    EXPECT_EQ(status_name(VerdictStatus::Degenerate), "DEGENERATE");
}
