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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "bitensemble/rational.h"

namespace bitensemble {

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

/// An angle stored as a reduced fraction of a full turn, normalised into [0, 1).
class RationalAngle {
   public:
    RationalAngle() = default;
    explicit RationalAngle(const Rational &turns);
    static RationalAngle from_fraction(std::int64_t num, std::int64_t den);

    const Rational &turns() const {
        return turns_;
    }
    BigInt numerator() const;
    BigInt denominator() const;
    RationalAngle doubled() const;
    double radians() const;

    bool operator==(const RationalAngle &other) const {
        return turns_ == other.turns_;
    }
    auto operator<=>(const RationalAngle &other) const {
        return turns_ < other.turns_ ? std::strong_ordering::less
               : turns_ == other.turns_ ? std::strong_ordering::equal
                                        : std::strong_ordering::greater;
    }

   private:
    Rational turns_{0};
};

/// An exact rational in [-1, 1].
class RationalCosine {
   public:
    RationalCosine() = default;
    explicit RationalCosine(const Rational &value);

    const Rational &value() const {
        return value_;
    }
    bool operator==(const RationalCosine &other) const = default;

   private:
    Rational value_{1};
};

enum class VerdictStatus { Rational, Irrational, Exception, Degenerate };

std::string status_name(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Degenerate;
    /// Exact value; always present for RATIONAL, present for EXCEPTION when the value is rational.
    std::optional<Rational> value;
    /// Which Niven exception fired, or why the instance is degenerate.
    std::optional<std::string> exception;

    bool operator==(const Verdict &other) const = default;
};

struct TriangleInstance {
    RationalCosine r_ab;
    RationalCosine r_bc;
    RationalAngle phi_b;

    bool nondegenerate() const;
};

struct QuadrupleInstance {
    RationalCosine r_x0y0;
    RationalCosine r_x0y1;
    RationalCosine r_x1y0;
    RationalAngle phi_x0;
    RationalAngle phi_x1;
    bool independent = true;
};

/// RATIONAL(cos) iff the reduced denominator is 1, 2, 3, 4 or 6; IRRATIONAL otherwise.
Verdict niven_classify(const RationalAngle &a);

/// True iff r is one of 0, +-1/2, +-1.
bool cosine_is_exception(const RationalCosine &r);

/// Decides rationality of cos(theta_ac) from rational side cosines and the vertex angle at b.
Verdict triangle_verdict(const TriangleInstance &t);

/// Decides rationality of cos(theta_x1y1) given the three other side cosines and both vertex angles.
Verdict quadruple_verdict(const QuadrupleInstance &q);

/// Continued-fraction search for p/q with q <= max_den and |x - p/q| < 10^-(precision_digits - 5).
///
/// Throws PrecisionError when precision_digits < 2*log10(max_den) + 10 or exceeds the
/// precision HighPrecision actually carries.
std::optional<Rational> rational_reconstruct(const HighPrecision &x, const BigInt &max_den, int precision_digits = 50);

/// Reduced turns n/d in (0, 1), d <= max_den, sorted ascending. Without exceptions, the
/// denominators whose doubled angle has a rational cosine (1, 2, 3, 4, 6, 8, 12) are skipped;
/// with exceptions only the degenerate 1 and 2 are.
std::vector<RationalAngle> vertex_angle_pool(std::uint64_t max_den, bool include_exceptions = false);

}  // namespace bitensemble
