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

#include "bitensemble/numtheory.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "bitensemble/errors.h"

namespace bitensemble {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

RationalAngle::RationalAngle(const Rational &turns) {
    turns_ = turns - Rational(floor_of(turns));
}

RationalAngle RationalAngle::from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DomainError("angle with zero denominator");
    }
    return RationalAngle(Rational(num, den));
}

BigInt RationalAngle::numerator() const {
    return boost::multiprecision::numerator(turns_);
}

BigInt RationalAngle::denominator() const {
    return boost::multiprecision::denominator(turns_);
}

RationalAngle RationalAngle::doubled() const {
    return RationalAngle(turns_ * 2);
}

double RationalAngle::radians() const {
    return 2 * std::numbers::pi * to_double(turns_);
}

RationalCosine::RationalCosine(const Rational &value) : value_(value) {
    if (value < -1 || value > 1) {
        throw DomainError("cosine " + to_fraction_string(value) + " outside [-1, 1]");
    }
}

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Rational:
            return "RATIONAL";
        case VerdictStatus::Irrational:
            return "IRRATIONAL";
        case VerdictStatus::Exception:
            return "EXCEPTION";
        case VerdictStatus::Degenerate:
            return "DEGENERATE";
    }
    return "?";
}

namespace {

// cos(2 pi n/d) for the five denominators where it is rational.
std::optional<Rational> niven_cosine(const RationalAngle &a) {
    BigInt d = a.denominator();
    if (d == 1) {
        return Rational(1);
    }
    if (d == 2) {
        return Rational(-1);
    }
    if (d == 3) {
        return Rational(-1, 2);
    }
    if (d == 4) {
        return Rational(0);
    }
    if (d == 6) {
        return Rational(1, 2);
    }
    return std::nullopt;
}

bool in_list(const BigInt &d, std::initializer_list<int> list) {
    for (int v : list) {
        if (d == v) {
            return true;
        }
    }
    return false;
}

Verdict degenerate(std::string why) {
    return Verdict{VerdictStatus::Degenerate, std::nullopt, std::move(why)};
}

bool endpoint(const RationalAngle &a) {
    return a.turns() == 0 || a.turns() == Rational(1, 2);
}

bool positive_cosine(const RationalAngle &a) {
    return a.turns() < Rational(1, 4) || a.turns() > Rational(3, 4);
}

std::string denominator_tag(const char *name, const RationalAngle &a) {
    return std::string(name) + " denominator " + a.denominator().str();
}

}  // namespace

bool TriangleInstance::nondegenerate() const {
    return abs(r_ab.value()) < 1 && abs(r_bc.value()) < 1 && !endpoint(phi_b);
}

Verdict niven_classify(const RationalAngle &a) {
    if (auto c = niven_cosine(a)) {
        return Verdict{VerdictStatus::Rational, *c, std::nullopt};
    }
    return Verdict{VerdictStatus::Irrational, std::nullopt, std::nullopt};
}

bool cosine_is_exception(const RationalCosine &r) {
    const Rational &v = r.value();
    return v == 0 || v == Rational(1, 2) || v == Rational(-1, 2) || v == 1 || v == -1;
}

Verdict triangle_verdict(const TriangleInstance &t) {
    if (!t.nondegenerate()) {
        return degenerate("side cosine of magnitude 1 or vertex angle 0 or 1/2 turn");
    }
    // cos(ac) = r_ab r_bc + S with S = sin(ab) sin(bc) cos(phi_b), sines nonnegative.
    Verdict twice = niven_classify(t.phi_b.doubled());
    if (twice.status == VerdictStatus::Irrational) {
        // S^2 = (1 - r_ab^2)(1 - r_bc^2) cos^2(phi_b) is a nonzero rational times an irrational.
        return Verdict{VerdictStatus::Irrational, std::nullopt, std::nullopt};
    }
    const Rational &a = t.r_ab.value();
    const Rational &b = t.r_bc.value();
    Rational cos_sq = (1 + *twice.value) / 2;
    Rational s_sq = (1 - a * a) * (1 - b * b) * cos_sq;
    std::optional<Rational> s = exact_sqrt(s_sq);
    bool niven = in_list(t.phi_b.denominator(), {3, 4, 6});
    if (!s) {
        if (niven) {
            return Verdict{VerdictStatus::Exception, std::nullopt, denominator_tag("phi_b", t.phi_b)};
        }
        return Verdict{VerdictStatus::Irrational, std::nullopt, std::nullopt};
    }
    Rational value = a * b + (positive_cosine(t.phi_b) ? *s : Rational(-*s));
    return Verdict{VerdictStatus::Exception, value, denominator_tag("phi_b", t.phi_b)};
}

Verdict quadruple_verdict(const QuadrupleInstance &q) {
    if (!q.independent || q.phi_x0 == q.phi_x1) {
        return degenerate("vertex angles not independent");
    }
    for (const auto *r : {&q.r_x0y0, &q.r_x0y1, &q.r_x1y0}) {
        if (abs(r->value()) >= 1) {
            return degenerate("side cosine of magnitude 1");
        }
    }
    if (endpoint(q.phi_x0) || endpoint(q.phi_x1)) {
        return degenerate("vertex angle 0 or 1/2 turn");
    }
    // Independence forces both summands rational, hence cos(2 phi_x0) and cos(2 phi_x1) rational.
    std::string fired;
    for (auto [name, phi] : {std::pair{"phi_x0", &q.phi_x0}, std::pair{"phi_x1", &q.phi_x1}}) {
        if (niven_classify(phi->doubled()).status == VerdictStatus::Rational) {
            fired += (fired.empty() ? "" : "; ") + denominator_tag(name, *phi);
        }
    }
    if (!fired.empty()) {
        return Verdict{VerdictStatus::Exception, std::nullopt, fired};
    }
    return Verdict{VerdictStatus::Irrational, std::nullopt, std::nullopt};
}

std::optional<Rational> rational_reconstruct(const HighPrecision &x, const BigInt &max_den, int precision_digits) {
    if (max_den < 1) {
        throw DomainError("max_den must be at least 1");
    }
    if (precision_digits > std::numeric_limits<HighPrecision>::digits10) {
        throw PrecisionError(
            "requested " + std::to_string(precision_digits) + " digits but only " +
            std::to_string(std::numeric_limits<HighPrecision>::digits10) + " are carried");
    }
    double need = 2 * std::log10(max_den.convert_to<double>()) + 10;
    if (precision_digits < need) {
        throw PrecisionError(
            std::to_string(precision_digits) + " digits cannot certify denominators up to " + max_den.str());
    }
    HighPrecision tol = pow(HighPrecision(10), -(precision_digits - 5));
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    HighPrecision y = x;
    for (int iter = 0; iter < 4 * precision_digits; iter++) {
        HighPrecision a = floor(y);
        BigInt ai = a.convert_to<BigInt>();
        BigInt h = ai * h1 + h2;
        BigInt k = ai * k1 + k2;
        if (k > max_den) {
            break;
        }
        if (abs(x - HighPrecision(h) / HighPrecision(k)) < tol) {
            return Rational(h, k);
        }
        HighPrecision frac = y - a;
        if (frac < tol) {
            break;
        }
        y = 1 / frac;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    return std::nullopt;
}

std::vector<RationalAngle> vertex_angle_pool(std::uint64_t max_den, bool include_exceptions) {
    std::vector<RationalAngle> out;
    for (std::uint64_t d = 3; d <= max_den; d++) {
        bool exceptional = d == 3 || d == 4 || d == 6 || d == 8 || d == 12;
        if (exceptional && !include_exceptions) {
            continue;
        }
        for (std::uint64_t n = 1; n < d; n++) {
            if (std::gcd(n, d) == 1) {
                out.emplace_back(Rational(n, d));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bitensemble
