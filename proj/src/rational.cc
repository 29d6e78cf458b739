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

#include "bitensemble/rational.h"

#include <charconv>
#include <cmath>

#include "bitensemble/errors.h"

namespace bitensemble {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_fraction_string(const Rational &r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw ParseError("empty integer in '" + std::string(whole) + "'");
    }
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw ParseError("bad integer in '" + std::string(whole) + "'");
    }
    for (size_t k = start; k < text.size(); k++) {
        if (text[k] < '0' || text[k] > '9') {
            throw ParseError("bad integer in '" + std::string(whole) + "'");
        }
    }
    BigInt v(std::string(text.substr(start)));
    return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = parse_integer(text.substr(0, slash), text);
        BigInt d = parse_integer(text.substr(slash + 1), text);
        if (d == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) {
        throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    bool negative = !digits.empty() && digits[0] == '-';
    std::string int_part = digits;
    if (int_part.empty() || int_part == "-" || int_part == "+") {
        int_part += "0";
    }
    BigInt whole = parse_integer(int_part, text);
    BigInt scale = 1;
    for (size_t k = 0; k < frac.size(); k++) {
        scale *= 10;
    }
    if (frac[0] == '-' || frac[0] == '+') {
        throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    BigInt fnum = parse_integer(frac, text);
    BigInt mag = (whole < 0 ? BigInt(-whole) : whole) * scale + fnum;
    return Rational(negative ? BigInt(-mag) : mag, scale);
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

std::optional<Rational> exact_sqrt(const Rational &r) {
    if (r < 0) {
        return std::nullopt;
    }
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) {
        return std::nullopt;
    }
    return Rational(sn, sd);
}

BigInt floor_of(const Rational &r) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) {
        q -= 1;
    }
    return q;
}

BigInt ceil_of(const Rational &r) {
    return -floor_of(-r);
}

BigInt round_half_even(const Rational &r) {
    BigInt lo = floor_of(r);
    Rational diff = r - Rational(lo);
    Rational half(1, 2);
    if (diff < half) {
        return lo;
    }
    if (diff > half) {
        return lo + 1;
    }
    return (lo % 2 == 0) ? lo : BigInt(lo + 1);
}

Rational rational_near(double x, std::int64_t den) {
    if (!std::isfinite(x) || den <= 0) {
        throw DomainError("rational_near needs a finite value and positive denominator");
    }
    // x * den is exact enough for den up to ~1e12; ties resolved on the exact product.
    long double scaled = static_cast<long double>(x) * static_cast<long double>(den);
    long double fl = std::floor(scaled);
    long double diff = scaled - fl;
    long long num = static_cast<long long>(fl);
    if (diff > 0.5L || (diff == 0.5L && (num % 2 != 0))) {
        num += 1;
    }
    return Rational(BigInt(num), BigInt(den));
}

}  // namespace bitensemble
