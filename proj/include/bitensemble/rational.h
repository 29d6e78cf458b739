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

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bitensemble {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "n/d", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational &r);

/// Accepts "n/d", "n", and finite decimals such as "-0.125".
Rational parse_rational(std::string_view text);

double to_double(const Rational &r);

/// Exact square root when `r` is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational &r);

BigInt floor_of(const Rational &r);
BigInt ceil_of(const Rational &r);

/// Nearest integer, ties to even.
BigInt round_half_even(const Rational &r);

/// Closest fraction to `x` with denominator `den` (round-half-even on the numerator).
Rational rational_near(double x, std::int64_t den);

}  // namespace bitensemble
