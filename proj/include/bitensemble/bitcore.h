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
#include <string_view>
#include <vector>

#include "bitensemble/rational.h"

namespace bitensemble {

enum class Bit : std::uint8_t { Plus, Minus, Null };

char bit_symbol(Bit b);
Bit negated(Bit b);

/// One quarter of a structured string: N symbols, +1/-1 only.
using Quarter = std::vector<Bit>;

bool is_prime(std::uint64_t v);

/// Shape of an ensemble: quarter length N, null count n_X and period p = 4N + n_X.
class EnsembleParams {
   public:
    explicit EnsembleParams(std::uint64_t quarter_length, std::uint64_t null_count = 0, bool require_prime = false);

    std::uint64_t n() const {
        return n_;
    }
    std::uint64_t null_count() const {
        return n_x_;
    }
    /// p = 4N + n_X; also the string length and the cyclic-shift period.
    std::uint64_t period() const {
        return 4 * n_ + n_x_;
    }
    bool require_prime() const {
        return require_prime_;
    }

    bool operator==(const EnsembleParams &other) const {
        return n_ == other.n_ && n_x_ == other.n_x_;
    }

   private:
    std::uint64_t n_;
    std::uint64_t n_x_;
    bool require_prime_;
};

namespace detail {
struct BitStringAccess;
}

/// Immutable ensemble of symbolic world states.
///
/// Stored as two bit planes of 64-bit words: a value plane (1 = -1) and a null mask
/// (1 = X). Padding bits past size() are zero in both planes, and value bits under a
/// null are zero, so plane equality is string equality.
class BitString {
   public:
    /// The all-+1 string of 4N symbols followed by n_X nulls.
    static BitString ones(const EnsembleParams &params);
    static BitString from_bits(std::span<const Bit> bits, const EnsembleParams &params);
    /// Symbols '+', '-', 'x' (or 'X').
    static BitString from_symbols(std::string_view symbols, const EnsembleParams &params);

    const EnsembleParams &params() const {
        return params_;
    }
    std::size_t size() const {
        return size_;
    }
    Bit at(std::size_t index) const;
    std::vector<Bit> bits() const;
    /// Quarter 0..3 of the structured 4N prefix.
    Quarter quarter(int index) const;
    std::size_t count(Bit b) const;
    /// True if any NULL sits inside the first 4N positions.
    bool has_null_in_prefix() const;

    BitString operator-() const;
    bool operator==(const BitString &other) const;

    std::string str() const;

    std::span<const std::uint64_t> value_words() const {
        return value_;
    }
    std::span<const std::uint64_t> null_words() const {
        return null_;
    }

    /// Run-length text: "N,n_X:" then runs "<count><sym>" with the count omitted when 1,
    /// e.g. "2,1:3+2-3+x".
    std::string to_rle() const;
    static BitString from_rle(std::string_view text);

    /// 8-byte little-endian header (u16 magic 0xB175, u32 N, u16 n_X) followed by the
    /// value-plane words then the null-plane words, each a little-endian u64.
    std::vector<std::uint8_t> to_binary() const;
    /// Parses one string from the front of `data`; `consumed` receives the byte count.
    static BitString from_binary(std::span<const std::uint8_t> data, std::size_t *consumed = nullptr);

   private:
    friend struct detail::BitStringAccess;
    BitString(const EnsembleParams &params, std::size_t size);

    EnsembleParams params_;
    std::size_t size_;
    std::vector<std::uint64_t> value_;
    std::vector<std::uint64_t> null_;
};

enum class Quaternion { I1, I2, I3 };

/// A || B || C || D, optionally followed by `null_count` nulls.
BitString assemble(
    std::span<const Bit> a, std::span<const Bit> b, std::span<const Bit> c, std::span<const Bit> d,
    std::uint64_t null_count = 0);

/// i1: B|-A|-D|C, i2: C|D|-A|-B, i3: D|-C|B|-A on the 4N prefix; the null tail is carried.
BitString quaternion_apply(Quaternion which, const BitString &s);

/// First N-m symbols of `b` followed by the last m symbols of `c`.
Quarter partial_concat(std::span<const Bit> b, std::span<const Bit> c, std::uint64_t m);

/// The interpolant i1^(m), 0 <= m <= 2N: identity at 0, i1 at N, negation at 2N.
BitString interp_i1(const BitString &s, std::uint64_t m);

/// Exact inverse of interp_i1(., m).
BitString interp_i1_inverse(const BitString &s, std::uint64_t m);

/// n applications of the cycle j -> j+1 (mod size); negative n rotates the other way.
BitString cyc_shift(const BitString &s, std::int64_t n);

/// Joins two strings; the result's params are (N_a + N_b, n_X_a + n_X_b).
BitString concat(const BitString &a, const BitString &b);

/// out[i] = s[source_of[i]]. `source_of` must be a permutation of [0, size).
BitString permute(const BitString &s, std::span<const std::uint32_t> source_of);

/// (matches - mismatches) / count over positions where neither string is NULL.
Rational correlation(const BitString &a, const BitString &b);

struct EnsembleStats {
    Rational minus_fraction;
    Rational mean;
    double stddev;
};

EnsembleStats ensemble_stats(const BitString &s);

}  // namespace bitensemble
