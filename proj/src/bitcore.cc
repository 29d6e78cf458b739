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

#include "bitensemble/bitcore.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "bitensemble/errors.h"

namespace bitensemble {

char bit_symbol(Bit b) {
    switch (b) {
        case Bit::Plus:
            return '+';
        case Bit::Minus:
            return '-';
        case Bit::Null:
            return 'x';
    }
    return '?';
}

Bit negated(Bit b) {
    switch (b) {
        case Bit::Plus:
            return Bit::Minus;
        case Bit::Minus:
            return Bit::Plus;
        case Bit::Null:
            return Bit::Null;
    }
    return b;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
        if (v % d == 0) {
            return v == d;
        }
    }
    for (std::uint64_t d = 7; d * d <= v; d += 2) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

EnsembleParams::EnsembleParams(std::uint64_t quarter_length, std::uint64_t null_count, bool require_prime)
    : n_(quarter_length), n_x_(null_count), require_prime_(require_prime) {
    if (n_ == 0) {
        throw DomainError("quarter length N must be positive");
    }
    if (n_ > (std::uint64_t{1} << 58)) {
        throw DomainError("quarter length N is too large");
    }
    if (require_prime_ && !is_prime(period())) {
        throw DomainError("p = 4N + n_X = " + std::to_string(period()) + " is not prime");
    }
}

namespace {

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + 63) / 64;
}

inline std::uint64_t low_mask(std::size_t k) {
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

// Reads k (1..64) bits starting at bit `off`.
inline std::uint64_t load_bits(const std::uint64_t *w, std::size_t off, std::size_t k) {
    std::size_t i = off >> 6;
    std::size_t s = off & 63;
    std::uint64_t v = w[i] >> s;
    if (s != 0 && s + k > 64) {
        v |= w[i + 1] << (64 - s);
    }
    return v & low_mask(k);
}

// Writes the low k (1..64) bits of v at bit `off`.
inline void store_bits(std::uint64_t *w, std::size_t off, std::size_t k, std::uint64_t v) {
    std::size_t i = off >> 6;
    std::size_t s = off & 63;
    std::uint64_t m = low_mask(k);
    v &= m;
    w[i] = (w[i] & ~(m << s)) | (v << s);
    if (s != 0 && s + k > 64) {
        std::uint64_t m2 = low_mask(s + k - 64);
        w[i + 1] = (w[i + 1] & ~m2) | (v >> (64 - s));
    }
}

inline void copy_plane(
    std::uint64_t *dst, std::size_t dst_off, const std::uint64_t *src, std::size_t src_off, std::size_t len,
    bool flip) {
    for (std::size_t done = 0; done < len;) {
        std::size_t k = std::min<std::size_t>(64, len - done);
        std::uint64_t v = load_bits(src, src_off + done, k);
        if (flip) {
            v = ~v;
        }
        store_bits(dst, dst_off + done, k, v);
        done += k;
    }
}

std::size_t popcount_range(std::span<const std::uint64_t> w, std::size_t begin, std::size_t end) {
    std::size_t total = 0;
    for (std::size_t off = begin; off < end;) {
        std::size_t k = std::min<std::size_t>(64, end - off);
        total += std::popcount(load_bits(w.data(), off, k));
        off += k;
    }
    return total;
}

}  // namespace

namespace detail {

struct BitStringAccess {
    static BitString blank(const EnsembleParams &params, std::size_t size) {
        return BitString(params, size);
    }
    static std::uint64_t *values(BitString &s) {
        return s.value_.data();
    }
    static std::uint64_t *nulls(BitString &s) {
        return s.null_.data();
    }
    static void set(BitString &s, std::size_t i, Bit b) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        s.value_[i >> 6] &= ~bit;
        s.null_[i >> 6] &= ~bit;
        if (b == Bit::Minus) {
            s.value_[i >> 6] |= bit;
        } else if (b == Bit::Null) {
            s.null_[i >> 6] |= bit;
        }
    }
    // Copies a range of both planes, negating the values when `flip` is set. Callers only
    // flip null-free ranges.
    static void copy(BitString &dst, std::size_t dst_off, const BitString &src, std::size_t src_off, std::size_t len,
                     bool flip) {
        copy_plane(dst.value_.data(), dst_off, src.value_.data(), src_off, len, flip);
        copy_plane(dst.null_.data(), dst_off, src.null_.data(), src_off, len, false);
    }
};

}  // namespace detail

using detail::BitStringAccess;

BitString::BitString(const EnsembleParams &params, std::size_t size)
    : params_(params), size_(size), value_(words_for(size), 0), null_(words_for(size), 0) {
}

BitString BitString::ones(const EnsembleParams &params) {
    BitString out(params, params.period());
    std::size_t tail = 4 * params.n();
    for (std::size_t i = tail; i < out.size_; i++) {
        BitStringAccess::set(out, i, Bit::Null);
    }
    return out;
}

BitString BitString::from_bits(std::span<const Bit> bits, const EnsembleParams &params) {
    if (bits.size() != params.period()) {
        throw ShapeError(
            "string of " + std::to_string(bits.size()) + " symbols does not match 4N + n_X = " +
            std::to_string(params.period()));
    }
    BitString out(params, bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == Bit::Null && params.null_count() == 0) {
            throw UnsupportedSymbolError("NULL symbol in a string whose params declare n_X = 0");
        }
        BitStringAccess::set(out, i, bits[i]);
    }
    return out;
}

BitString BitString::from_symbols(std::string_view symbols, const EnsembleParams &params) {
    std::vector<Bit> bits;
    bits.reserve(symbols.size());
    for (char c : symbols) {
        switch (c) {
            case '+':
                bits.push_back(Bit::Plus);
                break;
            case '-':
                bits.push_back(Bit::Minus);
                break;
            case 'x':
            case 'X':
                bits.push_back(Bit::Null);
                break;
            default:
                throw ParseError(std::string("unknown symbol '") + c + "'");
        }
    }
    return from_bits(bits, params);
}

Bit BitString::at(std::size_t index) const {
    if (index >= size_) {
        throw DomainError("index " + std::to_string(index) + " out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (null_[index >> 6] & bit) {
        return Bit::Null;
    }
    return (value_[index >> 6] & bit) ? Bit::Minus : Bit::Plus;
}

std::vector<Bit> BitString::bits() const {
    std::vector<Bit> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; i++) {
        out.push_back(at(i));
    }
    return out;
}

Quarter BitString::quarter(int index) const {
    if (index < 0 || index > 3) {
        throw DomainError("quarter index must be 0..3");
    }
    std::size_t n = params_.n();
    Quarter out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        out.push_back(at(index * n + i));
    }
    return out;
}

std::size_t BitString::count(Bit b) const {
    std::size_t nulls = popcount_range(null_, 0, size_);
    switch (b) {
        case Bit::Null:
            return nulls;
        case Bit::Minus:
            return popcount_range(value_, 0, size_);
        case Bit::Plus:
            return size_ - nulls - popcount_range(value_, 0, size_);
    }
    return 0;
}

bool BitString::has_null_in_prefix() const {
    return popcount_range(null_, 0, std::min<std::size_t>(size_, 4 * params_.n())) != 0;
}

BitString BitString::operator-() const {
    BitString out = *this;
    for (std::size_t w = 0; w < value_.size(); w++) {
        out.value_[w] = value_[w] ^ ~null_[w];
    }
    if (size_ & 63) {
        out.value_.back() &= low_mask(size_ & 63);
    }
    return out;
}

bool BitString::operator==(const BitString &other) const {
    return params_ == other.params_ && size_ == other.size_ && value_ == other.value_ && null_ == other.null_;
}

std::string BitString::str() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; i++) {
        out.push_back(bit_symbol(at(i)));
    }
    return out;
}

std::string BitString::to_rle() const {
    std::string out = std::to_string(params_.n()) + "," + std::to_string(params_.null_count()) + ":";
    std::size_t i = 0;
    while (i < size_) {
        Bit b = at(i);
        std::size_t j = i + 1;
        while (j < size_ && at(j) == b) {
            j++;
        }
        if (j - i > 1) {
            out += std::to_string(j - i);
        }
        out.push_back(bit_symbol(b));
        i = j;
    }
    return out;
}

BitString BitString::from_rle(std::string_view text) {
    auto colon = text.find(':');
    auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma > colon) {
        throw ParseError("run-length string needs an 'N,n_X:' header");
    }
    auto read_u64 = [&](std::string_view digits) {
        std::uint64_t v = 0;
        if (digits.empty()) {
            throw ParseError("empty number in run-length header");
        }
        for (char c : digits) {
            if (c < '0' || c > '9') {
                throw ParseError("bad number in run-length string");
            }
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };
    EnsembleParams params(read_u64(text.substr(0, comma)), read_u64(text.substr(comma + 1, colon - comma - 1)));
    std::string expanded;
    std::uint64_t run = 0;
    bool have_run = false;
    for (char c : text.substr(colon + 1)) {
        if (c >= '0' && c <= '9') {
            run = run * 10 + static_cast<std::uint64_t>(c - '0');
            have_run = true;
            continue;
        }
        if (have_run && run == 0) {
            throw ParseError("zero-length run");
        }
        std::uint64_t reps = have_run ? run : 1;
        if (expanded.size() + reps > params.period()) {
            throw ParseError("run-length body longer than 4N + n_X");
        }
        expanded.append(reps, c);
        run = 0;
        have_run = false;
    }
    if (have_run) {
        throw ParseError("run count without a symbol");
    }
    return from_symbols(expanded, params);
}

namespace {
constexpr std::uint16_t kMagic = 0xB175;

void put_le(std::vector<std::uint8_t> &out, std::uint64_t v, int bytes) {
    for (int k = 0; k < bytes; k++) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t off, int bytes) {
    std::uint64_t v = 0;
    for (int k = 0; k < bytes; k++) {
        v |= static_cast<std::uint64_t>(in[off + k]) << (8 * k);
    }
    return v;
}
}  // namespace

std::vector<std::uint8_t> BitString::to_binary() const {
    if (params_.n() > 0xFFFFFFFFULL || params_.null_count() > 0xFFFFULL) {
        throw DomainError("N or n_X too large for the binary header");
    }
    std::vector<std::uint8_t> out;
    out.reserve(8 + 16 * value_.size());
    put_le(out, kMagic, 2);
    put_le(out, params_.n(), 4);
    put_le(out, params_.null_count(), 2);
    for (auto w : value_) {
        put_le(out, w, 8);
    }
    for (auto w : null_) {
        put_le(out, w, 8);
    }
    return out;
}

BitString BitString::from_binary(std::span<const std::uint8_t> data, std::size_t *consumed) {
    if (data.size() < 8 || get_le(data, 0, 2) != kMagic) {
        throw ParseError("missing bit-string binary header");
    }
    EnsembleParams params(get_le(data, 2, 4), get_le(data, 6, 2));
    BitString out(params, params.period());
    std::size_t words = out.value_.size();
    if (data.size() < 8 + 16 * words) {
        throw ParseError("truncated bit-string binary body");
    }
    for (std::size_t w = 0; w < words; w++) {
        out.value_[w] = get_le(data, 8 + 8 * w, 8);
        out.null_[w] = get_le(data, 8 + 8 * (words + w), 8);
    }
    if (out.size_ & 63) {
        std::uint64_t pad = ~low_mask(out.size_ & 63);
        if ((out.value_.back() & pad) || (out.null_.back() & pad)) {
            throw ParseError("nonzero padding bits");
        }
    }
    for (std::size_t w = 0; w < words; w++) {
        if (out.value_[w] & out.null_[w]) {
            throw ParseError("value bit set under a null");
        }
    }
    if (params.null_count() == 0 && out.count(Bit::Null) != 0) {
        throw UnsupportedSymbolError("NULL symbol in a string whose params declare n_X = 0");
    }
    if (consumed != nullptr) {
        *consumed = 8 + 16 * words;
    }
    return out;
}

BitString assemble(
    std::span<const Bit> a, std::span<const Bit> b, std::span<const Bit> c, std::span<const Bit> d,
    std::uint64_t null_count) {
    if (a.empty() || a.size() != b.size() || a.size() != c.size() || a.size() != d.size()) {
        throw ShapeError("quarters must have equal, positive length");
    }
    std::vector<Bit> bits;
    bits.reserve(4 * a.size() + null_count);
    for (auto q : {a, b, c, d}) {
        for (Bit x : q) {
            if (x == Bit::Null) {
                throw UnsupportedSymbolError("NULL inside a quarter; nulls are appended after the 4N prefix");
            }
            bits.push_back(x);
        }
    }
    bits.insert(bits.end(), null_count, Bit::Null);
    return BitString::from_bits(bits, EnsembleParams(a.size(), null_count));
}

namespace {

// One output quarter built as (sign_x * X) ||^k (sign_y * Y) from source quarters X, Y.
struct Blend {
    int x;
    bool neg_x;
    int y;
    bool neg_y;
};

void require_structured(const BitString &s, const char *op) {
    if (s.has_null_in_prefix()) {
        throw UnsupportedSymbolError(std::string(op) + ": NULL inside the 4N structured prefix");
    }
}

BitString blend_quarters(const BitString &s, const std::array<Blend, 4> &plan, std::uint64_t k) {
    std::size_t n = s.params().n();
    BitString out = BitStringAccess::blank(s.params(), s.size());
    for (int q = 0; q < 4; q++) {
        const Blend &b = plan[q];
        std::size_t head = n - k;
        if (head > 0) {
            BitStringAccess::copy(out, q * n, s, b.x * n, head, b.neg_x);
        }
        if (k > 0) {
            BitStringAccess::copy(out, q * n + head, s, b.y * n + head, k, b.neg_y);
        }
    }
    std::size_t tail = 4 * n;
    if (s.size() > tail) {
        BitStringAccess::copy(out, tail, s, tail, s.size() - tail, false);
    }
    return out;
}

constexpr int A = 0, B = 1, C = 2, D = 3;

}  // namespace

BitString quaternion_apply(Quaternion which, const BitString &s) {
    require_structured(s, "quaternion_apply");
    switch (which) {
        case Quaternion::I1:
            return blend_quarters(s, {{{B, false, B, false}, {A, true, A, true}, {D, true, D, true}, {C, false, C, false}}}, 0);
        case Quaternion::I2:
            return blend_quarters(s, {{{C, false, C, false}, {D, false, D, false}, {A, true, A, true}, {B, true, B, true}}}, 0);
        case Quaternion::I3:
            return blend_quarters(s, {{{D, false, D, false}, {C, true, C, true}, {B, false, B, false}, {A, true, A, true}}}, 0);
    }
    throw DomainError("unknown quaternion unit");
}

Quarter partial_concat(std::span<const Bit> b, std::span<const Bit> c, std::uint64_t m) {
    if (b.size() != c.size()) {
        throw ShapeError("partial_concat needs quarters of equal length");
    }
    if (m > b.size()) {
        throw DomainError("partial_concat: m must lie in [0, N]");
    }
    Quarter out(b.begin(), b.end() - static_cast<std::ptrdiff_t>(m));
    out.insert(out.end(), c.end() - static_cast<std::ptrdiff_t>(m), c.end());
    return out;
}

BitString interp_i1(const BitString &s, std::uint64_t m) {
    std::uint64_t n = s.params().n();
    if (m > 2 * n) {
        throw DomainError("interp_i1: m must lie in [0, 2N]");
    }
    require_structured(s, "interp_i1");
    if (m <= n) {
        // A|^m B, B|^m -A, C|^m -D, D|^m C
        return blend_quarters(s, {{{A, false, B, false}, {B, false, A, true}, {C, false, D, true}, {D, false, C, false}}}, m);
    }
    // B|^k -A, -A|^k -B, -D|^k -C, C|^k -D with k = m - N
    return blend_quarters(s, {{{B, false, A, true}, {A, true, B, true}, {D, true, C, true}, {C, false, D, true}}}, m - n);
}

BitString interp_i1_inverse(const BitString &s, std::uint64_t m) {
    std::uint64_t n = s.params().n();
    if (m > 2 * n) {
        throw DomainError("interp_i1_inverse: m must lie in [0, 2N]");
    }
    require_structured(s, "interp_i1_inverse");
    // Position j of every quarter saw i1^e with e in {0, 1, 2}; undo with i1^-e.
    if (m <= n) {
        return blend_quarters(s, {{{A, false, B, true}, {B, false, A, false}, {C, false, D, false}, {D, false, C, true}}}, m);
    }
    return blend_quarters(s, {{{B, true, A, true}, {A, false, B, true}, {D, false, C, true}, {C, true, D, true}}}, m - n);
}

BitString cyc_shift(const BitString &s, std::int64_t n) {
    std::int64_t len = static_cast<std::int64_t>(s.size());
    std::int64_t r = ((n % len) + len) % len;
    if (r == 0) {
        return s;
    }
    BitString out = BitStringAccess::blank(s.params(), s.size());
    std::size_t shift = static_cast<std::size_t>(r);
    BitStringAccess::copy(out, shift, s, 0, s.size() - shift, false);
    BitStringAccess::copy(out, 0, s, s.size() - shift, shift, false);
    return out;
}

BitString concat(const BitString &a, const BitString &b) {
    EnsembleParams params(a.params().n() + b.params().n(), a.params().null_count() + b.params().null_count());
    BitString out = BitStringAccess::blank(params, a.size() + b.size());
    BitStringAccess::copy(out, 0, a, 0, a.size(), false);
    BitStringAccess::copy(out, a.size(), b, 0, b.size(), false);
    return out;
}

BitString permute(const BitString &s, std::span<const std::uint32_t> source_of) {
    if (source_of.size() != s.size()) {
        throw ShapeError("permutation length does not match string length");
    }
    std::vector<bool> seen(s.size(), false);
    BitString out = BitStringAccess::blank(s.params(), s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        std::uint32_t src = source_of[i];
        if (src >= s.size() || seen[src]) {
            throw DomainError("not a permutation");
        }
        seen[src] = true;
        BitStringAccess::set(out, i, s.at(src));
    }
    return out;
}

Rational correlation(const BitString &a, const BitString &b) {
    if (a.size() != b.size()) {
        throw ShapeError("correlation needs strings of equal length");
    }
    auto va = a.value_words();
    auto vb = b.value_words();
    auto na = a.null_words();
    auto nb = b.null_words();
    std::size_t words = va.size();
    std::uint64_t valid_count = 0;
    std::uint64_t mismatches = 0;
    for (std::size_t w = 0; w < words; w++) {
        std::uint64_t valid = ~(na[w] | nb[w]);
        if (w + 1 == words && (a.size() & 63)) {
            valid &= low_mask(a.size() & 63);
        }
        valid_count += std::popcount(valid);
        mismatches += std::popcount((va[w] ^ vb[w]) & valid);
    }
    if (valid_count == 0) {
        throw UndefinedStatisticError("correlation undefined: no position where both strings are non-NULL");
    }
    return Rational(BigInt(valid_count) - 2 * BigInt(mismatches), BigInt(valid_count));
}

EnsembleStats ensemble_stats(const BitString &s) {
    std::size_t valid = s.size() - s.count(Bit::Null);
    if (valid == 0) {
        throw UndefinedStatisticError("statistics undefined for an all-NULL string");
    }
    Rational minus(BigInt(s.count(Bit::Minus)), BigInt(valid));
    Rational mean = 1 - 2 * minus;
    double m = to_double(mean);
    return EnsembleStats{minus, mean, std::sqrt(std::max(0.0, 1.0 - m * m))};
}

}  // namespace bitensemble
