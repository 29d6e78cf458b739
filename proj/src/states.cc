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

#include "bitensemble/states.h"

#include <algorithm>

#include "bitensemble/errors.h"

namespace bitensemble {

SkeletonPoint::SkeletonPoint(std::uint64_t m, std::uint64_t n, const EnsembleParams &params)
    : m_(m), n_(n), params_(params) {
    if (m > 2 * params.n()) {
        throw DomainError("skeleton m must lie in [0, 2N]");
    }
    if (n >= params.period()) {
        throw DomainError("skeleton n must lie in [0, p)");
    }
}

Rational SkeletonPoint::cosine() const {
    return 1 - Rational(BigInt(m_), BigInt(params_.n()));
}

Rational SkeletonPoint::turns() const {
    return Rational(BigInt(n_), BigInt(params_.period()));
}

Rational SkeletonPoint::minus_fraction() const {
    return Rational(BigInt(m_), BigInt(2 * params_.n()));
}

BitString bloch_state(const SkeletonPoint &pt) {
    BitString s = interp_i1(BitString::ones(pt.params()), pt.m());
    return cyc_shift(s, static_cast<std::int64_t>(pt.n()));
}

std::uint64_t nearest_grid_m(const Rational &cosine, std::uint64_t quarter_length) {
    BigInt m = round_half_even(Rational(BigInt(quarter_length)) * (1 - cosine));
    if (m < 0) {
        return 0;
    }
    if (m > 2 * quarter_length) {
        return 2 * quarter_length;
    }
    return m.convert_to<std::uint64_t>();
}

namespace {

std::uint64_t subtree_size(int k) {
    return (std::uint64_t{1} << k) - 1;
}

std::vector<BitString> build_rows(
    int k, const std::vector<std::pair<std::uint64_t, std::uint64_t>> &tree, std::size_t at,
    const EnsembleParams &params) {
    BitString root = bloch_state(SkeletonPoint(tree[at].first, tree[at].second, params));
    if (k == 1) {
        return {root};
    }
    auto left = build_rows(k - 1, tree, at + 1, params);
    auto right = build_rows(k - 1, tree, at + 1 + subtree_size(k - 1), params);
    std::vector<BitString> rows;
    rows.reserve(k);
    for (int j = 0; j < k - 1; j++) {
        rows.push_back(concat(left[j], right[j]));
    }
    for (int j = 1; j < k; j++) {
        root = concat(root, root);
    }
    rows.push_back(root);
    return rows;
}

}  // namespace

MultiQubitState kqubit_build(
    int k, const std::vector<std::pair<std::uint64_t, std::uint64_t>> &tree, const EnsembleParams &params) {
    if (k < 1 || k > 24) {
        throw DomainError("K must lie in [1, 24]");
    }
    if (tree.size() != subtree_size(k)) {
        throw ShapeError(
            "K = " + std::to_string(k) + " needs " + std::to_string(subtree_size(k)) + " (m, n) pairs, got " +
            std::to_string(tree.size()));
    }
    MultiQubitState out;
    out.k = k;
    out.params = params;
    out.tree = tree;
    out.strings = build_rows(k, tree, 0, params);
    return out;
}

std::vector<std::uint8_t> MultiQubitState::to_binary() const {
    std::vector<std::uint8_t> out;
    for (const auto &row : strings) {
        auto bytes = row.to_binary();
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

nlohmann::json MultiQubitState::sidecar() const {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [m, n] : tree) {
        pairs.push_back({m, n});
    }
    return {{"K", k}, {"N", params.n()}, {"n_X", params.null_count()}, {"tree", pairs}};
}

MultiQubitState MultiQubitState::from_binary(std::span<const std::uint8_t> data, const nlohmann::json &sidecar) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tree;
    for (const auto &pair : sidecar.at("tree")) {
        tree.emplace_back(pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>());
    }
    EnsembleParams params(sidecar.at("N").get<std::uint64_t>(), sidecar.at("n_X").get<std::uint64_t>());
    MultiQubitState expected = kqubit_build(sidecar.at("K").get<int>(), tree, params);
    std::size_t offset = 0;
    for (const auto &row : expected.strings) {
        std::size_t used = 0;
        BitString parsed = BitString::from_binary(data.subspan(offset), &used);
        if (!(parsed == row)) {
            throw ParseError("binary rows do not match the parameter tree in the sidecar");
        }
        offset += used;
    }
    if (offset != data.size()) {
        throw ParseError("trailing bytes after the last row");
    }
    return expected;
}

BellPair bell_pair(std::uint64_t m_a, std::uint64_t m_b, const EnsembleParams &params) {
    if (m_a > 2 * params.n() || m_b > 2 * params.n()) {
        throw DomainError("Bell pair m values must lie in [0, 2N]");
    }
    BitString one = BitString::ones(params);
    BitString minus_one = -one;
    return BellPair{
        concat(interp_i1(one, m_a), interp_i1(minus_one, m_a)),
        concat(interp_i1(minus_one, m_b), interp_i1(one, m_b)),
        m_a,
        m_b,
    };
}

std::pair<std::int64_t, std::int64_t> disk_m_range(const EpsilonDisk &disk, const EnsembleParams &params) {
    if (disk.epsilon <= 0) {
        throw DomainError("disk epsilon must be positive");
    }
    // 1 - m/N in [c - eps, c + eps]  <=>  m in [N(1 - c - eps), N(1 - c + eps)].
    Rational n{BigInt(params.n())};
    BigInt lo = ceil_of(n * (1 - disk.cos_center - disk.epsilon));
    BigInt hi = floor_of(n * (1 - disk.cos_center + disk.epsilon));
    if (lo < 0) {
        lo = 0;
    }
    if (hi > 2 * params.n()) {
        hi = 2 * params.n();
    }
    if (lo > hi) {
        return {1, 0};
    }
    return {lo.convert_to<std::int64_t>(), hi.convert_to<std::int64_t>()};
}

std::vector<std::uint64_t> disk_n_values(const EpsilonDisk &disk, const EnsembleParams &params) {
    if (disk.epsilon <= 0) {
        throw DomainError("disk epsilon must be positive");
    }
    std::uint64_t p = params.period();
    std::vector<std::uint64_t> out;
    if (disk.epsilon >= Rational(1, 2)) {
        for (std::uint64_t n = 0; n < p; n++) {
            out.push_back(n);
        }
        return out;
    }
    Rational pr{BigInt(p)};
    BigInt lo = ceil_of(pr * (disk.turn_center - disk.epsilon));
    BigInt hi = floor_of(pr * (disk.turn_center + disk.epsilon));
    for (BigInt v = lo; v <= hi; ++v) {
        BigInt r = v % BigInt(p);
        if (r < 0) {
            r += p;
        }
        out.push_back(r.convert_to<std::uint64_t>());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SkeletonPoint sample_exact_setting(
    const EpsilonDisk &disk, const SettingConstraint &constraint, const EnsembleParams &params, SeededSource &rng) {
    std::vector<std::uint64_t> ns = disk_n_values(disk, params);
    if (std::holds_alternative<RationalAnglePhase>(constraint)) {
        if (ns.empty()) {
            throw NoCandidateError("no lattice phase inside the disk's turn band");
        }
        return SkeletonPoint(params.n(), ns[rng.uniform(ns.size())], params);
    }
    auto [lo, hi] = disk_m_range(disk, params);
    if (lo > hi || ns.empty()) {
        throw NoCandidateError("no lattice point with rational cosine inside the disk");
    }
    std::uint64_t ms = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t pick = rng.uniform(ms * ns.size());
    return SkeletonPoint(static_cast<std::uint64_t>(lo) + pick / ns.size(), ns[pick % ns.size()], params);
}

}  // namespace bitensemble
