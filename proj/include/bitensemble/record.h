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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bitensemble/numtheory.h"
#include "bitensemble/rational.h"

namespace bitensemble {

/// Result of one harness run. Keys serialize in sorted order, so identical runs give
/// byte-identical JSON; wall time is kept out unless explicitly set.
struct ExperimentRecord {
    std::string experiment;
    nlohmann::json config = nlohmann::json::object();
    std::uint64_t seed = 0;
    nlohmann::json statistics = nlohmann::json::object();
    nlohmann::json verdicts = nlohmann::json::object();
    std::optional<double> wall_time_ms;

    nlohmann::json to_json() const;
    /// Two lines: a header of flattened keys and one row of values.
    std::string to_csv() const;
    /// One "key: value" line per flattened field.
    std::string to_text() const;
};

/// {status, value?, exception?} with the value as an "n/d" string.
nlohmann::json verdict_json(const Verdict &v);

/// Exact rational plus its double approximation: {"exact": "n/d", "approx": x}.
nlohmann::json rational_json(const Rational &r);

/// Depth-first flattening with dotted keys, in key order.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json &j, const std::string &prefix = "");

}  // namespace bitensemble
