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

#include "bitensemble/record.h"

#include <sstream>

namespace bitensemble {

nlohmann::json ExperimentRecord::to_json() const {
    nlohmann::json out = {
        {"experiment", experiment},
        {"config", config},
        {"seed", seed},
        {"statistics", statistics},
        {"verdicts", verdicts},
    };
    if (wall_time_ms) {
        out["wall_time_ms"] = *wall_time_ms;
    }
    return out;
}

nlohmann::json verdict_json(const Verdict &v) {
    nlohmann::json out = {{"status", status_name(v.status)}};
    if (v.value) {
        out["value"] = to_fraction_string(*v.value);
    }
    if (v.exception) {
        out["exception"] = *v.exception;
    }
    return out;
}

nlohmann::json rational_json(const Rational &r) {
    return {{"exact", to_fraction_string(r)}, {"approx", to_double(r)}};
}

std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json &j, const std::string &prefix) {
    std::vector<std::pair<std::string, std::string>> out;
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            auto sub = flatten(value, prefix.empty() ? key : prefix + "." + key);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); i++) {
            auto sub = flatten(j[i], prefix + "[" + std::to_string(i) + "]");
            out.insert(out.end(), sub.begin(), sub.end());
        }
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
    return out;
}

namespace {

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::json flat_view(const ExperimentRecord &r) {
    nlohmann::json view = r.to_json();
    view.erase("config");
    return view;
}

}  // namespace

std::string ExperimentRecord::to_csv() const {
    auto fields = flatten(flat_view(*this));
    std::ostringstream header;
    std::ostringstream row;
    for (std::size_t i = 0; i < fields.size(); i++) {
        header << (i ? "," : "") << csv_cell(fields[i].first);
        row << (i ? "," : "") << csv_cell(fields[i].second);
    }
    return header.str() + "\n" + row.str() + "\n";
}

std::string ExperimentRecord::to_text() const {
    std::ostringstream out;
    for (const auto &[key, value] : flatten(to_json())) {
        out << key << ": " << value << "\n";
    }
    return out.str();
}

}  // namespace bitensemble
