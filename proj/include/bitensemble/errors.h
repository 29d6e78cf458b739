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

#include <stdexcept>
#include <string>

namespace bitensemble {

/// Operand lengths or collection sizes do not fit together.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside its documented range.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operator met a NULL symbol where it only accepts +1/-1.
struct UnsupportedSymbolError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Statistics or correlations were requested over zero valid positions.
struct UndefinedStatisticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A sampler or enumerator found nothing that satisfies its constraints.
struct NoCandidateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An experiment configuration is self-inconsistent.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric oracle was handed too few digits to answer honestly.
struct PrecisionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace bitensemble
