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
#include <random>

namespace bitensemble {

/// One step of the splitmix64 sequence: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t &state);

/// Seed for row `index` of a sweep: the (index+1)-th splitmix64 output from `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded source with platform-independent bounded draws.
///
/// std::uniform_int_distribution and std::shuffle are implementation-defined, so bounded
/// draws are done here by rejection on the raw mt19937_64 stream, which the standard pins.
class SeededSource {
   public:
    explicit SeededSource(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound);

   private:
    std::mt19937_64 engine_;
};

}  // namespace bitensemble
