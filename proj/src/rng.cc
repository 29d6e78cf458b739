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

#include "bitensemble/rng.h"

#include "bitensemble/errors.h"

namespace bitensemble {

std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t out = 0;
    for (std::uint64_t k = 0; k <= index; k++) {
        out = splitmix64(state);
    }
    return out;
}

std::uint64_t SeededSource::uniform(std::uint64_t bound) {
    if (bound == 0) {
        throw DomainError("uniform() needs a positive bound");
    }
    // Reject the low (2^64 mod bound) values so every residue is equally likely.
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = engine_();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

}  // namespace bitensemble
