// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace qwalk {

/// Counter-based SplitMix64 stream. Draw i of a stream seeded with s is
/// mix(s + (i + 1) * 0x9E3779B97F4A7C15), so every draw is a pure function of
/// (seed, counter) and identical on every platform.
class SplitMix64Stream {
  public:
    explicit SplitMix64Stream(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const { return mix(seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL); }

    std::uint64_t next() { return at(counter_++); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by multiply-shift on the top 53 bits.
    std::uint64_t below(std::uint64_t bound) {
        const auto v = static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
        return v < bound ? v : bound - 1;
    }

    std::uint64_t counter() const { return counter_; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace qwalk
