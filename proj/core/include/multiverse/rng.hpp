// Copyright 2026 The Multiverse Authors
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

// Reproducible random streams.
//
// Each (seed, stream) pair selects an independent std::mt19937_64 whose
// state is seeded from two rounds of SplitMix64 over the pair. Both
// algorithms are fully specified, so draws are bit-identical across
// platforms and standard libraries. Bounded integers use rejection
// sampling rather than std::uniform_int_distribution, whose algorithm is
// implementation-defined.

#include <cstdint>
#include <random>

namespace multiverse {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next() noexcept { return engine_(); }

  /// Uniform in [0, bound). bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::mt19937_64 engine_;
};

}  // namespace multiverse
