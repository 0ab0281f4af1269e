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

#include "multiverse/rng.hpp"

#include <limits>

namespace multiverse {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state = a ^ stream;
  return splitmix64(state);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : engine_(derive_seed(seed, stream)) {}

std::uint64_t StreamRng::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound; draws above kMax - rem fall in the incomplete last block.
  const std::uint64_t rem = (kMax % bound + 1) % bound;
  std::uint64_t r = engine_();
  while (rem != 0 && r > kMax - rem) r = engine_();
  return r % bound;
}

}  // namespace multiverse
