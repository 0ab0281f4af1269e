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

// Finite ensembles of parallel universes that start identical and diverge
// as each event partitions them according to a kernel.
//
// An ensemble is stored as classes of identical histories with their
// multiplicities; the total membership M never changes.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "multiverse/kernel.hpp"
#include "multiverse/rational.hpp"

namespace multiverse {

/// One outcome per completed event.
using UniverseHistory = std::vector<OutcomeLabel>;

class Ensemble {
 public:
  using Classes = std::map<UniverseHistory, BigInt>;

  /// M universes with empty histories. Throws InvalidArgument if m < 1.
  static Ensemble init(const BigInt& m);

  const Classes& classes() const noexcept { return classes_; }
  const BigInt& size() const noexcept { return size_; }
  std::size_t steps() const noexcept { return steps_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }

 private:
  friend Ensemble ensemble_step(const Ensemble&, const Kernel&);
  friend Ensemble ensemble_step(const Ensemble&, const Kernel&, std::uint64_t);

  Ensemble(Classes classes, BigInt size, std::size_t steps)
      : classes_(std::move(classes)), size_(std::move(size)), steps_(steps) {}

  Classes classes_;
  BigInt size_;
  std::size_t steps_ = 0;
};

/// Deterministic partition: a class of n identical universes splits into
/// n * count / total universes per outcome (kernel reduced first). Throws
/// IndivisibleEnsemble naming the first class whose size the reduced total
/// does not divide, with the least sufficient ensemble size.
Ensemble ensemble_step(const Ensemble& ens, const Kernel& k);

/// Stochastic step: every universe samples its outcome independently from
/// a stream determined by (seed, step index). Requires M < 2^64 and a
/// kernel total < 2^64.
Ensemble ensemble_step(const Ensemble& ens, const Kernel& k, std::uint64_t seed);

/// Shannon entropy, in bits, of the class-size distribution.
double history_entropy(const Ensemble& ens);

struct ArrowRow {
  std::size_t step;
  double entropy_bits;
  std::size_t num_classes;
};

/// Entropy after 0..steps deterministic steps of k from m identical
/// universes.
std::vector<ArrowRow> arrow_of_time(const Kernel& k, const BigInt& m, std::size_t steps);

/// CSV with header `step,entropy_bits,num_classes`.
void write_arrow_csv(std::ostream& os, const std::vector<ArrowRow>& rows);

struct SampleRow {
  OutcomeLabel outcome;
  std::uint64_t count;
  double frequency;
  Rational exact_probability;
};

struct SampleResult {
  std::uint64_t draws;
  std::vector<SampleRow> rows;  // every kernel outcome, label order
};

inline constexpr std::uint64_t kSampleShardSize = 1 << 16;

/// n independent draws. Draw block j (kSampleShardSize draws each) uses
/// stream j of `seed`, so the merged counts do not depend on `workers`.
/// Requires n >= 1 and a kernel total < 2^64.
SampleResult sample_frequencies(const Kernel& k, std::uint64_t n, std::uint64_t seed,
                                unsigned workers = 1);

/// CSV with header `outcome,count,frequency,exact_probability`.
void write_sample_csv(std::ostream& os, const SampleResult& result);

}  // namespace multiverse
