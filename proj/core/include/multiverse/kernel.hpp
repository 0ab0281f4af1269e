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

// Kernels: finite multisets of outcome-labelled universes. A kernel assigns
// each outcome a positive integer count; probabilities are count / total.
// Kernels compose by tensor product, and a kernel raised to the N-th tensor
// power can be kept symbolic (PowerKernel) so that 8^N never materializes.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "multiverse/rational.hpp"

namespace multiverse {

/// Ordered sequence of per-event outcome tokens, e.g. (Au, Bu). Ordering is
/// lexicographic over tokens. The text form joins tokens with '.'.
class OutcomeLabel {
 public:
  OutcomeLabel() = default;
  explicit OutcomeLabel(std::vector<std::string> tokens);
  OutcomeLabel(std::initializer_list<std::string> tokens)
      : OutcomeLabel(std::vector<std::string>(tokens)) {}

  /// "Au.Bu" -> (Au, Bu). Throws ParseError.
  static OutcomeLabel parse(std::string_view text);

  /// Token rules: nonempty, no whitespace and none of . : , | # =
  static bool valid_token(std::string_view token) noexcept;

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::size_t arity() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_.at(i); }

  /// Components [first, first + count).
  OutcomeLabel slice(std::size_t first, std::size_t count) const;

  std::string str() const;      // Au.Bu
  std::string compact() const;  // AuBu

  friend OutcomeLabel concat(const OutcomeLabel& a, const OutcomeLabel& b);
  friend auto operator<=>(const OutcomeLabel&, const OutcomeLabel&) = default;
  friend bool operator==(const OutcomeLabel&, const OutcomeLabel&) = default;

 private:
  std::vector<std::string> tokens_;
};

using LabelPredicate = std::function<bool(const OutcomeLabel&)>;

class Kernel {
 public:
  using Counts = std::map<OutcomeLabel, BigInt>;

  /// Counts are taken verbatim (not reduced). Requires a nonempty map, every
  /// count >= 1 and every label of the same nonzero arity.
  static Kernel from_counts(Counts counts);
  static Kernel from_counts(std::initializer_list<std::pair<OutcomeLabel, long>> counts);

  const Counts& counts() const noexcept { return counts_; }
  const BigInt& total() const noexcept { return total_; }
  std::size_t arity() const noexcept { return counts_.begin()->first.arity(); }
  std::size_t num_outcomes() const noexcept { return counts_.size(); }

  /// Zero for labels not present.
  BigInt count(const OutcomeLabel& label) const;

  /// gcd of all counts is 1.
  bool is_canonical() const;

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  Kernel(Counts counts, BigInt total) : counts_(std::move(counts)), total_(std::move(total)) {}

  Counts counts_;
  BigInt total_;
};

/// Symbolic base^{(x)N}. Never materialized unless asked.
class PowerKernel {
 public:
  PowerKernel(Kernel base, unsigned long exponent);

  const Kernel& base() const noexcept { return base_; }
  unsigned long exponent() const noexcept { return exponent_; }
  /// base.total ^ exponent, exact.
  BigInt total() const;

  /// Explicit tensor power. Throws EnumerationLimit if total() > limit.
  Kernel materialize(const BigInt& limit) const;

 private:
  Kernel base_;
  unsigned long exponent_;
};

/// A conjunction of per-factor predicates over a tensor power. One entry
/// broadcasts to every factor; otherwise there must be one per factor.
struct FactorwiseQuery {
  std::vector<LabelPredicate> factors;

  /// The same query phrased over a materialized label made of
  /// `exponent` consecutive factors of `factor_arity` tokens each.
  LabelPredicate flatten(std::size_t factor_arity, unsigned long exponent) const;
};

/// counts = p * lcm(denominators), reduced. Requires every p > 0 and the
/// sum exactly 1.
Kernel kernel_from_probs(const std::map<OutcomeLabel, Rational>& dist);

/// count(a ++ b) = count1(a) * count2(b).
Kernel tensor(const Kernel& a, const Kernel& b);

/// Divide every count by the gcd of all counts.
Kernel reduce(const Kernel& k);

using PowerResult = std::variant<Kernel, PowerKernel>;

/// Materializes when k.total^n <= materialize_limit, otherwise symbolic.
PowerResult power(const Kernel& k, unsigned long n, const BigInt& materialize_limit);

Rational probability(const Kernel& k, const LabelPredicate& predicate);
Rational probability(const Kernel& k, const OutcomeLabel& outcome);
Rational probability(const PowerKernel& pk, const FactorwiseQuery& query);
/// Arbitrary predicates over a symbolic power are not supported; always
/// throws UnsupportedQuery. Materialize first or phrase a FactorwiseQuery.
Rational probability(const PowerKernel& pk, const LabelPredicate& predicate);

/// Distribution of how many of the N factors satisfy `marginal`:
/// P(j) = C(N, j) p^j (1 - p)^(N - j). Keys with zero probability are kept
/// (they occur only when p is 0 or 1).
std::map<unsigned long, Rational> match_count_distribution(const PowerKernel& pk,
                                                           const LabelPredicate& marginal);

inline constexpr long kDefaultEnumerationCap = 1'000'000;

/// Every universe of the kernel, each outcome repeated count times, in
/// label order. Throws EnumerationLimit when total > cap.
std::vector<OutcomeLabel> enumerate_universes(const Kernel& k,
                                              const BigInt& cap = kDefaultEnumerationCap);

/// Reorders every label's components: new component i is old component
/// order[i]. `order` must be a permutation of [0, arity).
Kernel permute_components(const Kernel& k, const std::vector<std::size_t>& order);

/// Sums counts over the components not listed in `keep` (listed order is
/// preserved in the result labels). Result is reduced.
Kernel marginalize(const Kernel& k, const std::vector<std::size_t>& keep);

/// "3AuBu + 1AuBd + 1AdBu + 3AdBd"
std::string sum_notation(const Kernel& k);

}  // namespace multiverse
