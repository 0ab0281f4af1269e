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

#include "multiverse/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multiverse {

// --- OutcomeLabel ---------------------------------------------------------

bool OutcomeLabel::valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  for (char c : token) {
    if (c <= ' ' || c == '.' || c == ':' || c == ',' || c == '|' || c == '#' || c == '=' ||
        c == 0x7f) {
      return false;
    }
  }
  return true;
}

OutcomeLabel::OutcomeLabel(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) {
    throw InvalidArgument("outcome label must have at least one component");
  }
  for (const auto& t : tokens_) {
    if (!valid_token(t)) {
      throw InvalidArgument("invalid outcome token '" + t + "'");
    }
  }
}

OutcomeLabel OutcomeLabel::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
    if (!valid_token(piece)) {
      throw ParseError("invalid outcome label '" + std::string(text) + "'");
    }
    tokens.emplace_back(piece);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return OutcomeLabel(std::move(tokens));
}

OutcomeLabel OutcomeLabel::slice(std::size_t first, std::size_t count) const {
  if (first + count > tokens_.size() || count == 0) {
    throw InvalidArgument("label slice out of range");
  }
  return OutcomeLabel(std::vector<std::string>(tokens_.begin() + static_cast<long>(first),
                                               tokens_.begin() + static_cast<long>(first + count)));
}

std::string OutcomeLabel::str() const {
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i) out += '.';
    out += tokens_[i];
  }
  return out;
}

std::string OutcomeLabel::compact() const {
  std::string out;
  for (const auto& t : tokens_) out += t;
  return out;
}

OutcomeLabel concat(const OutcomeLabel& a, const OutcomeLabel& b) {
  OutcomeLabel out;
  out.tokens_.reserve(a.arity() + b.arity());
  out.tokens_ = a.tokens_;
  out.tokens_.insert(out.tokens_.end(), b.tokens_.begin(), b.tokens_.end());
  return out;
}

// --- Kernel ----------------------------------------------------------------

Kernel Kernel::from_counts(Counts counts) {
  if (counts.empty()) {
    throw InvalidArgument("kernel must have at least one outcome");
  }
  const std::size_t arity = counts.begin()->first.arity();
  BigInt total = 0;
  for (const auto& [label, count] : counts) {
    if (label.arity() == 0 || label.arity() != arity) {
      throw InvalidArgument("kernel labels must share one nonzero arity (got '" + label.str() +
                            "')");
    }
    if (count < 1) {
      throw InvalidArgument("kernel count for '" + label.str() + "' must be >= 1");
    }
    total += count;
  }
  return Kernel(std::move(counts), std::move(total));
}

Kernel Kernel::from_counts(std::initializer_list<std::pair<OutcomeLabel, long>> counts) {
  Counts c;
  for (const auto& [label, n] : counts) {
    if (!c.emplace(label, BigInt(n)).second) {
      throw InvalidArgument("duplicate outcome '" + label.str() + "'");
    }
  }
  return from_counts(std::move(c));
}

BigInt Kernel::count(const OutcomeLabel& label) const {
  auto it = counts_.find(label);
  return it == counts_.end() ? BigInt(0) : it->second;
}

namespace {

BigInt counts_gcd(const Kernel::Counts& counts) {
  BigInt g = 0;
  for (const auto& [label, count] : counts) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), count.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

bool Kernel::is_canonical() const { return counts_gcd(counts_) == 1; }

// --- PowerKernel -----------------------------------------------------------

PowerKernel::PowerKernel(Kernel base, unsigned long exponent)
    : base_(std::move(base)), exponent_(exponent) {
  if (exponent_ == 0) {
    throw InvalidArgument("tensor power exponent must be >= 1");
  }
}

BigInt PowerKernel::total() const {
  BigInt t;
  mpz_pow_ui(t.get_mpz_t(), base_.total().get_mpz_t(), exponent_);
  return t;
}

Kernel PowerKernel::materialize(const BigInt& limit) const {
  if (total() > limit) {
    throw EnumerationLimit("tensor power total " + total().get_str() + " exceeds limit " +
                           limit.get_str());
  }
  Kernel out = base_;
  for (unsigned long i = 1; i < exponent_; ++i) out = tensor(out, base_);
  return out;
}

LabelPredicate FactorwiseQuery::flatten(std::size_t factor_arity, unsigned long exponent) const {
  if (factors.empty() || (factors.size() != 1 && factors.size() != exponent)) {
    throw InvalidArgument("factorwise query needs 1 or " + std::to_string(exponent) +
                          " predicates, got " + std::to_string(factors.size()));
  }
  return [preds = factors, factor_arity, exponent](const OutcomeLabel& label) {
    if (label.arity() != factor_arity * exponent) return false;
    for (unsigned long i = 0; i < exponent; ++i) {
      const auto& pred = preds.size() == 1 ? preds.front() : preds[i];
      if (!pred(label.slice(i * factor_arity, factor_arity))) return false;
    }
    return true;
  };
}

// --- operations ------------------------------------------------------------

Kernel kernel_from_probs(const std::map<OutcomeLabel, Rational>& dist) {
  if (dist.empty()) {
    throw InvalidArgument("distribution is empty");
  }
  Rational sum;
  BigInt lcm = 1;
  for (const auto& [label, p] : dist) {
    if (p.sign() <= 0) {
      throw InvalidArgument("probability of '" + label.str() + "' must be > 0, got " + p.str());
    }
    sum += p;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.den().get_mpz_t());
  }
  if (sum != Rational(1)) {
    throw InvalidArgument("probabilities sum to " + sum.str() + ", not 1");
  }
  Kernel::Counts counts;
  for (const auto& [label, p] : dist) {
    BigInt c = p.num() * lcm;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.den().get_mpz_t());
    counts.emplace(label, std::move(c));
  }
  return reduce(Kernel::from_counts(std::move(counts)));
}

Kernel tensor(const Kernel& a, const Kernel& b) {
  Kernel::Counts counts;
  for (const auto& [la, ca] : a.counts()) {
    for (const auto& [lb, cb] : b.counts()) {
      counts.emplace(concat(la, lb), BigInt(ca * cb));
    }
  }
  return Kernel::from_counts(std::move(counts));
}

Kernel reduce(const Kernel& k) {
  BigInt g = counts_gcd(k.counts());
  if (g == 1) return k;
  Kernel::Counts counts;
  for (const auto& [label, count] : k.counts()) {
    BigInt c;
    mpz_divexact(c.get_mpz_t(), count.get_mpz_t(), g.get_mpz_t());
    counts.emplace(label, std::move(c));
  }
  return Kernel::from_counts(std::move(counts));
}

PowerResult power(const Kernel& k, unsigned long n, const BigInt& materialize_limit) {
  PowerKernel pk(k, n);
  if (pk.total() <= materialize_limit) {
    return pk.materialize(materialize_limit);
  }
  return pk;
}

Rational probability(const Kernel& k, const LabelPredicate& predicate) {
  BigInt hits = 0;
  for (const auto& [label, count] : k.counts()) {
    if (predicate(label)) hits += count;
  }
  return Rational(std::move(hits), k.total());
}

Rational probability(const Kernel& k, const OutcomeLabel& outcome) {
  return Rational(k.count(outcome), k.total());
}

Rational probability(const PowerKernel& pk, const FactorwiseQuery& query) {
  const auto& preds = query.factors;
  if (preds.empty() || (preds.size() != 1 && preds.size() != pk.exponent())) {
    throw InvalidArgument("factorwise query needs 1 or " + std::to_string(pk.exponent()) +
                          " predicates, got " + std::to_string(preds.size()));
  }
  if (preds.size() == 1) {
    return pow(probability(pk.base(), preds.front()), pk.exponent());
  }
  Rational p(1);
  for (const auto& pred : preds) {
    p *= probability(pk.base(), pred);
    if (p.is_zero()) break;
  }
  return p;
}

Rational probability(const PowerKernel& pk, const LabelPredicate&) {
  throw UnsupportedQuery("arbitrary predicates over a symbolic tensor power (N=" +
                         std::to_string(pk.exponent()) +
                         ") are unsupported; use a per-factor query or materialize");
}

std::map<unsigned long, Rational> match_count_distribution(const PowerKernel& pk,
                                                           const LabelPredicate& marginal) {
  const Rational p = probability(pk.base(), marginal);
  const Rational q = Rational(1) - p;
  const unsigned long n = pk.exponent();
  std::map<unsigned long, Rational> dist;
  for (unsigned long j = 0; j <= n; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, j);
    dist.emplace(j, Rational(std::move(binom)) * pow(p, j) * pow(q, n - j));
  }
  return dist;
}

std::vector<OutcomeLabel> enumerate_universes(const Kernel& k, const BigInt& cap) {
  if (k.total() > cap) {
    throw EnumerationLimit("kernel total " + k.total().get_str() + " exceeds enumeration cap " +
                           cap.get_str());
  }
  std::vector<OutcomeLabel> out;
  out.reserve(k.total().get_ui());
  for (const auto& [label, count] : k.counts()) {
    for (BigInt i = 0; i < count; ++i) out.push_back(label);
  }
  return out;
}

Kernel permute_components(const Kernel& k, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != k.arity()) {
      throw InvalidArgument("component order is not a permutation of the label arity");
    }
  }
  Kernel::Counts counts;
  for (const auto& [label, count] : k.counts()) {
    std::vector<std::string> tokens;
    tokens.reserve(order.size());
    for (auto i : order) tokens.push_back(label[i]);
    counts.emplace(OutcomeLabel(std::move(tokens)), count);
  }
  return Kernel::from_counts(std::move(counts));
}

Kernel marginalize(const Kernel& k, const std::vector<std::size_t>& keep) {
  if (keep.empty()) {
    throw InvalidArgument("marginal must keep at least one component");
  }
  Kernel::Counts counts;
  for (const auto& [label, count] : k.counts()) {
    std::vector<std::string> tokens;
    tokens.reserve(keep.size());
    for (auto i : keep) {
      if (i >= label.arity()) throw InvalidArgument("marginal component out of range");
      tokens.push_back(label[i]);
    }
    counts[OutcomeLabel(std::move(tokens))] += count;
  }
  return reduce(Kernel::from_counts(std::move(counts)));
}

std::string sum_notation(const Kernel& k) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, count] : k.counts()) {
    if (!first) os << " + ";
    first = false;
    os << count.get_str() << label.compact();
  }
  return os.str();
}

}  // namespace multiverse
