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

#include "multiverse/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "multiverse/rng.hpp"

namespace multiverse {

namespace {

std::string describe(const UniverseHistory& h) {
  if (h.empty()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ' ';
    out += h[i].str();
  }
  return out + "]";
}

// Cumulative counts for inverse-CDF sampling over a kernel whose total
// fits in 64 bits.
struct Sampler {
  std::vector<OutcomeLabel> labels;
  std::vector<std::uint64_t> upper;  // exclusive cumulative bounds
  std::uint64_t total = 0;

  explicit Sampler(const Kernel& k) {
    if (!k.total().fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
      throw InvalidArgument("kernel total " + k.total().get_str() + " is too large to sample");
    }
    for (const auto& [label, count] : k.counts()) {
      total += count.get_ui();
      labels.push_back(label);
      upper.push_back(total);
    }
  }

  std::size_t draw(StreamRng& rng) const {
    const std::uint64_t u = rng.below(total);
    return static_cast<std::size_t>(std::upper_bound(upper.begin(), upper.end(), u) -
                                    upper.begin());
  }
};

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

Ensemble Ensemble::init(const BigInt& m) {
  if (m < 1) throw InvalidArgument("ensemble size must be >= 1");
  Classes classes;
  classes.emplace(UniverseHistory{}, m);
  return Ensemble(std::move(classes), m, 0);
}

Ensemble ensemble_step(const Ensemble& ens, const Kernel& kernel) {
  const Kernel k = reduce(kernel);
  const BigInt& total = k.total();

  // Least s such that total divides s * n for every class.
  BigInt scale = 1;
  const UniverseHistory* offender = nullptr;
  const BigInt* offender_size = nullptr;
  for (const auto& [history, n] : ens.classes()) {
    if (!mpz_divisible_p(n.get_mpz_t(), total.get_mpz_t())) {
      if (!offender) {
        offender = &history;
        offender_size = &n;
      }
      BigInt g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), total.get_mpz_t());
      BigInt need = total / g;
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), need.get_mpz_t());
    }
  }
  if (offender) {
    BigInt suggested = ens.size() * scale;
    throw IndivisibleEnsemble("class " + describe(*offender) + " of size " +
                              offender_size->get_str() + " is not divisible by kernel total " +
                              total.get_str() + "; least sufficient ensemble size is " +
                              suggested.get_str());
  }

  Ensemble::Classes next;
  for (const auto& [history, n] : ens.classes()) {
    const BigInt share = n / total;
    for (const auto& [label, count] : k.counts()) {
      UniverseHistory h = history;
      h.push_back(label);
      next.emplace(std::move(h), BigInt(share * count));
    }
  }
  return Ensemble(std::move(next), ens.size(), ens.steps() + 1);
}

Ensemble ensemble_step(const Ensemble& ens, const Kernel& k, std::uint64_t seed) {
  if (!ens.size().fits_ulong_p()) {
    throw InvalidArgument("stochastic stepping needs an ensemble size below 2^64");
  }
  const Sampler sampler(k);
  StreamRng rng(seed, ens.steps());
  Ensemble::Classes next;
  for (const auto& [history, n] : ens.classes()) {
    std::vector<std::uint64_t> hits(sampler.labels.size(), 0);
    for (unsigned long i = 0, m = n.get_ui(); i < m; ++i) ++hits[sampler.draw(rng)];
    for (std::size_t j = 0; j < hits.size(); ++j) {
      if (hits[j] == 0) continue;
      UniverseHistory h = history;
      h.push_back(sampler.labels[j]);
      next.emplace(std::move(h), BigInt(static_cast<unsigned long>(hits[j])));
    }
  }
  return Ensemble(std::move(next), ens.size(), ens.steps() + 1);
}

double history_entropy(const Ensemble& ens) {
  double h = 0.0;
  for (const auto& [history, n] : ens.classes()) {
    const double p = mpq_class(n, ens.size()).get_d();
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

std::vector<ArrowRow> arrow_of_time(const Kernel& k, const BigInt& m, std::size_t steps) {
  std::vector<ArrowRow> rows;
  Ensemble ens = Ensemble::init(m);
  rows.push_back({0, history_entropy(ens), ens.num_classes()});
  for (std::size_t s = 1; s <= steps; ++s) {
    ens = ensemble_step(ens, k);
    rows.push_back({s, history_entropy(ens), ens.num_classes()});
  }
  return rows;
}

void write_arrow_csv(std::ostream& os, const std::vector<ArrowRow>& rows) {
  os << "step,entropy_bits,num_classes\n";
  for (const auto& r : rows) {
    os << r.step << ',' << format_double("%.10f", r.entropy_bits) << ',' << r.num_classes << '\n';
  }
}

SampleResult sample_frequencies(const Kernel& k, std::uint64_t n, std::uint64_t seed,
                                unsigned workers) {
  if (n < 1) throw InvalidArgument("sample size must be >= 1");
  const Sampler sampler(k);
  const std::uint64_t shards = (n + kSampleShardSize - 1) / kSampleShardSize;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(shards, 1024))));

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(sampler.labels.size(), 0));
  auto run = [&](unsigned w) {
    auto& hits = partial[w];
    for (std::uint64_t shard = w; shard < shards; shard += workers) {
      StreamRng rng(seed, shard);
      const std::uint64_t begin = shard * kSampleShardSize;
      const std::uint64_t end = std::min(n, begin + kSampleShardSize);
      for (std::uint64_t i = begin; i < end; ++i) ++hits[sampler.draw(rng)];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  SampleResult result{n, {}};
  for (std::size_t j = 0; j < sampler.labels.size(); ++j) {
    std::uint64_t count = 0;
    for (const auto& p : partial) count += p[j];
    result.rows.push_back({sampler.labels[j], count,
                           static_cast<double>(count) / static_cast<double>(n),
                           probability(k, sampler.labels[j])});
  }
  return result;
}

void write_sample_csv(std::ostream& os, const SampleResult& result) {
  os << "outcome,count,frequency,exact_probability\n";
  for (const auto& r : result.rows) {
    os << r.outcome.str() << ',' << r.count << ',' << format_double("%.6f", r.frequency) << ','
       << r.exact_probability << '\n';
  }
}

}  // namespace multiverse
