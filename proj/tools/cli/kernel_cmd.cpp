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

#include <memory>
#include <ostream>
#include <set>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/kernel.hpp"
#include "multiverse/kernel_io.hpp"

namespace multiverse::cli {

namespace {

struct KernelOptions {
  std::vector<std::string> files;
  std::string op = "show";
  unsigned long n = 1;
  std::string query;
  std::string limit = "1000000";
};

// Per-factor predicate syntax:
//   match          every token of the factor ends in the same character
//                  (Au.Bu and Ad.Bd match, Au.Bd does not)
//   always         true
//   L1|L2|...      the factor label is one of the listed labels
LabelPredicate parse_marginal(const std::string& spec) {
  if (spec == "match") {
    return [](const OutcomeLabel& l) {
      const char last = l[0].back();
      for (const auto& t : l.tokens()) {
        if (t.back() != last) return false;
      }
      return true;
    };
  }
  if (spec == "always") {
    return [](const OutcomeLabel&) { return true; };
  }
  std::set<OutcomeLabel> allowed;
  for (const auto& piece : split_list(spec, '|')) allowed.insert(OutcomeLabel::parse(piece));
  return [allowed](const OutcomeLabel& l) { return allowed.contains(l); };
}

// Query syntax, evaluated over the N-th tensor power (N from --n):
//   all-match        every factor satisfies `match`
//   every:SPEC       every factor satisfies SPEC
//   count:J:SPEC     exactly J factors satisfy SPEC
//   dist:SPEC        full distribution of how many factors satisfy SPEC
//   SPEC             (N = 1 only) the label satisfies SPEC
int run_query(const Kernel& k, const KernelOptions& o, std::ostream& out) {
  const PowerKernel pk(k, o.n);
  std::string q = o.query;
  if (q.empty()) throw InvalidArgument("--op prob needs --query");
  if (q == "all-match") q = "every:match";

  if (q.rfind("every:", 0) == 0) {
    out << probability(pk, FactorwiseQuery{{parse_marginal(q.substr(6))}}) << '\n';
    return kExitOk;
  }
  if (q.rfind("count:", 0) == 0) {
    auto parts = split_list(q.substr(6), ':');
    if (parts.size() != 2) throw InvalidArgument("expected count:J:SPEC");
    const unsigned long j = std::stoul(parts[0]);
    auto dist = match_count_distribution(pk, parse_marginal(parts[1]));
    auto it = dist.find(j);
    out << (it == dist.end() ? Rational(0) : it->second) << '\n';
    return kExitOk;
  }
  if (q.rfind("dist:", 0) == 0) {
    for (const auto& [j, p] : match_count_distribution(pk, parse_marginal(q.substr(5)))) {
      out << j << '\t' << p << '\n';
    }
    return kExitOk;
  }
  if (o.n != 1) {
    throw UnsupportedQuery("query '" + q + "' is not per-factor; use every:, count: or dist:");
  }
  out << probability(k, parse_marginal(q)) << '\n';
  return kExitOk;
}

int run_kernel(const KernelOptions& o, const Context& ctx) {
  std::vector<Kernel> kernels;
  for (const auto& f : o.files) kernels.push_back(load_kernel(f));
  auto& out = ctx.out;

  auto single = [&]() -> const Kernel& {
    if (kernels.size() != 1) throw InvalidArgument("--op " + o.op + " takes exactly one kernel file");
    return kernels.front();
  };

  if (o.op == "show") {
    write_kernel(out, single());
  } else if (o.op == "tensor") {
    Kernel acc = kernels.front();
    for (std::size_t i = 1; i < kernels.size(); ++i) acc = tensor(acc, kernels[i]);
    write_kernel(out, acc);
  } else if (o.op == "reduce") {
    write_kernel(out, reduce(single()));
  } else if (o.op == "power") {
    auto result = power(single(), o.n, parse_bigint(o.limit));
    if (auto* k = std::get_if<Kernel>(&result)) {
      write_kernel(out, *k);
    } else {
      write_power_kernel(out, std::get<PowerKernel>(result));
    }
  } else if (o.op == "prob") {
    return run_query(single(), o, out);
  } else if (o.op == "universes") {
    for (const auto& u : enumerate_universes(single(), parse_bigint(o.limit))) {
      out << u.str() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

void add_kernel(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<KernelOptions>();
  auto* sub = app.add_subcommand("kernel", "Kernel algebra on kernel files");
  sub->add_option("files", opts->files, "Kernel files (#kernel v1)")->required()->check(CLI::ExistingFile);
  sub->add_option("--op", opts->op, "show, tensor, power, reduce, prob or universes")
      ->check(CLI::IsMember({"show", "tensor", "power", "reduce", "prob", "universes"}))
      ->capture_default_str();
  sub->add_option("--n", opts->n, "Tensor power exponent")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--query", opts->query,
                  "Probability query: all-match, every:SPEC, count:J:SPEC, dist:SPEC or SPEC "
                  "(SPEC is match, always or L1|L2|...)");
  sub->add_option("--limit", opts->limit,
                  "Materialization limit for power / enumeration cap for universes")
      ->capture_default_str();
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_kernel(*opts, ctx); }; });
}

}  // namespace multiverse::cli
