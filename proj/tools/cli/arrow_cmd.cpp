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
#include <optional>
#include <ostream>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/ensemble.hpp"
#include "multiverse/kernel_io.hpp"

namespace multiverse::cli {

namespace {

struct ArrowOptions {
  std::string file;
  std::string m = "1024";
  std::size_t steps = 3;
  std::optional<std::uint64_t> seed;
};

int run_arrow(const ArrowOptions& o, const Context& ctx) {
  const Kernel k = load_kernel(o.file);
  const BigInt m = parse_bigint(o.m);
  if (!o.seed) {
    write_arrow_csv(ctx.out, arrow_of_time(k, m, o.steps));
    return kExitOk;
  }
  std::vector<ArrowRow> rows;
  Ensemble ens = Ensemble::init(m);
  rows.push_back({0, history_entropy(ens), ens.num_classes()});
  for (std::size_t s = 1; s <= o.steps; ++s) {
    ens = ensemble_step(ens, k, *o.seed);
    rows.push_back({s, history_entropy(ens), ens.num_classes()});
  }
  write_arrow_csv(ctx.out, rows);
  return kExitOk;
}

}  // namespace

void add_arrow(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<ArrowOptions>();
  auto* sub = app.add_subcommand("arrow", "History entropy of a diverging ensemble, per step");
  sub->add_option("file", opts->file, "Kernel file")->required()->check(CLI::ExistingFile);
  sub->add_option("--m", opts->m, "Ensemble size")->capture_default_str();
  sub->add_option("--steps", opts->steps, "Number of events (time horizon)")->capture_default_str();
  sub->add_option("--seed", opts->seed, "Step stochastically with this seed instead of partitioning");
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_arrow(*opts, ctx); }; });
}

}  // namespace multiverse::cli
