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

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/life.hpp"
#include "multiverse/life_io.hpp"

namespace multiverse::cli {

namespace {

struct LifeOptions {
  std::string file;
  std::size_t horizon = 0;
  bool detect = false;
  std::size_t max_h = 1000;
  bool emit_states = false;
  std::size_t budget = kDefaultCellBudget;
};

int run_life(const LifeOptions& o, const Context& ctx) {
  const LifeState initial = load_pattern(o.file);
  auto& out = ctx.out;
  if (o.detect) {
    if (auto period = detect_period(initial, o.max_h, o.budget)) {
      out << "period=" << period->period << " translation=(" << period->dp << ',' << period->dq
          << ")\n";
    } else {
      out << "not-periodic max_h=" << o.max_h << '\n';
    }
  }
  const BlockHistory block = run_block(initial, o.horizon, o.budget);
  if (o.emit_states) {
    out << "#life v1\n";
    if (auto frame = block.bounds()) {
      out << "!origin=" << frame->min_p << ',' << frame->min_q << '\n';
      for (std::size_t h = 0; h < block.states.size(); ++h) {
        write_frame(out, block.states[h], h, *frame);
      }
    } else {
      for (std::size_t h = 0; h < block.states.size(); ++h) out << "!h=" << h << "\n!empty\n";
    }
  }
  write_population_csv(out, block);
  return kExitOk;
}

}  // namespace

void add_life(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<LifeOptions>();
  auto* sub = app.add_subcommand("life", "Run a Life pattern as a static block history");
  sub->add_option("file", opts->file, "Plaintext pattern ('.'/'O', '!' comments)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--horizon", opts->horizon, "Last generation h")->capture_default_str();
  sub->add_flag("--detect-period", opts->detect, "Report period and translation");
  sub->add_option("--max-h", opts->max_h, "Search bound for --detect-period")->capture_default_str();
  sub->add_flag("--emit-states", opts->emit_states, "Print every frame over a shared bounding box");
  sub->add_option("--budget", opts->budget, "Maximum live cells per generation")->capture_default_str();
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_life(*opts, ctx); }; });
}

}  // namespace multiverse::cli
