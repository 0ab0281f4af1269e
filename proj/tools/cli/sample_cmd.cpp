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
#include "multiverse/ensemble.hpp"
#include "multiverse/kernel_io.hpp"

namespace multiverse::cli {

namespace {

struct SampleOptions {
  std::string file;
  std::uint64_t n = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

int run_sample(const SampleOptions& o, const Context& ctx) {
  const Kernel k = load_kernel(o.file);
  write_sample_csv(ctx.out, sample_frequencies(k, o.n, o.seed, o.workers));
  return kExitOk;
}

}  // namespace

void add_sample(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<SampleOptions>();
  auto* sub = app.add_subcommand("sample", "Seeded draws from a kernel; CSV of empirical frequencies");
  sub->add_option("file", opts->file, "Kernel file")->required()->check(CLI::ExistingFile);
  sub->add_option("--n", opts->n, "Number of draws")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--seed", opts->seed, "Generator seed")->capture_default_str();
  sub->add_option("--workers", opts->workers, "Worker threads (output does not depend on this)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_sample(*opts, ctx); }; });
}

}  // namespace multiverse::cli
