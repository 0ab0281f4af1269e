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

#include <algorithm>
#include <memory>
#include <numeric>
#include <ostream>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/kernel_io.hpp"
#include "multiverse/mwi_tree.hpp"

namespace multiverse::cli {

namespace {

struct TreeOptions {
  std::string file;
  std::vector<std::string> orders;
  bool all_orders = false;
};

std::string order_name(const TreeModel& model, const std::vector<std::size_t>& order) {
  std::string out;
  for (auto i : order) out += (out.empty() ? "" : ",") + model.events[i].name;
  return out;
}

int run_tree(const TreeOptions& o, const Context& ctx) {
  const TreeModel model = load_tree_model(o.file);
  const auto correlator = model.correlator();
  const std::size_t n = model.events.size();

  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (o.all_orders) {
    if (n > 8) throw InvalidArgument("--all-orders supports at most 8 events");
    auto perm = identity;
    do {
      orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (!o.orders.empty()) {
    for (const auto& text : o.orders) {
      std::vector<std::size_t> order;
      for (const auto& name : split_list(text)) order.push_back(model.index_of(name));
      orders.push_back(std::move(order));
    }
  } else {
    orders.push_back(identity);
    if (n > 1) orders.emplace_back(identity.rbegin(), identity.rend());
  }

  auto& out = ctx.out;
  std::vector<Kernel> filaments;
  for (const auto& order : orders) {
    const BranchTree tree = build_tree(model.events, order, *correlator);
    filaments.push_back(filament_decomposition(tree));
    out << "== order " << order_name(model, order) << " ==\n";
    write_tree(out, tree);
    out << "filaments:\n";
    write_kernel(out, filaments.back());
  }

  for (std::size_t i = 1; i < filaments.size(); ++i) {
    if (filaments[i] != filaments.front()) {
      out << "filament kernels DIFFER between " << order_name(model, orders.front()) << " and "
          << order_name(model, orders[i]) << '\n';
      ctx.err << "modeling fault: the conditional distributions do not describe one joint "
                 "distribution\n";
      return kExitPropertyViolation;
    }
  }
  out << "filament kernels agree across " << orders.size() << " viewer order"
      << (orders.size() == 1 ? "" : "s") << '\n';
  return kExitOk;
}

}  // namespace

void add_tree(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<TreeOptions>();
  auto* sub = app.add_subcommand("tree", "Branching trees per viewer order and their filaments");
  sub->add_option("file", opts->file, "Tree model file (#tree v1)")->required()->check(CLI::ExistingFile);
  sub->add_option("--order", opts->orders, "Viewer order as comma-separated event names (repeatable)");
  sub->add_flag("--all-orders", opts->all_orders, "Compare every permutation of the events");
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_tree(*opts, ctx); }; });
}

}  // namespace multiverse::cli
