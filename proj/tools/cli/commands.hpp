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

// Subcommand registration. Each add_* function attaches a subcommand to the
// app; when that subcommand is parsed, its runner is stored in `selected`.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace multiverse::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

using Runner = std::function<int()>;

void add_entangle(CLI::App& app, const Context& ctx, Runner& selected);
void add_kernel(CLI::App& app, const Context& ctx, Runner& selected);
void add_sample(CLI::App& app, const Context& ctx, Runner& selected);
void add_frames(CLI::App& app, const Context& ctx, Runner& selected);
void add_tree(CLI::App& app, const Context& ctx, Runner& selected);
void add_arrow(CLI::App& app, const Context& ctx, Runner& selected);
void add_life(CLI::App& app, const Context& ctx, Runner& selected);

/// "0.5,0.6" -> {0.5, 0.6}
std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace multiverse::cli
