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

#include "cli/cli.hpp"

#include <exception>
#include <ostream>

#include "cli/commands.hpp"
#include "multiverse/errors.hpp"

namespace multiverse::cli {

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-multiverse simulations: kernels, entanglement, frames, trees, "
               "ensembles and Life."};
  app.name(args.empty() ? "multiverse" : args.front());
  app.require_subcommand(1);

  Context ctx{out, err};
  Runner selected;
  add_entangle(app, ctx, selected);
  add_kernel(app, ctx, selected);
  add_sample(app, ctx, selected);
  add_frames(app, ctx, selected);
  add_tree(app, ctx, selected);
  add_arrow(app, ctx, selected);
  add_life(app, ctx, selected);

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return selected ? selected() : kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace multiverse::cli
