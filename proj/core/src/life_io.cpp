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

#include "multiverse/life_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "multiverse/errors.hpp"

namespace multiverse {

LifeState read_pattern(std::istream& is) {
  std::vector<CellCoord> cells;
  std::string line;
  std::int64_t q = 0;
  int line_no = 0;
  bool first = true;
  std::int64_t origin_p = 0, origin_q = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      if (line == "#life v1") continue;
    }
    if (line.rfind("!origin=", 0) == 0) {
      long long op = 0, oq = 0;
      char comma = 0;
      std::istringstream fields(line.substr(8));
      if (!(fields >> op >> comma >> oq) || comma != ',') {
        throw ParseError("line " + std::to_string(line_no) + ": malformed origin");
      }
      origin_p = op;
      origin_q = oq;
      continue;
    }
    if (!line.empty() && line.front() == '!') continue;
    std::size_t end = line.find_last_not_of(" \t");
    end = end == std::string::npos ? 0 : end + 1;
    for (std::size_t p = 0; p < end; ++p) {
      const char c = line[p];
      if (c == 'O') {
        cells.push_back({static_cast<std::int64_t>(p), q});
      } else if (c != '.') {
        throw ParseError("line " + std::to_string(line_no) + ": unexpected character '" +
                         std::string(1, c) + "' in pattern");
      }
    }
    ++q;
  }
  for (auto& c : cells) {
    c.p += origin_p;
    c.q += origin_q;
  }
  return LifeState(std::move(cells));
}

LifeState parse_pattern(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_pattern(is);
}

LifeState load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pattern file '" + path + "'");
  return read_pattern(in);
}

namespace {

void write_rows(std::ostream& os, const LifeState& state, const BoundingBox& box) {
  std::string row;
  for (std::int64_t q = box.min_q; q <= box.max_q; ++q) {
    row.assign(static_cast<std::size_t>(box.width()), '.');
    for (std::int64_t p = box.min_p; p <= box.max_p; ++p) {
      if (state.contains({p, q})) row[static_cast<std::size_t>(p - box.min_p)] = 'O';
    }
    os << row << '\n';
  }
}

}  // namespace

void write_pattern(std::ostream& os, const LifeState& state) {
  os << "#life v1\n";
  const auto box = state.bounds();
  if (!box) {
    os << "!empty\n";
    return;
  }
  os << "!origin=" << box->min_p << ',' << box->min_q << '\n';
  write_rows(os, state, *box);
}

void write_frame(std::ostream& os, const LifeState& state, std::size_t h,
                 const BoundingBox& frame) {
  os << "!h=" << h << '\n';
  write_rows(os, state, frame);
}

void write_population_csv(std::ostream& os, const BlockHistory& block) {
  os << "h,population\n";
  for (std::size_t h = 0; h < block.states.size(); ++h) {
    os << h << ',' << block.states[h].population() << '\n';
  }
}

}  // namespace multiverse
