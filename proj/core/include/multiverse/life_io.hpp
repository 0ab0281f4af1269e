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

// Plaintext Life patterns: rows of '.' (dead) and 'O' (live); lines that
// start with '!' are comments. An optional "#life v1" first line is the
// format header. The first non-comment character is cell (0, 0); p grows
// to the right and q grows downward.

#include <iosfwd>
#include <string>
#include <string_view>

#include "multiverse/life.hpp"

namespace multiverse {

/// Throws ParseError on any character other than '.', 'O' or trailing
/// whitespace in a pattern row.
LifeState read_pattern(std::istream& is);
LifeState parse_pattern(std::string_view text);
LifeState load_pattern(const std::string& path);

/// Writes the header, an "!origin=p,q" comment and the rows spanning the
/// state's bounding box. An empty state writes the header and "!empty".
void write_pattern(std::ostream& os, const LifeState& state);

/// One frame of a history: "!h=<h>" followed by rows spanning `frame`, so
/// that consecutive frames line up.
void write_frame(std::ostream& os, const LifeState& state, std::size_t h,
                 const BoundingBox& frame);

/// CSV with header `h,population`.
void write_population_csv(std::ostream& os, const BlockHistory& block);

}  // namespace multiverse
