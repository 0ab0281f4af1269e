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

// Kernel interchange text format:
//
//   #kernel v1 total=8
//   Ad.Bd	3
//   Ad.Bu	1
//   ...
//
// One outcome per line, LABEL<TAB>COUNT, sorted by label. Blank lines are
// ignored on input. Counts are written verbatim (not reduced).

#include <iosfwd>
#include <string>
#include <string_view>

#include "multiverse/kernel.hpp"

namespace multiverse {

void write_kernel(std::ostream& os, const Kernel& k);
std::string format_kernel(const Kernel& k);

/// Throws ParseError on a missing/unknown header, a total mismatch,
/// duplicate labels, or malformed lines.
Kernel read_kernel(std::istream& is);
Kernel parse_kernel(std::string_view text);
Kernel load_kernel(const std::string& path);

/// Description of a symbolic power, with the base in kernel format:
///
///   #power v1 exponent=100 total=<8^100>
///   #kernel v1 total=8
///   ...
void write_power_kernel(std::ostream& os, const PowerKernel& pk);

}  // namespace multiverse
