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

#include "multiverse/kernel_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace multiverse {

namespace {

constexpr std::string_view kHeaderPrefix = "#kernel v1 total=";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

void write_kernel(std::ostream& os, const Kernel& k) {
  os << kHeaderPrefix << k.total().get_str() << '\n';
  for (const auto& [label, count] : k.counts()) {
    os << label.str() << '\t' << count.get_str() << '\n';
  }
}

std::string format_kernel(const Kernel& k) {
  std::ostringstream os;
  write_kernel(os, k);
  return os.str();
}

Kernel read_kernel(std::istream& is) {
  std::string line;
  int line_no = 0;
  std::string_view header;
  while (std::getline(is, line)) {
    ++line_no;
    header = trim(line);
    if (!header.empty()) break;
  }
  if (header.substr(0, kHeaderPrefix.size()) != kHeaderPrefix) {
    throw ParseError("line " + std::to_string(line_no) + ": expected '#kernel v1 total=<T>' header");
  }
  const BigInt declared = parse_bigint(header.substr(kHeaderPrefix.size()));

  Kernel::Counts counts;
  while (std::getline(is, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected LABEL<TAB>COUNT");
    }
    OutcomeLabel label;
    BigInt count;
    try {
      label = OutcomeLabel::parse(trim(body.substr(0, tab)));
      count = parse_bigint(trim(body.substr(tab + 1)));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (count < 1) {
      throw ParseError("line " + std::to_string(line_no) + ": count must be >= 1");
    }
    if (!counts.emplace(std::move(label), std::move(count)).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate outcome");
    }
  }
  if (counts.empty()) {
    throw ParseError("kernel has no outcomes");
  }
  Kernel k = [&] {
    try {
      return Kernel::from_counts(std::move(counts));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }();
  if (k.total() != declared) {
    throw ParseError("header total " + declared.get_str() + " does not match sum of counts " +
                     k.total().get_str());
  }
  return k;
}

Kernel parse_kernel(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_kernel(is);
}

Kernel load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open kernel file '" + path + "'");
  }
  return read_kernel(in);
}

void write_power_kernel(std::ostream& os, const PowerKernel& pk) {
  os << "#power v1 exponent=" << pk.exponent() << " total=" << pk.total().get_str() << '\n';
  write_kernel(os, pk.base());
}

}  // namespace multiverse
