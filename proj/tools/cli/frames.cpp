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

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/errors.hpp"
#include "multiverse/relativity.hpp"

namespace multiverse::cli {

namespace {

struct FramesOptions {
  std::string file;
  std::string velocities = "0";
  bool si = false;
};

// "#events v1" then one "label t x" per line.
std::vector<Event> load_events(const std::string& path, bool si) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open events file '" + path + "'");
  std::vector<Event> events;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      if (line != "#events v1") throw ParseError("line 1: expected '#events v1' header");
      header = true;
      continue;
    }
    if (line.front() == '#') continue;
    std::istringstream is(line);
    std::string label;
    double t = 0.0;
    double x = 0.0;
    std::string extra;
    if (!(is >> label >> t >> x) || (is >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'label t x'");
    }
    if (si) x /= kSpeedOfLight;  // metres -> light-seconds
    events.push_back(Event::make(t, x, label));
  }
  if (!header) throw ParseError("empty events file");
  if (events.size() < 2) throw ParseError("events file needs at least two events");
  return events;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int run_frames(const FramesOptions& o, const Context& ctx) {
  const auto events = load_events(o.file, o.si);
  std::vector<Boost> frames;
  for (const auto& text : split_list(o.velocities)) {
    double v = 0.0;
    try {
      v = std::stod(text);
    } catch (const std::exception&) {
      throw ParseError("bad velocity '" + text + "'");
    }
    frames.emplace_back(o.si ? v / kSpeedOfLight : v);
  }

  auto& out = ctx.out;
  out << "pair,interval,s2,reversing_velocity\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      const auto& a = events[i];
      const auto& b = events[j];
      const IntervalClass c = interval_class(a, b);
      out << a.label << '/' << b.label << ',' << to_string(c) << ','
          << num(interval_squared(a, b)) << ',';
      if (c == IntervalClass::Spacelike) {
        out << num(reversing_velocity(a, b).velocity());
      } else {
        out << "none";
      }
      out << '\n';
    }
  }
  out << '\n' << "v,first,second,order,t_first,t_second\n";
  for (const auto& frame : frames) {
    for (std::size_t i = 0; i < events.size(); ++i) {
      for (std::size_t j = i + 1; j < events.size(); ++j) {
        const auto& a = events[i];
        const auto& b = events[j];
        out << num(frame.velocity()) << ',' << a.label << ',' << b.label << ','
            << to_string(temporal_order(a, b, frame)) << ',' << num(boost_event(a, frame).t)
            << ',' << num(boost_event(b, frame).t) << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

void add_frames(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<FramesOptions>();
  auto* sub = app.add_subcommand("frames", "Event ordering across boosted frames (c = 1)");
  sub->add_option("file", opts->file, "Events file (#events v1, 'label t x' lines)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--v", opts->velocities, "Comma-separated frame velocities")->capture_default_str();
  sub->add_flag("--si", opts->si, "Read t in seconds, x in metres and velocities in m/s");
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_frames(*opts, ctx); }; });
}

}  // namespace multiverse::cli
