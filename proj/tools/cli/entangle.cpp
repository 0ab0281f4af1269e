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

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "multiverse/entanglement.hpp"
#include "multiverse/kernel_io.hpp"

namespace multiverse::cli {

namespace {

struct EntangleOptions {
  long long alice = 0;
  long long bob = 120;
  std::string order = "alice-first";
  std::string mode = "exact";
  std::string max_denominator = "1000000";
  std::string kernel_out;
};

std::string listed_kernel(const JointDistribution& d) {
  std::string out;
  const auto& outcomes = all_spin_outcomes();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const BigInt c = d.kernel.count(outcomes[i].label());
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += c.get_str() + outcomes[i].label().compact();
  }
  return out + " (total " + d.kernel.total().get_str() + ")";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

int run_entangle(const EntangleOptions& o, const Context& ctx) {
  ExperimentConfig::Mode mode;
  if (o.mode == "exact") {
    mode = ExactMode{};
  } else {
    mode = ApproxMode{parse_bigint(o.max_denominator)};
  }
  const AngleDeg alice(o.alice);
  const AngleDeg bob(o.bob);
  const auto report = order_invariance_check(alice, bob, mode);
  const ExperimentConfig alice_first(alice, bob, MeasurementOrder::AliceFirst, mode);
  const ExperimentConfig bob_first = alice_first.with_order(MeasurementOrder::BobFirst);

  auto& out = ctx.out;
  out << "alice=" << alice.degrees() << " bob=" << bob.degrees() << " mode=" << o.mode;
  if (o.mode == "approx") out << " max_denominator=" << o.max_denominator;
  out << '\n';
  out << pad("outcome", 9) << pad("alice-first", 14) << pad("bob-first", 14) << "decimal\n";
  const auto& outcomes = all_spin_outcomes();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Rational& pa = report.alice_first.probabilities[i];
    const Rational& pb = report.bob_first.probabilities[i];
    char dec[32];
    std::snprintf(dec, sizeof(dec), "%.6f", pa.to_double());
    out << pad(outcomes[i].label().compact(), 9) << pad(pa.str(), 14) << pad(pb.str(), 14) << dec
        << '\n';
  }
  out << "kernel alice-first: " << listed_kernel(report.alice_first) << '\n';
  out << "kernel bob-first:   " << listed_kernel(report.bob_first) << '\n';
  if (report.alice_first.approximation_error) {
    char err[64];
    std::snprintf(err, sizeof(err), "%.3e", *report.alice_first.approximation_error);
    out << "approximation error bound: " << err << '\n';
  }
  out << "in-flight alice-first: Au -> "
      << intermediate_state(alice_first, Spin::Up).degrees() << " toward Bob; Ad -> "
      << intermediate_state(alice_first, Spin::Down).degrees() << " toward Bob\n";
  out << "in-flight bob-first:   Bu -> " << intermediate_state(bob_first, Spin::Up).degrees()
      << " toward Alice; Bd -> " << intermediate_state(bob_first, Spin::Down).degrees()
      << " toward Alice\n";

  if (!o.kernel_out.empty()) {
    std::ofstream f(o.kernel_out);
    if (!f) throw ParseError("cannot write '" + o.kernel_out + "'");
    write_kernel(f, o.order == "bob-first" ? report.bob_first.kernel : report.alice_first.kernel);
  }

  if (!report.agree) {
    out << "orders DISAGREE\n";
    ctx.err << "property violation: joint distributions differ between measurement orders\n";
    return kExitPropertyViolation;
  }
  out << "orders agree\n";
  return kExitOk;
}

}  // namespace

void add_entangle(CLI::App& app, const Context& ctx, Runner& selected) {
  auto opts = std::make_shared<EntangleOptions>();
  auto* sub = app.add_subcommand("entangle", "Singlet-pair joint distribution in both measurement orders");
  sub->add_option("--alice", opts->alice, "Alice's filter angle in degrees")->capture_default_str();
  sub->add_option("--bob", opts->bob, "Bob's filter angle in degrees")->capture_default_str();
  sub->add_option("--mode", opts->mode, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
  sub->add_option("--max-denominator", opts->max_denominator,
                  "Denominator bound in approx mode")
      ->capture_default_str();
  sub->add_option("--order", opts->order, "Which order's kernel --kernel-out writes")
      ->check(CLI::IsMember({"alice-first", "bob-first"}))
      ->capture_default_str();
  sub->add_option("--kernel-out", opts->kernel_out, "Write the joint kernel to this file");
  sub->callback([opts, ctx, &selected] { selected = [opts, ctx] { return run_entangle(*opts, ctx); }; });
}

}  // namespace multiverse::cli
