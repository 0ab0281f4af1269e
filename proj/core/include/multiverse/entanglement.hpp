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

// Singlet-pair spin measurements computed by sequential collapse, in either
// measurement order.
//
// The first measurer sees Up with probability 1/2. Up collapses the partner
// electron to (first filter angle + 180); Down collapses it to the first
// filter angle itself. The second measurer then sees Up with probability
// cos^2((collapsed - second filter) / 2). Outcome labels always read
// Alice-then-Bob: Au/Ad, Bu/Bd.

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "multiverse/kernel.hpp"
#include "multiverse/rational.hpp"

namespace multiverse {

enum class MeasurementOrder { AliceFirst, BobFirst };
enum class Spin { Up, Down };

std::string to_string(MeasurementOrder order);

struct ExactMode {};
struct ApproxMode {
  BigInt max_denominator = 1'000'000;
};

class ExperimentConfig {
 public:
  using Mode = std::variant<ExactMode, ApproxMode>;

  /// Throws NotExactlyRepresentable in exact mode when the filter-angle
  /// difference is outside the exact whitelist, and InvalidArgument for an
  /// approximate-mode denominator bound < 1.
  ExperimentConfig(AngleDeg alice, AngleDeg bob, MeasurementOrder order, Mode mode = ExactMode{});

  AngleDeg alice_angle() const noexcept { return alice_; }
  AngleDeg bob_angle() const noexcept { return bob_; }
  MeasurementOrder order() const noexcept { return order_; }
  const Mode& mode() const noexcept { return mode_; }
  bool exact() const noexcept { return std::holds_alternative<ExactMode>(mode_); }

  AngleDeg first_angle() const noexcept;
  AngleDeg second_angle() const noexcept;

  ExperimentConfig with_order(MeasurementOrder order) const;

 private:
  AngleDeg alice_;
  AngleDeg bob_;
  MeasurementOrder order_;
  Mode mode_;
};

struct SpinOutcome {
  Spin alice;
  Spin bob;

  OutcomeLabel label() const;
  friend bool operator==(const SpinOutcome&, const SpinOutcome&) = default;
};

/// The four joint outcomes in the order AuBu, AuBd, AdBu, AdBd.
const std::array<SpinOutcome, 4>& all_spin_outcomes();

struct JointDistribution {
  /// Probability of each of the four outcomes (zeros included), in
  /// all_spin_outcomes() order.
  std::array<Rational, 4> probabilities;
  /// Kernel over the outcomes with nonzero probability.
  Kernel kernel;
  /// Approximate mode only: largest |rational - real| over the two
  /// conditional probabilities that were approximated.
  std::optional<double> approximation_error;
};

JointDistribution collapse_joint(const ExperimentConfig& config);

struct OrderInvarianceReport {
  bool agree;
  JointDistribution alice_first;
  JointDistribution bob_first;
};

OrderInvarianceReport order_invariance_check(AngleDeg alice, AngleDeg bob,
                                             ExperimentConfig::Mode mode = ExactMode{});

/// Spin angle of the electron still in flight after the first measurement.
/// Reported for display only; never used in probability computation.
AngleDeg intermediate_state(const ExperimentConfig& config, Spin first_outcome);

}  // namespace multiverse
