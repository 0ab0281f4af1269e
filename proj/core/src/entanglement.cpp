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

#include "multiverse/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace multiverse {

std::string to_string(MeasurementOrder order) {
  return order == MeasurementOrder::AliceFirst ? "alice-first" : "bob-first";
}

ExperimentConfig::ExperimentConfig(AngleDeg alice, AngleDeg bob, MeasurementOrder order, Mode mode)
    : alice_(alice), bob_(bob), order_(order), mode_(std::move(mode)) {
  if (exact()) {
    AngleDeg delta = alice_ - bob_;
    if (!is_exact_half_angle(delta)) {
      throw NotExactlyRepresentable(
          "angle difference " + std::to_string(delta.degrees()) +
          " has no exact rational cos^2 of the half angle; use approximate mode");
    }
  } else if (std::get<ApproxMode>(mode_).max_denominator < 1) {
    throw InvalidArgument("max_denominator must be >= 1");
  }
}

AngleDeg ExperimentConfig::first_angle() const noexcept {
  return order_ == MeasurementOrder::AliceFirst ? alice_ : bob_;
}

AngleDeg ExperimentConfig::second_angle() const noexcept {
  return order_ == MeasurementOrder::AliceFirst ? bob_ : alice_;
}

ExperimentConfig ExperimentConfig::with_order(MeasurementOrder order) const {
  return ExperimentConfig(alice_, bob_, order, mode_);
}

OutcomeLabel SpinOutcome::label() const {
  return OutcomeLabel({alice == Spin::Up ? "Au" : "Ad", bob == Spin::Up ? "Bu" : "Bd"});
}

const std::array<SpinOutcome, 4>& all_spin_outcomes() {
  static const std::array<SpinOutcome, 4> outcomes = {{
      {Spin::Up, Spin::Up},
      {Spin::Up, Spin::Down},
      {Spin::Down, Spin::Up},
      {Spin::Down, Spin::Down},
  }};
  return outcomes;
}

AngleDeg intermediate_state(const ExperimentConfig& config, Spin first_outcome) {
  AngleDeg filter = config.first_angle();
  return first_outcome == Spin::Up ? filter + AngleDeg(180) : filter;
}

JointDistribution collapse_joint(const ExperimentConfig& config) {
  const Rational half(1, 2);
  std::optional<double> worst_error;

  // P(second Up | first Up). After a first Up the partner points at
  // first + 180, so the relevant difference is first + 180 - second. The
  // first-Down conditional is the exact complement, which keeps the pair
  // summing to 1 in approximate mode as well.
  const AngleDeg delta = config.first_angle() + AngleDeg(180) - config.second_angle();
  Rational up_given_up;
  if (config.exact()) {
    up_given_up = half_angle_cos2_exact(delta);
  } else {
    const double real = half_angle_cos2(delta);
    up_given_up = rational_approx(real, std::get<ApproxMode>(config.mode()).max_denominator);
    worst_error = std::abs(up_given_up.to_double() - real);
  }
  const Rational up_given_down = Rational(1) - up_given_up;

  std::array<Rational, 4> probs;
  const auto& outcomes = all_spin_outcomes();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    const bool alice_first = config.order() == MeasurementOrder::AliceFirst;
    const Spin first = alice_first ? o.alice : o.bob;
    const Spin second = alice_first ? o.bob : o.alice;
    const Rational& up = first == Spin::Up ? up_given_up : up_given_down;
    probs[i] = half * (second == Spin::Up ? up : Rational(1) - up);
  }

  std::map<OutcomeLabel, Rational> dist;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!probs[i].is_zero()) dist.emplace(outcomes[i].label(), probs[i]);
  }
  return JointDistribution{probs, kernel_from_probs(dist), worst_error};
}

OrderInvarianceReport order_invariance_check(AngleDeg alice, AngleDeg bob,
                                             ExperimentConfig::Mode mode) {
  ExperimentConfig a(alice, bob, MeasurementOrder::AliceFirst, mode);
  auto first = collapse_joint(a);
  auto second = collapse_joint(a.with_order(MeasurementOrder::BobFirst));
  const bool agree = first.kernel == second.kernel && first.probabilities == second.probabilities;
  return {agree, std::move(first), std::move(second)};
}

}  // namespace multiverse
