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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace multiverse;

namespace {

const Kernel& anticorrelated() {
  static const Kernel k = Kernel::from_counts({{{"Au", "Bd"}, 1}, {{"Ad", "Bu"}, 1}});
  return k;
}

ExperimentConfig config(int a, int b, MeasurementOrder order,
                        ExperimentConfig::Mode mode = ExactMode{}) {
  return ExperimentConfig(AngleDeg(a), AngleDeg(b), order, mode);
}

}  // namespace

TEST(collapse_joint, alice_first_three_eighths) {
  const auto j = collapse_joint(config(0, 120, MeasurementOrder::AliceFirst));
  EXPECT_EQ(j.kernel, oracle::k_ab());
  EXPECT_EQ(j.probabilities[0], Rational(3, 8));
  EXPECT_EQ(j.probabilities[1], Rational(1, 8));
  EXPECT_EQ(j.probabilities[2], Rational(1, 8));
  EXPECT_EQ(j.probabilities[3], Rational(3, 8));
  EXPECT_FALSE(j.approximation_error.has_value());
}

TEST(collapse_joint, bob_first_identical) {
  EXPECT_EQ(collapse_joint(config(0, 120, MeasurementOrder::BobFirst)).kernel, oracle::k_ab());
}

TEST(collapse_joint, equal_angles_anticorrelate) {
  for (auto order : {MeasurementOrder::AliceFirst, MeasurementOrder::BobFirst}) {
    const auto j = collapse_joint(config(0, 0, order));
    EXPECT_EQ(j.kernel, anticorrelated());
    EXPECT_EQ(j.probabilities[0], Rational(0));
  }
}

TEST(collapse_joint, exact_mode_rejects_off_whitelist) {
  EXPECT_THROW(config(0, 50, MeasurementOrder::AliceFirst), NotExactlyRepresentable);
  EXPECT_NO_THROW(config(0, 50, MeasurementOrder::AliceFirst, ApproxMode{100}));
}

TEST(collapse_joint, approx_mode_uses_best_fraction) {
  const auto j = collapse_joint(config(0, 50, MeasurementOrder::AliceFirst, ApproxMode{100}));
  EXPECT_EQ(j.probabilities[0], Rational(5, 56));
  EXPECT_EQ(j.probabilities[1], Rational(23, 56));
  Rational total;
  for (const auto& p : j.probabilities) total += p;
  EXPECT_EQ(total, Rational(1));
  ASSERT_TRUE(j.approximation_error.has_value());
  const double c = std::cos(65.0 * std::numbers::pi / 180.0);
  EXPECT_NEAR(j.probabilities[1].to_double(), 0.5 * (1 - c * c), 0.5 / 100.0);
  EXPECT_LE(*j.approximation_error, 1.0 / (100.0 * 100.0));
}

TEST(collapse_joint, whitelist_matches_floating_cos2) {
  for (int a = 0; a < 360; a += 30) {
    for (int b = 0; b < 360; b += 30) {
      const int delta = a + 180 - b;
      const double half = delta / 2.0 * std::numbers::pi / 180;
      if (!is_exact_half_angle(AngleDeg(delta))) continue;
      const auto j = collapse_joint(config(a, b, MeasurementOrder::AliceFirst));
      EXPECT_NEAR(j.probabilities[0].to_double(), 0.5 * std::cos(half) * std::cos(half), 1e-12)
          << a << " " << b;
    }
  }
}

TEST(order_invariance, examples) {
  EXPECT_TRUE(order_invariance_check(AngleDeg(0), AngleDeg(120)).agree);
  EXPECT_TRUE(order_invariance_check(AngleDeg(0), AngleDeg(0)).agree);
  const auto r = order_invariance_check(AngleDeg(0), AngleDeg(90));
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.alice_first.kernel, Kernel::from_counts({{{"Au", "Bu"}, 1},
                                                       {{"Au", "Bd"}, 1},
                                                       {{"Ad", "Bu"}, 1},
                                                       {{"Ad", "Bd"}, 1}}));
}

TEST(order_invariance, every_whitelisted_pair) {
  for (int a = 0; a < 360; a += 30) {
    for (int b = 0; b < 360; b += 30) {
      if (!is_exact_half_angle(AngleDeg(a + 180 - b))) continue;
      ASSERT_TRUE(order_invariance_check(AngleDeg(a), AngleDeg(b)).agree) << a << " " << b;
    }
  }
}

TEST(order_invariance, approx_mode_any_angles) {
  for (int a = 0; a < 360; a += 17) {
    for (int b = 0; b < 360; b += 23) {
      const auto r = order_invariance_check(AngleDeg(a), AngleDeg(b), ApproxMode{1000});
      ASSERT_TRUE(r.agree) << a << " " << b;
    }
  }
}

TEST(intermediate_state, in_flight_angles) {
  const auto alice = config(0, 120, MeasurementOrder::AliceFirst);
  const auto bob = config(0, 120, MeasurementOrder::BobFirst);
  EXPECT_EQ(intermediate_state(alice, Spin::Up).degrees(), 180);
  EXPECT_EQ(intermediate_state(bob, Spin::Up).degrees(), 300);
  EXPECT_EQ(intermediate_state(alice, Spin::Down).degrees(), 0);
  EXPECT_EQ(intermediate_state(bob, Spin::Down).degrees(), 120);
}

TEST(spin_outcome, labels_in_listing_order) {
  const auto& all = all_spin_outcomes();
  EXPECT_EQ(all[0].label().compact(), "AuBu");
  EXPECT_EQ(all[1].label().compact(), "AuBd");
  EXPECT_EQ(all[2].label().compact(), "AdBu");
  EXPECT_EQ(all[3].label().compact(), "AdBd");
}
