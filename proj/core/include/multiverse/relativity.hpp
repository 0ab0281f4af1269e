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

// 1+1 dimensional special relativity in units with c = 1.

#include <string>

namespace multiverse {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, for SI input
inline constexpr double kOrderTolerance = 1e-12;

struct Event {
  double t = 0.0;
  double x = 0.0;
  std::string label;

  /// Throws InvalidArgument on non-finite coordinates.
  static Event make(double t, double x, std::string label = {});
};

/// A frame moving at velocity v (fraction of c) relative to the rest frame.
class Boost {
 public:
  /// Throws InvalidArgument unless |v| < 1 and finite.
  explicit Boost(double v);

  double velocity() const noexcept { return v_; }
  double gamma() const noexcept { return gamma_; }

  /// Relativistic velocity addition: this followed by `next`.
  Boost compose(const Boost& next) const;
  Boost inverse() const { return Boost(-v_); }

 private:
  double v_;
  double gamma_;
};

/// t' = gamma (t - v x), x' = gamma (x - v t). Label preserved.
Event boost_event(const Event& e, const Boost& b);

enum class IntervalClass { Spacelike, Timelike, Lightlike };
enum class TemporalOrder { Before, Simultaneous, After };

std::string to_string(IntervalClass c);
std::string to_string(TemporalOrder o);

/// s^2 = dt^2 - dx^2.
double interval_squared(const Event& a, const Event& b) noexcept;

/// Lightlike when |s^2| <= 1e-12 * (dt^2 + dx^2).
IntervalClass interval_class(const Event& a, const Event& b) noexcept;

/// Order of `a` relative to `b` in the boosted frame: Before means a
/// happens first. Simultaneous within 1e-12 * max(1, |t'a|, |t'b|).
TemporalOrder temporal_order(const Event& a, const Event& b, const Boost& frame) noexcept;

/// v * x: how much later the clap at the origin must happen to be
/// simultaneous, in the moving frame, with a clap at distance x.
double simultaneity_offset(double x, const Boost& b) noexcept;

/// v* = dt / dx, the frame in which a spacelike pair is simultaneous.
/// Faster frames of the same sign reverse the rest-frame order. Throws
/// NoReversingFrame for timelike or lightlike pairs.
Boost reversing_velocity(const Event& a, const Event& b);

}  // namespace multiverse
