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

#include "multiverse/relativity.hpp"

#include <algorithm>
#include <cmath>

#include "multiverse/errors.hpp"

namespace multiverse {

Event Event::make(double t, double x, std::string label) {
  if (!std::isfinite(t) || !std::isfinite(x)) {
    throw InvalidArgument("event '" + label + "' has non-finite coordinates");
  }
  return Event{t, x, std::move(label)};
}

Boost::Boost(double v) : v_(v) {
  if (!std::isfinite(v) || std::abs(v) >= 1.0) {
    throw InvalidArgument("boost velocity must satisfy |v| < 1, got " + std::to_string(v));
  }
  gamma_ = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

Boost Boost::compose(const Boost& next) const {
  return Boost((v_ + next.v_) / (1.0 + v_ * next.v_));
}

Event boost_event(const Event& e, const Boost& b) {
  const double v = b.velocity();
  const double g = b.gamma();
  return Event{g * (e.t - v * e.x), g * (e.x - v * e.t), e.label};
}

std::string to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::Spacelike:
      return "spacelike";
    case IntervalClass::Timelike:
      return "timelike";
    case IntervalClass::Lightlike:
      return "lightlike";
  }
  return "?";
}

std::string to_string(TemporalOrder o) {
  switch (o) {
    case TemporalOrder::Before:
      return "before";
    case TemporalOrder::Simultaneous:
      return "simultaneous";
    case TemporalOrder::After:
      return "after";
  }
  return "?";
}

double interval_squared(const Event& a, const Event& b) noexcept {
  const double dt = b.t - a.t;
  const double dx = b.x - a.x;
  return (dt - dx) * (dt + dx);
}

IntervalClass interval_class(const Event& a, const Event& b) noexcept {
  const double dt = b.t - a.t;
  const double dx = b.x - a.x;
  const double s2 = (dt - dx) * (dt + dx);
  const double tol = 1e-12 * (dt * dt + dx * dx);
  if (s2 < -tol) return IntervalClass::Spacelike;
  if (s2 > tol) return IntervalClass::Timelike;
  return IntervalClass::Lightlike;
}

TemporalOrder temporal_order(const Event& a, const Event& b, const Boost& frame) noexcept {
  const double ta = boost_event(a, frame).t;
  const double tb = boost_event(b, frame).t;
  const double tol = kOrderTolerance * std::max({1.0, std::abs(ta), std::abs(tb)});
  if (std::abs(tb - ta) <= tol) return TemporalOrder::Simultaneous;
  return ta < tb ? TemporalOrder::Before : TemporalOrder::After;
}

double simultaneity_offset(double x, const Boost& b) noexcept { return b.velocity() * x; }

Boost reversing_velocity(const Event& a, const Event& b) {
  const IntervalClass c = interval_class(a, b);
  if (c != IntervalClass::Spacelike) {
    throw NoReversingFrame("events '" + a.label + "' and '" + b.label + "' are " + to_string(c) +
                           "-separated; their order is the same in every frame");
  }
  return Boost((b.t - a.t) / (b.x - a.x));
}

}  // namespace multiverse
