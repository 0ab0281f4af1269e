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

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every Rational is kept in canonical form: the denominator is positive and
// gcd(|numerator|, denominator) == 1. Zero is 0/1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "multiverse/errors.hpp"

namespace multiverse {

using BigInt = mpz_class;

/// Parses a base-10 integer with optional leading sign. Throws ParseError.
BigInt parse_bigint(std::string_view text);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);
  Rational(long numerator, long denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  /// Accepts "p/q" or "p". Throws ParseError on malformed text and
  /// DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  int sign() const noexcept { return sgn(num_); }

  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);

/// Exact value of a double (every finite double is a dyadic rational).
/// Throws InvalidArgument on NaN or infinity.
Rational from_double(double x);

/// Integer-degree angle normalized into [0, 360).
class AngleDeg {
 public:
  constexpr AngleDeg() = default;
  constexpr explicit AngleDeg(long long degrees)
      : degrees_(static_cast<int>(((degrees % 360) + 360) % 360)) {}

  constexpr int degrees() const noexcept { return degrees_; }

  friend constexpr AngleDeg operator+(AngleDeg a, AngleDeg b) {
    return AngleDeg(a.degrees_ + b.degrees_);
  }
  friend constexpr AngleDeg operator-(AngleDeg a, AngleDeg b) {
    return AngleDeg(a.degrees_ - b.degrees_);
  }
  friend constexpr bool operator==(AngleDeg, AngleDeg) = default;

 private:
  int degrees_ = 0;
};

/// True when cos^2(delta/2) is rational, i.e. delta is a multiple of 60
/// degrees or one of {90, 270}.
bool is_exact_half_angle(AngleDeg delta) noexcept;

/// cos^2(delta/2) as an exact rational. Throws NotExactlyRepresentable
/// outside the whitelist.
Rational half_angle_cos2_exact(AngleDeg delta);

/// Floating cos^2(delta/2) for arbitrary integer angles.
double half_angle_cos2(AngleDeg delta) noexcept;

/// The fraction p/q with q <= max_denominator closest to x. Ties go to the
/// smaller denominator. Works on the exact binary value of x, so the result
/// is optimal with respect to the double actually passed in.
Rational rational_approx(double x, const BigInt& max_denominator);
Rational rational_approx(const Rational& x, const BigInt& max_denominator);

}  // namespace multiverse
