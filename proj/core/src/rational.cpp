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

#include "multiverse/rational.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace multiverse {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return BigInt(owned, 10);
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

void Rational::canonicalize() {
  if (sgn(den_) == 0) {
    throw DivisionByZero();
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::str() const {
  if (den_ == 1) {
    return num_.get_str();
  }
  return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero();
  }
  // rhs may alias *this.
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(std::move(n), std::move(d));
}

Rational from_double(double x) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("value is not finite");
  }
  mpq_class q(x);
  return Rational(BigInt(q.get_num()), BigInt(q.get_den()));
}

bool is_exact_half_angle(AngleDeg delta) noexcept {
  int d = delta.degrees();
  return d % 60 == 0 || d == 90 || d == 270;
}

Rational half_angle_cos2_exact(AngleDeg delta) {
  // cos^2(d/2) = (1 + cos d) / 2
  switch (delta.degrees()) {
    case 0:
      return Rational(1);
    case 60:
    case 300:
      return Rational(3, 4);
    case 90:
    case 270:
      return Rational(1, 2);
    case 120:
    case 240:
      return Rational(1, 4);
    case 180:
      return Rational(0);
    default:
      throw NotExactlyRepresentable("cos^2(" + std::to_string(delta.degrees()) +
                                    "/2) is irrational; use approximate mode");
  }
}

double half_angle_cos2(AngleDeg delta) noexcept {
  // Fold onto [0, 180] so that d and 360 - d evaluate bit-identically.
  int d = delta.degrees();
  if (d > 180) d = 360 - d;
  double c = std::cos(static_cast<double>(d) * std::numbers::pi / 360.0);
  return c * c;
}

Rational rational_approx(double x, const BigInt& max_denominator) {
  return rational_approx(from_double(x), max_denominator);
}

Rational rational_approx(const Rational& x, const BigInt& max_denominator) {
  if (max_denominator < 1) {
    throw InvalidArgument("max_denominator must be >= 1");
  }
  if (x.den() <= max_denominator) {
    return x;
  }
  // Continued-fraction convergents p1/q1 until the next would exceed the
  // bound, then the best semiconvergent between p0/q0 and p1/q1.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = x.num(), d = x.den();
  BigInt a;
  while (true) {
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    BigInt p2 = p0 + a * p1;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p2);
    q1 = std::move(q2);
    BigInt r = n - a * d;
    n = std::move(d);
    d = std::move(r);
  }
  BigInt k;
  BigInt slack = max_denominator - q0;
  mpz_fdiv_q(k.get_mpz_t(), slack.get_mpz_t(), q1.get_mpz_t());
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  auto e_semi = abs(semi - x);
  auto e_conv = abs(conv - x);
  if (e_conv < e_semi) return conv;
  if (e_semi < e_conv) return semi;
  return conv.den() <= semi.den() ? conv : semi;
}

}  // namespace multiverse
