#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "torux/error.hpp"

namespace torux {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms.
Rational ratio(const Integer& n, const Integer& d);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
int sgn(const Integer& x);
int sgn(const Rational& x);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Exact element a + b*sqrt(D) of Q(sqrt(D)); D > 0 is never a perfect square.
class Surd {
 public:
  Surd() = delete;
  Surd(Rational a, Rational b, Integer D);
  static Surd rational(const Rational& a, const Integer& D) { return Surd(a, 0, D); }
  static Surd root(const Integer& D) { return Surd(0, 1, D); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& D() const { return D_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  Surd conj() const { return Surd(a_, -b_, D_, Trusted{}); }
  Rational norm() const { return a_ * a_ - b_ * b_ * D_; }
  Surd inverse() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;
  std::string to_string() const;

  Surd operator-() const { return Surd(-a_, -b_, D_, Trusted{}); }
  Surd& operator+=(const Surd& y);
  Surd& operator-=(const Surd& y);
  Surd& operator*=(const Surd& y);
  Surd& operator/=(const Surd& y);
  Surd& operator+=(const Rational& y) { a_ += y; return *this; }
  Surd& operator-=(const Rational& y) { a_ -= y; return *this; }
  Surd& operator*=(const Rational& y) { a_ *= y; b_ *= y; return *this; }
  Surd& operator/=(const Rational& y);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend Surd operator+(Surd x, const Rational& y) { return x += y; }
  friend Surd operator-(Surd x, const Rational& y) { return x -= y; }
  friend Surd operator*(Surd x, const Rational& y) { return x *= y; }
  friend Surd operator/(Surd x, const Rational& y) { return x /= y; }
  friend Surd operator+(const Rational& y, Surd x) { return x += y; }
  friend Surd operator-(const Rational& y, const Surd& x) { return -x + y; }
  friend Surd operator*(const Rational& y, Surd x) { return x *= y; }

  friend bool operator==(const Surd& x, const Surd& y);
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Rational& y) { return x.is_rational() && x.a_ == y; }
  friend std::strong_ordering operator<=>(const Surd& x, const Rational& y);

 private:
  struct Trusted {};
  Surd(Rational a, Rational b, Integer D, Trusted)
      : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {}
  void require_same(const Surd& y) const;

  Rational a_, b_;
  Integer D_;
};

std::ostream& operator<<(std::ostream& os, const Surd& x);

inline const Surd& min(const Surd& x, const Surd& y) { return y < x ? y : x; }
inline const Surd& max(const Surd& x, const Surd& y) { return x < y ? y : x; }

}  // namespace torux
