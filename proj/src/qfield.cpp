#include "torux/qfield.hpp"

#include <cmath>
#include <ostream>

namespace torux {

Rational ratio(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }
Integer ceil_of(const Rational& x) { return ceil_div(x.get_num(), x.get_den()); }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int sgn(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }
int sgn(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

Surd::Surd(Rational a, Rational b, Integer D)
    : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(D_) <= 0 || is_perfect_square(D_))
    fail(ErrorKind::MismatchedRadicand, "radicand must be a positive non-square: " + D_.get_str());
}

void Surd::require_same(const Surd& y) const {
  if (D_ != y.D_)
    fail(ErrorKind::MismatchedRadicand,
         "radicands differ: " + D_.get_str() + " vs " + y.D_.get_str());
}

Surd& Surd::operator+=(const Surd& y) {
  require_same(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

Surd& Surd::operator-=(const Surd& y) {
  require_same(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

Surd& Surd::operator*=(const Surd& y) {
  require_same(y);
  Rational a = a_ * y.a_ + b_ * y.b_ * D_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Surd Surd::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero surd");
  Rational n = norm();
  return Surd(a_ / n, -b_ / n, D_, Trusted{});
}

Surd& Surd::operator/=(const Surd& y) {
  require_same(y);
  if (y.is_rational()) return *this /= y.a_;
  return *this *= y.inverse();
}

Surd& Surd::operator/=(const Rational& y) {
  if (sgn(y) == 0) fail(ErrorKind::DivisionByZero, "division by zero");
  a_ /= y;
  b_ /= y;
  return *this;
}

int Surd::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 D (never equal since D is not a square)
  int c = cmp(a_ * a_, b_ * b_ * D_);
  return c > 0 ? sa : sb;
}

Integer Surd::floor() const {
  if (is_rational()) return floor_of(a_);
  // (P + Q sqrt D) / R with R > 0
  Integer R = lcm(a_.get_den(), b_.get_den());
  Integer P = a_.get_num() * (R / a_.get_den());
  Integer Q = b_.get_num() * (R / b_.get_den());
  Integer s = isqrt(Q * Q * D_);
  Integer W = sgn(Q) > 0 ? s : Integer(-s - 1);
  return floor_div(P + W, R);
}

Integer Surd::ceil() const {
  if (is_rational()) return ceil_of(a_);
  return floor() + 1;
}

double Surd::to_double() const {
  double a = a_.get_d(), c = b_.get_d() * std::sqrt(D_.get_d());
  // on cancellation use the conjugate form norm / (a - b sqrt D)
  if ((a > 0) != (c > 0) && a != 0 && c != 0) return Rational(norm()).get_d() / (a - c);
  return a + c;
}

std::string Surd::to_string() const {
  Integer r = lcm(a_.get_den(), b_.get_den());
  Integer p = a_.get_num() * (r / a_.get_den());
  Integer q = b_.get_num() * (r / b_.get_den());
  return p.get_str() + "/" + r.get_str() + " + " + q.get_str() + "/" + r.get_str() + "*sqrt(" +
         D_.get_str() + ")";
}

bool operator==(const Surd& x, const Surd& y) {
  x.require_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Surd& x, const Rational& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.to_string(); }

}  // namespace torux
