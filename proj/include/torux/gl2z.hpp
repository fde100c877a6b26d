#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "torux/qfield.hpp"

namespace torux {

// 2x2 integer matrix with determinant +1 or -1.
class MatZ2 {
 public:
  MatZ2() : a_(1), b_(0), c_(0), d_(1) {}
  MatZ2(Integer a, Integer b, Integer c, Integer d);

  static MatZ2 identity() { return MatZ2(); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  int det() const { return det_; }
  Integer trace() const { return a_ + d_; }
  Integer discriminant() const { return trace() * trace() - 4 * det_; }

  MatZ2 inverse() const;
  MatZ2 pow(long n) const;
  MatZ2 operator-() const { return MatZ2(-a_, -b_, -c_, -d_); }
  friend MatZ2 operator*(const MatZ2& x, const MatZ2& y);
  friend bool operator==(const MatZ2& x, const MatZ2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  // Mobius action z -> (az + b) / (cz + d).
  Surd mobius(const Surd& z) const;
  std::pair<Integer, Integer> apply(const Integer& x, const Integer& y) const {
    return {a_ * x + b_ * y, c_ * x + d_ * y};
  }
  std::pair<Surd, Surd> apply(const Surd& x, const Surd& y) const {
    return {x * Rational(a_) + y * Rational(b_), x * Rational(c_) + y * Rational(d_)};
  }

  std::string to_string() const;
  std::array<std::array<Integer, 2>, 2> rows() const { return {{{a_, b_}, {c_, d_}}}; }

 private:
  Integer a_, b_, c_, d_;
  int det_;
};

// Parses "a,b;c,d".
MatZ2 parse_matrix(const std::string& text);

struct EigenData {
  Surd lambda_u;
  Surd lambda_s;
  Surd kappa;
  Surd kappa_s;
  Integer D;
};

bool is_hyperbolic(const MatZ2& A);
void require_hyperbolic(const MatZ2& A);
EigenData eigen_data(const MatZ2& A);

struct FixpointData {
  Integer count;
  // basis of (A - I)^{-1} Z^2, as rational column vectors
  std::array<std::array<Rational, 2>, 2> basis;
  // representatives in [0,1)^2
  std::vector<std::array<Rational, 2>> points;
};

FixpointData fixpoints(const MatZ2& A);
Integer fixpoint_count(const MatZ2& A);

struct Generators {
  MatZ2 C1, C2, C3;
};
const Generators& generators();

enum class Gen { C1, C2, C3 };
struct Letter {
  Gen gen;
  long exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

const MatZ2& generator(Gen g);
MatZ2 evaluate_word(const Word& w);
Word inverse_word(const Word& w);
// Merges adjacent powers and drops trivial letters.
Word simplify_word(const Word& w);
// Writes M as a product of C1, C2, C3 powers.
Word decompose(const MatZ2& M);
std::string word_to_string(const Word& w);
const char* gen_name(Gen g);

}  // namespace torux
