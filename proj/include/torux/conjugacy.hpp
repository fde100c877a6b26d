#pragma once

#include <string>
#include <vector>

#include "torux/cfrac.hpp"
#include "torux/gl2z.hpp"

namespace torux {

struct QuadraticForm {
  Integer A, B, C;
  Integer disc() const { return B * B - 4 * A * C; }
  Integer operator()(const Integer& x, const Integer& y) const { return A * x * x + B * x * y + C * y * y; }
  QuadraticForm operator-() const { return {-A, -B, -C}; }
  std::string to_string() const;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

QuadraticForm to_form(const MatZ2& X);
MatZ2 from_form(const QuadraticForm& q, const Integer& t, int det);
// The form z -> q(g^{-1} z).
QuadraticForm pullback(const MatZ2& g, const QuadraticForm& q);
bool check_diagram(const MatZ2& g, const MatZ2& X);

// T-move reduction of a slope to the canonical purely periodic representative.
struct Reduction {
  MatZ2 M;                      // Mobius(M)(kappa) = y
  Word word;                    // letters of M
  Surd y;                       // purely periodic, period in minimal rotation
  std::vector<Integer> period;  // canonical period
  MatZ2 period_step;            // Mobius(period_step)(y) = y
};
Reduction reduce(const Surd& kappa);

struct ConjugacyWitness {
  Word word;
  MatZ2 matrix;
  int det;
};

struct ConjugatorOptions {
  long extra_periods = 0;
  bool minimize = true;
};

bool are_conjugate_gl(const MatZ2& A, const MatZ2& B);
ConjugacyWitness find_conjugator(const MatZ2& A, const MatZ2& B, const ConjugatorOptions& opt = {});
bool are_conjugate_sl(const MatZ2& A, const MatZ2& B);

struct Centralizer {
  MatZ2 B;     // generator with eigenvalue nu > 1 on the unstable direction of A
  Surd nu;
  long power;  // A = sign * B^power
  int sign;
};
Centralizer centralizer(const MatZ2& A);
inline MatZ2 centralizer_generator(const MatZ2& A) { return centralizer(A).B; }

}  // namespace torux
