#include "torux/conjugacy.hpp"

#include <algorithm>
#include <tuple>

namespace torux {

std::string QuadraticForm::to_string() const {
  return "(" + A.get_str() + ", " + B.get_str() + ", " + C.get_str() + ")";
}

QuadraticForm to_form(const MatZ2& X) {
  QuadraticForm q{X.c(), X.trace() - 2 * X.a(), -X.b()};
  if (q.disc() != X.discriminant()) fail(ErrorKind::Internal, "form discriminant identity failed");
  return q;
}

MatZ2 from_form(const QuadraticForm& q, const Integer& t, int det) {
  if (det != 1 && det != -1) fail(ErrorKind::InvalidDeterminant, "det must be +-1");
  if (q.disc() != t * t - 4 * det)
    fail(ErrorKind::DiscriminantMismatch, "disc " + q.disc().get_str() + " != t^2 - 4 det");
  Integer diff = t - q.B;
  if (mpz_even_p(diff.get_mpz_t()) == 0) fail(ErrorKind::ParityViolation, "B and t differ in parity");
  Integer a = diff / 2;
  return MatZ2(a, -q.C, q.A, t - a);
}

QuadraticForm pullback(const MatZ2& g, const QuadraticForm& q) {
  MatZ2 h = g.inverse();
  const Integer &h11 = h.a(), &h12 = h.b(), &h21 = h.c(), &h22 = h.d();
  return {q.A * h11 * h11 + q.B * h11 * h21 + q.C * h21 * h21,
          2 * q.A * h11 * h12 + q.B * (h11 * h22 + h12 * h21) + 2 * q.C * h21 * h22,
          q.A * h12 * h12 + q.B * h12 * h22 + q.C * h22 * h22};
}

bool check_diagram(const MatZ2& g, const MatZ2& X) {
  if (g.det() != 1) fail(ErrorKind::DetGNotOne, "diagram check needs det g = 1");
  return to_form(g * X * g.inverse()) == pullback(g, to_form(X));
}

namespace {

MatZ2 step(const Integer& a) {
  const auto& G = generators();
  return G.C2 * MatZ2(1, -a, 0, 1);
}

void push_step(Word& w, const Integer& a) {
  // w describes M; new M = C2 C1^{-a} M
  Word head{{Gen::C2, 1}};
  if (sgn(a) != 0) head.push_back({Gen::C1, -a.get_si()});
  w.insert(w.begin(), head.begin(), head.end());
}

}  // namespace

Reduction reduce(const Surd& kappa) {
  CFExpansion cf = expand(kappa);
  std::size_t shift = cf.preperiod.size() + minimal_rotation_offset(cf.period);
  MatZ2 M;
  Word w;
  Surd y = kappa;
  for (std::size_t i = 0; i < shift; ++i) {
    const Integer& a = cf.term(i);
    M = step(a) * M;
    push_step(w, a);
    y = (y - Rational(a)).inverse();
  }
  std::vector<Integer> period = minimal_rotation(cf.period);
  MatZ2 P;
  for (const auto& a : period) P = step(a) * P;
  if (!(M.mobius(kappa) == y) || !(P.mobius(y) == y)) fail(ErrorKind::Internal, "reduction mismatch");
  return Reduction{M, w, y, period, P};
}

bool are_conjugate_gl(const MatZ2& A, const MatZ2& B) {
  EigenData ea = eigen_data(A), eb = eigen_data(B);
  if (A.trace() != B.trace() || A.det() != B.det()) return false;
  return canonical_period(expand(ea.kappa)) == canonical_period(expand(eb.kappa));
}

namespace {

auto size_key(const MatZ2& M) {
  Integer mx = 0, sum = 0;
  int neg = 0;
  for (const auto& row : M.rows())
    for (const auto& e : row) {
      Integer v = abs(e);
      mx = std::max(mx, v);
      sum += v;
      neg += sgn(e) < 0;
    }
  return std::make_tuple(mx, sum, neg, M.det() == 1 ? 0 : 1);
}

}  // namespace

ConjugacyWitness find_conjugator(const MatZ2& A, const MatZ2& B, const ConjugatorOptions& opt) {
  if (!are_conjugate_gl(A, B)) fail(ErrorKind::NotConjugate, A.to_string() + " and " + B.to_string() + " are not GL-conjugate");
  Reduction ra = reduce(eigen_data(A).kappa), rb = reduce(eigen_data(B).kappa);
  MatZ2 C = rb.M.inverse() * ra.period_step.pow(opt.extra_periods) * ra.M;
  Word w = inverse_word(rb.word);
  for (long k = 0; k < std::abs(opt.extra_periods); ++k) {
    Word pw;
    for (const auto& a : ra.period) push_step(pw, a);
    if (opt.extra_periods < 0) pw = inverse_word(pw);
    w.insert(w.end(), pw.begin(), pw.end());
  }
  w.insert(w.end(), ra.word.begin(), ra.word.end());
  if (opt.minimize) {
    MatZ2 Z = centralizer(A).B;
    MatZ2 best = C;
    for (int s : {1, -1})
      for (long k = -4; k <= 4; ++k) {
        MatZ2 cand = C * Z.pow(k);
        if (s < 0) cand = -cand;
        if (size_key(cand) < size_key(best)) best = cand;
      }
    C = best;
    w = decompose(C);
  } else {
    w = simplify_word(w);
  }
  if (!(evaluate_word(w) == C)) fail(ErrorKind::Internal, "witness word does not evaluate to its matrix");
  if (!(C * A * C.inverse() == B)) fail(ErrorKind::Internal, "witness fails B = C A C^-1");
  return ConjugacyWitness{w, C, C.det()};
}

bool are_conjugate_sl(const MatZ2& A, const MatZ2& B) {
  if (!are_conjugate_gl(A, B)) return false;
  std::size_t L = canonical_period(expand(eigen_data(A).kappa)).size();
  if (L % 2 == 1) return true;
  return find_conjugator(A, B).det == 1;
}

Centralizer centralizer(const MatZ2& A) {
  EigenData e = eigen_data(A);
  Reduction r = reduce(e.kappa);
  MatZ2 B = r.M.inverse() * r.period_step.inverse() * r.M;
  auto nu_of = [&](const MatZ2& X) { return e.kappa * Rational(X.c()) + Rational(X.d()); };
  Surd nu = nu_of(B);
  if (nu.abs() < Rational(1)) B = B.inverse();
  if (nu_of(B).sign() < 0) B = -B;
  nu = nu_of(B);
  if (!(A * B == B * A)) fail(ErrorKind::Internal, "centralizer generator does not commute");
  MatZ2 P = B;
  for (long m = 1; m <= 4096; ++m, P = P * B) {
    if (P == A) return Centralizer{B, nu, m, 1};
    if (P == -A) return Centralizer{B, nu, m, -1};
    if (abs(P.trace()) > abs(A.trace()) + 2) break;
  }
  fail(ErrorKind::Internal, "A is not a power of the centralizer generator");
}

}  // namespace torux
