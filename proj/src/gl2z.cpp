#include "torux/gl2z.hpp"

#include <map>
#include <regex>
#include <set>

namespace torux {

MatZ2::MatZ2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Integer det = a_ * d_ - b_ * c_;
  if (det == 1) {
    det_ = 1;
  } else if (det == -1) {
    det_ = -1;
  } else {
    fail(ErrorKind::InvalidDeterminant, "determinant must be +-1, got " + det.get_str());
  }
}

MatZ2 MatZ2::inverse() const {
  if (det_ == 1) return MatZ2(d_, -b_, -c_, a_);
  return MatZ2(-d_, b_, c_, -a_);
}

MatZ2 MatZ2::pow(long n) const {
  MatZ2 base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  MatZ2 r;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MatZ2 operator*(const MatZ2& x, const MatZ2& y) {
  return MatZ2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
               x.c_ * y.b_ + x.d_ * y.d_);
}

Surd MatZ2::mobius(const Surd& z) const {
  Surd den = z * Rational(c_) + Rational(d_);
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "mobius pole");
  return (z * Rational(a_) + Rational(b_)) / den;
}

std::string MatZ2::to_string() const {
  return a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," + d_.get_str();
}

MatZ2 parse_matrix(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*;\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorKind::Parse, "expected \"a,b;c,d\", got \"" + text + "\"");
  auto z = [&](int i) {
    std::string s = m[i].str();
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  return MatZ2(z(1), z(2), z(3), z(4));
}

bool is_hyperbolic(const MatZ2& A) {
  Integer D = A.discriminant();
  return sgn(D) > 0 && !is_perfect_square(D);
}

void require_hyperbolic(const MatZ2& A) {
  if (!is_hyperbolic(A)) fail(ErrorKind::NotHyperbolic, "matrix " + A.to_string() + " is not hyperbolic");
}

EigenData eigen_data(const MatZ2& A) {
  require_hyperbolic(A);
  Integer D = A.discriminant();
  Rational t(A.trace());
  Surd r = Surd::root(D);
  Surd lam = (r + t) / Rational(2);
  if (lam.abs() < Rational(1)) lam = (t - r) / Rational(2);
  Surd mu = Surd::rational(A.det(), D) / lam;
  if (sgn(A.c()) == 0) fail(ErrorKind::Internal, "hyperbolic matrix with c = 0");
  Rational c(A.c()), d(A.d());
  Surd kappa = (lam - d) / c;
  Surd kappa_s = (mu - d) / c;
  if (!(lam * mu == Rational(A.det())) || !(lam + mu == t))
    fail(ErrorKind::Internal, "eigenvalue identities failed");
  auto [x, y] = A.apply(kappa, Surd::rational(1, D));
  if (!(x == lam * kappa) || !(y == lam)) fail(ErrorKind::Internal, "eigenvector check failed");
  return EigenData{lam, mu, kappa, kappa_s, D};
}

Integer fixpoint_count(const MatZ2& A) {
  require_hyperbolic(A);
  Integer m = (A.a() - 1) * (A.d() - 1) - A.b() * A.c();
  return abs(m);
}

FixpointData fixpoints(const MatZ2& A) {
  require_hyperbolic(A);
  Integer m = (A.a() - 1) * (A.d() - 1) - A.b() * A.c();
  FixpointData out;
  out.count = abs(m);
  Rational M(m);
  out.basis[0] = {Rational(A.d() - 1) / M, Rational(-A.c()) / M};
  out.basis[1] = {Rational(-A.b()) / M, Rational(A.a() - 1) / M};
  auto reduce = [](std::array<Rational, 2> p) {
    for (auto& x : p) x -= floor_of(x);
    return p;
  };
  auto less = [](const std::array<Rational, 2>& x, const std::array<Rational, 2>& y) {
    int c = cmp(x[0], y[0]);
    return c < 0 || (c == 0 && cmp(x[1], y[1]) < 0);
  };
  std::set<std::array<Rational, 2>, decltype(less)> seen(less);
  std::vector<std::array<Rational, 2>> stack{{Rational(0), Rational(0)}};
  seen.insert(stack.front());
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    for (const auto& v : out.basis) {
      auto q = reduce({p[0] + v[0], p[1] + v[1]});
      if (seen.insert(q).second) stack.push_back(q);
    }
  }
  out.points.assign(seen.begin(), seen.end());
  if (Integer(static_cast<unsigned long>(out.points.size())) != out.count)
    fail(ErrorKind::Internal, "fixpoint group order mismatch");
  return out;
}

const Generators& generators() {
  static const Generators g{MatZ2(1, 1, 0, 1), MatZ2(0, 1, 1, 0), MatZ2(-1, 0, 0, 1)};
  return g;
}

const MatZ2& generator(Gen g) {
  const auto& G = generators();
  switch (g) {
    case Gen::C1: return G.C1;
    case Gen::C2: return G.C2;
    default: return G.C3;
  }
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::C1: return "C1";
    case Gen::C2: return "C2";
    default: return "C3";
  }
}

MatZ2 evaluate_word(const Word& w) {
  MatZ2 r;
  for (const auto& l : w) r = r * generator(l.gen).pow(l.exponent);
  return r;
}

Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exponent});
  return r;
}

Word simplify_word(const Word& w) {
  Word out;
  for (auto l : w) {
    if (l.gen != Gen::C1) l.exponent = ((l.exponent % 2) + 2) % 2;
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      Letter& b = out.back();
      b.exponent += l.exponent;
      if (b.gen != Gen::C1) b.exponent %= 2;
      if (b.exponent == 0) out.pop_back();
      continue;
    }
    out.push_back(l);
  }
  return out;
}

Word decompose(const MatZ2& M0) {
  Integer a = M0.a(), b = M0.b(), c = M0.c(), d = M0.d();
  Word ops;  // left factors, in application order
  while (sgn(c) != 0) {
    Integer k = floor_div(a, c);
    a -= k * c;
    b -= k * d;
    if (!k.fits_slong_p()) fail(ErrorKind::Internal, "exponent overflow in decompose");
    ops.push_back({Gen::C1, -k.get_si()});
    std::swap(a, c);
    std::swap(b, d);
    ops.push_back({Gen::C2, 1});
  }
  Word w;
  for (const auto& l : ops) w.push_back({l.gen, -l.exponent});
  if (!b.fits_slong_p()) fail(ErrorKind::Internal, "exponent overflow in decompose");
  long e = b.get_si();
  if (a == 1 && d == 1) {
    w.push_back({Gen::C1, e});
  } else if (a == -1 && d == 1) {
    w.insert(w.end(), {{Gen::C3, 1}, {Gen::C1, -e}});
  } else if (a == 1 && d == -1) {
    w.insert(w.end(), {{Gen::C2, 1}, {Gen::C3, 1}, {Gen::C2, 1}, {Gen::C1, e}});
  } else {
    w.insert(w.end(), {{Gen::C3, 1}, {Gen::C2, 1}, {Gen::C3, 1}, {Gen::C2, 1}, {Gen::C1, -e}});
  }
  w = simplify_word(w);
  if (!(evaluate_word(w) == M0)) fail(ErrorKind::Internal, "decompose produced a wrong word");
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += "*";
    s += gen_name(l.gen);
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

}  // namespace torux
