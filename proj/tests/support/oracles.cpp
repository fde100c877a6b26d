#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oracle {

using torux::MatZ2;

long random_nonsquare(Rng& rng, long lo, long hi) {
  while (true) {
    long D = rng.uniform(lo, hi);
    long r = static_cast<long>(std::sqrt(static_cast<double>(D)));
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    if (r * r != D) return D;
  }
}

Surd random_surd_with_D(Rng& rng, const Integer& D) {
  long P = rng.uniform(-60, 60);
  long Q = 0;
  while (Q == 0) Q = rng.uniform(-25, 25);
  long R = rng.uniform(1, 40);
  return Surd(torux::ratio(P, R), torux::ratio(Q, R), D);
}

Surd random_surd(Rng& rng, long max_D) {
  return random_surd_with_D(rng, Integer(random_nonsquare(rng, 2, max_D)));
}

MatZ2 random_sl2(Rng& rng, int steps) {
  const auto& G = torux::generators();
  MatZ2 M;
  for (int i = 0; i < steps; ++i) {
    M = M * G.C1.pow(rng.uniform(-3, 3));
    M = M * G.C2 * G.C1.pow(rng.uniform(-3, 3)) * G.C2;
  }
  return M;
}

MatZ2 random_gl2(Rng& rng, int steps) {
  MatZ2 M = random_sl2(rng, steps);
  if (rng.uniform(0, 1)) M = M * torux::generators().C3;
  return M;
}

MatZ2 random_hyperbolic(Rng& rng, int steps) {
  while (true) {
    MatZ2 M = random_gl2(rng, steps);
    if (torux::is_hyperbolic(M) && abs(M.b()) + abs(M.c()) < 100000) return M;
  }
}

std::vector<Integer> float_cf_terms(const Surd& x, std::size_t n, unsigned bits) {
  mpf_class v(0, bits), r(0, bits);
  mpf_class Df(x.D(), bits);
  r = sqrt(Df);
  v = mpf_class(x.a(), bits) + mpf_class(x.b(), bits) * r;
  std::vector<Integer> out;
  for (std::size_t i = 0; i < n; ++i) {
    mpf_class f(0, bits);
    f = floor(v);
    Integer a(f);
    out.push_back(a);
    v = 1 / (v - f);
  }
  return out;
}

namespace {

Surd resid(const Surd& omega, long p, long q) { return omega * Rational(q) - Rational(p); }

}  // namespace

std::vector<Pair> brute_one_sided(const Surd& omega, long q_max) {
  std::vector<Pair> out;
  std::optional<Surd> min_pos, max_neg;
  for (long q = 1; q <= q_max; ++q) {
    Integer f = (omega * Rational(q)).floor();
    std::vector<std::pair<long, Surd>> cands;
    for (long p = f.get_si() - 1; p <= f.get_si() + 2; ++p) {
      Surd d = resid(omega, p, q);
      if (d.abs() < Rational(1)) cands.push_back({p, d});
    }
    for (auto& [p, d] : cands) {
      bool blocked = d.sign() > 0 ? (min_pos && *min_pos <= d) : (max_neg && *max_neg >= d);
      if (!blocked) out.push_back({p, q});
    }
    for (auto& [p, d] : cands) {
      if (d.sign() > 0) {
        if (!min_pos || d < *min_pos) min_pos = d;
      } else if (!max_neg || d > *max_neg) {
        max_neg = d;
      }
    }
  }
  return out;
}

std::vector<Pair> brute_two_sided(const Surd& omega, long q_max) {
  std::vector<Pair> out;
  std::optional<Surd> best;
  for (long q = 1; q <= q_max; ++q) {
    Integer f = (omega * Rational(q)).floor();
    for (long p = f.get_si() - 1; p <= f.get_si() + 2; ++p) {
      Surd d = resid(omega, p, q).abs();
      if (!(d < Rational(1))) continue;
      if (!best || d < *best) {
        out.push_back({p, q});
      }
      if (!best || d < *best) best = d;
    }
  }
  return out;
}

std::vector<Pair> naive_one_sided(const Surd& omega, long q_max) {
  std::vector<std::pair<long, long>> all;
  for (long q = 1; q <= q_max; ++q) {
    long f = (omega * Rational(q)).floor().get_si();
    for (long p = f - 3; p <= f + 3; ++p)
      if (resid(omega, p, q).abs() < Rational(1)) all.push_back({p, q});
  }
  std::vector<Pair> out;
  for (auto [p, q] : all) {
    Surd d = resid(omega, p, q);
    bool ok = true;
    for (auto [p2, q2] : all) {
      if (q2 >= q) continue;
      Surd e = resid(omega, p2, q2);
      bool inside = d.sign() > 0 ? (e.sign() >= 0 && e <= d) : (e.sign() <= 0 && e >= d);
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back({p, q});
  }
  return out;
}

std::vector<Pair> naive_two_sided(const Surd& omega, long q_max) {
  std::vector<std::pair<long, long>> all;
  for (long q = 1; q <= q_max; ++q) {
    long f = (omega * Rational(q)).floor().get_si();
    for (long p = f - 3; p <= f + 3; ++p)
      if (resid(omega, p, q).abs() < Rational(1)) all.push_back({p, q});
  }
  std::vector<Pair> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Surd d = resid(omega, all[i].first, all[i].second).abs();
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      if (resid(omega, all[j].first, all[j].second).abs() < d) ok = false;
    if (ok) out.push_back({all[i].first, all[i].second});
  }
  return out;
}

std::optional<M64> search_conjugator(const MatZ2& A, const MatZ2& B, int bound, int det_sign) {
  std::int64_t a = A.a().get_si(), b = A.b().get_si(), c = A.c().get_si(), d = A.d().get_si();
  std::int64_t e = B.a().get_si(), f = B.b().get_si(), g = B.c().get_si(), h = B.d().get_si();
  // C = [[x, y], [z, w]];  C A = B C
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z) {
        // first row: x a + y c = e x + f z ; x b + y d = e y + f w
        if (x * a + y * c != e * x + f * z) continue;
        for (std::int64_t w = -bound; w <= bound; ++w) {
          if (x * w - y * z != det_sign) continue;
          if (x * b + y * d != e * y + f * w) continue;
          if (z * a + w * c != g * x + h * z) continue;
          if (z * b + w * d != g * y + h * w) continue;
          return M64{x, y, z, w};
        }
      }
  return std::nullopt;
}

std::vector<std::array<Rational, 2>> brute_fixpoints(const MatZ2& A) {
  Integer m = (A.a() - 1) * (A.d() - 1) - A.b() * A.c();
  long N = Integer(abs(m)).get_si();
  auto less = [](const std::array<Rational, 2>& x, const std::array<Rational, 2>& y) {
    int c = cmp(x[0], y[0]);
    return c < 0 || (c == 0 && cmp(x[1], y[1]) < 0);
  };
  std::set<std::array<Rational, 2>, decltype(less)> pts(less);
  // x in (1/N) Z^2 with (A - I) x integral
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      Rational x = torux::ratio(i, N), y = torux::ratio(j, N);
      Rational u = Rational(A.a() - 1) * x + Rational(A.b()) * y;
      Rational v = Rational(A.c()) * x + Rational(A.d() - 1) * y;
      if (u.get_den() == 1 && v.get_den() == 1) pts.insert({x, y});
    }
  return {pts.begin(), pts.end()};
}

}  // namespace oracle
