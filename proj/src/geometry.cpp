#include "torux/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace torux {

Frame::Frame(Surd k1, Surd k2) : k1_(std::move(k1)), k2_(std::move(k2)), delta_(k1_ - k2_) {
  if (delta_.is_zero()) fail(ErrorKind::DegenerateArc, "frame directions coincide");
}

Surd Frame::u_of(const Rational& x, const Rational& y) const { return (lift(x) - k2_ * y) / delta_; }
Surd Frame::s_of(const Rational& x, const Rational& y) const { return (k1_ * y - x) / delta_; }

Parallelogram Parallelogram::scaled(const Surd& lu, const Surd& ls) const {
  Surd a = u0 * lu, b = u1 * lu, c = s0 * ls, d = s1 * ls;
  return {min(a, b), max(a, b), min(c, d), max(c, d)};
}

bool interiors_meet(const Parallelogram& a, const Parallelogram& b) {
  return max(a.u0, b.u0) < min(a.u1, b.u1) && max(a.s0, b.s0) < min(a.s1, b.s1);
}

bool closures_meet(const Parallelogram& a, const Parallelogram& b) {
  return max(a.u0, b.u0) <= min(a.u1, b.u1) && max(a.s0, b.s0) <= min(a.s1, b.s1);
}

Parallelogram intersect(const Parallelogram& a, const Parallelogram& b) {
  return {max(a.u0, b.u0), min(a.u1, b.u1), max(a.s0, b.s0), min(a.s1, b.s1)};
}

LatticePoint lattice_point(const Frame& f, const Integer& m, const Integer& n) {
  Rational x(m), y(n);
  return {m, n, f.u_of(x, y), f.s_of(x, y)};
}

namespace {

std::optional<LatticePoint> integer_point(const Frame& f, const Rational& m, const Rational& n) {
  if (m.get_den() != 1 || n.get_den() != 1) return std::nullopt;
  return lattice_point(f, m.get_num(), n.get_num());
}

}  // namespace

// m - n*k2 = delta*u; comparing rational and surd parts fixes n, then m
std::optional<LatticePoint> lattice_point_with_u(const Frame& f, const Surd& u) {
  Surd w = f.delta() * u;
  Rational n = -w.b() / f.k2().b();
  return integer_point(f, w.a() + n * f.k2().a(), n);
}

// n*k1 - m = delta*s
std::optional<LatticePoint> lattice_point_with_s(const Frame& f, const Surd& s) {
  Surd w = f.delta() * s;
  Rational n = w.b() / f.k1().b();
  return integer_point(f, n * f.k1().a() - w.a(), n);
}

namespace {

Rational frac(const Rational& x) { return x - floor_of(x); }

}  // namespace

std::array<Rational, 2> u_residue(const Frame& f, const Surd& u) {
  Surd w = f.delta() * u;
  Rational n = -w.b() / f.k2().b();
  return {frac(n), frac(w.a() + n * f.k2().a())};
}

std::array<Rational, 2> s_residue(const Frame& f, const Surd& s) {
  Surd w = f.delta() * s;
  Rational n = w.b() / f.k1().b();
  return {frac(n), frac(n * f.k1().a() - w.a())};
}

std::vector<LatticePoint> lattice_points(const Frame& f, const Parallelogram& box, bool open) {
  std::vector<LatticePoint> out;
  if (box.u1 < box.u0 || box.s1 < box.s0) return out;
  // m = n*k2 + d*u = n*k1 - d*s; a double pass discards rows without integer candidates
  double k1 = f.k1().to_double(), k2 = f.k2().to_double(), d = f.delta().to_double();
  double u0 = box.u0.to_double(), u1 = box.u1.to_double(), s0 = box.s0.to_double(), s1 = box.s1.to_double();
  bool pos = d > 0;
  double mu_lo = pos ? d * u0 : d * u1, mu_hi = pos ? d * u1 : d * u0;
  double ms_lo = pos ? -d * s1 : -d * s0, ms_hi = pos ? -d * s0 : -d * s1;
  double scale = 1 + std::abs(k1) + std::abs(k2) + std::abs(mu_lo) + std::abs(mu_hi) + std::abs(ms_lo) + std::abs(ms_hi);
  // y = n lies in [u0 + s0, u1 + s1]; the row range is widened and every candidate is checked exactly
  double ytol = 1e-9 * (1 + std::abs(u0) + std::abs(u1) + std::abs(s0) + std::abs(s1));
  Integer n_lo(std::ceil(u0 + s0 - ytol)), n_hi(std::floor(u1 + s1 + ytol));
  std::optional<Surd> mu_lo_x, mu_hi_x, ms_lo_x, ms_hi_x;
  for (Integer n = n_lo; n <= n_hi; ++n) {
    double nd = n.get_d();
    double lo = std::max(k2 * nd + mu_lo, k1 * nd + ms_lo), hi = std::min(k2 * nd + mu_hi, k1 * nd + ms_hi);
    double tol = 1e-9 * scale * (1 + std::abs(nd));
    if (std::floor(hi + tol) < std::ceil(lo - tol)) continue;
    if (!mu_lo_x) {
      const Surd& dx = f.delta();
      Surd du0 = dx * box.u0, du1 = dx * box.u1, ds0 = dx * box.s0, ds1 = dx * box.s1;
      mu_lo_x = pos ? du0 : du1;
      mu_hi_x = pos ? du1 : du0;
      ms_lo_x = pos ? -ds1 : -ds0;
      ms_hi_x = pos ? -ds0 : -ds1;
    }
    Rational nq(n);
    Surd a = f.k2() * nq, b = f.k1() * nq;
    Surd lx = max(a + *mu_lo_x, b + *ms_lo_x);
    Surd hx = min(a + *mu_hi_x, b + *ms_hi_x);
    if (hx < lx) continue;
    for (Integer m = lx.ceil(); m <= hx.floor(); ++m) {
      Rational mq(m);
      Surd u = (f.lift(mq) - a) / f.delta();
      Surd s = (b - mq) / f.delta();
      bool in = open ? box.contains_open(u, s) : box.contains(u, s);
      if (in) out.push_back({m, n, std::move(u), std::move(s)});
    }
  }
  return out;
}

ApproxBox ApproxBox::of(const Parallelogram& r) {
  return {r.u0.to_double(), r.u1.to_double(), r.s0.to_double(), r.s1.to_double()};
}

bool may_meet_translate(const Frame& f, const ApproxBox& a, const ApproxBox& b) {
  double k1 = f.k1().to_double(), k2 = f.k2().to_double(), d = f.delta().to_double();
  double u0 = a.u0 - b.u1, u1 = a.u1 - b.u0, s0 = a.s0 - b.s1, s1 = a.s1 - b.s0;
  double scale = 1 + std::abs(k1) + std::abs(k2) + std::abs(d) * (std::abs(u0) + std::abs(u1) + std::abs(s0) + std::abs(s1));
  double tol = 1e-8 * scale;
  double n_lo = std::ceil(u0 + s0 - tol), n_hi = std::floor(u1 + s1 + tol);
  bool pos = d > 0;
  double mu_lo = pos ? d * u0 : d * u1, mu_hi = pos ? d * u1 : d * u0;
  double ms_lo = pos ? -d * s1 : -d * s0, ms_hi = pos ? -d * s0 : -d * s1;
  for (double n = n_lo; n <= n_hi; n += 1) {
    double lo = std::max(k2 * n + mu_lo, k1 * n + ms_lo), hi = std::min(k2 * n + mu_hi, k1 * n + ms_hi);
    double t = tol * (1 + std::abs(n));
    if (std::floor(hi + t) >= std::ceil(lo - t)) return true;
  }
  return false;
}

Parallelogram normalize_mod_lattice(const Frame& f, const Parallelogram& r) {
  Integer m = f.x_of(r.u0, r.s0).floor(), n = f.y_of(r.u0, r.s0).floor();
  if (sgn(m) == 0 && sgn(n) == 0) return r;
  LatticePoint z = lattice_point(f, m, n);
  return r.translated(-z.u, -z.s);
}

}  // namespace torux
