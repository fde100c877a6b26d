#include "geo_oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

using namespace torux;

Real to_real(const Surd& x) {
  Real d(x.D(), kBits);
  return Real(x.a(), kBits) + Real(x.b(), kBits) * sqrt(d);
}

FBox to_fbox(const Parallelogram& r) { return {to_real(r.u0), to_real(r.u1), to_real(r.s0), to_real(r.s1)}; }

FFrame::FFrame(const Frame& f) : k1(to_real(f.k1())), k2(to_real(f.k2())), delta(k1 - k2) {}

namespace {

const Real& eps() {
  static const Real e("1e-40", kBits);
  return e;
}

Real rmin(const Real& a, const Real& b) { return a < b ? a : b; }
Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }

long ceil_long(const Real& x) { return static_cast<long>(std::ceil(x.get_d())) + 1; }

}  // namespace

std::vector<FCrossing> brute_crossings(const Frame& f, const Leg& leg, const Real& lo, const Real& hi,
                                       const Real& t_max) {
  FFrame F(f);
  Real w = rmax(Real(abs(lo)), Real(abs(hi)));
  long ny = ceil_long(t_max + w);
  long nx = ceil_long(abs(F.k1) * t_max + abs(F.k2) * w + abs(F.k1) * w + abs(F.k2) * t_max);
  std::vector<FCrossing> out;
  for (long m = -nx; m <= nx; ++m)
    for (long n = -ny; n <= ny; ++n) {
      Real x(m, kBits), y(n, kBits);
      Real u = F.u(x, y), s = F.s(x, y);
      Real t = leg.axis == Axis::U ? u : s;
      if (leg.sign < 0) t = -t;
      Real pos = -(leg.axis == Axis::U ? s : u);
      if (t > eps() && t < t_max - eps() && pos > lo - eps() && pos < hi + eps()) out.push_back({t, pos, m, n});
    }
  std::sort(out.begin(), out.end(), [](const FCrossing& a, const FCrossing& b) { return a.t < b.t; });
  return out;
}

bool family_has_side_contact(const Frame& f, const Parallelogram& r, long radius) {
  FFrame F(f);
  FBox b = to_fbox(r);
  for (long m = -radius; m <= radius; ++m)
    for (long n = -radius; n <= radius; ++n) {
      if (m == 0 && n == 0) continue;
      Real du = F.u(Real(m, kBits), Real(n, kBits)), ds = F.s(Real(m, kBits), Real(n, kBits));
      FBox c{b.u0 + du, b.u1 + du, b.s0 + ds, b.s1 + ds};
      Real uo = rmin(b.u1, c.u1) - rmax(b.u0, c.u0);
      Real so = rmin(b.s1, c.s1) - rmax(b.s0, c.s0);
      bool u_touch = abs(b.u1 - c.u0) < eps() || abs(c.u1 - b.u0) < eps();
      bool s_touch = abs(b.s1 - c.s0) < eps() || abs(c.s1 - b.s0) < eps();
      if ((u_touch && so > eps()) || (s_touch && uo > eps())) return true;
    }
  return false;
}

PremType contact_type(const TorusPartition& P, long radius) {
  for (const auto& r : P.pieces)
    if (!family_has_side_contact(P.frame, r, radius)) return PremType::Island;
  return PremType::Parquet;
}

int cover_count(const TorusPartition& P, const Real& x, const Real& y) {
  FFrame F(P.frame);
  int count = 0;
  for (const auto& r : P.pieces) {
    FBox b = to_fbox(r);
    // translates (m, n) with (x - m, y - n) inside the piece
    Real cu = (b.u0 + b.u1) / 2, cs = (b.s0 + b.s1) / 2;
    Real cx = cu * F.k1 + cs * F.k2, cy = cu + cs;
    Real ru = (b.u1 - b.u0) / 2, rs = (b.s1 - b.s0) / 2;
    Real rx = abs(F.k1) * ru + abs(F.k2) * rs, ry = ru + rs;
    long m0 = static_cast<long>(std::floor(Real(x - cx - rx).get_d())) - 1;
    long m1 = static_cast<long>(std::ceil(Real(x - cx + rx).get_d())) + 1;
    long n0 = static_cast<long>(std::floor(Real(y - cy - ry).get_d())) - 1;
    long n1 = static_cast<long>(std::ceil(Real(y - cy + ry).get_d())) + 1;
    for (long m = m0; m <= m1; ++m)
      for (long n = n0; n <= n1; ++n) {
        Real px = x - m, py = y - n;
        Real u = F.u(px, py), s = F.s(px, py);
        if (u > b.u0 && u < b.u1 && s > b.s0 && s < b.s1) ++count;
      }
  }
  return count;
}

long brute_fixpoint_lattice_count(const MatZ2& A, const Frame& f, const Real& x_max, const Real& y_lo,
                                  const Real& y_hi) {
  FFrame F(f);
  Integer det = (A.a() - 1) * (A.d() - 1) - A.b() * A.c();
  long M = std::labs(det.get_si());
  // corners of the (x, y) parallelogram in the plane
  Real xs[4], ys[4];
  int i = 0;
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      Real u = cx ? x_max : Real(0, kBits);
      Real s = -(cy ? y_hi : y_lo);
      xs[i] = u * F.k1 + s * F.k2;
      ys[i] = u + s;
      ++i;
    }
  Real xlo = *std::min_element(xs, xs + 4), xhi = *std::max_element(xs, xs + 4);
  Real ylo = *std::min_element(ys, ys + 4), yhi = *std::max_element(ys, ys + 4);
  long a0 = static_cast<long>(std::floor(Real(xlo * M).get_d())) - 1;
  long a1 = static_cast<long>(std::ceil(Real(xhi * M).get_d())) + 1;
  long b0 = static_cast<long>(std::floor(Real(ylo * M).get_d())) - 1;
  long b1 = static_cast<long>(std::ceil(Real(yhi * M).get_d())) + 1;
  long count = 0;
  for (long a = a0; a <= a1; ++a)
    for (long b = b0; b <= b1; ++b) {
      Rational px = ratio(Integer(a), Integer(M)), py = ratio(Integer(b), Integer(M));
      Rational gx = Rational(A.a() - 1) * px + Rational(A.b()) * py;
      Rational gy = Rational(A.c()) * px + Rational(A.d() - 1) * py;
      if (gx.get_den() != 1 || gy.get_den() != 1) continue;
      Real x(px, kBits), y(py, kBits);
      Real u = F.u(x, y), s = F.s(x, y);
      Real yy = -s;
      if (u > eps() && u < x_max - eps() && yy > y_lo + eps() && yy < y_hi - eps()) ++count;
    }
  return count;
}

}  // namespace oracle
