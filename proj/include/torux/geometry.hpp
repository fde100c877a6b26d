#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torux/qfield.hpp"

namespace torux {

// Oblique frame z = u*(k1, 1) + s*(k2, 1) of the plane.
class Frame {
 public:
  Frame(Surd k1, Surd k2);

  const Surd& k1() const { return k1_; }
  const Surd& k2() const { return k2_; }
  const Surd& delta() const { return delta_; }
  const Integer& D() const { return k1_.D(); }
  // Euclidean area of the unit coordinate square.
  Surd area_factor() const { return delta_.abs(); }

  Surd u_of(const Surd& x, const Surd& y) const { return (x - y * k2_) / delta_; }
  Surd s_of(const Surd& x, const Surd& y) const { return (y * k1_ - x) / delta_; }
  Surd u_of(const Rational& x, const Rational& y) const;
  Surd s_of(const Rational& x, const Rational& y) const;
  Surd x_of(const Surd& u, const Surd& s) const { return u * k1_ + s * k2_; }
  Surd y_of(const Surd& u, const Surd& s) const { return u + s; }

  Surd lift(const Rational& r) const { return Surd::rational(r, D()); }

 private:
  Surd k1_, k2_, delta_;
};

struct Interval {
  Surd lo, hi;
  Surd length() const { return hi - lo; }
  bool contains(const Surd& x) const { return lo <= x && x <= hi; }
  bool contains_open(const Surd& x) const { return lo < x && x < hi; }
};

// Axis-aligned rectangle [u0, u1] x [s0, s1] in frame coordinates.
struct Parallelogram {
  Surd u0, u1, s0, s1;

  Surd u_len() const { return u1 - u0; }
  Surd s_len() const { return s1 - s0; }
  Surd coord_area() const { return u_len() * s_len(); }
  Parallelogram translated(const Surd& du, const Surd& ds) const { return {u0 + du, u1 + du, s0 + ds, s1 + ds}; }
  Parallelogram negated() const { return {-u1, -u0, -s1, -s0}; }
  // Image under (u, s) -> (lu * u, ls * s).
  Parallelogram scaled(const Surd& lu, const Surd& ls) const;
  bool contains(const Surd& u, const Surd& s) const { return u0 <= u && u <= u1 && s0 <= s && s <= s1; }
  bool contains_open(const Surd& u, const Surd& s) const { return u0 < u && u < u1 && s0 < s && s < s1; }
  friend bool operator==(const Parallelogram&, const Parallelogram&) = default;
};

bool interiors_meet(const Parallelogram& a, const Parallelogram& b);
bool closures_meet(const Parallelogram& a, const Parallelogram& b);
Parallelogram intersect(const Parallelogram& a, const Parallelogram& b);

struct LatticePoint {
  Integer m, n;
  Surd u, s;
};

// Integer points (m, n) whose frame coordinates lie in the box; open means strict inequalities.
std::vector<LatticePoint> lattice_points(const Frame& f, const Parallelogram& box, bool open);
LatticePoint lattice_point(const Frame& f, const Integer& m, const Integer& n);
// The unique integer point with the given u (resp. s) coordinate, if any.
std::optional<LatticePoint> lattice_point_with_u(const Frame& f, const Surd& u);
std::optional<LatticePoint> lattice_point_with_s(const Frame& f, const Surd& s);
// Residue of a u (resp. s) value modulo the coordinates of lattice points: values a, b have equal
// residues iff a - b is the coordinate of an integer point.
std::array<Rational, 2> u_residue(const Frame& f, const Surd& u);
std::array<Rational, 2> s_residue(const Frame& f, const Surd& s);

// Floating prefilter: false only if no z has a + z meeting b (closed, with a safety margin).
struct ApproxBox {
  double u0, u1, s0, s1;
  static ApproxBox of(const Parallelogram& r);
};
bool may_meet_translate(const Frame& f, const ApproxBox& a, const ApproxBox& b);

// Translates r by the integer vector that moves its (u0, s0) corner into [0,1)^2.
Parallelogram normalize_mod_lattice(const Frame& f, const Parallelogram& r);

}  // namespace torux
