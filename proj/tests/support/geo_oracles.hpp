#pragma once

// Floating-point reference geometry for partition tests (high precision, independent of the exact lattice code).

#include <gmpxx.h>

#include <array>
#include <vector>

#include "torux/partitions.hpp"

namespace oracle {

using Real = mpf_class;
constexpr unsigned kBits = 256;

Real to_real(const torux::Surd& x);

struct FBox {
  Real u0, u1, s0, s1;
};
FBox to_fbox(const torux::Parallelogram& r);

struct FFrame {
  Real k1, k2, delta;
  explicit FFrame(const torux::Frame& f);
  Real u(const Real& x, const Real& y) const { return (x - y * k2) / delta; }
  Real s(const Real& x, const Real& y) const { return (y * k1 - x) / delta; }
};

struct FCrossing {
  Real t, pos;
  long m, n;
};
// Every integer point scanned in an xy box with leg time in (0, t_max) and -bar coordinate in [lo, hi].
std::vector<FCrossing> brute_crossings(const torux::Frame& f, const torux::Leg& leg, const Real& lo, const Real& hi,
                                       const Real& t_max);

// A family of translates of one piece is an island family iff no two of its translates share a side segment
// of positive length; the patch scans |m|, |n| <= radius.
bool family_has_side_contact(const torux::Frame& f, const torux::Parallelogram& r, long radius = 10);
torux::PremType contact_type(const torux::TorusPartition& P, long radius = 10);

// Number of piece translates whose interior contains the point (x, y).
int cover_count(const torux::TorusPartition& P, const Real& x, const Real& y);

// Fixpoint-lattice points x e_u - y e_s with 0 < x < x_max and y_lo < y < y_hi, found by scanning the
// grid (1/|det(A - I)|) Z^2 in a bounding xy box.
long brute_fixpoint_lattice_count(const torux::MatZ2& A, const torux::Frame& f, const Real& x_max, const Real& y_lo,
                                  const Real& y_hi);

}  // namespace oracle
