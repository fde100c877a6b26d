#include <algorithm>
#include <map>
#include <sstream>

#include "torux/partitions.hpp"

namespace torux {

const char* kind_name(PartitionKind k) {
  switch (k) {
    case PartitionKind::qMp: return "qMp";
    case PartitionKind::preMp: return "preMp";
    default: return "strMp";
  }
}

Surd TorusPartition::total_area() const {
  Surd a = frame.lift(0);
  for (const auto& p : pieces) a += p.coord_area();
  return a * frame.area_factor();
}

bool same_on_torus(const TorusPartition& a, const TorusPartition& b) {
  if (a.pieces.size() != b.pieces.size()) return false;
  std::vector<Parallelogram> na, nb;
  for (const auto& p : a.pieces) na.push_back(normalize_mod_lattice(a.frame, p));
  for (const auto& p : b.pieces) nb.push_back(normalize_mod_lattice(b.frame, p));
  std::vector<bool> used(nb.size(), false);
  for (const auto& p : na) {
    bool found = false;
    for (std::size_t j = 0; j < nb.size() && !found; ++j)
      if (!used[j] && nb[j] == p) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

namespace {

Surd slope_root(const MatZ2& A, const Surd& k) {
  return k * k * Rational(A.c()) + k * Rational(A.d() - A.a()) - Rational(A.b());
}

std::vector<TorusPoint> fixpoint_list(const MatZ2& A) {
  std::vector<TorusPoint> out;
  for (const auto& p : fixpoints(A).points) out.push_back(p);
  return out;
}

}  // namespace

Automorphism::Automorphism(const MatZ2& A)
    : A_(A),
      frame_(eigen_data(A).kappa, eigen_data(A).kappa_s),
      lambda_(eigen_data(A).lambda_u),
      mu_(eigen_data(A).lambda_s),
      fix_(fixpoint_list(A)) {}

Automorphism::Automorphism(const MatZ2& A, const Frame& frame)
    : A_(A),
      frame_(frame),
      lambda_(frame.k1() * Rational(A.c()) + Rational(A.d())),
      mu_(frame.k2() * Rational(A.c()) + Rational(A.d())),
      fix_(fixpoint_list(A)) {
  if (!slope_root(A, frame.k1()).is_zero() || !slope_root(A, frame.k2()).is_zero())
    fail(ErrorKind::Internal, "frame is not an eigen frame of " + A.to_string());
  if (!(lambda_.abs() > Rational(1))) fail(ErrorKind::Internal, "first frame axis is not expanding");
}

Surd Automorphism::lambda_pow(long n) const {
  Surd r = frame_.lift(1);
  Surd b = n < 0 ? lambda_.inverse() : lambda_;
  for (long i = 0; i < std::abs(n); ++i) r *= b;
  return r;
}

Surd Automorphism::mu_pow(long n) const {
  Surd r = frame_.lift(1);
  Surd b = n < 0 ? mu_.inverse() : mu_;
  for (long i = 0; i < std::abs(n); ++i) r *= b;
  return r;
}

Parallelogram Automorphism::image(const Parallelogram& r, long n) const {
  return r.scaled(lambda_pow(n), mu_pow(n));
}

std::pair<Surd, Surd> Automorphism::image(const Surd& u, const Surd& s, long n) const {
  return {u * lambda_pow(n), s * mu_pow(n)};
}

MatZ2 positive_companion(const MatZ2& A) {
  EigenData e = eigen_data(A);
  if (e.lambda_u.sign() > 0 && e.lambda_s.sign() > 0) return A;
  if (e.lambda_u.sign() < 0 && e.lambda_s.sign() < 0) return -A;
  return A * A;
}

namespace {

std::string fmt(const Surd& x) {
  std::ostringstream os;
  os << x.to_double();
  return os.str();
}

std::string fmt(const Parallelogram& r) {
  return "[" + fmt(r.u0) + ", " + fmt(r.u1) + "] x [" + fmt(r.s0) + ", " + fmt(r.s1) + "]";
}

// Sides of all pieces, grouped by the leaf they lie on; within a leaf, sides are placed in the
// coordinate of a reference line and merged, so coverage queries are binary searches.
class SideIndex {
 public:
  SideIndex(const TorusPartition& P, bool stable) : P_(P), stable_(stable) {
    for (const auto& R : P.pieces)
      for (const Surd* side : stable ? std::array<const Surd*, 2>{&R.u0, &R.u1} : std::array<const Surd*, 2>{&R.s0, &R.s1}) {
        auto key = residue(*side);
        auto it = leaves_.find(key);
        if (it == leaves_.end()) it = leaves_.emplace(key, Leaf{*side, {}}).first;
        Surd off = offset(it->second.ref, *side);
        it->second.parts.push_back(stable ? Interval{R.s0 + off, R.s1 + off} : Interval{R.u0 + off, R.u1 + off});
      }
    for (auto& [key, leaf] : leaves_) {
      auto& v = leaf.parts;
      std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
      std::vector<Interval> merged;
      for (auto& iv : v) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
          if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
        } else {
          merged.push_back(std::move(iv));
        }
      }
      v = std::move(merged);
    }
  }

  // The closed segment {coordinate = c} x range lies in the union of sides.
  bool covers(const Surd& c, const Interval& range) const {
    auto it = leaves_.find(residue(c));
    if (it == leaves_.end()) return false;
    Surd off = offset(it->second.ref, c);
    Surd lo = range.lo + off, hi = range.hi + off;
    const auto& v = it->second.parts;
    auto pos = std::upper_bound(v.begin(), v.end(), lo, [](const Surd& x, const Interval& iv) { return x < iv.lo; });
    if (pos == v.begin()) return false;
    --pos;
    return pos->lo <= lo && hi <= pos->hi;
  }

 private:
  struct Leaf {
    Surd ref;
    std::vector<Interval> parts;
  };
  std::array<Rational, 2> residue(const Surd& v) const {
    return stable_ ? u_residue(P_.frame, v) : s_residue(P_.frame, v);
  }
  // Shift along the side direction that carries the line {coordinate = v} onto {coordinate = ref}.
  Surd offset(const Surd& ref, const Surd& v) const {
    auto z = stable_ ? lattice_point_with_u(P_.frame, v - ref) : lattice_point_with_s(P_.frame, v - ref);
    if (!z) fail(ErrorKind::Internal, "side residue mismatch");
    return stable_ ? -z->s : -z->u;
  }
  const TorusPartition& P_;
  bool stable_;
  std::map<std::array<Rational, 2>, Leaf> leaves_;
};

}  // namespace

ValidationReport validate_partition(const TorusPartition& P, PartitionKind kind, const Automorphism* A,
                                    const ValidateOptions& opt) {
  ValidationReport rep{kind, P.total_area()};
  auto add = [&](const std::string& check, const std::string& detail) {
    if (rep.violations.size() < opt.max_violations) rep.violations.push_back({check, detail});
  };
  const auto& pcs = P.pieces;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    if (!(pcs[i].u0 < pcs[i].u1) || !(pcs[i].s0 < pcs[i].s1)) {
      rep.disjoint = false;
      add("shape", "piece " + std::to_string(i) + " is degenerate: " + fmt(pcs[i]));
    }
  rep.area_one = rep.area == Rational(1);
  if (!rep.area_one) add("area", "total area " + rep.area.to_string() + " != 1");
  std::vector<ApproxBox> approx;
  for (const auto& r : pcs) approx.push_back(ApproxBox::of(r));
  for (std::size_t i = 0; i < pcs.size(); ++i)
    for (std::size_t j = i; j < pcs.size(); ++j) {
      if (!may_meet_translate(P.frame, approx[i], approx[j])) continue;
      const auto &a = pcs[i], &b = pcs[j];
      for (const auto& z : lattice_points(P.frame, {a.u0 - b.u1, a.u1 - b.u0, a.s0 - b.s1, a.s1 - b.s0}, true)) {
        if (i == j && sgn(z.m) == 0 && sgn(z.n) == 0) continue;
        rep.disjoint = false;
        add("disjoint", "pieces " + std::to_string(i) + " and " + std::to_string(j) + " + (" + z.m.get_str() + "," +
                            z.n.get_str() + ") overlap: " + fmt(a) + " vs " + fmt(b.translated(z.u, z.s)));
      }
    }
  if (kind != PartitionKind::qMp) {
    if (!A) fail(ErrorKind::Internal, "preMp validation needs the automorphism");
    rep.checked_I = true;
    SideIndex stable_sides(P, true), unstable_sides(P, false);
    for (std::size_t i = 0; i < pcs.size(); ++i) {
      Parallelogram img = A->image(pcs[i], 1);
      for (const Surd* c : {&img.u0, &img.u1})
        if (!stable_sides.covers(*c, {img.s0, img.s1})) {
          rep.condition_I = false;
          add("condition I", "stable side u=" + fmt(*c) + " of A(piece " + std::to_string(i) + ") not on stable boundary");
        }
      Parallelogram pre = A->image(pcs[i], -1);
      for (const Surd* c : {&pre.s0, &pre.s1})
        if (!unstable_sides.covers(*c, {pre.u0, pre.u1})) {
          rep.condition_I = false;
          add("condition I", "unstable side s=" + fmt(*c) + " of A^-1(piece " + std::to_string(i) +
                                 ") not on unstable boundary");
        }
    }
  }
  if (kind == PartitionKind::strMp) {
    rep.checked_II = true;
    for (std::size_t i = 0; i < pcs.size(); ++i) {
      Parallelogram img = A->image(pcs[i], 1);
      ApproxBox ai = ApproxBox::of(img);
      for (std::size_t j = 0; j < pcs.size(); ++j) {
        if (!may_meet_translate(P.frame, ai, approx[j])) continue;
        const auto& b = pcs[j];
        auto zs = lattice_points(P.frame, {img.u0 - b.u1, img.u1 - b.u0, img.s0 - b.s1, img.s1 - b.s0}, true);
        if (zs.size() > 1) {
          rep.condition_II = false;
          add("condition II", "A(piece " + std::to_string(i) + ") meets " + std::to_string(zs.size()) +
                                  " translates of piece " + std::to_string(j));
        }
      }
    }
  }
  if (A && (opt.condition_III || kind != PartitionKind::qMp)) {
    SideIndex stable_sides(P, true), unstable_sides(P, false);
    for (const auto& F : A->fixpoints()) {
      Surd u = P.frame.u_of(F[0], F[1]), s = P.frame.s_of(F[0], F[1]);
      rep.fixpoints.push_back({F, stable_sides.covers(u, {s, s}), unstable_sides.covers(s, {u, u})});
    }
    if (opt.condition_III) {
      rep.checked_III = true;
      rep.condition_III = std::any_of(rep.fixpoints.begin(), rep.fixpoints.end(),
                                      [](const BoundaryFixpoint& b) { return b.on_stable && b.on_unstable; });
      if (!rep.condition_III) add("condition III", "no fixpoint on both stable and unstable boundary");
    }
  }
  return rep;
}

}  // namespace torux
