#include <algorithm>
#include <functional>

#include "torux/partitions.hpp"

namespace torux {

namespace {

struct Piece {
  std::size_t i, j;
  LatticePoint z;
  Parallelogram r;
};

// Interiors of img_i and translates R_j + z, in row-major (i, j, z) order.
std::vector<Piece> overlaps(const TorusPartition& P, const Automorphism& A, long power) {
  std::vector<Piece> out;
  std::vector<ApproxBox> approx;
  for (const auto& r : P.pieces) approx.push_back(ApproxBox::of(r));
  for (std::size_t i = 0; i < P.pieces.size(); ++i) {
    Parallelogram img = A.image(P.pieces[i], power);
    ApproxBox ai = ApproxBox::of(img);
    for (std::size_t j = 0; j < P.pieces.size(); ++j) {
      if (!may_meet_translate(P.frame, ai, approx[j])) continue;
      const auto& b = P.pieces[j];
      for (auto& z : lattice_points(P.frame, {img.u0 - b.u1, img.u1 - b.u0, img.s0 - b.s1, img.s1 - b.s0}, true)) {
        Parallelogram r = intersect(img, b.translated(z.u, z.s));
        out.push_back({i, j, std::move(z), std::move(r)});
      }
    }
  }
  return out;
}

void require_condition_I(const TorusPartition& P, const Automorphism& A) {
  ValidationReport rep = validate_partition(P, PartitionKind::preMp, &A);
  if (!rep.condition_I || !rep.disjoint || !rep.area_one)
    fail(ErrorKind::ConditionIViolation,
         "partition is not a preMp: " + (rep.violations.empty() ? std::string("?") : rep.violations[0].detail));
}

}  // namespace

TorusPartition refine(const TorusPartition& P, const Automorphism& A, RefineDirection dir) {
  require_condition_I(P, A);
  TorusPartition out{P.frame, {}, PartitionKind::strMp};
  for (const auto& pc : overlaps(P, A, dir == RefineDirection::Forward ? 1 : -1))
    out.pieces.push_back(normalize_mod_lattice(P.frame, pc.r));
  return out;
}

TransitionGraph transition_graph(const TorusPartition& P, const Automorphism& A) {
  require_condition_I(P, A);
  TransitionGraph g;
  g.vertices = P.pieces.size();
  for (const auto& pc : overlaps(P, A, 1)) g.edges.push_back({pc.i, pc.j, pc.z.m, pc.z.n});
  return g;
}

std::vector<std::vector<long>> TransitionGraph::vertex_matrix() const {
  std::vector<std::vector<long>> m(vertices, std::vector<long>(vertices, 0));
  for (const auto& e : edges) ++m[e.from][e.to];
  return m;
}

std::vector<std::vector<long>> TransitionGraph::edge_matrix() const {
  std::vector<std::vector<long>> m(edges.size(), std::vector<long>(edges.size(), 0));
  for (std::size_t p = 0; p < edges.size(); ++p)
    for (std::size_t q = 0; q < edges.size(); ++q) m[p][q] = edges[p].to == edges[q].from ? 1 : 0;
  return m;
}

bool TransitionGraph::strongly_connected() const {
  if (vertices == 0) return false;
  auto reach = [&](bool reverse) {
    std::vector<bool> seen(vertices, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        std::size_t a = reverse ? e.to : e.from, b = reverse ? e.from : e.to;
        if (a == v && !seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
  };
  return reach(false) && reach(true);
}

std::vector<std::pair<TorusPoint, std::array<Surd, 2>>> fixpoint_lattice_points(const Automorphism& A,
                                                                             const Parallelogram& box, bool open) {
  const Frame& f = A.frame();
  FixpointData fd = fixpoints(A.matrix());
  const auto& e1 = fd.basis[0];
  const auto& e2 = fd.basis[1];
  // w = m*e1 + n*e2; frame coordinates are linear in (m, n)
  Surd u1 = f.u_of(e1[0], e1[1]), s1 = f.s_of(e1[0], e1[1]);
  Surd u2 = f.u_of(e2[0], e2[1]), s2 = f.s_of(e2[0], e2[1]);
  std::vector<std::pair<TorusPoint, std::array<Surd, 2>>> out;
  // Bound (m, n) by inverting the 2x2 frame matrix on the box corners.
  Surd det = u1 * s2 - u2 * s1;
  Integer m_lo, m_hi, n_lo, n_hi;
  bool first = true;
  for (const Surd* u : {&box.u0, &box.u1})
    for (const Surd* s : {&box.s0, &box.s1}) {
      Surd m = (*u * s2 - *s * u2) / det, n = (*s * u1 - *u * s1) / det;
      Integer mf = m.floor(), mc = m.ceil(), nf = n.floor(), nc = n.ceil();
      if (first || mf < m_lo) m_lo = mf;
      if (first || mc > m_hi) m_hi = mc;
      if (first || nf < n_lo) n_lo = nf;
      if (first || nc > n_hi) n_hi = nc;
      first = false;
    }
  for (Integer m = m_lo; m <= m_hi; ++m)
    for (Integer n = n_lo; n <= n_hi; ++n) {
      Rational mq(m), nq(n);
      Surd u = u1 * mq + u2 * nq, s = s1 * mq + s2 * nq;
      if (open ? box.contains_open(u, s) : box.contains(u, s))
        out.push_back({TorusPoint{e1[0] * mq + e2[0] * nq, e1[1] * mq + e2[1] * nq}, {u, s}});
    }
  return out;
}

std::vector<EdgeTypePreMp> edge_type_shifts(const MatZ2& A, const VertexPreMp& base) {
  require_hyperbolic(A);
  const Frame& f = base.geometry.frame;
  Surd zero = f.lift(0);
  std::vector<EdgeTypePreMp> out;
  out.push_back({base.geometry, true, {Rational(0), Rational(0)}, zero, zero});
  if (base.side != BroadClass::PlusU) return out;
  // w = x e_u - y e_s with 0 < x < t_C and y in the open crossbar
  Parallelogram box{zero, base.leg_segment.hi, -base.bar_segment.hi, -base.bar_segment.lo};
  Automorphism lat(A, f);
  for (auto& [w, us] : fixpoint_lattice_points(lat, box, true)) {
    TorusPartition g{f, {}, PartitionKind::preMp};
    for (const auto& r : base.geometry.pieces) g.pieces.push_back(r.translated(-us[0], zero));
    out.push_back({std::move(g), false, w, us[0], -us[1]});
  }
  return out;
}

}  // namespace torux
