#include "torux/partitions.hpp"

namespace torux {

bool CodingCounterexample::holds() const {
  return AP1_meets_P2 && AP2_meets_P3 && A2P1_misses_P3 && A2P1_AP2_P3_empty && P1_in_Kprime && P2_in_Kdouble &&
         P3_in_int_Kdouble && A_P1_in_Kprime;
}

namespace {

struct Lift {
  std::size_t index;
  Parallelogram r;
};

bool corners_in_K(const Frame& f, const Parallelogram& r, bool open) {
  Rational h(1, 2);
  for (const Surd* u : {&r.u0, &r.u1})
    for (const Surd* s : {&r.s0, &r.s1}) {
      Surd x = f.x_of(*u, *s), y = f.y_of(*u, *s);
      bool in = open ? (x > -h && x < h && y > -h && y < h) : (x >= -h && x <= h && y >= -h && y <= h);
      if (!in) return false;
    }
  return true;
}

bool in_K_prime(const Frame& f, const Parallelogram& r) { return corners_in_K(f, r, false) && r.u1.sign() <= 0; }
bool in_K_double(const Frame& f, const Parallelogram& r) { return corners_in_K(f, r, false) && r.u0.sign() >= 0; }
bool in_int_K_double(const Frame& f, const Parallelogram& r) { return corners_in_K(f, r, true) && r.u0.sign() > 0; }

// Lifts of all pieces meeting the frame bounding box of clos K.
std::vector<Lift> lifts_near_origin(const TorusPartition& P) {
  const Frame& f = P.frame;
  Rational h(1, 2);
  std::optional<Parallelogram> bb;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      Surd u = f.u_of(h * sx, h * sy), s = f.s_of(h * sx, h * sy);
      if (!bb)
        bb = Parallelogram{u, u, s, s};
      else
        bb = Parallelogram{min(bb->u0, u), max(bb->u1, u), min(bb->s0, s), max(bb->s1, s)};
    }
  std::vector<Lift> out;
  for (std::size_t i = 0; i < P.pieces.size(); ++i) {
    const auto& r = P.pieces[i];
    for (const auto& z : lattice_points(f, {bb->u0 - r.u1, bb->u1 - r.u0, bb->s0 - r.s1, bb->s1 - r.s0}, false))
      out.push_back({i, r.translated(z.u, z.s)});
  }
  return out;
}

bool misses_all_translates(const Frame& f, const Parallelogram& a, const Parallelogram& b) {
  return lattice_points(f, {a.u0 - b.u1, a.u1 - b.u0, a.s0 - b.s1, a.s1 - b.s0}, false).empty();
}

// Closures of a, b + z, c + z' have a common point for some translates.
bool triple_meets(const Frame& f, const Parallelogram& a, const Parallelogram& b, const Parallelogram& c) {
  for (const auto& z : lattice_points(f, {a.u0 - c.u1, a.u1 - c.u0, a.s0 - c.s1, a.s1 - c.s0}, false)) {
    Parallelogram ac = intersect(a, c.translated(z.u, z.s));
    if (!lattice_points(f, {ac.u0 - b.u1, ac.u1 - b.u0, ac.s0 - b.s1, ac.s1 - b.s0}, false).empty()) return true;
  }
  return false;
}

}  // namespace

CodingCounterexample coding_counterexample(const MatZ2& A, int max_refinements) {
  require_hyperbolic(A);
  Automorphism aut(A);
  if (!aut.positive_spectrum()) fail(ErrorKind::OutOfRange, "the construction needs positive eigenvalues");
  const Frame& f = aut.frame();
  std::optional<TorusPartition> start;
  for (const auto& e : enumerate_class(aut, BroadClass::PlusU, 0, 4))
    if (e.guaranteed) {
      start = e.geometry;
      break;
    }
  if (!start) fail(ErrorKind::WindowTooSmall, "no valid vertex preMp to start from");
  TorusPartition P = *start;
  for (int r = 1; r <= max_refinements; ++r) {
    P = refine(P, aut, r % 3 == 0 ? RefineDirection::Forward : RefineDirection::Backward);
    auto lifts = lifts_near_origin(P);
    Surd zero = f.lift(0);
    for (const auto& l1 : lifts) {
      const auto& P1 = l1.r;
      if (!(P1.u1 == zero) || P1.s0.sign() > 0 || P1.s1.sign() < 0 || !in_K_prime(f, P1)) continue;
      Parallelogram AP1 = aut.image(P1, 1), A2P1 = aut.image(P1, 2);
      if (!in_K_prime(f, AP1) || !in_K_prime(f, A2P1)) continue;
      for (const auto& l2 : lifts) {
        const auto& P2 = l2.r;
        if (!(P2.u0 == zero) || P2.s0.sign() > 0 || P2.s1.sign() < 0 || !in_K_double(f, P2)) continue;
        if (!(max(P1.s0, P2.s0) < min(P1.s1, P2.s1))) continue;
        Parallelogram AP2 = aut.image(P2, 1);
        for (const auto& l3 : lifts) {
          const auto& P3 = l3.r;
          if (!in_int_K_double(f, P3) || !interiors_meet(AP2, P3)) continue;
          CodingCounterexample cx{aut, P, r, l1.index, l2.index, l3.index, P1, P2, P3};
          cx.AP1_meets_P2 = closures_meet(AP1, P2);
          cx.AP2_meets_P3 = true;
          cx.A2P1_misses_P3 = misses_all_translates(f, A2P1, P3);
          cx.A2P1_AP2_P3_empty = !triple_meets(f, A2P1, AP2, P3);
          cx.P1_in_Kprime = true;
          cx.P2_in_Kdouble = true;
          cx.P3_in_int_Kdouble = true;
          cx.A_P1_in_Kprime = true;
          if (cx.holds()) return cx;
        }
      }
    }
  }
  fail(ErrorKind::WindowTooSmall, "no fixture found within " + std::to_string(max_refinements) + " refinements");
}

}  // namespace torux
