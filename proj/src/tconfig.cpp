#include <algorithm>
#include <optional>

#include "torux/partitions.hpp"

namespace torux {

Surd leg_time(const Leg& leg, const Surd& u, const Surd& s) {
  const Surd& t = leg.axis == Axis::U ? u : s;
  return leg.sign > 0 ? t : -t;
}

Surd bar_coord(const Leg& leg, const Surd& u, const Surd& s) { return leg.axis == Axis::U ? s : u; }

Parallelogram from_leg_coords(const Leg& leg, const Surd& t0, const Surd& t1, const Surd& b0, const Surd& b1) {
  Surd lo = leg.sign > 0 ? t0 : -t1, hi = leg.sign > 0 ? t1 : -t0;
  if (leg.axis == Axis::U) return {lo, hi, b0, b1};
  return {b0, b1, lo, hi};
}

namespace {

// Frame box of lattice vectors with leg time in [t0, t1] and bar coordinate in [b0, b1].
Parallelogram leg_box(const Leg& leg, const Surd& t0, const Surd& t1, const Surd& b0, const Surd& b1) {
  return from_leg_coords(leg, t0, t1, b0, b1);
}

Crossing crossing_of(const Leg& leg, const LatticePoint& z) {
  return {leg_time(leg, z.u, z.s), -bar_coord(leg, z.u, z.s), z.m, z.n};
}

void check_slopes(const Frame& f) {
  if (f.k1().is_rational() || f.k2().is_rational())
    fail(ErrorKind::RationalSlope, "frame directions must have irrational slopes");
}

std::pair<Surd, Surd> frame_coords(const Frame& f, const TorusPoint& P) {
  return {f.u_of(P[0], P[1]), f.s_of(P[0], P[1])};
}

}  // namespace

std::vector<Crossing> crossings(const Frame& f, const Leg& leg, const Interval& J, const Surd& t_max) {
  std::vector<Crossing> out;
  Surd zero = f.lift(0);
  for (const auto& z : lattice_points(f, leg_box(leg, zero, t_max, -J.hi, -J.lo), false)) {
    Crossing c = crossing_of(leg, z);
    if (c.t.sign() > 0) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
  return out;
}

TConfiguration t_configuration(const Frame& f, const TorusPoint& P, const Leg& leg, const Interval& J) {
  check_slopes(f);
  Surd zero = f.lift(0);
  if (!J.contains_open(zero)) fail(ErrorKind::DegenerateArc, "starting arc must contain P in its interior");
  Surd t_max = f.lift(1);
  for (int round = 0; round < 200; ++round, t_max *= Rational(2)) {
    auto cs = crossings(f, leg, J, t_max);
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
      if (cs[j].pos.sign() == cs[j + 1].pos.sign()) continue;
      std::size_t a = 0;
      for (std::size_t h = 1; h <= j; ++h)
        if (cs[h].pos.abs() < cs[a].pos.abs()) a = h;
      const Crossing& A = cs[a];
      const Crossing& B = cs[j + 1];
      return {f, P, leg, {min(A.pos, B.pos), max(A.pos, B.pos)}, A, B};
    }
  }
  fail(ErrorKind::DegenerateArc, "no sign change of crossings found");
}

TConfiguration t_configuration_from_pair(const Frame& f, const TorusPoint& P, const Leg& leg,
                                         const std::array<Integer, 2>& zA, const std::array<Integer, 2>& zB) {
  check_slopes(f);
  Crossing A = crossing_of(leg, lattice_point(f, zA[0], zA[1]));
  Crossing B = crossing_of(leg, lattice_point(f, zB[0], zB[1]));
  return {f, P, leg, {min(A.pos, B.pos), max(A.pos, B.pos)}, A, B};
}

bool check_t_conditions(const TConfiguration& cfg, std::vector<Violation>* why) {
  bool ok = true;
  auto bad = [&](const std::string& d) {
    ok = false;
    if (why) why->push_back({"T-configuration", d});
  };
  if (!(cfg.A.t.sign() > 0 && cfg.A.t < cfg.B.t)) bad("crossing times are not 0 < t_A < t_B");
  if (cfg.A.pos.sign() * cfg.B.pos.sign() >= 0) bad("crossbar ends lie on the same side of P");
  for (const auto& c : crossings(cfg.frame, cfg.leg, cfg.I, cfg.B.t)) {
    if (c.t == cfg.A.t || c.t == cfg.B.t) continue;
    bad("extra crossing at t = " + std::to_string(c.t.to_double()));
  }
  return ok;
}

TorusPartition build_qmp(const TConfiguration& cfg, std::vector<SweepHit>* hits) {
  const Frame& f = cfg.frame;
  Surd zero = f.lift(0);
  auto [pu, ps] = frame_coords(f, cfg.P);
  TorusPartition out{f, {}, PartitionKind::qMp};
  const Crossing* ends[2] = {&cfg.A, &cfg.B};
  for (int side = 0; side < 2; ++side) {
    Surd lo = min(ends[side]->pos, zero), hi = max(ends[side]->pos, zero);
    // first lift of the crossbar met by the side segment moving along the leg
    std::optional<Crossing> hit;
    Surd t_max = cfg.B.t + cfg.A.t;
    for (int round = 0; !hit && round < 200; ++round, t_max *= Rational(2)) {
      auto zs = lattice_points(f, leg_box(cfg.leg, zero, t_max, lo - cfg.I.hi, hi - cfg.I.lo), true);
      for (const auto& z : zs) {
        Crossing c{leg_time(cfg.leg, z.u, z.s), bar_coord(cfg.leg, z.u, z.s), z.m, z.n};
        if (c.t.sign() <= 0) continue;
        if (!hit || c.t < hit->t) hit = c;
      }
    }
    if (!hit) fail(ErrorKind::DegenerateArc, "sweep found no catastrophe");
    bool contained = hit->pos + cfg.I.lo <= lo && hi <= hit->pos + cfg.I.hi;
    if (hits) hits->push_back({*hit, contained});
    out.pieces.push_back(from_leg_coords(cfg.leg, zero, hit->t, lo, hi).translated(pu, ps));
  }
  return out;
}

}  // namespace torux
