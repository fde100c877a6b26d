#include <algorithm>
#include <map>
#include <numeric>

#include "torux/cfrac.hpp"
#include "torux/partitions.hpp"

namespace torux {

const char* class_name(BroadClass c) {
  switch (c) {
    case BroadClass::PlusU: return "+u";
    case BroadClass::PlusS: return "+s";
    case BroadClass::MinusU: return "-u";
    default: return "-s";
  }
}

const char* type_name(PremType t) { return t == PremType::Island ? "island" : "parquet"; }

namespace {

Axis class_axis(BroadClass c) {
  return c == BroadClass::PlusU || c == BroadClass::MinusU ? Axis::U : Axis::S;
}
int class_sign(BroadClass c) { return c == BroadClass::PlusU || c == BroadClass::PlusS ? 1 : -1; }

bool same_lattice_point(const Crossing& c, const std::array<Integer, 2>& z) { return c.m == z[0] && c.n == z[1]; }

Automorphism companion_of(const MatZ2& A) {
  Automorphism base(A);
  return Automorphism(positive_companion(A), base.frame());
}

}  // namespace

std::vector<VertexPreMp> enumerate_class(const Automorphism& A, BroadClass side, long k_begin, long k_end) {
  const Frame& f = A.frame();
  Axis axis = class_axis(side);
  int sign = class_sign(side);
  Leg leg{axis, sign};
  CFExpansion cf = expand(axis == Axis::U ? f.k1() : f.k2());
  if (k_begin < 0) fail(ErrorKind::OutOfRange, "enumeration starts at k >= 0");
  ConvergentTable tab = convergent_table(cf, static_cast<std::size_t>(k_end) + 2);
  std::vector<VertexPreMp> out;
  long base_index = 0;
  for (long j = 1; j <= k_begin; ++j) base_index += cf.term(j).get_si();
  ValidateOptions vopt;
  vopt.condition_III = true;
  for (long k = k_begin; k <= k_end; ++k) {
    Integer b = cf.term(k + 1);
    for (Integer l = 1; l <= b; ++l) {
      std::array<Integer, 2> zA{sign * tab.pk(k), sign * tab.qk(k)};
      std::array<Integer, 2> zB{sign * (l * tab.pk(k) + tab.pk(k - 1)), sign * (l * tab.qk(k) + tab.qk(k - 1))};
      TConfiguration cfg = t_configuration_from_pair(f, {Rational(0), Rational(0)}, leg, zA, zB);
      std::vector<Violation> issues;
      bool ok = check_t_conditions(cfg, &issues);
      std::vector<SweepHit> hits;
      TorusPartition geom = build_qmp(cfg, &hits);
      if (!same_lattice_point(hits[0].lift, zB) || !same_lattice_point(hits[1].lift, zA) || !hits[0].contained ||
          !hits[1].contained) {
        ok = false;
        issues.push_back({"sweep", "first catastrophes are not at the lifts through B and A"});
      }
      ValidationReport rep = validate_partition(geom, PartitionKind::preMp, &A, vopt);
      if (!rep.passed()) {
        ok = false;
        issues.insert(issues.end(), rep.violations.begin(), rep.violations.end());
      }
      geom.kind = PartitionKind::preMp;
      long index = base_index + l.get_si() - 1;
      Interval leg_seg{f.lift(0), cfg.B.t};
      Interval bar = cfg.I;
      VertexPreMp e{side, k, l, b, index, zA, zB, std::move(cfg), std::move(geom), l == b ? PremType::Island : PremType::Parquet,
                    std::move(leg_seg), std::move(bar)};
      e.valid = ok;
      e.issues = std::move(issues);
      out.push_back(std::move(e));
    }
    base_index += b.get_si();
  }
  bool tail_ok = true;
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    tail_ok = tail_ok && it->valid;
    it->guaranteed = tail_ok;
  }
  return out;
}

std::vector<VertexPreMp> enumerate_vertex_premps(const MatZ2& A, const EnumerationWindow& w) {
  require_hyperbolic(A);
  Automorphism aut = companion_of(A);
  long k_end;
  if (w.k_end) {
    k_end = *w.k_end;
  } else {
    CFExpansion cu = expand(aut.frame().k1()), cs = expand(aut.frame().k2());
    long L = static_cast<long>(std::max(cu.period.size(), cs.period.size()));
    long pre = static_cast<long>(std::max(cu.preperiod.size(), cs.preperiod.size()));
    k_end = w.k_begin + pre + 2 * L + 1;
    // extend until every class has two full periods of guaranteed entries
    for (int round = 0; round < 16; ++round) {
      long first = w.k_begin;
      for (BroadClass c : {BroadClass::PlusU, BroadClass::PlusS}) {
        auto es = enumerate_class(aut, c, w.k_begin, k_end);
        long f = k_end + 1;
        for (const auto& e : es)
          if (e.guaranteed) {
            f = e.k;
            break;
          }
        first = std::max(first, f);
      }
      if (k_end + 1 - first >= 2 * L) break;
      k_end += L;
    }
  }
  std::vector<VertexPreMp> out;
  for (BroadClass c : {BroadClass::PlusU, BroadClass::PlusS, BroadClass::MinusU, BroadClass::MinusS}) {
    auto es = enumerate_class(aut, c, w.k_begin, k_end);
    for (auto& e : es) out.push_back(std::move(e));
  }
  return out;
}

PremType classify_type(const VertexPreMp& e) { return e.l == e.b_next ? PremType::Island : PremType::Parquet; }

PremType geometric_type(const VertexPreMp& e) {
  return e.config.A.pos.abs() > e.config.B.pos.abs() ? PremType::Island : PremType::Parquet;
}

ClassCounts count_classes(const MatZ2& A) {
  require_hyperbolic(A);
  auto period = canonical_period(expand(eigen_data(A).kappa));
  long sum = 0;
  for (const auto& a : period) sum += a.get_si();
  long L = static_cast<long>(period.size());
  return {2 * sum, 2 * L, 2 * (sum - L)};
}

TorusPartition apply_commuting(const Automorphism& A, const MatZ2& C, const TorusPartition& P) {
  const Frame& f = A.frame();
  Surd g = f.k1() * Rational(C.c()) + Rational(C.d());
  Surd h = f.k2() * Rational(C.c()) + Rational(C.d());
  if (!(f.k1() * Rational(C.a()) + Rational(C.b()) == f.k1() * g) ||
      !(f.k2() * Rational(C.a()) + Rational(C.b()) == f.k2() * h))
    fail(ErrorKind::Internal, C.to_string() + " does not commute with " + A.matrix().to_string());
  TorusPartition out{P.frame, {}, P.kind};
  for (const auto& r : P.pieces) out.pieces.push_back(r.scaled(g, h));
  return out;
}

namespace {

// C, or -C when C reverses the leg direction of the class.
TorusPartition class_image(const Automorphism& A, const MatZ2& C, const VertexPreMp& e) {
  const Frame& f = A.frame();
  Surd g = (class_axis(e.side) == Axis::U ? f.k1() : f.k2()) * Rational(C.c()) + Rational(C.d());
  return apply_commuting(A, g.sign() < 0 ? -C : C, e.geometry);
}

TorusPartition negated(const TorusPartition& P) {
  TorusPartition out{P.frame, {}, P.kind};
  for (const auto& r : P.pieces) out.pieces.push_back(r.negated());
  return out;
}

}  // namespace

std::optional<long> sequence_shift(const Automorphism& A, const MatZ2& C, const std::vector<VertexPreMp>& entries) {
  std::optional<long> d;
  for (const auto& e : entries) {
    TorusPartition img = class_image(A, C, e);
    for (const auto& t : entries) {
      if (t.side != e.side || !same_on_torus(img, t.geometry)) continue;
      long shift = t.index - e.index;
      if (d && *d != shift) return std::nullopt;
      d = shift;
    }
  }
  return d;
}

OrbitCount count_classes_enumerated(const MatZ2& A) {
  auto all = enumerate_vertex_premps(A);
  Automorphism aut = companion_of(A);
  MatZ2 B = centralizer(A).B;
  std::vector<const VertexPreMp*> es;
  for (const auto& e : all)
    if (e.guaranteed) es.push_back(&e);
  std::vector<std::size_t> parent(es.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto link = [&](const TorusPartition& img, std::size_t i) {
    for (std::size_t j = 0; j < es.size(); ++j)
      if (same_on_torus(img, es[j]->geometry)) parent[find(i)] = find(j);
  };
  for (std::size_t i = 0; i < es.size(); ++i) {
    link(apply_commuting(aut, B, es[i]->geometry), i);
    link(negated(es[i]->geometry), i);
  }
  std::map<std::size_t, PremType> comp;
  bool consistent = true;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [it, fresh] = comp.emplace(find(i), es[i]->ptype);
    if (!fresh && it->second != es[i]->ptype) consistent = false;
  }
  if (!consistent) fail(ErrorKind::Internal, "an orbit mixes island and parquet entries");
  OrbitCount out{{0, 0, 0}, 0, 0};
  for (const auto& [root, t] : comp) {
    ++out.counts.total;
    (t == PremType::Island ? out.counts.island : out.counts.parquet)++;
  }
  std::vector<VertexPreMp> plus_u;
  for (const auto* e : es)
    if (e->side == BroadClass::PlusU) plus_u.push_back(*e);
  out.shift_S = sequence_shift(aut, B, plus_u).value_or(0);
  out.period_length = static_cast<long>(canonical_period(expand(eigen_data(A).kappa)).size());
  return out;
}

}  // namespace torux
