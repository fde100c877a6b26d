// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "geo_oracles.hpp"
#include "oracles.hpp"
#include "torux/conjugacy.hpp"
#include "torux/report.hpp"

using namespace torux;

namespace {

const MatZ2 golden(2, 1, 1, 1);
const MatZ2 period12(3, 2, 1, 1);

struct Outcome {
  bool ok;
  std::string detail;
};

Automorphism companion(const MatZ2& A) { return Automorphism(positive_companion(A), Automorphism(A).frame()); }

MatZ2 conj_by(const MatZ2& C, const MatZ2& A) { return C * A * C.inverse(); }

std::vector<oracle::Pair> pairs(const std::vector<Convergent>& v) {
  std::vector<oracle::Pair> out;
  for (const auto& c : v) out.push_back({c.p, c.q});
  return out;
}

Outcome golden_classification() {
  EigenData e = eigen_data(golden);
  bool kappa = e.kappa == Surd(ratio(1, 2), ratio(1, 2), 5);
  CFExpansion cf = expand(e.kappa);
  bool cf_ok = cf.preperiod.empty() && cf.period == std::vector<Integer>{1} && cf.to_string() == "[(1)]";
  ClassCounts c = count_classes(golden);
  bool counts = c == ClassCounts{2, 2, 0};
  bool orbits = count_classes_enumerated(golden).counts == c;
  return {kappa && cf_ok && counts && orbits, "kappa " + e.kappa.to_string() + ", cf " + cf.to_string() + ", counts {" +
                                                  std::to_string(c.total) + "," + std::to_string(c.island) + "," +
                                                  std::to_string(c.parquet) + "}"};
}

Outcome period12_sequence() {
  std::vector<Integer> period = canonical_period(expand(eigen_data(period12).kappa));
  auto rot = minimal_rotation(std::vector<Integer>{1, 2});
  bool per = period == rot;
  ClassCounts c = count_classes(period12);
  bool counts = c == ClassCounts{6, 4, 2};
  auto all = enumerate_vertex_premps(period12);
  std::vector<VertexPreMp> pu;
  for (const auto& e : all)
    if (e.side == BroadClass::PlusU && e.guaranteed) pu.push_back(e);
  std::string pat;
  bool types_agree = true;
  for (const auto& e : pu) {
    pat += e.ptype == PremType::Island ? 'I' : 'P';
    types_agree = types_agree && geometric_type(e) == e.ptype;
  }
  bool window = pat.find("PII") != std::string::npos;
  for (std::size_t i = 3; i < pat.size(); ++i) window = window && pat[i] == pat[i - 3];
  std::optional<long> shift = sequence_shift(companion(period12), period12, pu);
  OrbitCount o = count_classes_enumerated(period12);
  bool ok = per && counts && window && types_agree && shift && *shift == 3 && o.counts == c && o.shift_S == 3;
  return {ok, "pattern " + pat + ", A-shift " + (shift ? std::to_string(*shift) : std::string("none"))};
}

Outcome self_conjugacy() {
  ConjugacyWitness w = find_conjugator(golden, golden, {1, false});
  const Generators& G = generators();
  MatZ2 C = G.C2 * G.C1.inverse();
  bool ok = word_to_string(w.word) == "C2*C1^-1" && w.matrix == C && C.det() == -1 && w.det == -1 &&
            conj_by(C, golden) == golden && evaluate_word(w.word) == C;
  return {ok, "word " + word_to_string(w.word) + ", det " + std::to_string(w.det)};
}

Outcome centralizer_generator_check() {
  MatZ2 B = centralizer_generator(golden);
  return {B * B == golden && B * golden == golden * B, "B = " + B.to_string()};
}

Outcome best_approx_oracles() {
  std::vector<Surd> omegas{Surd(ratio(1, 2), ratio(1, 2), 5), Surd(Rational(0), Rational(1), 2),
                           Surd(Rational(1), Rational(1), 3)};
  oracle::Rng rng(2024);
  for (int i = 0; i < 10; ++i) omegas.push_back(oracle::random_surd(rng));
  long mismatches = 0, terms = 0;
  for (const Surd& w : omegas) {
    auto one = pairs(best_approx_one_sided(w, 2000));
    auto two = pairs(best_approx_two_sided(w, 2000));
    mismatches += one != oracle::brute_one_sided(w, 2000);
    mismatches += two != oracle::brute_two_sided(w, 2000);
    terms += static_cast<long>(one.size() + two.size());
  }
  return {mismatches == 0, std::to_string(omegas.size()) + " surds, " + std::to_string(terms) + " pairs, " +
                               std::to_string(mismatches) + " mismatching lists"};
}

Outcome kappa_under_generators() {
  oracle::Rng rng(42);
  const Generators& G = generators();
  const MatZ2* C[3] = {&G.C1, &G.C2, &G.C3};
  long checks = 0, bad = 0;
  for (int n = 0; n < 100; ++n) {
    MatZ2 A = oracle::random_hyperbolic(rng);
    Surd k = eigen_data(A).kappa;
    for (int i = 1; i <= 3; ++i) {
      MatZ2 B = conj_by(*C[i - 1], A);
      if (sgn(B.c()) == 0) continue;
      ++checks;
      bad += !(eigen_data(B).kappa == apply_T(i, k));
    }
  }
  return {bad == 0 && checks >= 250, std::to_string(checks) + " conjugates checked"};
}

Outcome quadratic_forms() {
  oracle::Rng rng(43);
  const MatZ2& C3 = generators().C3;
  long bad = 0;
  for (int i = 0; i < 500; ++i) {
    MatZ2 X = oracle::random_gl2(rng, 3), g = oracle::random_sl2(rng, 3);
    QuadraticForm f = to_form(X);
    bad += f.disc() != X.trace() * X.trace() - 4 * X.det();
    bad += !check_diagram(g, X);
    bad += !(to_form(conj_by(g, X)) == pullback(g, f));
    bad += !(from_form(f, X.trace(), X.det()) == X);
    bad += !(to_form(conj_by(g * C3, X)) == -pullback(g * C3, f));
  }
  return {bad == 0, "500 pairs, " + std::to_string(bad) + " failures"};
}

Outcome partition_validators() {
  Automorphism a = companion(golden);
  auto e = enumerate_class(a, BroadClass::PlusU, 0, 2)[0];
  ValidateOptions opt;
  opt.condition_III = true;
  ValidationReport rep = validate_partition(e.geometry, PartitionKind::preMp, &a, opt);
  bool two_piece = e.geometry.pieces.size() == 2 && rep.passed() && rep.condition_I && rep.condition_III;
  const Frame& f = a.frame();
  bool none_single = true;
  for (long k = 1; k <= 12; ++k) {
    Rational ul = ratio(k, 4);
    Surd sl = (Surd::root(5) * ul).inverse();
    TorusPartition P{f, {{f.lift(0), f.lift(ul), f.lift(0), sl}}, PartitionKind::qMp};
    none_single = none_single && P.total_area() == Rational(1) && !validate_partition(P, PartitionKind::qMp).passed();
  }
  TorusPartition R = refine(e.geometry, a, RefineDirection::Forward);
  ValidationReport rr = validate_partition(R, PartitionKind::strMp, &a);
  Integer lam_ceil = a.lambda().ceil();
  bool refined = rr.passed() && rr.condition_II && Integer(static_cast<long>(R.pieces.size())) >= lam_ceil;
  return {two_piece && none_single && refined,
          "refined pieces " + std::to_string(R.pieces.size()) + " >= ceil(lambda) = " + lam_ceil.get_str()};
}

Outcome entropy_certificate() {
  std::string d;
  bool ok = true;
  for (const MatZ2& A : {golden, period12}) {
    Automorphism a = companion(A);
    auto base = enumerate_class(a, BroadClass::PlusU, 0, 2)[0].geometry;
    TorusPartition R = refine(base, a, RefineDirection::Forward);
    MarkovSubset m = markov_from_graph(transition_graph(R, a));
    EntropyCertificate c = entropy(m, a.lambda());
    double lam = oracle::to_real(a.lambda()).get_d();
    ok = ok && c.exact_root && c.float_agrees && std::fabs(c.perron_float - lam) <= 1e-9;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%zu symbols, |perron - lambda| = %.1e", d.empty() ? "" : "; ", m.k,
                  std::fabs(c.perron_float - lam));
    d += buf;
  }
  return {ok, d};
}

Outcome counterexample() {
  CodingCounterexample cx = coding_counterexample(golden);
  Surd z = cx.strmp.frame.lift(0);
  PointCoding c = encode_point(cx.strmp, cx.A, z, z, -2, 2);
  bool subset = true;
  for (const auto& w : c.closure_words)
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
      const auto& s = c.naive_sets[i];
      subset = subset && std::find(s.begin(), s.end(), w.symbols[i]) != s.end();
    }
  bool strict = Integer(static_cast<long>(c.closure_words.size())) < c.naive_count;
  bool ok = cx.AP1_meets_P2 && cx.AP2_meets_P3 && cx.A2P1_misses_P3 && cx.holds() && subset && strict;
  return {ok, std::to_string(cx.strmp.pieces.size()) + " pieces; origin closure codes " +
                  std::to_string(c.closure_words.size()) + " vs naive " + c.naive_count.get_str()};
}

Outcome doubling_exactness() {
  oracle::Rng rng(11);
  bool arcs = true;
  std::vector<int> pre;
  Arc prev{Rational(0), Rational(1)};
  for (int N = 0; N <= 60; ++N) {
    pre.push_back(static_cast<int>(rng.uniform(0, 1)));
    Arc a = arc_F(pre);
    arcs = arcs && a.length() == ratio(1, Integer(1) << static_cast<mp_bitcnt_t>(N + 1)) && prev.lo <= a.lo &&
           a.hi <= prev.hi;
    prev = a;
  }
  bool inv = true;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<long, int>> cs;
    std::set<long> used;
    long n = rng.uniform(0, 8);
    while (static_cast<long>(cs.size()) < n) {
      long i = rng.uniform(0, 15);
      if (used.insert(i).second) cs.push_back({i, static_cast<int>(rng.uniform(0, 1))});
    }
    Integer p0 = rng.uniform(1, 20), q = rng.uniform(21, 40);
    MeasureSpec unfair = make_measure({ratio(p0, q), ratio(q - p0, q)});
    Cylinder c = make_cylinder(cs), p = shift_preimage(c);
    Rational expect(1);
    for (const auto& [i, a] : cs) expect *= unfair.p[static_cast<std::size_t>(a)];
    inv = inv && cylinder_measure(p, MeasureSpec::fair()) == cylinder_measure(c, MeasureSpec::fair()) &&
          cylinder_measure(c, MeasureSpec::fair()) == ratio(1, Integer(1) << static_cast<mp_bitcnt_t>(n)) &&
          cylinder_measure(p, unfair) == cylinder_measure(c, unfair) && cylinder_measure(c, unfair) == expect;
  }
  long trips = 0;
  for (int i = 0; i < 1000; ++i) {
    Integer q = rng.uniform(1, 5000);
    Rational x = ratio(rng.uniform(0, q.get_si() - 1), q);
    DoublingCode c = doubling_code(x);
    trips += doubling_decode(c.code) == x && doubling_decode(shift(c.code)) == doubling_map(x);
  }
  return {arcs && inv && trips == 1000, "arcs to N=60, 100 cylinders, " + std::to_string(trips) + "/1000 round trips"};
}

Outcome mixing() {
  MixSpec s;
  s.A = golden;
  s.grid = 512;
  s.iters = 3;
  MixResult r = mix(s);
  char buf[128];
  std::snprintf(buf, sizeof buf, "mes X %.4f, mes Y %.2f, overlap/mes Y %.4f, deviation %.4f", r.mes_X, r.mes_Y,
                r.last().ratio, r.last().deviation);
  return {s.Y.area() >= 0.25 && r.last().deviation <= 0.10, buf};
}

Outcome edge_types() {
  MatZ2 A = golden * golden;
  Automorphism a(A);
  long n = 0, bad = 0;
  for (const auto& e : enumerate_class(a, BroadClass::PlusU, 0, 3)) {
    if (!e.guaranteed) continue;
    long got = static_cast<long>(edge_type_shifts(A, e).size()) - 1;
    long expect = oracle::brute_fixpoint_lattice_count(A, a.frame(), oracle::to_real(e.leg_segment.hi),
                                                       oracle::to_real(e.bar_segment.lo),
                                                       oracle::to_real(e.bar_segment.hi));
    ++n;
    bad += got != expect;
  }
  return {n > 0 && bad == 0, std::to_string(n) + " base preMps, " + std::to_string(bad) + " count mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden-classification", 1, golden_classification},
      {"period12-sequence", 5, period12_sequence},
      {"self-conjugacy-witness", 0, self_conjugacy},
      {"centralizer", 0, centralizer_generator_check},
      {"best-approximation-oracles", 30, best_approx_oracles},
      {"kappa-under-generators", 0, kappa_under_generators},
      {"quadratic-forms", 0, quadratic_forms},
      {"partition-validators", 0, partition_validators},
      {"entropy-certificate", 5, entropy_certificate},
      {"closure-coding-counterexample", 0, counterexample},
      {"doubling-exactness", 0, doubling_exactness},
      {"mixing", 10, mixing},
      {"edge-type-count", 0, edge_types},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit_s <= 0 || dt < c.limit_s;
    bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %-30s %7.3fs  %s%s\n", pass ? "PASS" : "FAIL", c.name, dt, o.detail.c_str(),
                in_time ? "" : " (over time limit)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
