#include <cmath>
#include <cstdlib>

#include "torux/report.hpp"

namespace torux::report {

json integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json rational(const Rational& x) { return {{"exact", x.get_str()}, {"float", x.get_d()}}; }

json surd(const Surd& x) { return {{"exact", x.to_string()}, {"float", x.to_double()}}; }

json matrix(const MatZ2& A) {
  return json::array({json::array({integer(A.a()), integer(A.b())}), json::array({integer(A.c()), integer(A.d())})});
}

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

json cf(const CFExpansion& e) {
  return {{"text", e.to_string()}, {"preperiod", integers(e.preperiod)}, {"period", integers(e.period)}};
}

json word(const Word& w) {
  json letters = json::array();
  for (const auto& l : w) letters.push_back({{"gen", gen_name(l.gen)}, {"exponent", l.exponent}});
  return {{"text", word_to_string(w)}, {"letters", letters}};
}

json parallelogram(const Parallelogram& r) {
  return {{"anchor_u", r.u0.to_string()}, {"anchor_s", r.s0.to_string()}, {"u_len", r.u_len().to_string()},
          {"s_len", r.s_len().to_string()}};
}

json partition(const TorusPartition& P, const std::string& type) {
  json pieces = json::array();
  for (const auto& r : P.pieces) pieces.push_back(parallelogram(r));
  json out{{"pieces", pieces}, {"kind", kind_name(P.kind)}, {"frame", {{"k1", P.frame.k1().to_string()}, {"k2", P.frame.k2().to_string()}}}};
  if (!type.empty()) out["type"] = type;
  return out;
}

json sequence(const SymbolSequence& s) { return {{"preperiod", s.preperiod}, {"period", s.period}, {"text", s.to_string()}}; }

json classify(const MatZ2& A) {
  json out{{"matrix", matrix(A)},
           {"det", A.det()},
           {"trace", integer(A.trace())},
           {"discriminant", integer(A.discriminant())},
           {"hyperbolic", is_hyperbolic(A)}};
  require_hyperbolic(A);
  EigenData e = eigen_data(A);
  CFExpansion k = expand(e.kappa);
  std::vector<Integer> period = canonical_period(k);
  Centralizer z = centralizer(A);
  out["lambda"] = surd(e.lambda_u);
  out["mu"] = surd(e.lambda_s);
  out["kappa"] = surd(e.kappa);
  out["kappa_s"] = surd(e.kappa_s);
  out["cf"] = cf(k);
  out["period"] = integers(period);
  out["period_length"] = period.size();
  out["fixpoints"] = integer(fixpoint_count(A));
  out["centralizer"] = {{"generator", matrix(z.B)}, {"power", z.power}, {"sign", z.sign}, {"nu", surd(z.nu)}};
  return out;
}

json approximations(const Surd& omega, const Integer& q_max) {
  auto list = [](const std::vector<Convergent>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back({{"p", integer(c.p)}, {"q", integer(c.q)}, {"side", side_name(c.side)}});
    return out;
  };
  return {{"omega", surd(omega)},
          {"q_max", integer(q_max)},
          {"one_sided", list(best_approx_one_sided(omega, q_max))},
          {"two_sided", list(best_approx_two_sided(omega, q_max))}};
}

long max_q_from_env(long fallback) {
  const char* v = std::getenv("TORUX_MAX_Q");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long q = std::strtol(v, &end, 10);
  return (*end == '\0' && q > 0) ? q : fallback;
}

json conjugate(const MatZ2& A, const MatZ2& B) {
  require_hyperbolic(A);
  require_hyperbolic(B);
  bool gl = are_conjugate_gl(A, B);
  json out{{"gl_conjugate", gl}, {"sl_conjugate", gl && are_conjugate_sl(A, B)}, {"witness", nullptr}};
  if (gl) {
    ConjugacyWitness w = find_conjugator(A, B);
    out["witness"] = {{"word", word(w.word)}, {"matrix", matrix(w.matrix)}, {"det", w.det}};
  }
  return out;
}

json classify_pair(const MatZ2& A, const MatZ2& B) {
  json out = conjugate(A, B);
  out["A"] = classify(A);
  out["B"] = classify(B);
  return out;
}

json premp(const MatZ2& A, const PrempOptions& opt, std::vector<VertexPreMp>* listed) {
  require_hyperbolic(A);
  ClassCounts c = count_classes(A);
  json out{{"matrix", matrix(A)}, {"counts", {{"total", c.total}, {"island", c.island}, {"parquet", c.parquet}}}};
  std::vector<VertexPreMp> all;
  if (opt.list || opt.edge_type) all = enumerate_vertex_premps(A);
  std::vector<const VertexPreMp*> pu;
  for (const auto& e : all)
    if (e.side == BroadClass::PlusU && e.guaranteed) pu.push_back(&e);
  if (opt.verify) {
    OrbitCount o = count_classes_enumerated(A);
    out["enumerated"] = {{"total", o.counts.total},
                         {"island", o.counts.island},
                         {"parquet", o.counts.parquet},
                         {"shift_S", o.shift_S},
                         {"period_length", o.period_length},
                         {"agrees", o.counts == c}};
  }
  if (opt.list) {
    if (opt.start < 0 || *opt.list < 0) fail(ErrorKind::OutOfRange, "list window must be nonnegative");
    std::size_t need = static_cast<std::size_t>(opt.start + *opt.list);
    if (need > pu.size()) {
      EnumerationWindow w;
      w.k_end = pu.empty() ? 8 : pu.back()->k + static_cast<long>(need - pu.size()) + 2;
      all = enumerate_vertex_premps(A, w);
      pu.clear();
      for (const auto& e : all)
        if (e.side == BroadClass::PlusU && e.guaranteed) pu.push_back(&e);
      if (need > pu.size()) fail(ErrorKind::WindowTooSmall, "enumeration window too small for the list");
    }
    json list = json::array();
    std::string pattern;
    for (std::size_t i = static_cast<std::size_t>(opt.start); i < need; ++i) {
      const VertexPreMp& e = *pu[i];
      pattern += e.ptype == PremType::Island ? 'I' : 'P';
      list.push_back({{"side", class_name(e.side)},
                      {"k", e.k},
                      {"l", integer(e.l)},
                      {"index", e.index},
                      {"type", type_name(e.ptype)},
                      {"valid", e.valid},
                      {"partition", partition(e.geometry, type_name(e.ptype))}});
      if (listed) listed->push_back(e);
    }
    out["list"] = list;
    out["pattern"] = pattern;
  }
  if (opt.edge_type) {
    if (pu.empty()) fail(ErrorKind::WindowTooSmall, "no guaranteed vertex preMp");
    auto shifts = edge_type_shifts(A, *pu.front());
    json s = json::array();
    for (const auto& e : shifts)
      s.push_back({{"is_base", e.is_base}, {"x", surd(e.x)}, {"y", surd(e.y)},
                   {"w", json::array({e.w[0].get_str(), e.w[1].get_str()})}});
    out["edge_type"] = {{"base", {{"k", pu.front()->k}, {"l", integer(pu.front()->l)}}},
                        {"count", shifts.size() - 1},
                        {"shifts", s}};
  }
  return out;
}

json entropy(const MatZ2& A) {
  MatrixEntropy e = entropy_of(A);
  const EntropyCertificate& c = e.certificate;
  return {{"matrix", matrix(A)},
          {"lambda_abs", surd(eigen_data(A).lambda_u.abs())},
          {"ln", e.ln},
          {"log2", e.log2},
          {"pieces", e.pieces},
          {"companion_power", e.companion_power},
          {"certificate",
           {{"lambda", surd(c.lambda)},
            {"exact_root", c.exact_root},
            {"perron_float", c.perron_float},
            {"float_agrees", c.float_agrees},
            {"certified", c.certified()},
            {"symbols", c.symbols},
            {"components", c.components},
            {"dominant_component", c.dominant_component}}}};
}

json doubling(const Rational& x, long steps) {
  if (steps < 0) fail(ErrorKind::OutOfRange, "negative step count");
  DoublingCode code = doubling_code(x);
  json orbit = json::array();
  Rational y = x;
  for (long i = 0; i < steps; ++i) {
    orbit.push_back(y.get_str());
    y = doubling_map(y);
  }
  json out{{"x", rational(x)},
           {"orbit", orbit},
           {"prefix", code.code.prefix(static_cast<std::size_t>(steps))},
           {"code", sequence(code.code)},
           {"ambiguous", code.ambiguous},
           {"alternate", nullptr},
           {"decoded", doubling_decode(code.code).get_str()}};
  if (code.alternate) out["alternate"] = sequence(*code.alternate);
  return out;
}

json mixing(const MixSpec& spec, const MixResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"iter", s.iter}, {"hits", s.hits}, {"overlap", s.overlap}, {"ratio", s.ratio},
                     {"deviation", s.deviation}});
  return {{"matrix", matrix(spec.A)},
          {"grid", r.grid},
          {"iters", spec.iters},
          {"cells_X", r.cells_X},
          {"mes_X", r.mes_X},
          {"mes_Y", r.mes_Y},
          {"Y", {spec.Y.x0, spec.Y.x1, spec.Y.y0, spec.Y.y1}},
          {"product", r.mes_X * r.mes_Y},
          {"overlap", r.last().overlap},
          {"deviation", r.last().deviation},
          {"steps", steps}};
}

json form(const MatZ2& A) {
  QuadraticForm f = to_form(A);
  json out{{"matrix", matrix(A)},
           {"form", {{"A", integer(f.A)}, {"B", integer(f.B)}, {"C", integer(f.C)}, {"text", f.to_string()}}},
           {"disc", integer(f.disc())},
           {"disc_matches", f.disc() == A.discriminant()}};
  out["roundtrip"] = from_form(f, A.trace(), A.det()) == A;
  return out;
}

json graph(const MatZ2& A) {
  require_hyperbolic(A);
  Automorphism aut(positive_companion(A), Automorphism(A).frame());
  std::optional<VertexPreMp> base;
  for (auto& e : enumerate_class(aut, BroadClass::PlusU, 0, 6))
    if (e.guaranteed) {
      base = std::move(e);
      break;
    }
  if (!base) fail(ErrorKind::WindowTooSmall, "no guaranteed vertex preMp");
  TransitionGraph g = transition_graph(base->geometry, aut);
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"lift", {integer(e.m), integer(e.n)}}});
  return {{"matrix", matrix(A)},
          {"companion", matrix(aut.matrix())},
          {"base", {{"k", base->k}, {"l", integer(base->l)}, {"partition", partition(base->geometry, type_name(base->ptype))}}},
          {"vertices", g.vertices},
          {"edges", edges},
          {"vertex_matrix", g.vertex_matrix()},
          {"edge_matrix", g.edge_matrix()},
          {"strongly_connected", g.strongly_connected()}};
}

json envelope(const std::string& command, json body) {
  json out{{"schema", 1}, {"command", command}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

json error(const Error& e) {
  return {{"schema", 1}, {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
}

}  // namespace torux::report
