#include "torux/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace torux {

// ---- sequences

int SymbolSequence::at(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  if (period.empty()) fail(ErrorKind::OutOfRange, "index past the end of a finite window");
  return period[(n - preperiod.size()) % period.size()];
}

std::vector<int> SymbolSequence::prefix(std::size_t n) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::string SymbolSequence::to_string() const {
  std::string s;
  for (int x : preperiod) s += std::to_string(x);
  if (!period.empty()) {
    s += "(";
    for (int x : period) s += std::to_string(x);
    s += ")";
  }
  return s;
}

SymbolSequence make_sequence(std::vector<int> preperiod, std::vector<int> period, int alphabet) {
  for (int x : preperiod)
    if (x < 0 || x >= alphabet) fail(ErrorKind::OutOfRange, "symbol outside the alphabet");
  for (int x : period)
    if (x < 0 || x >= alphabet) fail(ErrorKind::OutOfRange, "symbol outside the alphabet");
  // shortest period, then shortest preperiod
  for (std::size_t L = 1; L < period.size(); ++L) {
    if (period.size() % L) continue;
    bool ok = true;
    for (std::size_t i = L; i < period.size() && ok; ++i) ok = period[i] == period[i - L];
    if (ok) {
      period.resize(L);
      break;
    }
  }
  while (!period.empty() && !preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {std::move(preperiod), std::move(period), alphabet};
}

SymbolSequence shift(const SymbolSequence& s) {
  if (!s.preperiod.empty())
    return make_sequence(std::vector<int>(s.preperiod.begin() + 1, s.preperiod.end()), s.period, s.alphabet);
  if (s.period.empty()) fail(ErrorKind::OutOfRange, "shift of an empty sequence");
  std::vector<int> p(s.period.begin() + 1, s.period.end());
  p.push_back(s.period.front());
  return make_sequence({}, p, s.alphabet);
}

Rational doubling_map(const Rational& x) {
  Rational y = 2 * x;
  return y - floor_of(y);
}

DoublingCode doubling_code(const Rational& x) {
  if (sgn(x) < 0 || x >= 1) fail(ErrorKind::OutOfRange, "doubling code needs 0 <= x < 1");
  std::map<Rational, std::size_t> seen;
  std::vector<int> digits;
  Rational v = x;
  while (!seen.count(v)) {
    seen.emplace(v, digits.size());
    Rational w = 2 * v;
    int d = w >= 1 ? 1 : 0;
    digits.push_back(d);
    v = w - d;
  }
  std::size_t start = seen[v];
  DoublingCode out{make_sequence(std::vector<int>(digits.begin(), digits.begin() + static_cast<long>(start)),
                                 std::vector<int>(digits.begin() + static_cast<long>(start), digits.end())),
                   false, std::nullopt};
  Integer den = x.get_den();
  if ((den & (den - 1)) == 0) {
    out.ambiguous = true;
    // the terminating expansion ...1000... becomes ...0111...
    std::vector<int> pre = out.code.preperiod;
    if (pre.empty()) {
      out.alternate = make_sequence({}, {1});
    } else {
      pre.back() = 0;
      out.alternate = make_sequence(pre, {1});
    }
  }
  return out;
}

Rational doubling_decode(const SymbolSequence& s) {
  Rational pre(0);
  Integer scale = 1;
  for (int d : s.preperiod) {
    pre = 2 * pre + d;
    scale *= 2;
  }
  Rational x = pre / Rational(scale);
  if (!s.period.empty()) {
    Integer q = 0, L = 1;
    for (int d : s.period) {
      q = 2 * q + d;
      L *= 2;
    }
    x += ratio(q, L - 1) / Rational(scale);
  }
  x.canonicalize();
  return x - floor_of(x);
}

Arc arc_F(const std::vector<int>& prefix) {
  Integer i = 0, scale = 1;
  for (int d : prefix) {
    if (d != 0 && d != 1) fail(ErrorKind::OutOfRange, "binary prefix expected");
    i = 2 * i + d;
    scale *= 2;
  }
  return {ratio(i, scale), ratio(i + 1, scale)};
}

Rational rho(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) fail(ErrorKind::OutOfRange, "windows differ in length");
  Rational r(0);
  Integer scale = 2;
  for (std::size_t n = 0; n < x.size(); ++n, scale *= 2)
    if (x[n] != y[n]) r += ratio(1, scale);
  return r;
}

// ---- cylinders

Cylinder make_cylinder(std::vector<std::pair<long, int>> constraints) {
  std::sort(constraints.begin(), constraints.end());
  for (std::size_t i = 1; i < constraints.size(); ++i)
    if (constraints[i].first == constraints[i - 1].first) fail(ErrorKind::OutOfRange, "repeated cylinder index");
  return {std::move(constraints)};
}

bool contains(const Cylinder& c, const SymbolSequence& s) {
  for (const auto& [i, a] : c.constraints)
    if (i < 0 || s.at(static_cast<std::size_t>(i)) != a) return false;
  return true;
}

MeasureSpec MeasureSpec::fair(int k) { return {std::vector<Rational>(static_cast<std::size_t>(k), ratio(1, k))}; }

MeasureSpec make_measure(std::vector<Rational> p) {
  Rational total(0);
  for (auto& x : p) {
    x.canonicalize();
    if (sgn(x) < 0) fail(ErrorKind::OutOfRange, "negative probability");
    total += x;
  }
  if (total != 1) fail(ErrorKind::OutOfRange, "probabilities must sum to 1");
  return {std::move(p)};
}

Rational cylinder_measure(const Cylinder& c, const MeasureSpec& m) {
  Rational r(1);
  for (const auto& [i, a] : c.constraints) {
    if (a < 0 || static_cast<std::size_t>(a) >= m.p.size()) fail(ErrorKind::OutOfRange, "symbol outside the alphabet");
    r *= m.p[static_cast<std::size_t>(a)];
  }
  return r;
}

Cylinder shift_preimage(const Cylinder& c) {
  Cylinder out = c;
  for (auto& [i, a] : out.constraints) ++i;
  return out;
}

// ---- Markov shifts

bool MarkovSubset::admits(const std::vector<std::size_t>& word) const {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] >= k || word[i + 1] >= k) return false;
    if (admissible[word[i]][word[i + 1]] == 0) return false;
  }
  return true;
}

MarkovSubset markov_from_graph(const TransitionGraph& g) {
  if (g.edges.empty()) fail(ErrorKind::InvalidGraph, "graph has no edges");
  for (const auto& e : g.edges)
    if (e.from >= g.vertices || e.to >= g.vertices) fail(ErrorKind::InvalidGraph, "edge endpoint out of range");
  return {g.edges.size(), g.edge_matrix()};
}

MarkovSubset markov_from_partition(const TorusPartition& P, const Automorphism& A) {
  TransitionGraph g = transition_graph(P, A);
  IntMatrix m = g.vertex_matrix();
  for (auto& row : m)
    for (auto& x : row) x = x > 0 ? 1 : 0;
  return {P.pieces.size(), m};
}

bool is_eigenvalue(const IntMatrix& M, const Surd& lambda) {
  std::size_t n = M.size();
  std::vector<std::vector<Surd>> a;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Surd> row;
    for (std::size_t j = 0; j < n; ++j) {
      Surd x = Surd::rational(Rational(M[i][j]), lambda.D());
      if (i == j) x -= lambda;
      row.push_back(std::move(x));
    }
    a.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return true;  // singular
    std::swap(a[p], a[c]);
    Surd inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Surd f = a[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const IntMatrix& M) {
  std::size_t n = M.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (M[v][w] == 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return out;
}

double perron_root(const IntMatrix& M) {
  std::size_t n = M.size();
  if (n == 0) return 0;
  std::vector<long double> v(n, 1.0L), w(n);
  long double est = 0;
  for (int it = 0; it < 20000; ++it) {
    long double norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += static_cast<long double>(M[i][j]) * v[j];
      w[i] = s;
      norm = std::max(norm, std::fabs(s));
    }
    if (norm == 0) return 0;
    for (std::size_t i = 0; i < n; ++i) w[i] /= norm;
    long double prev = est;
    est = norm;
    v.swap(w);
    if (it > 10 && std::fabs(est - prev) < 1e-15L * est) break;
  }
  return static_cast<double>(est - 1);
}

EntropyCertificate entropy(const MarkovSubset& m, const Surd& lambda) {
  EntropyCertificate c{lambda};
  c.symbols = m.k;
  c.exact_root = is_eigenvalue(m.admissible, lambda);
  c.lambda_float = lambda.to_double();
  auto comps = strongly_connected_components(m.admissible);
  c.components = comps.size();
  double best = -1;
  for (const auto& comp : comps) {
    IntMatrix sub(comp.size(), std::vector<long>(comp.size(), 0));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = m.admissible[comp[i]][comp[j]];
    double r = perron_root(sub);
    if (r > best + 1e-12 || (std::fabs(r - best) <= 1e-12 && comp.size() > c.dominant_component)) {
      best = r;
      c.dominant_component = comp.size();
    }
  }
  c.perron_float = best;
  c.float_agrees = std::fabs(best - c.lambda_float) <= 1e-9;
  c.ln = std::log(best);
  c.log2 = std::log2(best);
  return c;
}

MatrixEntropy entropy_of(const MatZ2& A) {
  require_hyperbolic(A);
  MatZ2 C = positive_companion(A);
  Automorphism base(A);
  Automorphism aut(C, base.frame());
  std::optional<TorusPartition> start;
  for (const auto& e : enumerate_class(aut, BroadClass::PlusU, 0, 6))
    if (e.guaranteed) {
      start = e.geometry;
      break;
    }
  if (!start) fail(ErrorKind::WindowTooSmall, "no valid vertex preMp");
  TorusPartition R = refine(*start, aut, RefineDirection::Forward);
  MarkovSubset m = markov_from_graph(transition_graph(R, aut));
  int power = C == A || C == -A ? 1 : 2;
  MatrixEntropy out{entropy(m, aut.lambda()), power, R.pieces.size()};
  out.ln = out.certificate.ln / power;
  out.log2 = out.certificate.log2 / power;
  return out;
}

// ---- coding

namespace {

struct Germ {
  std::size_t piece;
  LatticePoint z;
};

// Piece lift containing the quadrant germ at (u, s): points (u + eu*t, s + es*t') for small t, t' > 0.
Germ germ_piece(const TorusPartition& P, const Surd& u, const Surd& s, int eu, int es) {
  for (std::size_t j = 0; j < P.pieces.size(); ++j) {
    const auto& r = P.pieces[j];
    for (auto& z : lattice_points(P.frame, {u - r.u1, u - r.u0, s - r.s1, s - r.s0}, false)) {
      Surd lu = r.u0 + z.u, hu = r.u1 + z.u, ls = r.s0 + z.s, hs = r.s1 + z.s;
      bool in_u = eu > 0 ? (lu <= u && u < hu) : (lu < u && u <= hu);
      bool in_s = es > 0 ? (ls <= s && s < hs) : (ls < s && s <= hs);
      if (in_u && in_s) return {j, std::move(z)};
    }
  }
  fail(ErrorKind::Internal, "partition does not cover the point");
}

}  // namespace

PointCoding encode_point(const TorusPartition& P, const Automorphism& A, const Surd& x, const Surd& y, long n_lo,
                         long n_hi) {
  if (!A.positive_spectrum()) fail(ErrorKind::OutOfRange, "coding needs positive eigenvalues");
  if (n_hi < n_lo) fail(ErrorKind::OutOfRange, "empty window");
  const Frame& f = P.frame;
  Surd u = f.u_of(x, y), s = f.s_of(x, y);
  PointCoding out;
  out.naive_count = 1;
  std::vector<std::pair<Surd, Surd>> orbit;
  for (long n = n_lo; n <= n_hi; ++n) orbit.push_back(A.image(u, s, n));
  for (const auto& [pu, ps] : orbit) {
    std::set<std::size_t> closed;
    for (std::size_t j = 0; j < P.pieces.size(); ++j) {
      const auto& r = P.pieces[j];
      if (!lattice_points(f, {pu - r.u1, pu - r.u0, ps - r.s1, ps - r.s0}, false).empty()) closed.insert(j);
    }
    out.naive_sets.emplace_back(closed.begin(), closed.end());
    out.naive_count *= static_cast<unsigned long>(closed.size());
  }
  for (int eu : {1, -1})
    for (int es : {1, -1}) {
      CodedWord w;
      w.first = n_lo;
      for (const auto& [pu, ps] : orbit) {
        Germ g = germ_piece(P, pu, ps, eu, es);
        w.symbols.push_back(g.piece);
        w.lifts.push_back({g.z.m, g.z.n});
      }
      if (std::find(out.closure_words.begin(), out.closure_words.end(), w) == out.closure_words.end())
        out.closure_words.push_back(std::move(w));
    }
  return out;
}

Parallelogram decode_window(const TorusPartition& P, const Automorphism& A, const CodedWord& w) {
  std::optional<Parallelogram> acc;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    long n = w.first + static_cast<long>(i);
    LatticePoint z = lattice_point(P.frame, w.lifts[i][0], w.lifts[i][1]);
    Parallelogram r = A.image(P.pieces.at(w.symbols[i]).translated(z.u, z.s), -n);
    acc = acc ? intersect(*acc, r) : r;
  }
  if (!acc) fail(ErrorKind::OutOfRange, "empty word");
  return *acc;
}

bool check_shift_conjugacy(const TorusPartition& P, const Automorphism& A, const Surd& x, const Surd& y, long N) {
  PointCoding c = encode_point(P, A, x, y, -N, N);
  const Frame& f = P.frame;
  Surd u = f.u_of(x, y), s = f.s_of(x, y);
  auto [au, as] = A.image(u, s, 1);
  Surd ax = f.x_of(au, as), ay = f.y_of(au, as);
  PointCoding d = encode_point(P, A, ax, ay, -N - 1, N - 1);
  for (const auto& w : c.closure_words) {
    CodedWord sw = w;
    sw.first = w.first - 1;
    if (std::find(d.closure_words.begin(), d.closure_words.end(), sw) == d.closure_words.end()) return false;
    if (!(A.image(decode_window(P, A, w), 1) == decode_window(P, A, sw))) return false;
  }
  return c.closure_words.size() == d.closure_words.size();
}

// ---- measures

Surd MarkovMeasure::cylinder(const std::vector<std::size_t>& word) const {
  if (word.empty()) fail(ErrorKind::OutOfRange, "empty word");
  Surd r = pi.at(word[0]);
  for (std::size_t i = 0; i + 1 < word.size(); ++i) r *= P.at(word[i]).at(word[i + 1]);
  return r;
}

bool MarkovMeasure::stationary() const {
  for (std::size_t j = 0; j < pi.size(); ++j) {
    Surd s = pi[0] - pi[0];
    for (std::size_t i = 0; i < pi.size(); ++i) s += pi[i] * P[i][j];
    if (!(s == pi[j])) return false;
  }
  return true;
}

bool MarkovMeasure::stochastic() const {
  for (const auto& row : P) {
    Surd s = row[0] - row[0];
    for (const auto& x : row) s += x;
    if (!(s == Rational(1))) return false;
  }
  return true;
}

MarkovMeasure lebesgue_markov_measure(const TorusPartition& P, const Automorphism& A) {
  const Frame& f = P.frame;
  std::size_t n = P.pieces.size();
  MarkovMeasure m;
  Surd zero = f.lift(0);
  m.P.assign(n, std::vector<Surd>(n, zero));
  for (const auto& r : P.pieces) m.pi.push_back(r.coord_area() * f.area_factor());
  for (std::size_t i = 0; i < n; ++i) {
    Parallelogram img = A.image(P.pieces[i], 1);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = P.pieces[j];
      for (const auto& z : lattice_points(f, {img.u0 - b.u1, img.u1 - b.u0, img.s0 - b.s1, img.s1 - b.s0}, true))
        m.P[i][j] += intersect(img, b.translated(z.u, z.s)).coord_area();
      m.P[i][j] /= P.pieces[i].coord_area();
    }
  }
  return m;
}

Surd geometric_cylinder_area(const TorusPartition& P, const Automorphism& A, const std::vector<std::size_t>& word) {
  const Frame& f = P.frame;
  if (word.empty()) fail(ErrorKind::OutOfRange, "empty word");
  std::vector<Parallelogram> cur{P.pieces.at(word[0])};
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::vector<Parallelogram> next;
    const auto& b = P.pieces.at(word[k]);
    for (const auto& q : cur) {
      // A^k q meets b + z
      Parallelogram img = A.image(q, static_cast<long>(k));
      for (const auto& z : lattice_points(f, {img.u0 - b.u1, img.u1 - b.u0, img.s0 - b.s1, img.s1 - b.s0}, true))
        next.push_back(A.image(intersect(img, b.translated(z.u, z.s)), -static_cast<long>(k)));
    }
    cur = std::move(next);
  }
  Surd area = f.lift(0);
  for (const auto& q : cur) area += q.coord_area();
  return area * f.area_factor();
}

}  // namespace torux
