#include "torux/cfrac.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace torux {

const Integer& CFExpansion::term(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

namespace {

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

std::vector<Integer> primitive(std::vector<Integer> w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) {
      w.resize(p);
      break;
    }
  }
  return w;
}

struct QuotientKey {
  bool operator()(const Surd& x, const Surd& y) const {
    int c = cmp(x.a(), y.a());
    return c < 0 || (c == 0 && cmp(x.b(), y.b()) < 0);
  }
};

// [[P, P'], [Q, Q']] = prod [[a_i, 1], [1, 0]]
struct Mob {
  Integer P = 1, P1 = 0, Q = 0, Q1 = 1;
  void push(const Integer& a) {
    Integer nP = P * a + P1, nQ = Q * a + Q1;
    P1 = P;
    Q1 = Q;
    P = nP;
    Q = nQ;
  }
};

}  // namespace

std::string CFExpansion::to_string() const {
  std::string s = "[";
  if (!preperiod.empty()) {
    s += preperiod[0].get_str();
    std::vector<Integer> rest(preperiod.begin() + 1, preperiod.end());
    s += "; ";
    if (!rest.empty()) s += join(rest) + ", ";
  }
  s += "(" + join(period) + ")]";
  return s;
}

CFExpansion make_cf(std::vector<Integer> pre, std::vector<Integer> per) {
  if (per.empty()) fail(ErrorKind::RationalInput, "empty period");
  for (const auto& a : per)
    if (sgn(a) <= 0) fail(ErrorKind::Parse, "periodic terms must be positive");
  for (std::size_t i = 1; i < pre.size(); ++i)
    if (sgn(pre[i]) <= 0) fail(ErrorKind::Parse, "non-leading terms must be positive");
  per = primitive(std::move(per));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  return CFExpansion{std::move(pre), std::move(per)};
}

CFExpansion parse_cf(const std::string& text) {
  static const std::regex re(R"(\s*\[\s*(?:([+-]?\d+)\s*;\s*((?:\d+\s*,\s*)*))?\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*\]\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorKind::Parse, "bad continued fraction: " + text);
  auto ints = [](const std::string& s) {
    std::vector<Integer> v;
    static const std::regex num(R"([+-]?\d+)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it) {
      std::string t = it->str();
      if (t[0] == '+') t.erase(0, 1);
      v.emplace_back(t);
    }
    return v;
  };
  std::vector<Integer> pre;
  if (m[1].matched) {
    pre = ints(m[1].str());
    auto rest = ints(m[2].str());
    pre.insert(pre.end(), rest.begin(), rest.end());
  }
  return make_cf(std::move(pre), ints(m[3].str()));
}

CFExpansion expand(const Surd& x0) {
  if (x0.is_rational()) fail(ErrorKind::RationalInput, "expand needs an irrational surd");
  std::map<Surd, std::size_t, QuotientKey> seen;
  std::vector<Integer> terms;
  Surd x = x0;
  const std::size_t limit = 10'000'000;
  while (true) {
    auto [it, fresh] = seen.emplace(x, terms.size());
    if (!fresh) {
      std::size_t j = it->second;
      std::vector<Integer> pre(terms.begin(), terms.begin() + static_cast<long>(j));
      std::vector<Integer> per(terms.begin() + static_cast<long>(j), terms.end());
      return make_cf(std::move(pre), std::move(per));
    }
    Integer a = x.floor();
    terms.push_back(a);
    x = (x - Rational(a)).inverse();
    if (terms.size() > limit) fail(ErrorKind::Internal, "period not found");
  }
}

namespace {

Surd evaluate_impl(const CFExpansion& cf, const Integer* target) {
  Mob per;
  for (const auto& a : cf.period) per.push(a);
  Integer disc = (per.Q1 - per.P) * (per.Q1 - per.P) + 4 * per.Q * per.P1;
  Rational den(2 * per.Q);
  std::optional<Surd> y;
  if (target) {
    Integer prod = disc * *target;
    Integer s = isqrt(prod);
    if (s * s != prod) fail(ErrorKind::MismatchedRadicand, "value does not lie in Q(sqrt(" + target->get_str() + "))");
    y.emplace(Rational(per.P - per.Q1) / den, ratio(s, *target) / den, *target);
  } else {
    y.emplace(Rational(per.P - per.Q1) / den, Rational(1) / den, disc);
  }
  Mob pre;
  for (const auto& a : cf.preperiod) pre.push(a);
  return (*y * Rational(pre.P) + Rational(pre.P1)) / (*y * Rational(pre.Q) + Rational(pre.Q1));
}

}  // namespace

Surd evaluate(const CFExpansion& cf) { return evaluate_impl(cf, nullptr); }
Surd evaluate(const CFExpansion& cf, const Integer& D) { return evaluate_impl(cf, &D); }

CFExpansion drop(const CFExpansion& cf, std::size_t k) {
  if (k <= cf.preperiod.size()) {
    std::vector<Integer> pre(cf.preperiod.begin() + static_cast<long>(k), cf.preperiod.end());
    return CFExpansion{std::move(pre), cf.period};
  }
  std::size_t j = (k - cf.preperiod.size()) % cf.period.size();
  std::vector<Integer> per(cf.period);
  std::rotate(per.begin(), per.begin() + static_cast<long>(j), per.end());
  return CFExpansion{{}, std::move(per)};
}

CFExpansion prepend(const std::vector<Integer>& head, const CFExpansion& cf) {
  std::vector<Integer> pre(head);
  pre.insert(pre.end(), cf.preperiod.begin(), cf.preperiod.end());
  return make_cf(std::move(pre), cf.period);
}

Surd apply_T(int i, const Surd& x) {
  switch (i) {
    case 1: return x + Rational(1);
    case 2:
      if (x.is_zero()) fail(ErrorKind::DivisionByZero, "T2 of zero");
      return x.inverse();
    case 3: return -x;
    default: fail(ErrorKind::OutOfRange, "T index must be 1, 2 or 3");
  }
}

CFExpansion apply_T_cf(int i, const CFExpansion& cf) {
  const Integer& a0 = cf.term(0);
  switch (i) {
    case 1: return prepend({a0 + 1}, drop(cf, 1));
    case 2:
      if (sgn(a0) == 0) {
        CFExpansion t = drop(cf, 1);
        return make_cf(t.preperiod, t.period);
      }
      if (sgn(a0) > 0) return prepend({Integer(0)}, cf);
      return apply_T_cf(3, apply_T_cf(2, apply_T_cf(3, cf)));
    case 3: {
      const Integer& a1 = cf.term(1);
      if (a1 == 1) return prepend({-a0 - 1, cf.term(2) + 1}, drop(cf, 3));
      return prepend({-a0 - 1, Integer(1), a1 - 1}, drop(cf, 2));
    }
    default: fail(ErrorKind::OutOfRange, "T index must be 1, 2 or 3");
  }
}

std::size_t minimal_rotation_offset(const std::vector<Integer>& w) {
  std::size_t n = w.size(), best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      int c = cmp(w[(r + i) % n], w[(best + i) % n]);
      if (c < 0) {
        best = r;
        break;
      }
      if (c > 0) break;
    }
  }
  return best;
}

std::vector<Integer> minimal_rotation(const std::vector<Integer>& w) {
  std::vector<Integer> r(w);
  std::rotate(r.begin(), r.begin() + static_cast<long>(minimal_rotation_offset(w)), r.end());
  return r;
}

std::vector<Integer> canonical_period(const CFExpansion& cf) {
  return minimal_rotation(primitive(cf.period));
}

const char* side_name(Side s) { return s == Side::Below ? "below" : "above"; }

ConvergentTable convergent_table(const CFExpansion& cf, std::size_t n) {
  ConvergentTable t;
  t.p = {0, 1};
  t.q = {1, 0};
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& a = cf.term(k);
    t.p.push_back(a * t.p[k + 1] + t.p[k]);
    t.q.push_back(a * t.q[k + 1] + t.q[k]);
  }
  return t;
}

Side side_of(const Integer& p, const Integer& q, const Surd& omega) {
  return omega * Rational(q) - Rational(p) > Rational(0) ? Side::Below : Side::Above;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n) {
  Surd omega = evaluate(cf);
  ConvergentTable t = convergent_table(cf, n);
  std::vector<Convergent> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& p = t.p[k + 2];
    const Integer& q = t.q[k + 2];
    out.push_back({p, q, side_of(p, q, omega)});
  }
  return out;
}

std::vector<Convergent> best_approx_one_sided(const Surd& omega, const Integer& q_max) {
  CFExpansion cf = expand(omega);
  std::vector<Convergent> out;
  if (q_max < 1) return out;
  Integer p2 = 0, q2 = 1, p1 = 1, q1 = 0;  // k-2, k-1
  for (std::size_t k = 0;; ++k) {
    const Integer& b = cf.term(k);
    Integer lo = k == 0 ? b : Integer(1);
    for (Integer l = lo; l <= b; ++l) {
      Integer p = l * p1 + p2, q = l * q1 + q2;
      if (q > q_max) return out;
      out.push_back({p, q, side_of(p, q, omega)});
    }
    Integer p = b * p1 + p2, q = b * q1 + q2;
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
}

std::vector<Convergent> best_approx_two_sided(const Surd& omega, const Integer& q_max) {
  CFExpansion cf = expand(omega);
  std::vector<Convergent> out;
  Integer p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (std::size_t k = 0;; ++k) {
    const Integer& b = cf.term(k);
    Integer p = b * p1 + p2, q = b * q1 + q2;
    if (q > q_max) return out;
    out.push_back({p, q, side_of(p, q, omega)});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
}

}  // namespace torux
