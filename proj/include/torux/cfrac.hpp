#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torux/qfield.hpp"

namespace torux {

// Eventually periodic regular continued fraction [a0; a1, ..., (p1, ..., pq)].
// Only the first preperiod term may be <= 0; all later terms are >= 1.
struct CFExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;

  const Integer& term(std::size_t n) const;
  std::string to_string() const;
  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

// Shortest preperiod and primitive period; validates term ranges.
CFExpansion make_cf(std::vector<Integer> preperiod, std::vector<Integer> period);
CFExpansion parse_cf(const std::string& text);

CFExpansion expand(const Surd& x);
Surd evaluate(const CFExpansion& cf);
// Result expressed over radicand D; throws MismatchedRadicand when impossible.
Surd evaluate(const CFExpansion& cf, const Integer& D);

// Tail [a_k; a_{k+1}, ...].
CFExpansion drop(const CFExpansion& cf, std::size_t k);
CFExpansion prepend(const std::vector<Integer>& head, const CFExpansion& cf);

Surd apply_T(int i, const Surd& x);
CFExpansion apply_T_cf(int i, const CFExpansion& cf);

std::vector<Integer> canonical_period(const CFExpansion& cf);
std::vector<Integer> minimal_rotation(const std::vector<Integer>& w);
std::size_t minimal_rotation_offset(const std::vector<Integer>& w);

enum class Side { Below, Above };
const char* side_name(Side s);

struct Convergent {
  Integer p, q;
  Side side;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

// p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0; entry k+2 holds p_k/q_k.
struct ConvergentTable {
  std::vector<Integer> p, q;
  const Integer& pk(long k) const { return p.at(static_cast<std::size_t>(k + 2)); }
  const Integer& qk(long k) const { return q.at(static_cast<std::size_t>(k + 2)); }
};
ConvergentTable convergent_table(const CFExpansion& cf, std::size_t n);

Side side_of(const Integer& p, const Integer& q, const Surd& omega);
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n);

std::vector<Convergent> best_approx_one_sided(const Surd& omega, const Integer& q_max);
std::vector<Convergent> best_approx_two_sided(const Surd& omega, const Integer& q_max);

}  // namespace torux
