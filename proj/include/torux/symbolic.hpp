#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torux/partitions.hpp"

namespace torux {

// ---- one-sided sequences and the doubling map

// Eventually periodic sequence x_0 x_1 ...; an empty period means the sequence is a finite window.
struct SymbolSequence {
  std::vector<int> preperiod;
  std::vector<int> period;
  int alphabet = 2;

  int at(std::size_t n) const;
  std::vector<int> prefix(std::size_t n) const;
  std::string to_string() const;
  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

SymbolSequence make_sequence(std::vector<int> preperiod, std::vector<int> period, int alphabet = 2);
SymbolSequence shift(const SymbolSequence& s);

struct DoublingCode {
  SymbolSequence code;
  bool ambiguous = false;                 // x is a binary rational
  std::optional<SymbolSequence> alternate;  // the diary ending in 1s
};

Rational doubling_map(const Rational& x);
DoublingCode doubling_code(const Rational& x);
// Sum x_n / 2^(n+1), reduced mod 1.
Rational doubling_decode(const SymbolSequence& s);

struct Arc {
  Rational lo, hi;
  Rational length() const { return hi - lo; }
};
// Points whose first N+1 digits are the prefix: [i / 2^(N+1), (i+1) / 2^(N+1)].
Arc arc_F(const std::vector<int>& prefix);

// Metric sum d(x_n, y_n) / 2^(n+1) over a common finite window.
Rational rho(const std::vector<int>& x, const std::vector<int>& y);

// ---- cylinders and Bernoulli measures

struct Cylinder {
  std::vector<std::pair<long, int>> constraints;  // (index, symbol)
};
Cylinder make_cylinder(std::vector<std::pair<long, int>> constraints);
bool contains(const Cylinder& c, const SymbolSequence& s);

struct MeasureSpec {
  std::vector<Rational> p;
  static MeasureSpec fair(int k = 2);
};
MeasureSpec make_measure(std::vector<Rational> p);

Rational cylinder_measure(const Cylinder& c, const MeasureSpec& m);
Cylinder shift_preimage(const Cylinder& c);

// ---- Markov shifts

using IntMatrix = std::vector<std::vector<long>>;

struct MarkovSubset {
  std::size_t k = 0;
  IntMatrix admissible;
  bool admits(const std::vector<std::size_t>& word) const;
};

// Edge shift of the graph: symbols are edges, e -> e' admissible iff e ends where e' starts.
MarkovSubset markov_from_graph(const TransitionGraph& g);
// Vertex shift of a strict Markov partition: i -> j admissible iff A P_i meets P_j in an open set.
MarkovSubset markov_from_partition(const TorusPartition& P, const Automorphism& A);

// det(M - lambda I) == 0, by elimination over Q(sqrt D).
bool is_eigenvalue(const IntMatrix& M, const Surd& lambda);
std::vector<std::vector<std::size_t>> strongly_connected_components(const IntMatrix& M);
// Spectral radius by power iteration on M + I.
double perron_root(const IntMatrix& M);

struct EntropyCertificate {
  Surd lambda;
  bool exact_root = false;
  double lambda_float = 0, perron_float = 0;
  bool float_agrees = false;
  double ln = 0, log2 = 0;
  std::size_t symbols = 0;
  std::size_t components = 0;
  std::size_t dominant_component = 0;  // size of the component carrying the spectral radius
  bool certified() const { return exact_root && float_agrees; }
};
EntropyCertificate entropy(const MarkovSubset& m, const Surd& lambda);

struct MatrixEntropy {
  EntropyCertificate certificate;  // for the positive companion
  int companion_power = 1;         // companion = +-A^power
  std::size_t pieces = 0;          // refined partition size
  double ln = 0, log2 = 0;         // of |lambda_A|
};
// Vertex preMp -> forward refinement -> edge shift -> certificate.
MatrixEntropy entropy_of(const MatZ2& A);

// ---- coding of torus points

struct CodedWord {
  long first = 0;                               // index of symbols[0]
  std::vector<std::size_t> symbols;             // pieces a_n
  std::vector<std::array<Integer, 2>> lifts;    // A^n x lies in the closure of P_{a_n} + lift
  friend bool operator==(const CodedWord&, const CodedWord&) = default;
};

struct PointCoding {
  std::vector<CodedWord> closure_words;             // closure rule, one per distinct quadrant germ
  std::vector<std::vector<std::size_t>> naive_sets;  // naive rule: closed pieces containing A^n x
  Integer naive_count;                               // product of the naive set sizes
};

// Codes of the plane point (x, y) over the window [n_lo, n_hi]; A must have positive eigenvalues.
PointCoding encode_point(const TorusPartition& P, const Automorphism& A, const Surd& x, const Surd& y, long n_lo,
                         long n_hi);
// Intersection of A^-n (P_{a_n} + lift_n) in frame coordinates.
Parallelogram decode_window(const TorusPartition& P, const Automorphism& A, const CodedWord& w);
// pi(sigma w) at A x equals A pi(w) at x for every closure word.
bool check_shift_conjugacy(const TorusPartition& P, const Automorphism& A, const Surd& x, const Surd& y, long N);

// ---- measures from partitions

struct MarkovMeasure {
  std::vector<Surd> pi;
  std::vector<std::vector<Surd>> P;
  Surd cylinder(const std::vector<std::size_t>& word) const;
  bool stationary() const;
  bool stochastic() const;
};
// pi_i = area(P_i), P_ij = area(A P_i meet P_j) / area(P_i).
MarkovMeasure lebesgue_markov_measure(const TorusPartition& P, const Automorphism& A);
// Lebesgue measure of P_{a_0} meet A^-1 P_{a_1} meet ... computed geometrically.
Surd geometric_cylinder_area(const TorusPartition& P, const Automorphism& A, const std::vector<std::size_t>& word);

}  // namespace torux
