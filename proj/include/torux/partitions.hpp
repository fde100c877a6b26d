#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torux/conjugacy.hpp"
#include "torux/geometry.hpp"
#include "torux/gl2z.hpp"

namespace torux {

enum class PartitionKind { qMp, preMp, strMp };
const char* kind_name(PartitionKind k);

struct TorusPartition {
  Frame frame;
  std::vector<Parallelogram> pieces;
  PartitionKind kind = PartitionKind::qMp;

  Surd total_area() const;
};

// Same set of pieces on the torus, up to order and lattice translation of each piece.
bool same_on_torus(const TorusPartition& a, const TorusPartition& b);

using TorusPoint = std::array<Rational, 2>;

// Hyperbolic A acting diagonally in its eigen frame: (u, s) -> (lambda u, mu s).
class Automorphism {
 public:
  explicit Automorphism(const MatZ2& A);
  // Re-expresses A in an existing frame (for instance the frame of a root of A).
  Automorphism(const MatZ2& A, const Frame& frame);

  const MatZ2& matrix() const { return A_; }
  const Frame& frame() const { return frame_; }
  const Surd& lambda() const { return lambda_; }
  const Surd& mu() const { return mu_; }
  bool positive_spectrum() const { return lambda_.sign() > 0 && mu_.sign() > 0; }
  const std::vector<TorusPoint>& fixpoints() const { return fix_; }

  Parallelogram image(const Parallelogram& r, long n = 1) const;
  std::pair<Surd, Surd> image(const Surd& u, const Surd& s, long n = 1) const;
  Surd lambda_pow(long n) const;
  Surd mu_pow(long n) const;

 private:
  MatZ2 A_;
  Frame frame_;
  Surd lambda_, mu_;
  std::vector<TorusPoint> fix_;
};

// A if both eigenvalues are positive, -A if both are negative, A^2 if det A = -1.
MatZ2 positive_companion(const MatZ2& A);

struct Violation {
  std::string check;
  std::string detail;
};

struct BoundaryFixpoint {
  TorusPoint point;
  bool on_stable;
  bool on_unstable;
};

struct ValidationReport {
  PartitionKind kind;
  Surd area;
  bool disjoint = true;
  bool area_one = true;
  bool condition_I = true;
  bool condition_II = true;
  bool condition_III = true;
  bool checked_I = false, checked_II = false, checked_III = false;
  std::vector<BoundaryFixpoint> fixpoints{};
  std::vector<Violation> violations{};
  bool passed() const { return violations.empty(); }
};

struct ValidateOptions {
  bool condition_III = false;
  std::size_t max_violations = 64;
};

ValidationReport validate_partition(const TorusPartition& P, PartitionKind kind, const Automorphism* A = nullptr,
                                    const ValidateOptions& opt = {});

// ---- T-configurations

enum class Axis { U, S };

struct Leg {
  Axis axis;     // frame axis carrying the leg; the crossbar runs along the other one
  int sign = 1;  // ray direction
};

// Leg time and bar coordinate of a frame vector.
Surd leg_time(const Leg& leg, const Surd& u, const Surd& s);
Surd bar_coord(const Leg& leg, const Surd& u, const Surd& s);
// Frame rectangle for leg times [t0, t1] and bar coordinates [b0, b1].
Parallelogram from_leg_coords(const Leg& leg, const Surd& t0, const Surd& t1, const Surd& b0, const Surd& b1);

struct Crossing {
  Surd t;    // leg time of the crossing
  Surd pos;  // position on the crossbar through P
  Integer m, n;
};

struct TConfiguration {
  Frame frame;
  TorusPoint P;
  Leg leg;
  Interval I;  // crossbar, bar coordinates relative to P
  Crossing A, B;
  Surd t_A() const { return A.t; }
  Surd t_B() const { return B.t; }
};

// Crossings of the leg from P with the crossbar J (closed), 0 < t <= t_max, ordered by t.
std::vector<Crossing> crossings(const Frame& f, const Leg& leg, const Interval& J, const Surd& t_max);
TConfiguration t_configuration(const Frame& f, const TorusPoint& P, const Leg& leg, const Interval& J);
// T-configuration whose crossbar ends are the crossings through the lattice points zA and zB.
TConfiguration t_configuration_from_pair(const Frame& f, const TorusPoint& P, const Leg& leg,
                                         const std::array<Integer, 2>& zA, const std::array<Integer, 2>& zB);
// No crossing of the leg with the closed crossbar for 0 < t < t_B other than t_A.
bool check_t_conditions(const TConfiguration& cfg, std::vector<Violation>* why = nullptr);

struct SweepHit {
  Crossing lift;  // lattice vector of the crossbar translate met by the sweep; pos is its bar offset
  bool contained;
};
// One piece per side of P on the crossbar; hits receives the sweep result of each side.
TorusPartition build_qmp(const TConfiguration& cfg, std::vector<SweepHit>* hits = nullptr);

// ---- nested sequences of vertex preMps

enum class BroadClass { PlusU, PlusS, MinusU, MinusS };
const char* class_name(BroadClass c);
enum class PremType { Island, Parquet };
const char* type_name(PremType t);

struct VertexPreMp {
  BroadClass side;
  long k;
  Integer l;
  Integer b_next;  // b_{k+1}
  long index;      // position n(k, l) = b_1 + ... + b_k + l - 1 in the nested sequence
  std::array<Integer, 2> A_pt, B_pt;
  TConfiguration config;
  TorusPartition geometry;
  PremType ptype;
  Interval leg_segment;  // [0, t_C] along the leg
  Interval bar_segment;  // crossbar I
  bool valid = false;       // T-conditions, qMp, preMp and condition III all hold
  bool guaranteed = false;  // valid, and so is every later entry of the window
  std::vector<Violation> issues{};
};

struct EnumerationWindow {
  long k_begin = 0;
  std::optional<long> k_end;  // default: two full periods past the first guaranteed entry
};

std::vector<VertexPreMp> enumerate_vertex_premps(const MatZ2& A, const EnumerationWindow& w = {});
std::vector<VertexPreMp> enumerate_class(const Automorphism& A, BroadClass side, long k_begin, long k_end);

PremType classify_type(const VertexPreMp& e);
// |OA'| > |OB'| along the crossbar.
PremType geometric_type(const VertexPreMp& e);

struct ClassCounts {
  long total, island, parquet;
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};
ClassCounts count_classes(const MatZ2& A);

// Image of a partition under a matrix commuting with A (so preserving both eigen-directions).
TorusPartition apply_commuting(const Automorphism& A, const MatZ2& C, const TorusPartition& P);
// Index offset d with C(P_n) = P_{n+d} for all matched entries of one class; nullopt if inconsistent.
std::optional<long> sequence_shift(const Automorphism& A, const MatZ2& C, const std::vector<VertexPreMp>& entries);

struct OrbitCount {
  ClassCounts counts;
  long shift_S;
  long period_length;
};
// Orbits of guaranteed entries of all four classes under the centralizer.
OrbitCount count_classes_enumerated(const MatZ2& A);

// ---- refinement and transition graph

enum class RefineDirection { Forward, Backward };
TorusPartition refine(const TorusPartition& P, const Automorphism& A, RefineDirection dir);

struct Edge {
  std::size_t from, to;
  Integer m, n;
};

struct TransitionGraph {
  std::size_t vertices = 0;
  std::vector<Edge> edges;

  std::vector<std::vector<long>> vertex_matrix() const;
  // Edge-shift adjacency: e -> e' iff e.to == e'.from.
  std::vector<std::vector<long>> edge_matrix() const;
  bool strongly_connected() const;
};

TransitionGraph transition_graph(const TorusPartition& P, const Automorphism& A);

// ---- edge types

struct EdgeTypePreMp {
  TorusPartition geometry;
  bool is_base;
  TorusPoint w;  // fixpoint-lattice point x e_u - y e_s (base: 0)
  Surd x, y;
};

std::vector<EdgeTypePreMp> edge_type_shifts(const MatZ2& A, const VertexPreMp& base);
// Points of the fixpoint lattice ((A - I)^{-1} Z^2) inside the frame box.
std::vector<std::pair<TorusPoint, std::array<Surd, 2>>> fixpoint_lattice_points(const Automorphism& A,
                                                                             const Parallelogram& box, bool open);

// ---- counterexample: admissible chains need not be realized

struct CodingCounterexample {
  Automorphism A;
  TorusPartition strmp;
  int refinements;
  std::size_t p1, p2, p3;            // piece indices
  Parallelogram P1, P2, P3;          // chosen planar lifts near the origin
  bool AP1_meets_P2 = false;         // closures
  bool AP2_meets_P3 = false;         // interiors
  bool A2P1_misses_P3 = false;       // closures, all translates
  bool A2P1_AP2_P3_empty = false;
  bool P1_in_Kprime = false, P2_in_Kdouble = false, P3_in_int_Kdouble = false, A_P1_in_Kprime = false;
  bool holds() const;
};

CodingCounterexample coding_counterexample(const MatZ2& A, int max_refinements = 8);

}  // namespace torux
