#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torux/conjugacy.hpp"
#include "torux/symbolic.hpp"

namespace torux {

// ---- mixing on a grid

struct Polygon {
  std::vector<std::array<double, 2>> v;
  bool contains(double x, double y) const;
};
// Silhouette of a cat's head inside the unit square.
Polygon cat_shape();

struct Rect {
  double x0, x1, y0, y1;
  double area() const { return (x1 - x0) * (y1 - y0); }
  bool contains(double x, double y) const { return x0 <= x && x < x1 && y0 <= y && y < y1; }
};

struct Raster {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;
  Raster(int w, int h);
  void set(int x, int y, std::array<std::uint8_t, 3> c);
  std::string ppm() const;
};

struct MixSpec {
  MatZ2 A;
  int grid = 512;
  int iters = 3;
  Polygon X = cat_shape();
  Rect Y{0.1, 0.7, 0.2, 0.8};
};

struct MixStep {
  int iter;
  long hits;        // cells of X landing in Y
  double overlap;   // hits / grid^2
  double ratio;     // overlap / mes Y
  double deviation; // |ratio - mes X|
};

struct MixResult {
  long grid;
  long cells_X;
  double mes_X, mes_Y;
  std::vector<MixStep> steps;  // iterations 0..iters
  const MixStep& last() const { return steps.back(); }
};

// Cell centers (2i+1)/(2g) are pushed through A exactly modulo 2g.
MixResult mix(const MixSpec& spec, std::vector<Raster>* frames = nullptr);

// ---- SVG rendering

struct PlaneWindow {
  double x0, x1, y0, y1;
};

struct RenderSpec {
  int width_px = 480, height_px = 480;
  PlaneWindow patch{-1.0, 2.0, -1.0, 2.0};
  std::map<std::string, std::string> palette;  // keys "piece<i>", "island", "parquet", "lattice"
  std::string color(const std::string& key, const std::string& fallback) const;
};

// Plane patch of the lifted partition, with the integer lattice marked.
std::string render_partition_svg(const TorusPartition& P, const RenderSpec& spec, const std::string& title = "");
// Consecutive preMps side by side, filled by type.
std::string render_strip_svg(const std::vector<VertexPreMp>& entries, const RenderSpec& panel);

// ---- JSON reports

namespace report {

using json = nlohmann::json;

json integer(const Integer& x);
json rational(const Rational& x);
json surd(const Surd& x);
json matrix(const MatZ2& A);
json integers(const std::vector<Integer>& v);
json cf(const CFExpansion& e);
json word(const Word& w);
json parallelogram(const Parallelogram& r);
json partition(const TorusPartition& P, const std::string& type = "");
json sequence(const SymbolSequence& s);

json classify(const MatZ2& A);
// One- and two-sided best approximations of omega with q <= q_max.
json approximations(const Surd& omega, const Integer& q_max);
// TORUX_MAX_Q, or the fallback when unset or unparsable.
long max_q_from_env(long fallback = 100);
json classify_pair(const MatZ2& A, const MatZ2& B);
json conjugate(const MatZ2& A, const MatZ2& B);

struct PrempOptions {
  std::optional<long> list;  // number of +u entries from the first guaranteed one
  long start = 0;            // offset past the first guaranteed entry
  bool verify = false;       // also count orbits of the enumerated sequence
  bool edge_type = false;
};
json premp(const MatZ2& A, const PrempOptions& opt, std::vector<VertexPreMp>* listed = nullptr);

json entropy(const MatZ2& A);
json doubling(const Rational& x, long steps);
json mixing(const MixSpec& spec, const MixResult& r);
json form(const MatZ2& A);
json graph(const MatZ2& A);

// {"schema": 1, "command": name, ...body}
json envelope(const std::string& command, json body);
json error(const Error& e);

}  // namespace report

}  // namespace torux
