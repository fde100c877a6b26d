#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "torux/report.hpp"

namespace torux {

bool Polygon::contains(double x, double y) const {
  bool in = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const auto& a = v[i];
    const auto& b = v[j];
    if ((a[1] > y) != (b[1] > y) && x < (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1]) + a[0]) in = !in;
  }
  return in;
}

Polygon cat_shape() {
  return {{{0.30, 0.22}, {0.70, 0.22}, {0.80, 0.36}, {0.82, 0.58}, {0.76, 0.86}, {0.63, 0.70},
           {0.50, 0.72}, {0.37, 0.70}, {0.24, 0.86}, {0.18, 0.58}, {0.20, 0.36}}};
}

Raster::Raster(int w, int h) : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 255) {}

void Raster::set(int x, int y, std::array<std::uint8_t, 3> c) {
  if (x < 0 || y < 0 || x >= width || y >= height) return;
  std::size_t o = (static_cast<std::size_t>(y) * width + x) * 3;
  std::copy(c.begin(), c.end(), rgb.begin() + static_cast<long>(o));
}

std::string Raster::ppm() const {
  std::ostringstream os;
  os << "P6\n" << width << " " << height << "\n255\n";
  os.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  return os.str();
}

MixResult mix(const MixSpec& spec, std::vector<Raster>* frames) {
  require_hyperbolic(spec.A);
  if (spec.grid < 2) fail(ErrorKind::OutOfRange, "grid must be at least 2");
  if (spec.iters < 0) fail(ErrorKind::OutOfRange, "negative iteration count");
  const long g = spec.grid, m = 2 * g;
  auto red = [m](const Integer& x) {
    Integer r = x % m;
    if (sgn(r) < 0) r += m;
    return r.get_si();
  };
  const long a = red(spec.A.a()), b = red(spec.A.b()), c = red(spec.A.c()), d = red(spec.A.d());

  std::vector<std::array<long, 2>> pts;
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      double x = static_cast<double>(2 * i + 1) / static_cast<double>(m);
      double y = static_cast<double>(2 * j + 1) / static_cast<double>(m);
      if (spec.X.contains(x, y)) pts.push_back({2 * i + 1, 2 * j + 1});
    }

  MixResult r{g, static_cast<long>(pts.size()), static_cast<double>(pts.size()) / static_cast<double>(g * g),
              spec.Y.area(), {}};
  for (int it = 0; it <= spec.iters; ++it) {
    if (it > 0)
      for (auto& p : pts) p = {(a * p[0] + b * p[1]) % m, (c * p[0] + d * p[1]) % m};
    long hits = 0;
    std::optional<Raster> frame;
    if (frames) {
      frame.emplace(static_cast<int>(g), static_cast<int>(g));
      for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j)
          if (spec.Y.contains((i + 0.5) / static_cast<double>(g), (j + 0.5) / static_cast<double>(g)))
            frame->set(static_cast<int>(i), static_cast<int>(g - 1 - j), {200, 220, 255});
    }
    for (const auto& p : pts) {
      double x = static_cast<double>(p[0]) / static_cast<double>(m);
      double y = static_cast<double>(p[1]) / static_cast<double>(m);
      bool in = spec.Y.contains(x, y);
      hits += in;
      if (frame)
        frame->set(static_cast<int>(p[0] / 2), static_cast<int>(g - 1 - p[1] / 2),
                   in ? std::array<std::uint8_t, 3>{20, 60, 160} : std::array<std::uint8_t, 3>{30, 30, 30});
    }
    double ov = static_cast<double>(hits) / static_cast<double>(g * g);
    double ratio = ov / r.mes_Y;
    r.steps.push_back({it, hits, ov, ratio, std::fabs(ratio - r.mes_X)});
    if (frames) frames->push_back(std::move(*frame));
  }
  return r;
}

}  // namespace torux
