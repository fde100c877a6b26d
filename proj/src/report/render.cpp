#include <cmath>
#include <cstdio>
#include <sstream>

#include "torux/report.hpp"

namespace torux {

std::string RenderSpec::color(const std::string& key, const std::string& fallback) const {
  auto it = palette.find(key);
  return it == palette.end() ? fallback : it->second;
}

namespace {

const char* kPieceColors[] = {"#e8a33d", "#4a90c2", "#7bb661", "#c25a7c", "#8e6cc2", "#c2b04a"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct View {
  PlaneWindow w;
  double W, H, ox, oy;
  double px(double x) const { return ox + (x - w.x0) / (w.x1 - w.x0) * W; }
  double py(double y) const { return oy + (w.y1 - y) / (w.y1 - w.y0) * H; }
};

// Corners (x, y) of a rectangle in frame coordinates, counterclockwise in (u, s).
std::array<std::array<double, 2>, 4> corners(const Frame& f, const Parallelogram& r) {
  std::array<std::array<double, 2>, 4> out;
  const Surd* us[4][2] = {{&r.u0, &r.s0}, {&r.u1, &r.s0}, {&r.u1, &r.s1}, {&r.u0, &r.s1}};
  for (int i = 0; i < 4; ++i)
    out[i] = {f.x_of(*us[i][0], *us[i][1]).to_double(), f.y_of(*us[i][0], *us[i][1]).to_double()};
  return out;
}

void draw_lifts(std::ostringstream& os, const Frame& f, const Parallelogram& r, const View& v,
                const std::string& fill, double opacity) {
  auto c = corners(f, r);
  double bx0 = c[0][0], bx1 = c[0][0], by0 = c[0][1], by1 = c[0][1];
  for (const auto& p : c) {
    bx0 = std::min(bx0, p[0]);
    bx1 = std::max(bx1, p[0]);
    by0 = std::min(by0, p[1]);
    by1 = std::max(by1, p[1]);
  }
  long m0 = static_cast<long>(std::floor(v.w.x0 - bx1)), m1 = static_cast<long>(std::ceil(v.w.x1 - bx0));
  long n0 = static_cast<long>(std::floor(v.w.y0 - by1)), n1 = static_cast<long>(std::ceil(v.w.y1 - by0));
  for (long m = m0; m <= m1; ++m)
    for (long n = n0; n <= n1; ++n) {
      os << "<polygon points=\"";
      for (int i = 0; i < 4; ++i) os << (i ? " " : "") << num(v.px(c[i][0] + m)) << "," << num(v.py(c[i][1] + n));
      os << "\" fill=\"" << fill << "\" fill-opacity=\"" << num(opacity) << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
    }
}

void draw_lattice(std::ostringstream& os, const View& v, const std::string& color) {
  for (long m = static_cast<long>(std::ceil(v.w.x0)); m <= static_cast<long>(std::floor(v.w.x1)); ++m)
    for (long n = static_cast<long>(std::ceil(v.w.y0)); n <= static_cast<long>(std::floor(v.w.y1)); ++n)
      os << "<circle cx=\"" << num(v.px(static_cast<double>(m))) << "\" cy=\"" << num(v.py(static_cast<double>(n)))
         << "\" r=\"2\" fill=\"" << color << "\"/>\n";
}

void require_patch(const RenderSpec& spec) {
  if (!(spec.patch.x0 < spec.patch.x1 && spec.patch.y0 < spec.patch.y1))
    fail(ErrorKind::OutOfRange, "render patch must be nonempty");
  if (spec.width_px <= 0 || spec.height_px <= 0) fail(ErrorKind::OutOfRange, "render size must be positive");
}

}  // namespace

std::string render_partition_svg(const TorusPartition& P, const RenderSpec& spec, const std::string& title) {
  require_patch(spec);
  std::ostringstream os;
  double W = spec.width_px, H = spec.height_px;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\"" << spec.height_px
     << "\" viewBox=\"0 0 " << spec.width_px << " " << spec.height_px << "\">\n";
  os << "<defs><clipPath id=\"patch\"><rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\""
     << spec.height_px << "\"/></clipPath></defs>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g clip-path=\"url(#patch)\">\n";
  View v{spec.patch, W, H, 0, 0};
  for (std::size_t i = 0; i < P.pieces.size(); ++i)
    draw_lifts(os, P.frame, P.pieces[i], v, spec.color("piece" + std::to_string(i), kPieceColors[i % 6]), 0.8);
  draw_lattice(os, v, spec.color("lattice", "#000"));
  os << "</g>\n";
  if (!title.empty()) os << "<text x=\"6\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_strip_svg(const std::vector<VertexPreMp>& entries, const RenderSpec& panel) {
  require_patch(panel);
  std::ostringstream os;
  const int gap = 8;
  long n = static_cast<long>(entries.size());
  long W = n * panel.width_px + std::max(0L, n - 1) * gap;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << panel.height_px + 24
     << "\" viewBox=\"0 0 " << W << " " << panel.height_px + 24 << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long i = 0; i < n; ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    double ox = static_cast<double>(i * (panel.width_px + gap));
    std::string id = "panel" + std::to_string(i);
    os << "<clipPath id=\"" << id << "\"><rect x=\"" << num(ox) << "\" y=\"0\" width=\"" << panel.width_px
       << "\" height=\"" << panel.height_px << "\"/></clipPath>\n";
    os << "<g clip-path=\"url(#" << id << ")\">\n";
    os << "<rect x=\"" << num(ox) << "\" y=\"0\" width=\"" << panel.width_px << "\" height=\"" << panel.height_px
       << "\" fill=\"white\" stroke=\"#999\"/>\n";
    View v{panel.patch, static_cast<double>(panel.width_px), static_cast<double>(panel.height_px), ox, 0};
    bool island = e.ptype == PremType::Island;
    std::string fill = island ? panel.color("island", "#e8a33d") : panel.color("parquet", "#4a90c2");
    for (std::size_t j = 0; j < e.geometry.pieces.size(); ++j)
      draw_lifts(os, e.geometry.frame, e.geometry.pieces[j], v, fill, j == 0 ? 0.85 : 0.45);
    draw_lattice(os, v, panel.color("lattice", "#000"));
    os << "</g>\n";
    os << "<text x=\"" << num(ox + 4) << "\" y=\"" << panel.height_px + 17
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << (island ? "I" : "P") << " k=" << e.k
       << " l=" << e.l.get_str() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace torux
