#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "torux/report.hpp"

using namespace torux;
using report::json;

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::NotHyperbolic:
      return 3;
    default:
      return 4;
  }
}

std::array<double, 4> parse_box(const std::string& text) {
  std::array<double, 4> b{};
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &b[0], &b[1], &b[2], &b[3]) != 4)
    fail(ErrorKind::Parse, "expected x0,x1,y0,y1: " + text);
  return b;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(ErrorKind::Parse, "not a rational: " + text);
  r.canonicalize();
  return r;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::OutOfRange, "cannot write " + path);
  f << data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic toral automorphisms: classification, Markov partitions, coding"};
  app.require_subcommand(1);
  int indent = 2;
  app.add_option("--indent", indent, "JSON indentation (-1 for one line)");

  std::string m1, m2;
  auto* classify = app.add_subcommand("classify", "hyperbolicity, eigen-slope, continued fraction, period");
  classify->add_option("matrix", m1, "\"a,b;c,d\"")->required();
  classify->add_option("matrix2", m2, "second matrix for a conjugacy verdict");

  auto* conjugate = app.add_subcommand("conjugate", "GL and SL conjugacy with a witness word");
  conjugate->add_option("A", m1)->required();
  conjugate->add_option("B", m2)->required();

  report::PrempOptions popt;
  long list_n = -1;
  bool count_only = false;
  std::string render_path, patch_text = "-0.5,1.5,-0.5,1.5";
  int panel_px = 240;
  auto* premp = app.add_subcommand("premp", "vertex pre-Markov partitions of one broad class");
  premp->add_option("matrix", m1)->required();
  premp->add_option("--list", list_n, "list n consecutive +u entries");
  premp->add_option("--start", popt.start, "skip entries past the first guaranteed one");
  premp->add_flag("--count", count_only, "counts only");
  premp->add_flag("--verify", popt.verify, "count orbits of the enumerated sequence too");
  premp->add_flag("--edge-type", popt.edge_type, "edge-type shifts of the first entry");
  premp->add_option("--render", render_path, "write an SVG strip (with --list) or plane patch");
  premp->add_option("--patch", patch_text, "plane window x0,x1,y0,y1");
  premp->add_option("--panel", panel_px, "panel size in pixels");

  auto* entropy = app.add_subcommand("entropy", "topological entropy with an exact certificate");
  entropy->add_option("matrix", m1)->required();

  std::string x_text;
  long steps = 8;
  auto* dbl = app.add_subcommand("double", "orbit and code of x under the doubling map");
  dbl->add_option("x", x_text, "rational in [0,1)")->required();
  dbl->add_option("steps", steps);

  MixSpec mspec;
  std::string y_text, frames_dir;
  auto* mixc = app.add_subcommand("mix", "mixing of a cat-shaped set on a grid");
  mixc->add_option("matrix", m1)->required();
  mixc->add_option("--grid", mspec.grid);
  mixc->add_option("--iters", mspec.iters);
  mixc->add_option("--Y", y_text, "rectangle x0,x1,y0,y1");
  mixc->add_option("--frames", frames_dir, "directory for PPM frames");

  auto* formc = app.add_subcommand("form", "binary quadratic form of a matrix");
  formc->add_option("matrix", m1)->required();

  auto* graphc = app.add_subcommand("graph", "transition graph of a vertex preMp");
  graphc->add_option("matrix", m1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    json out;
    if (*classify) {
      MatZ2 A = parse_matrix(m1);
      if (m2.empty()) {
        out = report::classify(A);
        out["approximations"] = report::approximations(eigen_data(A).kappa, report::max_q_from_env());
      } else {
        out = report::classify_pair(A, parse_matrix(m2));
      }
      out = report::envelope("classify", out);
    } else if (*conjugate) {
      out = report::envelope("conjugate", report::conjugate(parse_matrix(m1), parse_matrix(m2)));
    } else if (*premp) {
      MatZ2 A = parse_matrix(m1);
      if (list_n >= 0) popt.list = list_n;
      std::vector<VertexPreMp> listed;
      json body;
      if (count_only && !popt.list && !popt.edge_type && render_path.empty()) {
        body = report::premp(A, {std::nullopt, 0, popt.verify, false});
      } else {
        if (!render_path.empty() && !popt.list) popt.list = 1;
        body = report::premp(A, popt, &listed);
      }
      if (!render_path.empty()) {
        auto b = parse_box(patch_text);
        RenderSpec rs;
        rs.width_px = rs.height_px = panel_px;
        rs.patch = {b[0], b[1], b[2], b[3]};
        std::string svg = list_n >= 0 ? render_strip_svg(listed, rs)
                                      : render_partition_svg(listed.front().geometry, rs, m1);
        write_file(render_path, svg);
        body["render"] = render_path;
      }
      out = report::envelope("premp", body);
    } else if (*entropy) {
      out = report::envelope("entropy", report::entropy(parse_matrix(m1)));
    } else if (*dbl) {
      out = report::envelope("double", report::doubling(parse_rational(x_text), steps));
    } else if (*mixc) {
      mspec.A = parse_matrix(m1);
      if (!y_text.empty()) {
        auto b = parse_box(y_text);
        mspec.Y = {b[0], b[1], b[2], b[3]};
      }
      std::vector<Raster> frames;
      MixResult r = mix(mspec, frames_dir.empty() ? nullptr : &frames);
      json body = report::mixing(mspec, r);
      if (!frames_dir.empty()) {
        std::filesystem::create_directories(frames_dir);
        json names = json::array();
        for (std::size_t i = 0; i < frames.size(); ++i) {
          std::string p = (std::filesystem::path(frames_dir) / ("frame" + std::to_string(i) + ".ppm")).string();
          write_file(p, frames[i].ppm());
          names.push_back(p);
        }
        body["frames"] = names;
      }
      out = report::envelope("mix", body);
    } else if (*formc) {
      out = report::envelope("form", report::form(parse_matrix(m1)));
    } else if (*graphc) {
      out = report::envelope("graph", report::graph(parse_matrix(m1)));
    }
    std::cout << out.dump(indent) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cout << report::error(e).dump(indent) << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cout << report::error(Error(ErrorKind::Internal, e.what())).dump(indent) << "\n";
    return 4;
  }
}
