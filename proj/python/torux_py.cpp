#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torux/report.hpp"

namespace py = pybind11;
using namespace torux;

namespace {

std::string dump(const report::json& j) { return j.dump(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(ErrorKind::Parse, "not a rational: " + text);
  r.canonicalize();
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact toral automorphism tools";

  static py::exception<Error> exc(m, "ToruxError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("is_hyperbolic", [](const std::string& A) { return is_hyperbolic(parse_matrix(A)); });
  m.def("count_classes", [](const std::string& A) {
    ClassCounts c = count_classes(parse_matrix(A));
    return std::make_tuple(c.total, c.island, c.parquet);
  });
  m.def("kappa", [](const std::string& A) { return eigen_data(parse_matrix(A)).kappa.to_string(); });
  m.def("period", [](const std::string& A) {
    std::vector<std::string> out;
    for (const auto& x : canonical_period(expand(eigen_data(parse_matrix(A)).kappa))) out.push_back(x.get_str());
    return out;
  });
  m.def("gl_conjugate", [](const std::string& A, const std::string& B) {
    return are_conjugate_gl(parse_matrix(A), parse_matrix(B));
  });
  m.def("doubling_code", [](const std::string& x) {
    DoublingCode c = doubling_code(parse_rational(x));
    return std::make_tuple(c.code.preperiod, c.code.period, c.ambiguous);
  });
  m.def("doubling_decode", [](const std::vector<int>& pre, const std::vector<int>& per) {
    return doubling_decode(make_sequence(pre, per)).get_str();
  });
  m.def(
      "cylinder_measure",
      [](const std::vector<std::pair<long, int>>& cs, const std::vector<std::string>& p) {
        std::vector<Rational> q;
        for (const auto& s : p) q.push_back(parse_rational(s));
        return cylinder_measure(make_cylinder(cs), make_measure(q)).get_str();
      },
      py::arg("constraints"), py::arg("p") = std::vector<std::string>{"1/2", "1/2"});

  m.def("classify_json", [](const std::string& A) { return dump(report::classify(parse_matrix(A))); });
  m.def("conjugate_json",
        [](const std::string& A, const std::string& B) { return dump(report::conjugate(parse_matrix(A), parse_matrix(B))); });
  m.def("entropy_json", [](const std::string& A) { return dump(report::entropy(parse_matrix(A))); });
  m.def("form_json", [](const std::string& A) { return dump(report::form(parse_matrix(A))); });
  m.def("graph_json", [](const std::string& A) { return dump(report::graph(parse_matrix(A))); });
  m.def(
      "premp_json",
      [](const std::string& A, std::optional<long> list, bool edge_type) {
        report::PrempOptions o;
        o.list = list;
        o.edge_type = edge_type;
        return dump(report::premp(parse_matrix(A), o));
      },
      py::arg("matrix"), py::arg("list") = std::nullopt, py::arg("edge_type") = false);
  m.def(
      "mix_json",
      [](const std::string& A, int grid, int iters) {
        MixSpec s;
        s.A = parse_matrix(A);
        s.grid = grid;
        s.iters = iters;
        return dump(report::mixing(s, mix(s)));
      },
      py::arg("matrix"), py::arg("grid") = 512, py::arg("iters") = 3);
}
