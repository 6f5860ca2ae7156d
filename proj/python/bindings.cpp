#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signcert/lp_relax.hpp"
#include "signcert/maxcut.hpp"
#include "signcert/mincut.hpp"

namespace py = pybind11;
using namespace signcert;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_py(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

Rational from_py(const py::handle& v) { return parse_rational(py::str(v).cast<std::string>()); }

Polynomial from_terms(int n_vars, const py::dict& terms) {
  Polynomial f(n_vars);
  for (const auto& [key, value] : terms) {
    std::vector<int> idx;
    for (const auto& j : key) idx.push_back(j.cast<int>());
    f.add(Support(idx), from_py(value));
  }
  return f;
}

py::dict terms_of(const Polynomial& f) {
  py::dict out;
  for (const auto& [alpha, c] : f.terms()) out[py::tuple(py::cast(alpha.indices()))] = to_py(c);
  return out;
}

py::tuple min_pair(const MinResult& r) { return py::make_tuple(to_py(r.value), std::vector<int>(r.x.begin(), r.x.end())); }

RelaxMethod method_of(const std::string& m) {
  if (m == "std") return RelaxMethod::kStandard;
  if (m == "lov") return RelaxMethod::kLovasz;
  if (m == "sa1") return RelaxMethod::kSheraliAdams1;
  if (m == "ref") return RelaxMethod::kSignedReformulation;
  throw py::value_error("method must be one of std, lov, sa1, ref");
}

py::dict relax(const Polynomial& f, const std::string& method, int level, const std::string& mode, bool use_float) {
  RelaxOptions opt;
  if (mode == "cutplane") {
    opt.mode = SolveMode::kCuttingPlane;
  } else if (mode != "extended") {
    throw py::value_error("mode must be extended or cutplane");
  }
  const RelaxMethod m = method_of(method);
  Relaxation r;
  if (m == RelaxMethod::kSheraliAdams1) {
    r = sherali_adams_1(f);
  } else if (m == RelaxMethod::kSignedReformulation) {
    r = build_signed_reformulation(f, opt);
  } else {
    r = build_level_relaxation(f, level, m, opt);
  }
  SolveOptions so;
  so.arithmetic = use_float ? Arithmetic::kFloat : Arithmetic::kExact;
  RelaxResult res;
  {
    py::gil_scoped_release release;
    res = solve_relaxation(r, so);
  }
  py::dict out;
  out["status"] = to_string(res.status);
  out["lambda"] = res.status == LpStatus::kOptimal ? to_py(res.lambda) : py::object(py::none());
  out["levels"] = r.levels;
  out["rows"] = res.rows;
  out["cols"] = res.cols;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary polynomial certificates: min-cut minimization and signed LP relaxations";

  py::register_exception<std::length_error>(m, "CapExceeded", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init(&from_terms), py::arg("n_vars"), py::arg("terms") = py::dict(),
           "Terms map index tuples (empty for the constant) to int, str or Fraction coefficients.")
      .def_static(
          "parse", [](const std::string& text, std::optional<int> n) { return parse_polynomial(text, n); },
          py::arg("text"), py::arg("n_vars") = py::none())
      .def_property_readonly("n_vars", &Polynomial::n_vars)
      .def("terms", &terms_of)
      .def("evaluate", [](const Polynomial& f, const std::vector<int>& x) {
        return to_py(evaluate(f, BinaryPoint(x.begin(), x.end())));
      })
      .def("classify", [](const Polynomial& f) { return to_string(classify(f)); })
      .def("is_nns", [](const Polynomial& f) { return is_nns(f); })
      .def("format", [](const Polynomial& f) { return format_polynomial(f); })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__repr__", [](const Polynomial& f) { return "Polynomial(" + f.to_string() + ")"; });

  m.def("minimize_nns", [](const Polynomial& f) { return min_pair(minimize_nns(f)); },
        "Exact minimum (value, x) of an NNS polynomial by one min cut.");
  m.def("brute_force_min", [](const Polynomial& f, int cap) { return min_pair(brute_force_min(f, cap)); },
        py::arg("f"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("separate", [](const Polynomial& f) -> std::optional<std::vector<int>> {
    auto x = separate(f);
    if (!x) return std::nullopt;
    return std::vector<int>(x->begin(), x->end());
  }, "A point with f(x) < 0, or None when f is binary non-negative.");
  m.def("level_count", [](const Polynomial& f, const std::string& method) { return level_count(f, method_of(method)); },
        py::arg("f"), py::arg("method") = "std");
  m.def("relax", &relax, py::arg("f"), py::arg("method") = "std", py::arg("level") = 1, py::arg("mode") = "extended",
        py::arg("use_float") = false, "Solve one relaxation; returns status, lambda, levels, rows and cols.");

  m.def("maxcut_polynomial", [](const std::string& rudy) { return maxcut_to_bpo(parse_rudy(rudy)); },
        "The BPO form of a rudy graph, whose minimum is minus the maximum cut.");
  m.def("maxcut_brute_force", [](const std::string& rudy) { return to_py(maxcut_brute_force(parse_rudy(rudy)).value); });
  m.def("random_pm1_graph", [](int n, double density, std::uint64_t seed) {
    return serialize_rudy(random_pm1_graph(n, density, seed));
  }, py::arg("n"), py::arg("density"), py::arg("seed"));
}
