#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quiver/avoiding_ideal.hpp"
#include "quiver/cli.hpp"
#include "quiver/components.hpp"
#include "quiver/dln_analysis.hpp"
#include "quiver/errors.hpp"
#include "quiver/qip_lattice.hpp"
#include "quiver/qseries.hpp"
#include "quiver/quiver_core.hpp"

namespace py = pybind11;
using namespace quiver;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigInt(v.get_num())), to_py(BigInt(v.get_den())));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

Method method_of(const std::string& s) {
  if (s == "brute") return Method::Brute;
  if (s == "qseries") return Method::QSeries;
  if (s == "qip") return Method::Qip;
  if (s == "closed") return Method::Closed;
  if (s == "ideal") return Method::Ideal;
  throw InvalidInput("unknown method '" + s + "'");
}

py::dict orbit_dict(const OrbitDescriptor& o) {
  py::dict d;
  d["kostant"] = o.kostant.rows();
  d["rank"] = o.rank.rows();
  d["codim"] = o.codim;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Codimension and top components of product-rank loci of matrix tuples";

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<NotFound>(m, "NotFound", PyExc_LookupError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<Disagreement>(m, "Disagreement", PyExc_RuntimeError);
  (void)invalid;

  m.def(
      "components",
      [](std::vector<int> dims, int r, const std::string& method, std::uint64_t cap) {
        MethodOptions opts;
        opts.cap = cap;
        const auto rep = compute_components(DimensionVector(std::move(dims)), r, method_of(method), opts);
        return py::make_tuple(to_py(rep.C), to_py(rep.theta));
      },
      py::arg("dims"), py::arg("r") = 0, py::arg("method") = "closed", py::arg("cap") = kDefaultEnumerationCap,
      "(C, theta) by the chosen method.");

  m.def(
      "q_series",
      [](std::vector<int> dims, int r, int truncation, bool brute) {
        const DimensionVector d(std::move(dims));
        const auto s = brute ? q_series_bruteforce(d, r, truncation) : q_series_closed(d, r, truncation);
        return to_py(s.coeffs());
      },
      py::arg("dims"), py::arg("r") = 0, py::arg("truncation") = 10, py::arg("brute") = false,
      "Coefficients of Q^r_d through q^truncation.");

  m.def(
      "qip",
      [](std::vector<int> dims, std::uint64_t cap) {
        const auto sol = qip_enumerate(QipInstance(DimensionVector(std::move(dims))), cap);
        return py::make_tuple(sol.optimum, sol.minimizers);
      },
      py::arg("dims"), py::arg("cap") = kDefaultEnumerationCap, "(optimum, minimizers) in sorted coordinates.");

  m.def(
      "closest_point",
      [](std::vector<int> dims) {
        const auto c = closest_simplex_points(DimensionVector(std::move(dims)));
        py::dict d;
        d["m"] = c.m_relevant;
        d["S"] = to_py(c.S);
        py::list p;
        for (const auto& x : c.p_hat) p.append(to_py(x));
        d["p_hat"] = p;
        d["rounded"] = to_py(c.rounded);
        d["delta"] = to_py(c.delta);
        py::list v;
        for (const auto& x : c.v_hats) v.append(to_py(x));
        d["v_hats"] = v;
        d["D_hat"] = to_py(c.D_hat);
        d["G_opt"] = to_py(c.G_opt);
        return d;
      },
      py::arg("dims"), "Closest integer points for a weakly increasing vector.");

  m.def(
      "rlct", [](std::vector<int> dims, int r) { return to_py(rlct(DimensionVector(std::move(dims)), r)); },
      py::arg("dims"), py::arg("r") = 0);
  m.def(
      "rlcm",
      [](std::vector<int> dims, int r) {
        const auto v = rlcm(DimensionVector(std::move(dims)), r);
        return py::make_tuple(to_py(v.value), v.boundary);
      },
      py::arg("dims"), py::arg("r") = 0, "(value, boundary flag).");
  m.def(
      "fiber_codim", [](std::vector<int> dims, int r) { return to_py(fiber_codim(DimensionVector(std::move(dims)), r)); },
      py::arg("dims"), py::arg("r") = 0);

  m.def(
      "orbit_codim", [](const std::vector<std::vector<int>>& rows) { return orbit_codim(KostantPartition::from_rows(rows)); },
      py::arg("rows"), "Codimension of the orbit with the given Kostant partition rows.");
  m.def(
      "closure_components",
      [](std::vector<int> dims, int r) {
        py::list out;
        for (const auto& o : enumerate_components(DimensionVector(std::move(dims)), r)) out.append(orbit_dict(o));
        return out;
      },
      py::arg("dims"), py::arg("r") = 0);

  m.def(
      "lowest_kernel",
      [](std::vector<int> dims, int r, int max_degree) {
        const auto k = lowest_kernel(DimensionVector(std::move(dims)), r, max_degree);
        return py::make_tuple(k.degree, to_py(k.rank), k.degenerate);
      },
      py::arg("dims"), py::arg("r"), py::arg("max_degree"), "(degree, rank, degenerate).");

  m.def(
      "selfcheck",
      [](int bound, bool inject_fault) {
        SelfcheckOptions o;
        o.bound = bound;
        o.inject_fault = inject_fault;
        const auto rep = selfcheck(o);
        py::dict d;
        d["passed"] = rep.passed;
        d["vectors"] = rep.vectors;
        d["cases"] = rep.cases;
        d["counterexample"] = rep.counterexample;
        return d;
      },
      py::arg("bound") = 10, py::arg("inject_fault") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit code, stdout, stderr) of one command-line invocation.");
}
