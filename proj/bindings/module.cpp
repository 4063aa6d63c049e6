// Python bindings. Structured results cross the boundary as JSON strings;
// the sharpmap package turns them into plain dicts.
#include <pybind11/pybind11.h>

#include <algorithm>
#include <string>

#include "sharpmap/certify.hpp"
#include "sharpmap/families.hpp"
#include "sharpmap/json_io.hpp"
#include "sharpmap/lp.hpp"
#include "sharpmap/newton.hpp"
#include "sharpmap/search.hpp"
#include "sharpmap/system.hpp"

namespace py = pybind11;
using namespace sharpmap;

namespace {

LinearSystem build(int n, int d, const std::string& kind, bool include_constant,
                   bool reduce) {
  LinearSystem sys;
  switch (kind_from_name(kind)) {
    case SystemKind::Homogenized:
      sys = build_homogenized(n, d, include_constant);
      break;
    case SystemKind::Eliminated:
      sys = build_eliminated(n, d);
      break;
    case SystemKind::Symmetric:
      sys = build_symmetric(d);
      break;
  }
  if (reduce) sys = reduce_support(sys);
  return sys;
}

SearchBudget budget_of(int workers, int max_support, long long max_combinations) {
  SearchBudget b;
  b.workers = workers;
  b.max_support = max_support;
  b.max_combinations = max_combinations;
  return b;
}

std::string system_json(int n, int d, const std::string& kind,
                        bool include_constant, bool reduce) {
  return system_to_json(build(n, d, kind, include_constant, reduce)).dump();
}

std::string search_json(int n, int d, const std::string& kind, bool reduce,
                        bool constrained, bool enumerate_all, int workers,
                        int max_support, long long max_combinations) {
  const LinearSystem sys = build(n, d, kind, false, reduce);
  const SearchReport report =
      min_l0(sys, constrained && !reduce, enumerate_all,
             budget_of(workers, max_support, max_combinations));
  return search_report_to_json(report).dump();
}

std::string uniqueness_json(int d, int workers, long long max_combinations) {
  const std::vector<Polynomial> polys =
      uniqueness_test(d, budget_of(workers, -1, max_combinations));
  Json j;
  j["d"] = d;
  j["count"] = polys.size();
  Json arr = Json::array();
  for (const Polynomial& p : polys) arr.push_back(polynomial_to_json(p));
  j["polynomials"] = std::move(arr);
  j["unique_up_to_swap"] = polys.size() <= 2;
  return j.dump();
}

std::string symmetric_json(int d, long long max_combinations) {
  const SymmetricReport report =
      symmetric_min_terms(d, budget_of(1, -1, max_combinations));
  return symmetric_report_to_json(report).dump();
}

std::string l1min_json(int n, int d, const std::string& basis,
                       bool include_constant, bool pin_top, bool enumerate_all) {
  const LinearSystem sys = build(n, d, basis, include_constant, false);
  LPProblem prob;
  prob.system = &sys;
  for (int j = 0; j < sys.cols(); ++j)
    prob.objective.push_back(sys.column_weight(j));
  if (pin_top) {
    for (int j = 0; j < sys.cols(); ++j) {
      const Exponent& e = sys.columns[j];
      const bool top = sys.kind == SystemKind::Symmetric
                           ? (e[0] == 0 && e[1] == d)
                           : (degree_of(e) == d &&
                              *std::max_element(e.begin(), e.end()) == d);
      if (top) prob.pinned[j] = Rational(1);
    }
  }
  const LPResult res = lp_minimize(prob);
  Json j;
  j["basis"] = kind_name(sys.kind);
  j["n"] = sys.n;
  j["d"] = sys.d;
  j["pinned_top"] = pin_top;
  j["result"] = lp_result_to_json(res);
  if (res.status == LPStatus::Optimal) {
    j["polynomial"] = polynomial_to_json(sys.reassemble(res.point));
    if (enumerate_all) {
      const std::vector<LPResult> vertices = enumerate_vertex_optima(prob);
      Json arr = Json::array();
      for (const LPResult& v : vertices) arr.push_back(lp_result_to_json(v));
      j["optimal_vertices"] = std::move(arr);
      j["unique_optimum"] = vertices.size() == 1;
    }
  }
  return j.dump();
}

std::string invariant_json(int d) {
  const Polynomial p = invariant_poly(d);
  Json j;
  j["d"] = d;
  j["polynomial"] = polynomial_to_json(p);
  if (d % 2 == 1) j["coefficient_sum"] = rational_to_json(l1_closed_form(d));
  j["primality_congruence"] = primality_congruence(d);
  return j.dump();
}

std::string whitney_json(int n, int d) {
  return polynomial_to_json(whitney_poly(n, d)).dump();
}

std::string substitute_json(int d, int m, int a, int b, const std::string& c) {
  const SubstituteResult r = substitute(d, m, a, b, Rational::from_string(c));
  Json j;
  j["nonnegative"] = r.nonnegative;
  j["coefficient_sum"] = rational_to_json(r.polynomial.coefficient_sum());
  j["polynomial"] = polynomial_to_json(r.polynomial);
  return j.dump();
}

std::string graph_json(const std::string& poly_json) {
  const Polynomial p =
      polynomial_from_json(Json::parse(poly_json));
  const NewtonGraph g = build_graph(p);
  const SinkCertificate cert = sink_certificate(p);
  Json j = graph_to_json(g);
  j["sink_certificate"] = {{"sinks", cert.sinks},
                           {"terms", cert.terms},
                           {"holds", cert.holds}};
  return j.dump();
}

std::string graph_dot_str(const std::string& poly_json) {
  const Polynomial p =
      polynomial_from_json(Json::parse(poly_json));
  return graph_dot(build_graph(p));
}

std::string verify_json(const std::string& poly_json, int n) {
  const Polynomial p =
      polynomial_from_json(Json::parse(poly_json));
  return certificate_to_json(verify_sharp(p, n)).dump();
}

std::string census_json(int n, int max_terms) {
  const auto census = target_minimal_census(n, max_terms);
  Json j;
  j["n"] = n;
  j["threshold"] = census_threshold(n);
  Json entries = Json::object();
  for (const auto& [N, poly] : census) {
    if (poly)
      entries[std::to_string(N)] = polynomial_to_json(*poly);
    else
      entries[std::to_string(N)] = nullptr;
  }
  j["targets"] = std::move(entries);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact searches, closed-form families, and combinatorial certificates "
      "for polynomials equal to 1 on the hyperplane x1+...+xn = 1.";

  py::register_exception<BudgetExceeded>(m, "BudgetError");

  m.def("system_json", &system_json, py::arg("n"), py::arg("d"),
        py::arg("kind") = "homogenized", py::arg("include_constant") = false,
        py::arg("reduce") = false,
        "Coefficient system (matrix, right-hand side, column monomials).");
  m.def("search_json", &search_json, py::arg("n"), py::arg("d"),
        py::arg("kind") = "homogenized", py::arg("reduce") = false,
        py::arg("constrained") = true, py::arg("enumerate_all") = false,
        py::arg("workers") = 1, py::arg("max_support") = -1,
        py::arg("max_combinations") = 10'000'000LL,
        "Minimum-support nonnegative solution search.",
        py::call_guard<py::gil_scoped_release>());
  m.def("uniqueness_json", &uniqueness_json, py::arg("d"),
        py::arg("workers") = 1, py::arg("max_combinations") = 10'000'000LL,
        "All minimal-term degree-d solutions (odd d).",
        py::call_guard<py::gil_scoped_release>());
  m.def("symmetric_json", &symmetric_json, py::arg("d"),
        py::arg("max_combinations") = 10'000'000LL,
        "Minimum monomial count over the symmetric basis (odd d).",
        py::call_guard<py::gil_scoped_release>());
  m.def("l1min_json", &l1min_json, py::arg("n"), py::arg("d"),
        py::arg("basis") = "symmetric", py::arg("include_constant") = false,
        py::arg("pin_top") = false, py::arg("enumerate_all") = false,
        "Exact minimum of the weighted coefficient sum.");
  m.def("invariant_json", &invariant_json, py::arg("d"),
        "Group-invariant sharp polynomial of degree d.");
  m.def("whitney_json", &whitney_json, py::arg("n"), py::arg("d"),
        "Generalized Whitney polynomial.");
  m.def("substitute_json", &substitute_json, py::arg("d"), py::arg("m"),
        py::arg("a"), py::arg("b"), py::arg("c"),
        "Substitution move lowering the coefficient sum.");
  m.def("graph_json", &graph_json, py::arg("poly_json"),
        "Directed lattice diagram of (p-1)/(x+y-1) with sinks and sources.");
  m.def("graph_dot", &graph_dot_str, py::arg("poly_json"),
        "Graphviz rendering of the lattice diagram.");
  m.def("verify_json", &verify_json, py::arg("poly_json"), py::arg("n"),
        "Sharpness certificate for a candidate polynomial.");
  m.def("census_json", &census_json, py::arg("n"), py::arg("max_terms"),
        "Sharp examples by term count N up to max_terms.");
  m.def("sharp_bound", &sharp_bound, py::arg("n"), py::arg("d"),
        "Minimum possible number of terms at degree d.");
  m.def("gap_admissible", &gap_admissible, py::arg("n"), py::arg("terms"),
        "Whether a term count avoids the two forbidden gaps.");
  m.def("census_threshold", &census_threshold, py::arg("n"),
        "Term count beyond which every value is attained.");

  m.attr("__version__") = "1.0.0";
}
