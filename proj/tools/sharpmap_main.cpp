// sharpmap: exact searches, closed-form families, and combinatorial
// certificates for polynomials equal to 1 on the hyperplane x1+...+xn = 1.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sharpmap/certify.hpp"
#include "sharpmap/families.hpp"
#include "sharpmap/json_io.hpp"
#include "sharpmap/lp.hpp"
#include "sharpmap/newton.hpp"
#include "sharpmap/search.hpp"
#include "sharpmap/system.hpp"

namespace {

using namespace sharpmap;

struct OutputOpts {
  std::string json_path;
  std::string format = "text";
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--json", out.json_path, "write the JSON report to this file");
  cmd->add_option("--format", out.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}));
}

// Writes the JSON file if requested; prints JSON to stdout when asked.
// Returns true when stdout still needs the text rendering.
bool emit(const Json& j, const OutputOpts& out) {
  if (!out.json_path.empty()) write_json_file(j, out.json_path);
  if (out.format == "json") {
    std::cout << j.dump(2) << "\n";
    return false;
  }
  return true;
}

struct BudgetOpts {
  int workers = 1;
  int max_support = -1;
  long long max_combinations = 10'000'000;
};

void add_budget_opts(CLI::App* cmd, BudgetOpts& b) {
  cmd->add_option("--workers", b.workers, "concurrent search workers")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-support", b.max_support,
                  "largest support size to try (-1: unlimited)");
  cmd->add_option("--max-combinations", b.max_combinations,
                  "total supports examined across levels")
      ->check(CLI::PositiveNumber);
}

SearchBudget to_budget(const BudgetOpts& b) {
  SearchBudget out;
  out.workers = b.workers;
  out.max_support = b.max_support;
  out.max_combinations = b.max_combinations;
  return out;
}

LinearSystem build_from_flags(int n, int d, const std::string& kind,
                              bool include_constant, bool reduce) {
  LinearSystem sys;
  const SystemKind k = kind_from_name(kind);
  switch (k) {
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

void print_witness(const SupportSolution& w) {
  std::cout << "  support {";
  for (std::size_t i = 0; i < w.support.size(); ++i)
    std::cout << (i ? "," : "") << w.support[i];
  std::cout << "}  l1 = " << w.l1.str() << "  " << w.polynomial.str() << "\n";
}

int run_system(int n, int d, const std::string& kind, bool include_constant,
               bool reduce, const OutputOpts& out) {
  const LinearSystem sys = build_from_flags(n, d, kind, include_constant, reduce);
  if (emit(system_to_json(sys), out)) {
    std::cout << kind_name(sys.kind) << " system: n = " << sys.n
              << ", d = " << sys.d << ", " << sys.rows() << " equations x "
              << sys.cols() << " unknowns, " << sys.distinguished.size()
              << " top-degree columns\n";
    for (int j = 0; j < sys.cols(); ++j)
      std::cout << "  column " << j << ": "
                << sys.column_polynomial(j).str() << "\n";
  }
  return 0;
}

int run_search(int n, int d, const std::string& kind, bool reduce, bool all,
               bool unconstrained, const BudgetOpts& budget,
               const OutputOpts& out) {
  const LinearSystem sys = build_from_flags(n, d, kind, false, reduce);
  const SearchReport report =
      min_l0(sys, !unconstrained && !reduce, all, to_budget(budget));
  if (emit(search_report_to_json(report), out)) {
    if (report.feasible) {
      std::cout << "minimum support size " << report.min_l0 << " with "
                << report.witnesses.size() << " witness(es)\n";
      for (const SupportSolution& w : report.witnesses) print_witness(w);
    } else {
      std::cout << (report.budget_exhausted ? "budget exhausted before an answer\n"
                                            : "infeasible\n");
    }
    std::cout << "supports examined: " << report.nodes_explored
              << ", pruned by degree constraint: "
              << report.prunes_by_certificate << "\n";
  }
  return report.budget_exhausted && !report.feasible ? 2 : 0;
}

int run_uniqueness(int d, const BudgetOpts& budget, const OutputOpts& out) {
  const std::vector<Polynomial> polys = uniqueness_test(d, to_budget(budget));
  Json j;
  j["d"] = d;
  j["count"] = polys.size();
  Json arr = Json::array();
  for (const Polynomial& p : polys) arr.push_back(polynomial_to_json(p));
  j["polynomials"] = std::move(arr);
  j["unique_up_to_swap"] = polys.size() <= 2;
  if (emit(j, out)) {
    std::cout << polys.size() << " minimal-term polynomial(s) of degree " << d
              << (polys.size() <= 2 ? " (unique up to swapping the variables)"
                                    : " (uniqueness fails)")
              << "\n";
    for (const Polynomial& p : polys)
      std::cout << "  " << p.str() << "   [l1 = " << p.coefficient_sum().str()
                << "]\n";
  }
  return 0;
}

int run_symmetric(int d, const BudgetOpts& budget, const OutputOpts& out) {
  const SymmetricReport report = symmetric_min_terms(d, to_budget(budget));
  if (emit(symmetric_report_to_json(report), out)) {
    std::cout << "minimum monomial count " << report.min_terms
              << " (predicted minimum " << sharp_bound(2, d) << ") with "
              << report.witnesses.size() << " witness(es)\n";
    for (const SupportSolution& w : report.witnesses) print_witness(w);
  }
  return report.budget_exhausted && !report.feasible ? 2 : 0;
}

int run_l1min(int n, int d, const std::string& basis, bool include_constant,
              bool pin_top, bool all, const OutputOpts& out) {
  const LinearSystem sys = build_from_flags(n, d, basis, include_constant, false);
  LPProblem prob;
  prob.system = &sys;
  for (int j = 0; j < sys.cols(); ++j)
    prob.objective.push_back(sys.column_weight(j));
  if (pin_top) {
    if (sys.kind == SystemKind::Symmetric) {
      for (int j = 0; j < sys.cols(); ++j)
        if (sys.columns[j][0] == 0 && sys.columns[j][1] == d)
          prob.pinned[j] = Rational(1);
    } else {
      for (int j = 0; j < sys.cols(); ++j) {
        const Exponent& e = sys.columns[j];
        bool pure_top = false;
        for (int v = 0; v < sys.n; ++v)
          if (e[v] == d && degree_of(e) == d) pure_top = true;
        if (pure_top) prob.pinned[j] = Rational(1);
      }
    }
  }
  const LPResult res = lp_minimize(prob);
  Json j;
  j["basis"] = kind_name(sys.kind);
  j["n"] = sys.n;
  j["d"] = sys.d;
  j["pinned_top"] = pin_top;
  j["result"] = lp_result_to_json(res);
  std::vector<LPResult> vertices;
  if (res.status == LPStatus::Optimal) {
    j["polynomial"] = polynomial_to_json(sys.reassemble(res.point));
    if (all) {
      vertices = enumerate_vertex_optima(prob);
      Json arr = Json::array();
      for (const LPResult& v : vertices) arr.push_back(lp_result_to_json(v));
      j["optimal_vertices"] = std::move(arr);
      j["unique_optimum"] = vertices.size() == 1;
    }
  }
  if (emit(j, out)) {
    std::cout << "status: " << lp_status_name(res.status) << "\n";
    if (res.status == LPStatus::Optimal) {
      std::cout << "weighted coefficient sum: " << res.value.str() << "\n"
                << "solution: " << sys.reassemble(res.point).str() << "\n";
      if (all)
        std::cout << "optimal vertices: " << vertices.size()
                  << (vertices.size() == 1 ? " (unique optimum)" : "") << "\n";
    }
  }
  return 0;
}

int run_family(const std::string& kind, int n, int d, int m, int a, int b,
               const std::string& c_str, const std::string& poly_out,
               const OutputOpts& out) {
  Json j;
  std::string text;
  if (kind == "invariant") {
    const Polynomial p = invariant_poly(d);
    j["kind"] = "invariant";
    j["d"] = d;
    j["polynomial"] = polynomial_to_json(p);
    if (d % 2 == 1) {
      j["coefficient_sum"] = rational_to_json(l1_closed_form(d));
      j["lucas_plus_one"] = rational_to_json(lucas_number(d) + Rational(1));
    }
    j["primality_congruence"] = primality_congruence(d);
    text = p.str();
  } else if (kind == "whitney") {
    const Polynomial p = whitney_poly(n, d);
    j["kind"] = "whitney";
    j["n"] = n;
    j["d"] = d;
    j["terms"] = p.term_count();
    j["polynomial"] = polynomial_to_json(p);
    text = p.str();
  } else if (kind == "substitute") {
    const SubstituteResult r = substitute(d, m, a, b, Rational::from_string(c_str));
    j["kind"] = "substitute";
    j["d"] = d;
    j["m"] = m;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c_str;
    j["nonnegative"] = r.nonnegative;
    j["coefficient_sum"] = rational_to_json(r.polynomial.coefficient_sum());
    j["polynomial"] = polynomial_to_json(r.polynomial);
    text = r.polynomial.str() + (r.nonnegative ? "" : "   [has negative coefficients]");
  } else {
    throw CLI::ValidationError("--kind", "expected invariant, whitney, or substitute");
  }
  if (!poly_out.empty()) write_json_file(j.at("polynomial"), poly_out);
  if (emit(j, out)) std::cout << text << "\n";
  return 0;
}

int run_graph(const std::string& poly_path, const std::string& dot_path,
              const OutputOpts& out) {
  const Polynomial p = polynomial_from_file(poly_path);
  const NewtonGraph g = build_graph(p);
  const SinkCertificate cert = sink_certificate(p);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw JsonError("cannot open output file: " + dot_path);
    dot << graph_dot(g);
  }
  Json j = graph_to_json(g);
  j["sink_certificate"] = {{"sinks", cert.sinks},
                           {"terms", cert.terms},
                           {"holds", cert.holds}};
  if (emit(j, out)) {
    std::cout << "quotient: " << g.quotient.str() << "\n"
              << "sinks:";
    for (const LatticePoint& v : g.sinks)
      std::cout << " (" << v.first << "," << v.second << ")";
    std::cout << "\nsources:";
    for (const LatticePoint& v : g.sources)
      std::cout << " (" << v.first << "," << v.second << ")";
    std::cout << "\nsink certificate: " << cert.sinks << " sinks <= "
              << cert.terms << " terms: " << (cert.holds ? "holds" : "VIOLATED")
              << "\n";
  }
  return 0;
}

int run_verify(const std::string& poly_path, int n, const OutputOpts& out) {
  const Polynomial p = polynomial_from_file(poly_path);
  const Certificate cert = verify_sharp(p, n == 0 ? p.nvars() : n);
  if (emit(certificate_to_json(cert), out)) {
    for (const CheckResult& c : cert.checks)
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << ": "
                << c.detail << "\n";
    std::cout << "verdict: " << (cert.verdict ? "pass" : "fail") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sharpmap: exact rational searches, closed-form families, and "
      "combinatorial certificates for polynomials equal to 1 on the "
      "hyperplane x1+...+xn = 1"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  // system
  int sys_n = 2, sys_d = 1;
  std::string sys_kind = "homogenized";
  bool sys_const = false, sys_reduce = false;
  OutputOpts sys_out;
  CLI::App* sys_cmd = app.add_subcommand("system", "build a coefficient system");
  sys_cmd->add_option("--n", sys_n, "source variable count")->required()
      ->check(CLI::Range(2, 16));
  sys_cmd->add_option("--d", sys_d, "degree")->required()->check(CLI::PositiveNumber);
  sys_cmd->add_option("--kind", sys_kind, "homogenized | eliminated | symmetric");
  sys_cmd->add_flag("--include-constant", sys_const, "add the constant column");
  sys_cmd->add_flag("--reduce", sys_reduce, "pin the pure top powers and shrink");
  add_output_opts(sys_cmd, sys_out);

  // search
  int se_n = 2, se_d = 1;
  std::string se_kind = "homogenized";
  bool se_reduce = false, se_all = false, se_unconstrained = false;
  BudgetOpts se_budget;
  OutputOpts se_out;
  CLI::App* se_cmd = app.add_subcommand("search", "minimum-support search");
  se_cmd->add_option("--n", se_n, "source variable count")->required()
      ->check(CLI::Range(2, 16));
  se_cmd->add_option("--d", se_d, "degree")->required()->check(CLI::PositiveNumber);
  se_cmd->add_option("--kind", se_kind, "homogenized | eliminated | symmetric");
  se_cmd->add_flag("--reduce", se_reduce, "search the pinned/reduced system");
  se_cmd->add_flag("--all", se_all, "enumerate every minimal witness");
  se_cmd->add_flag("--unconstrained", se_unconstrained,
                   "drop the top-degree (degree-d) requirement");
  add_budget_opts(se_cmd, se_budget);
  add_output_opts(se_cmd, se_out);

  // uniqueness
  int un_d = 5;
  BudgetOpts un_budget;
  OutputOpts un_out;
  CLI::App* un_cmd = app.add_subcommand(
      "uniqueness", "enumerate all minimal-term degree-d solutions (odd d)");
  un_cmd->add_option("--d", un_d, "odd degree")->required()
      ->check(CLI::PositiveNumber);
  add_budget_opts(un_cmd, un_budget);
  add_output_opts(un_cmd, un_out);

  // symmetric
  int sy_d = 7;
  BudgetOpts sy_budget;
  OutputOpts sy_out;
  CLI::App* sy_cmd = app.add_subcommand(
      "symmetric", "minimum monomial count in the symmetric basis (odd d)");
  sy_cmd->add_option("--d", sy_d, "odd degree")->required()
      ->check(CLI::PositiveNumber);
  add_budget_opts(sy_cmd, sy_budget);
  add_output_opts(sy_cmd, sy_out);

  // l1min
  int l1_n = 2, l1_d = 1;
  std::string l1_basis = "symmetric";
  bool l1_const = false, l1_pin = false, l1_all = false;
  OutputOpts l1_out;
  CLI::App* l1_cmd = app.add_subcommand(
      "l1min", "minimize the weighted coefficient sum exactly");
  l1_cmd->add_option("--n", l1_n, "source variable count")->check(CLI::Range(2, 16));
  l1_cmd->add_option("--d", l1_d, "degree")->required()->check(CLI::PositiveNumber);
  l1_cmd->add_option("--basis", l1_basis, "homogenized | eliminated | symmetric");
  l1_cmd->add_flag("--include-constant", l1_const, "add the constant column");
  l1_cmd->add_flag("--pin-top", l1_pin, "fix the pure top-degree coefficients to 1");
  l1_cmd->add_flag("--all", l1_all, "enumerate all optimal vertices");
  add_output_opts(l1_cmd, l1_out);

  // family
  std::string fa_kind;
  int fa_n = 3, fa_d = 1, fa_m = 2, fa_a = 0, fa_b = 0;
  std::string fa_c = "1";
  OutputOpts fa_out;
  CLI::App* fa_cmd = app.add_subcommand("family", "closed-form generators");
  fa_cmd->add_option("--kind", fa_kind, "invariant | whitney | substitute")
      ->required();
  fa_cmd->add_option("--n", fa_n, "variables (whitney)")->check(CLI::Range(3, 16));
  fa_cmd->add_option("--d", fa_d, "degree")->required()->check(CLI::PositiveNumber);
  fa_cmd->add_option("--m", fa_m, "inner even degree (substitute)");
  fa_cmd->add_option("--a", fa_a, "x exponent of the multiplier (substitute)");
  fa_cmd->add_option("--b", fa_b, "y exponent of the multiplier (substitute)");
  fa_cmd->add_option("--c", fa_c, "substitution coefficient, fraction string");
  std::string fa_poly_out;
  fa_cmd->add_option("--poly-out", fa_poly_out,
                     "also write the bare polynomial JSON here");
  add_output_opts(fa_cmd, fa_out);

  // graph
  std::string gr_poly, gr_dot;
  OutputOpts gr_out;
  CLI::App* gr_cmd =
      app.add_subcommand("graph", "directed diagram of (p-1)/(x+y-1)");
  gr_cmd->add_option("--poly", gr_poly, "polynomial JSON file")->required();
  gr_cmd->add_option("--dot", gr_dot, "write a Graphviz file here");
  add_output_opts(gr_cmd, gr_out);

  // verify
  std::string ve_poly;
  int ve_n = 0;  // 0: take the polynomial's own variable count
  OutputOpts ve_out;
  CLI::App* ve_cmd = app.add_subcommand("verify", "sharpness certificate");
  ve_cmd->add_option("--poly", ve_poly, "polynomial JSON file")->required();
  ve_cmd->add_option("--n", ve_n,
                     "expected variable count (default: the polynomial's own)")
      ->check(CLI::Range(2, 16));
  add_output_opts(ve_cmd, ve_out);

  for (CLI::App* s :
       {sys_cmd, se_cmd, un_cmd, sy_cmd, l1_cmd, fa_cmd, gr_cmd, ve_cmd})
    s->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (sys_cmd->parsed())
      return run_system(sys_n, sys_d, sys_kind, sys_const, sys_reduce, sys_out);
    if (se_cmd->parsed())
      return run_search(se_n, se_d, se_kind, se_reduce, se_all,
                        se_unconstrained, se_budget, se_out);
    if (un_cmd->parsed()) return run_uniqueness(un_d, un_budget, un_out);
    if (sy_cmd->parsed()) return run_symmetric(sy_d, sy_budget, sy_out);
    if (l1_cmd->parsed())
      return run_l1min(l1_n, l1_d, l1_basis, l1_const, l1_pin, l1_all, l1_out);
    if (fa_cmd->parsed())
      return run_family(fa_kind, fa_n, fa_d, fa_m, fa_a, fa_b, fa_c,
                        fa_poly_out, fa_out);
    if (gr_cmd->parsed()) return run_graph(gr_poly, gr_dot, gr_out);
    if (ve_cmd->parsed()) return run_verify(ve_poly, ve_n, ve_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
