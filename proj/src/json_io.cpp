#include "sharpmap/json_io.hpp"

#include <fstream>

namespace sharpmap {

namespace {

const Json& require_field(const Json& j, const char* field,
                          const char* context) {
  if (!j.is_object())
    throw JsonError(std::string(context) + ": expected an object");
  auto it = j.find(field);
  if (it == j.end())
    throw JsonError(std::string(context) + ": missing field '" + field + "'");
  return *it;
}

}  // namespace

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string())
    throw JsonError("field '" + field +
                    "': expected a fraction string like \"3/2\"");
  try {
    return Rational::from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonError("field '" + field + "': " + e.what());
  }
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coef"] = rational_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["nvars"] = p.nvars();
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& nvars_j = require_field(j, "nvars", "polynomial");
  if (!nvars_j.is_number_integer() || nvars_j.get<long long>() < 1)
    throw JsonError("field 'nvars': expected a positive integer");
  const int nvars = nvars_j.get<int>();
  const Json& terms = require_field(j, "terms", "polynomial");
  if (!terms.is_array())
    throw JsonError("field 'terms': expected an array");
  Polynomial p(nvars);
  for (const Json& t : terms) {
    const Json& exp = require_field(t, "exp", "polynomial term");
    if (!exp.is_array() || static_cast<int>(exp.size()) != nvars)
      throw JsonError("field 'exp': expected an array of " +
                      std::to_string(nvars) + " exponents");
    Exponent e;
    for (const Json& x : exp) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw JsonError("field 'exp': exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    const Rational c =
        rational_from_json(require_field(t, "coef", "polynomial term"), "coef");
    if (c.is_zero()) continue;
    if (!p.coefficient(e).is_zero())
      throw JsonError("field 'terms': duplicate exponent " + monomial_str(e));
    p.add_term(e, c);
  }
  return p;
}

Polynomial polynomial_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open polynomial file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw JsonError("file '" + path + "' is not valid JSON: " + e.what());
  }
  return polynomial_from_json(j);
}

Json system_to_json(const LinearSystem& sys) {
  Json out;
  out["kind"] = kind_name(sys.kind);
  out["n"] = sys.n;
  out["d"] = sys.d;
  out["include_constant"] = sys.include_constant;
  out["columns"] = sys.columns;
  Json matrix = Json::array();
  for (const Vec& row : sys.matrix) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    matrix.push_back(std::move(r));
  }
  out["matrix"] = std::move(matrix);
  Json rhs = Json::array();
  for (const Rational& v : sys.rhs) rhs.push_back(rational_to_json(v));
  out["rhs"] = std::move(rhs);
  out["distinguished"] = sys.distinguished;
  Json pinned = Json::array();
  for (const auto& [e, v] : sys.pinned) {
    Json p;
    p["exp"] = e;
    p["coef"] = rational_to_json(v);
    pinned.push_back(std::move(p));
  }
  out["pinned"] = std::move(pinned);
  return out;
}

Json support_solution_to_json(const SupportSolution& s) {
  Json out;
  out["support"] = s.support;
  Json values = Json::object();
  for (const auto& [col, v] : s.values)
    values[std::to_string(col)] = rational_to_json(v);
  out["values"] = std::move(values);
  out["l0"] = s.l0;
  out["l1"] = rational_to_json(s.l1);
  out["polynomial"] = polynomial_to_json(s.polynomial);
  return out;
}

Json search_report_to_json(const SearchReport& r) {
  Json out;
  out["feasible"] = r.feasible;
  out["min_l0"] = r.min_l0;
  Json w = Json::array();
  for (const SupportSolution& s : r.witnesses)
    w.push_back(support_solution_to_json(s));
  out["witnesses"] = std::move(w);
  out["nodes_explored"] = r.nodes_explored;
  out["prunes_by_certificate"] = r.prunes_by_certificate;
  out["nonisolated_supports"] = r.nonisolated_supports;
  out["budget_exhausted"] = r.budget_exhausted;
  return out;
}

Json symmetric_report_to_json(const SymmetricReport& r) {
  Json out;
  out["feasible"] = r.feasible;
  out["min_terms"] = r.min_terms;
  Json w = Json::array();
  for (const SupportSolution& s : r.witnesses)
    w.push_back(support_solution_to_json(s));
  out["witnesses"] = std::move(w);
  out["nodes_explored"] = r.nodes_explored;
  out["prunes_by_certificate"] = r.prunes_by_certificate;
  out["budget_exhausted"] = r.budget_exhausted;
  return out;
}

Json lp_result_to_json(const LPResult& r) {
  Json out;
  out["status"] = lp_status_name(r.status);
  if (r.status == LPStatus::Optimal) {
    Json point = Json::array();
    for (const Rational& v : r.point) point.push_back(rational_to_json(v));
    out["point"] = std::move(point);
    out["value"] = rational_to_json(r.value);
  }
  return out;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["subject"] = polynomial_to_json(c.subject);
  Json checks = Json::array();
  for (const CheckResult& ch : c.checks) {
    Json j;
    j["name"] = ch.name;
    j["pass"] = ch.pass;
    j["detail"] = ch.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["verdict"] = c.verdict ? "pass" : "fail";
  return out;
}

namespace {

Json point_to_json(const LatticePoint& p) {
  return Json::array({p.first, p.second});
}

}  // namespace

Json graph_to_json(const NewtonGraph& g) {
  Json out;
  out["subject"] = polynomial_to_json(g.subject);
  out["quotient"] = polynomial_to_json(g.quotient);
  Json labels = Json::array();
  for (const auto& [v, l] : g.labels) {
    Json e;
    e["point"] = point_to_json(v);
    e["label"] = std::string(1, label_char(l));
    labels.push_back(std::move(e));
  }
  out["labels"] = std::move(labels);
  Json arrows = Json::array();
  for (const Arrow& a : g.arrows)
    arrows.push_back(Json::array({point_to_json(a.first), point_to_json(a.second)}));
  out["arrows"] = std::move(arrows);
  Json sinks = Json::array();
  for (const LatticePoint& v : g.sinks) sinks.push_back(point_to_json(v));
  out["sinks"] = std::move(sinks);
  Json sources = Json::array();
  for (const LatticePoint& v : g.sources) sources.push_back(point_to_json(v));
  out["sources"] = std::move(sources);
  return out;
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw JsonError("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace sharpmap
