#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sharpmap/certify.hpp"
#include "sharpmap/families.hpp"
#include "sharpmap/json_io.hpp"
#include "sharpmap/lp.hpp"
#include "sharpmap/newton.hpp"
#include "sharpmap/search.hpp"
#include "sharpmap/system.hpp"

using namespace sharpmap;

TEST_CASE("rational values serialize as fraction strings, never decimals") {
  CHECK(rational_to_json(Rational(573, 28)) == Json("573/28"));
  CHECK(rational_to_json(Rational(-5)) == Json("-5"));
  CHECK(rational_from_json(Json("7/3"), "v") == Rational(7, 3));
  CHECK(rational_from_json(Json(4), "v") == Rational(4));
  CHECK_THROWS_AS(rational_from_json(Json("0.5"), "v"), JsonError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "v"), JsonError);
  CHECK_THROWS_AS(rational_from_json(Json::object(), "v"), JsonError);
}

TEST_CASE("polynomial round trip preserves everything") {
  const Polynomial p = invariant_poly(7);
  const Json j = polynomial_to_json(p);
  CHECK(j.at("nvars") == 2);
  CHECK(j.at("terms").is_array());
  const Polynomial back = polynomial_from_json(j);
  CHECK(back == p);
  // coefficients appear as exact strings
  bool saw_fraction = false;
  const Json j17 = polynomial_to_json([] {
    Polynomial q(2);
    q.add_term({5, 1}, Rational(7, 2));
    return q;
  }());
  for (const auto& t : j17.at("terms"))
    saw_fraction = saw_fraction || t.at("coef") == Json("7/2");
  CHECK(saw_fraction);
}

TEST_CASE("malformed polynomial JSON names the offending field") {
  auto parse = [](const char* text) {
    return polynomial_from_json(Json::parse(text));
  };
  CHECK_THROWS_WITH_AS(parse(R"({"terms": []})"),
                       doctest::Contains("nvars"), JsonError);
  CHECK_THROWS_WITH_AS(parse(R"({"nvars": 2})"),
                       doctest::Contains("terms"), JsonError);
  CHECK_THROWS_WITH_AS(parse(R"({"nvars": 2, "terms": [{"coef": "1"}]})"),
                       doctest::Contains("exp"), JsonError);
  CHECK_THROWS_WITH_AS(parse(R"({"nvars": 2, "terms": [{"exp": [1, 0]}]})"),
                       doctest::Contains("coef"), JsonError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"nvars": 2, "terms": [{"exp": [1], "coef": "1"}]})"),
      doctest::Contains("exp"), JsonError);
  CHECK_THROWS_WITH_AS(
      parse(
          R"({"nvars": 2, "terms": [{"exp": [1, 0], "coef": "1"},
                                    {"exp": [1, 0], "coef": "2"}]})"),
      doctest::Contains("duplicate"), JsonError);
  CHECK_THROWS_AS(parse(R"({"nvars": -1, "terms": []})"), JsonError);
}

TEST_CASE("zero coefficients are dropped on read") {
  const Polynomial p = polynomial_from_json(Json::parse(
      R"({"nvars": 2, "terms": [{"exp": [1, 0], "coef": "1"},
                                {"exp": [0, 1], "coef": "0"}]})"));
  CHECK(p.term_count() == 1);
}

TEST_CASE("system serialization carries the exact matrix") {
  const Json j = system_to_json(build_homogenized(2, 2));
  CHECK(j.at("kind") == "homogenized");
  CHECK(j.at("n") == 2);
  CHECK(j.at("d") == 2);
  CHECK(j.at("matrix").size() == 3);
  CHECK(j.at("matrix")[0] == Json::array({"1", "0", "1", "0", "0"}));
  CHECK(j.at("rhs") == Json::array({"1", "2", "1"}));
  CHECK(j.at("columns").size() == 5);
  CHECK(j.at("distinguished") == Json::array({2, 3, 4}));
}

TEST_CASE("search report serialization") {
  const SearchReport rep = min_l0(build_homogenized(2, 2), true, true);
  const Json j = search_report_to_json(rep);
  CHECK(j.at("feasible") == true);
  CHECK(j.at("min_l0") == 3);
  CHECK(j.at("witnesses").size() == 3);
  const Json& w = j.at("witnesses")[0];
  CHECK(w.at("support").is_array());
  CHECK(w.at("values").is_object());
  CHECK(w.at("l1").is_string());
  CHECK(w.at("polynomial").at("nvars") == 2);
  CHECK(j.at("nodes_explored").is_number());
}

TEST_CASE("lp result serialization omits the point unless optimal") {
  const LinearSystem sys = build_homogenized(2, 2);
  LPProblem prob;
  prob.system = &sys;
  prob.objective = Vec(sys.cols(), Rational(1));
  const Json j = lp_result_to_json(lp_minimize(prob));
  CHECK(j.at("status") == "optimal");
  CHECK(j.at("value") == "2");
  CHECK(j.at("point").is_array());

  LinearSystem bad = sys;
  bad.rhs[0] = Rational(-1);
  bad.rhs[1] = Rational(0);
  bad.rhs[2] = Rational(0);
  const Json k = lp_result_to_json(lp_feasible(bad));
  CHECK(k.at("status") == "infeasible");
  CHECK_FALSE(k.contains("point"));
  CHECK_FALSE(k.contains("value"));
}

TEST_CASE("certificate and graph serialization") {
  const Json cj = certificate_to_json(verify_sharp(invariant_poly(5), 2));
  CHECK(cj.at("verdict") == "pass");
  CHECK(cj.at("checks").is_array());
  for (const auto& c : cj.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("detail"));
  }

  const Json gj = graph_to_json(build_graph(invariant_poly(5)));
  CHECK(gj.at("sinks").size() == 4);
  CHECK(gj.at("labels").is_array());
  CHECK(gj.at("arrows").is_array());
  CHECK(gj.at("quotient").at("nvars") == 2);
}

TEST_CASE("file round trip and missing-file error") {
  const std::string path = "json_io_roundtrip_tmp.json";
  const Polynomial p = invariant_poly(9);
  write_json_file(polynomial_to_json(p), path);
  CHECK(polynomial_from_file(path) == p);
  std::remove(path.c_str());
  CHECK_THROWS_AS(polynomial_from_file("does_not_exist_anywhere.json"),
                  JsonError);
  // trailing newline so the files play nicely with text tools
  write_json_file(Json::object(), path);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(!content.empty());
  CHECK(content.back() == '\n');
  std::remove(path.c_str());
}

TEST_CASE("malformed file content raises JsonError with context") {
  const std::string path = "json_io_bad_tmp.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(polynomial_from_file(path), JsonError);
  std::remove(path.c_str());
}
