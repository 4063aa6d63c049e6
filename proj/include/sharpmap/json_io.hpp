#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sharpmap/certify.hpp"
#include "sharpmap/lp.hpp"
#include "sharpmap/newton.hpp"
#include "sharpmap/search.hpp"
#include "sharpmap/system.hpp"

namespace sharpmap {

// Insertion-ordered JSON: combined with grlex term order this makes every
// emission byte-deterministic.
using Json = nlohmann::ordered_json;

// Raised on malformed input documents; the message names the offending field.
class JsonError : public std::runtime_error {
 public:
  explicit JsonError(const std::string& what) : std::runtime_error(what) {}
};

Json rational_to_json(const Rational& r);            // fraction string
Rational rational_from_json(const Json& j, const std::string& field);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Polynomial polynomial_from_file(const std::string& path);

Json system_to_json(const LinearSystem& sys);
Json support_solution_to_json(const SupportSolution& s);
Json search_report_to_json(const SearchReport& r);
Json symmetric_report_to_json(const SymmetricReport& r);
Json lp_result_to_json(const LPResult& r);
Json certificate_to_json(const Certificate& c);
Json graph_to_json(const NewtonGraph& g);

void write_json_file(const Json& j, const std::string& path);

}  // namespace sharpmap
