#include "sharpmap/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "sharpmap/families.hpp"
#include "sharpmap/newton.hpp"
#include "sharpmap/search.hpp"

namespace sharpmap {

namespace {

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

Certificate verify_sharp(const Polynomial& p, int n) {
  Certificate cert;
  cert.subject = p;
  auto add = [&](std::string name, bool pass, std::string detail) {
    cert.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  if (n < 2 || p.nvars() != n) {
    std::ostringstream os;
    os << "polynomial has " << p.nvars() << " variables, expected n = " << n
       << " >= 2";
    add("variable_count", false, os.str());
    cert.verdict = false;
    return cert;
  }

  const AffineDivision div = divide_by_affine(p);
  const bool on_hyperplane =
      div.remainder_constant && div.remainder == Rational(1);
  {
    std::ostringstream os;
    if (div.remainder_constant)
      os << "remainder on s(x)=1 is " << rational_str(div.remainder);
    else
      os << "remainder is not constant: " << div.remainder_poly.str();
    add("hyperplane_identity", on_hyperplane, os.str());
  }

  {
    bool pass = p.is_nonnegative() && !p.is_zero();
    std::string detail = "all coefficients strictly positive";
    if (p.is_zero()) {
      detail = "zero polynomial";
    } else if (!pass) {
      for (const auto& [e, c] : p.terms())
        if (c.sign() <= 0) {
          detail = "coefficient " + rational_str(c) + " at " +
                   monomial_str(e) + " is not positive";
          break;
        }
    }
    add("nonnegative_coefficients", pass, detail);
  }

  const int d = p.degree();
  const int N = p.term_count();
  {
    std::ostringstream os;
    os << "degree = " << d;
    add("stated_degree", d >= 1, os.str());
  }

  int bound = -1;
  if (d >= 1) bound = sharp_bound(n, d);
  {
    std::ostringstream os;
    if (d >= 1)
      os << "terms = " << N << ", predicted minimum = " << bound;
    else
      os << "degree undefined";
    add("term_count_sharp", d >= 1 && N == bound, os.str());
  }

  {
    std::ostringstream os;
    bool pass = false;
    if (d < 1) {
      os << "degree undefined";
    } else if (n == 2) {
      pass = d <= 2 * N - 3;
      os << "d = " << d << " vs 2N-3 = " << 2 * N - 3;
    } else {
      pass = N >= d * (n - 1) + 1;
      os << "N = " << N << " vs d(n-1)+1 = " << d * (n - 1) + 1;
    }
    add("degree_bound", pass, os.str());
  }

  if (n == 2 && d >= 1 && d % 2 == 1 && N == bound) {
    const Rational cx = p.coefficient({d, 0});
    const Rational cy = p.coefficient({0, d});
    std::ostringstream os;
    os << "coefficient of x^" << d << " is " << rational_str(cx)
       << ", of y^" << d << " is " << rational_str(cy);
    add("top_term_form", cx == Rational(1) && cy == Rational(1), os.str());
  } else {
    add("top_term_form", true, "not applicable");
  }

  if (n == 2 && on_hyperplane) {
    const SinkCertificate sc = sink_certificate(p);
    std::ostringstream os;
    os << "sinks = " << sc.sinks << ", terms = " << sc.terms;
    add("sink_certificate", sc.holds, os.str());
  } else {
    add("sink_certificate", true, "not applicable");
  }

  cert.verdict = true;
  for (const CheckResult& c : cert.checks) cert.verdict = cert.verdict && c.pass;
  return cert;
}

bool gap_admissible(int n, int N) {
  if (n < 1 || N < 1)
    throw std::invalid_argument("gap_admissible: need n >= 1 and N >= 1");
  if (1 < N && N < n) return false;
  if (n < N && N < 2 * n - 2) return false;
  return true;
}

int census_threshold(int n) {
  if (n < 2) throw std::invalid_argument("census_threshold: need n >= 2");
  return n * n - 2 * n + 2;
}

std::map<int, std::optional<Polynomial>> target_minimal_census(int n,
                                                               int max_N) {
  if (n < 2) throw std::invalid_argument("target_minimal_census: need n >= 2");
  if (max_N < 1)
    throw std::invalid_argument("target_minimal_census: need max_N >= 1");
  std::map<int, std::optional<Polynomial>> out;
  for (int N = 1; N <= max_N; ++N) {
    out[N] = std::nullopt;
    // N = n + j(n-1) + k*n with j,k >= 0, smallest k
    for (int k = 0; n + k * n <= N; ++k) {
      const int rem = N - n - k * n;
      if (rem % (n - 1) != 0) continue;
      const int j = rem / (n - 1);
      Polynomial p = Polynomial::coordinate_sum(n);
      for (int t = 0; t < j; ++t) p = tensor_op(p, TensorKind::W);
      for (int t = 0; t < k; ++t) p = tensor_op(p, TensorKind::V);
      if (p.term_count() != N)
        throw std::logic_error("target_minimal_census: term count drifted");
      out[N] = std::move(p);
      break;
    }
  }
  return out;
}

}  // namespace sharpmap
