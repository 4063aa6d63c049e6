#include "sharpmap/system.hpp"

#include <stdexcept>

namespace sharpmap {

std::string kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::Homogenized: return "homogenized";
    case SystemKind::Eliminated: return "eliminated";
    case SystemKind::Symmetric: return "symmetric";
  }
  throw std::logic_error("kind_name: unknown kind");
}

SystemKind kind_from_name(const std::string& name) {
  if (name == "homogenized") return SystemKind::Homogenized;
  if (name == "eliminated") return SystemKind::Eliminated;
  if (name == "symmetric") return SystemKind::Symmetric;
  throw std::invalid_argument("unknown system kind \"" + name + "\"");
}

int LinearSystem::column_degree(int j) const {
  const Exponent& c = columns.at(j);
  if (kind == SystemKind::Symmetric) return 2 * c[0] + c[1];
  return degree_of(c);
}

Rational LinearSystem::column_weight(int j) const {
  if (kind == SystemKind::Symmetric && columns.at(j)[1] != 0) return Rational(2);
  return Rational(1);
}

Polynomial LinearSystem::column_polynomial(int j) const {
  const Exponent& c = columns.at(j);
  if (kind != SystemKind::Symmetric) return Polynomial::monomial(c, 1);
  const int a = c[0], b = c[1];
  Polynomial p(2);
  if (b == 0) {
    p.add_term({a, a}, 1);
  } else {
    p.add_term({a + b, a}, 1);
    p.add_term({a, a + b}, 1);
  }
  return p;
}

Polynomial LinearSystem::reassemble(const Vec& u) const {
  if (static_cast<int>(u.size()) != cols())
    throw std::invalid_argument("reassemble: solution length != column count");
  Polynomial p(n);
  for (int j = 0; j < cols(); ++j) {
    if (u[j].is_zero()) continue;
    p += column_polynomial(j).scaled(u[j]);
  }
  for (const auto& [e, c] : pinned) p.add_term(e, c);
  return p;
}

bool LinearSystem::satisfies(const Vec& u) const {
  if (static_cast<int>(u.size()) != cols()) return false;
  for (int i = 0; i < rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < cols(); ++j) {
      if (!u[j].is_zero()) acc += matrix[i][j] * u[j];
    }
    if (acc != rhs[i]) return false;
  }
  return true;
}

namespace {

// coefficient of x^beta in x^alpha * s(x)^(d - |alpha|)
Rational homogenized_entry(const Exponent& beta, const Exponent& alpha, int d) {
  const int k = d - degree_of(alpha);
  Exponent gamma(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    gamma[i] = beta[i] - alpha[i];
    if (gamma[i] < 0) return Rational(0);
  }
  // |gamma| = d - |alpha| automatically since |beta| = d
  return Rational(multinomial_mpz(static_cast<unsigned long>(k), gamma));
}

}  // namespace

LinearSystem build_homogenized(int n, int d, bool include_constant) {
  if (n < 2 || d < 1)
    throw std::invalid_argument("build_homogenized: need n >= 2 and d >= 1");
  LinearSystem sys;
  sys.kind = SystemKind::Homogenized;
  sys.n = n;
  sys.d = d;
  sys.include_constant = include_constant;
  sys.columns = exponents_in_range(n, include_constant ? 0 : 1, d);

  const std::vector<Exponent> rows = exponents_of_degree(n, d);
  sys.matrix.reserve(rows.size());
  sys.rhs.reserve(rows.size());
  for (const Exponent& beta : rows) {
    Vec row;
    row.reserve(sys.columns.size());
    for (const Exponent& alpha : sys.columns)
      row.push_back(homogenized_entry(beta, alpha, d));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(Rational(multinomial_mpz(static_cast<unsigned long>(d), beta)));
  }
  for (int j = 0; j < sys.cols(); ++j)
    if (degree_of(sys.columns[j]) == d) sys.distinguished.push_back(j);
  return sys;
}

LinearSystem build_eliminated(int n, int d) {
  if (n < 2 || d < 1)
    throw std::invalid_argument("build_eliminated: need n >= 2 and d >= 1");
  LinearSystem sys;
  sys.kind = SystemKind::Eliminated;
  sys.n = n;
  sys.d = d;
  sys.columns = exponents_in_range(n, 1, d);

  const int m = n - 1;
  const std::vector<Exponent> rows = exponents_in_range(m, 0, d);
  sys.matrix.reserve(rows.size());
  for (const Exponent& mu : rows) {
    Vec row;
    row.reserve(sys.columns.size());
    for (const Exponent& alpha : sys.columns) {
      // coefficient of t^mu in t^alpha' * (1 - sum t)^alpha_n
      Exponent gamma(m);
      bool ok = true;
      for (int i = 0; i < m; ++i) {
        gamma[i] = mu[i] - alpha[i];
        if (gamma[i] < 0) {
          ok = false;
          break;
        }
      }
      const int an = alpha[m];
      const int k = ok ? degree_of(gamma) : 0;
      if (!ok || k > an) {
        row.push_back(Rational(0));
        continue;
      }
      mpz_class mag = binomial_mpz(static_cast<unsigned long>(an),
                                   static_cast<unsigned long>(k)) *
                      multinomial_mpz(static_cast<unsigned long>(k), gamma);
      row.push_back(k % 2 == 0 ? Rational(mag) : -Rational(mag));
    }
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(Rational(degree_of(mu) == 0 ? 1 : 0));
  }
  for (int j = 0; j < sys.cols(); ++j)
    if (degree_of(sys.columns[j]) == d) sys.distinguished.push_back(j);
  return sys;
}

LinearSystem build_symmetric(int d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("build_symmetric: d must be odd and >= 1");
  LinearSystem sys;
  sys.kind = SystemKind::Symmetric;
  sys.n = 2;
  sys.d = d;
  // (a,b) pairs ordered by content degree 2a+b, then ascending a
  for (int deg = 1; deg <= d; ++deg)
    for (int a = 0; 2 * a <= deg; ++a) sys.columns.push_back({a, deg - 2 * a});

  const std::vector<Exponent> rows = exponents_of_degree(2, d);
  Mat cols_homog;  // per column: its homogenized coefficient vector
  cols_homog.reserve(sys.columns.size());
  for (int j = 0; j < sys.cols(); ++j) {
    const Polynomial h = sys.column_polynomial(j).homogenize(d);
    Vec col;
    col.reserve(rows.size());
    for (const Exponent& beta : rows) col.push_back(h.coefficient(beta));
    cols_homog.push_back(std::move(col));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec row;
    row.reserve(sys.columns.size());
    for (int j = 0; j < sys.cols(); ++j) row.push_back(cols_homog[j][i]);
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(
        Rational(multinomial_mpz(static_cast<unsigned long>(d), rows[i])));
  }
  for (int j = 0; j < sys.cols(); ++j)
    if (sys.column_degree(j) == d) sys.distinguished.push_back(j);
  return sys;
}

LinearSystem reduce_support(const LinearSystem& sys) {
  if (sys.kind != SystemKind::Homogenized)
    throw std::invalid_argument("reduce_support: requires the homogenized kind");
  if (sys.n != 2) throw std::invalid_argument("reduce_support: requires n = 2");
  if (sys.d % 2 == 0) throw std::invalid_argument("reduce_support: requires odd d");
  if (sys.include_constant)
    throw std::invalid_argument("reduce_support: constant column not supported");
  const int d = sys.d;

  LinearSystem red;
  red.kind = SystemKind::Homogenized;
  red.n = 2;
  red.d = d;
  red.pinned = {{Exponent{d, 0}, Rational(1)}, {Exponent{0, d}, Rational(1)}};
  // mixed monomials of degree <= d-1 in grlex order
  for (const Exponent& e : exponents_in_range(2, 2, d - 1))
    if (e[0] >= 1 && e[1] >= 1) red.columns.push_back(e);

  // mixed top-degree rows only; the two pure rows are met by the pins alone
  for (const Exponent& beta : exponents_of_degree(2, d)) {
    if (beta[0] == 0 || beta[1] == 0) continue;
    Vec row;
    row.reserve(red.columns.size());
    for (const Exponent& alpha : red.columns)
      row.push_back(homogenized_entry(beta, alpha, d));
    red.matrix.push_back(std::move(row));
    // pins x^d, y^d touch no mixed row, so the rhs keeps the binomial value
    red.rhs.push_back(Rational(multinomial_mpz(static_cast<unsigned long>(d), beta)));
  }
  return red;
}

}  // namespace sharpmap
