#include "sharpmap/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharpmap {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::coordinate_sum(int nvars) {
  Polynomial p(nvars);
  for (int i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grlex orders by total degree first, so the last term has maximal degree
  return degree_of(terms_.rbegin()->first);
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("Polynomial::add_term: exponent length != nvars");
  for (int ei : e)
    if (ei < 0) throw std::invalid_argument("Polynomial::add_term: negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient_sum() const {
  Rational s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Polynomial::is_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c.sign() <= 0) return false;
  return true;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Polynomial::eval: point dimension != nvars");
  // lazily grown power table per variable
  std::vector<std::vector<Rational>> pows(nvars_, {Rational(1)});
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      auto& pv = pows[i];
      while (static_cast<int>(pv.size()) <= e[i]) pv.push_back(pv.back() * point[i]);
      if (e[i] > 0) t *= pv[e[i]];
    }
    total += t;
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Polynomial: mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Polynomial: mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("Polynomial: mixed variable counts");
  Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return grlex_less(ia->first, ib->first) ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

Polynomial Polynomial::homogenize(int d) const {
  Polynomial s = coordinate_sum(nvars_);
  std::vector<Polynomial> spow{constant(nvars_, 1)};
  Polynomial out(nvars_);
  Exponent ne(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = d - degree_of(e);
    if (k < 0)
      throw std::invalid_argument("homogenize: term degree exceeds target degree");
    while (static_cast<int>(spow.size()) <= k) spow.push_back(spow.back() * s);
    for (const auto& [se, sc] : spow[k].terms()) {
      for (int i = 0; i < nvars_; ++i) ne[i] = e[i] + se[i];
      out.add_term(ne, c * sc);
    }
  }
  return out;
}

Polynomial Polynomial::substitute_last() const {
  if (nvars_ == 0)
    throw std::logic_error("substitute_last: polynomial has no variables");
  const int m = nvars_ - 1;
  Polynomial u = constant(m, 1);
  u -= coordinate_sum(m);  // u = 1 - (x1 + ... + x_{n-1})
  std::vector<Polynomial> upow{constant(m, 1)};
  Polynomial out(m);
  Exponent ne(m);
  for (const auto& [e, c] : terms_) {
    const int k = e[m];
    while (static_cast<int>(upow.size()) <= k) upow.push_back(upow.back() * u);
    for (const auto& [ue, uc] : upow[k].terms()) {
      for (int i = 0; i < m; ++i) ne[i] = e[i] + ue[i];
      out.add_term(ne, c * uc);
    }
  }
  return out;
}

Polynomial Polynomial::embedded(int new_nvars) const {
  if (new_nvars < nvars_)
    throw std::invalid_argument("embedded: cannot shrink variable count");
  Polynomial out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(e);
    ne.resize(new_nvars, 0);
    out.add_term(ne, c);
  }
  return out;
}

Polynomial Polynomial::swapped_xy() const {
  if (nvars_ != 2)
    throw std::invalid_argument("swapped_xy: requires exactly two variables");
  Polynomial out(2);
  for (const auto& [e, c] : terms_) out.add_term({e[1], e[0]}, c);
  return out;
}

Polynomial Polynomial::symmetrized() const {
  return (*this + swapped_xy()).scaled(Rational(1, 2));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // display order: leading-variable-major, lexicographic descending
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string s;
  bool first = true;
  for (const auto& [e, c] : ts) {
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    const std::string mono = monomial_str(e);
    if (mono == "1") {
      s += a.str();
    } else if (a == Rational(1)) {
      s += mono;
    } else {
      s += a.str() + mono;
    }
  }
  return s;
}

AffineDivision divide_by_affine(const Polynomial& p) {
  const int n = p.nvars();
  if (n == 0) throw std::invalid_argument("divide_by_affine: needs >= 1 variable");
  const int m = n - 1;

  AffineDivision out;
  Polynomial reduced = p.substitute_last();
  out.remainder_poly = reduced.embedded(n);
  out.remainder_constant = reduced.degree() <= 0;
  out.remainder = reduced.coefficient(Exponent(m, 0));

  // diff vanishes under xn <- u, so it is exactly divisible by (xn - u),
  // where u = 1 - (x1 + ... + x_{n-1}); note s - 1 = xn - u.
  Polynomial diff = p - out.remainder_poly;
  out.quotient = Polynomial(n);
  if (diff.is_zero()) return out;

  // slice diff by the xn-exponent; a nonzero diff must involve xn, since a
  // xn-free polynomial is fixed by the substitution
  int K = 0;
  for (const auto& [e, c] : diff.terms()) K = std::max(K, e[m]);
  if (K == 0)
    throw std::logic_error("divide_by_affine: residue free of the last variable");
  std::vector<Polynomial> D(K + 1, Polynomial(m));
  for (const auto& [e, c] : diff.terms())
    D[e[m]].add_term(Exponent(e.begin(), e.begin() + m), c);

  Polynomial u = Polynomial::constant(m, 1);
  u -= Polynomial::coordinate_sum(m);

  // synthetic division: D_K = Q_{K-1}; D_k = Q_{k-1} - u Q_k; D_0 = -u Q_0
  std::vector<Polynomial> Q(std::max(K, 1), Polynomial(m));
  Q[K - 1] = D[K];
  for (int k = K - 1; k >= 1; --k) Q[k - 1] = D[k] + u * Q[k];
  if (!(D[0] + u * Q[0]).is_zero())
    throw std::logic_error("divide_by_affine: division left a nonzero residue");

  for (int k = 0; k < K; ++k) {
    for (const auto& [e, c] : Q[k].terms()) {
      Exponent ne(e);
      ne.push_back(k);
      out.quotient.add_term(ne, c);
    }
  }
  return out;
}

}  // namespace sharpmap
