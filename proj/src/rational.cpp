#include "sharpmap/rational.hpp"

#include <ostream>

namespace sharpmap {

Rational Rational::from_string(const std::string& s) {
  const auto bad = [&](const char* why) {
    return std::invalid_argument("Rational: cannot parse \"" + s + "\": " + why);
  };
  if (s.empty()) throw bad("empty string");
  const auto slash = s.find('/');
  const auto check_int = [&](const std::string& part) {
    if (part.empty()) throw bad("empty integer part");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad("sign without digits");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad("not an integer/fraction");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  const mpz_class d(den);
  if (d == 0) throw bad("zero denominator");
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned long e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  mpq_class r(n);
  r /= mpq_class(d);
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class binomial_mpz(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class multinomial_mpz(unsigned long n, const std::vector<int>& e) {
  unsigned long left = n;
  mpz_class r = 1;
  unsigned long total = 0;
  for (int ei : e) {
    if (ei < 0) throw std::invalid_argument("multinomial: negative entry");
    total += static_cast<unsigned long>(ei);
  }
  if (total != n) throw std::invalid_argument("multinomial: entries do not sum to n");
  for (int ei : e) {
    r *= binomial_mpz(left, static_cast<unsigned long>(ei));
    left -= static_cast<unsigned long>(ei);
  }
  return r;
}

std::uint64_t binomial_u64(unsigned long n, unsigned long k) {
  const mpz_class b = binomial_mpz(n, k);
  if (!b.fits_ulong_p())
    throw std::overflow_error("binomial_u64: value exceeds 64 bits");
  return static_cast<std::uint64_t>(b.get_ui());
}

}  // namespace sharpmap
