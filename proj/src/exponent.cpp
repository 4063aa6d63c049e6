#include "sharpmap/exponent.hpp"

#include <algorithm>

namespace sharpmap {

namespace {

void fill_degree(int nvars, int pos, int remaining, Exponent& cur,
                 std::vector<Exponent>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  // Descending first exponent yields grlex order within the degree block.
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    fill_degree(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Exponent> exponents_of_degree(int nvars, int d) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Exponent cur(nvars, 0);
  fill_degree(nvars, 0, d, cur, out);
  return out;
}

std::vector<Exponent> exponents_in_range(int nvars, int lo, int hi) {
  std::vector<Exponent> out;
  for (int d = lo; d <= hi; ++d) {
    auto block = exponents_of_degree(nvars, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::string monomial_str(const Exponent& e) {
  static const char* short_names[] = {"x", "y", "z"};
  const int n = static_cast<int>(e.size());
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (n <= 3) {
      s += short_names[i];
    } else {
      s += "x" + std::to_string(i + 1);
    }
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  if (s.empty()) s = "1";
  return s;
}

}  // namespace sharpmap
