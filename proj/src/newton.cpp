#include "sharpmap/newton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "sharpmap/search.hpp"  // BudgetExceeded

namespace sharpmap {

char label_char(PointLabel l) {
  switch (l) {
    case PointLabel::Positive: return 'P';
    case PointLabel::Negative: return 'N';
    case PointLabel::Zero: return 'Z';
  }
  throw std::logic_error("label_char: unknown label");
}

namespace {

void require_unit_on_line(const Polynomial& p, const char* who) {
  if (p.nvars() != 2)
    throw std::invalid_argument(std::string(who) + ": polynomial must have 2 variables");
  const AffineDivision div = divide_by_affine(p);
  if (!div.remainder_constant || div.remainder != Rational(1))
    throw std::invalid_argument(std::string(who) +
                                ": polynomial is not identically 1 on the line");
}

}  // namespace

NewtonGraph build_graph(const Polynomial& p) {
  require_unit_on_line(p, "build_graph");
  NewtonGraph g;
  g.subject = p;
  g.quotient = divide_by_affine(p).quotient;

  for (const auto& [e, c] : g.quotient.terms()) {
    const LatticePoint at{e[0], e[1]};
    const LatticePoint right{e[0] + 1, e[1]};
    const LatticePoint up{e[0], e[1] + 1};
    if (c.sign() > 0) {
      g.arrows.insert({at, right});
      g.arrows.insert({at, up});
    } else {
      g.arrows.insert({right, at});
      g.arrows.insert({up, at});
    }
  }

  std::map<LatticePoint, int> indeg, outdeg;
  for (const Arrow& a : g.arrows) {
    g.domain.insert(a.first);
    g.domain.insert(a.second);
    ++outdeg[a.first];
    ++indeg[a.second];
  }
  for (const LatticePoint& v : g.domain) {
    const Rational c = g.quotient.coefficient({v.first, v.second});
    g.labels[v] = c.is_zero() ? PointLabel::Zero
                              : (c.sign() > 0 ? PointLabel::Positive
                                              : PointLabel::Negative);
    const bool in = indeg.count(v) > 0;
    const bool out = outdeg.count(v) > 0;
    if (in && !out) g.sinks.insert(v);
    if (out && !in) g.sources.insert(v);
  }
  return g;
}

SinkCertificate sink_certificate(const Polynomial& p) {
  const NewtonGraph g = build_graph(p);
  SinkCertificate c;
  c.sinks = static_cast<int>(g.sinks.size());
  c.terms = p.term_count();
  c.holds = c.terms >= c.sinks;
  return c;
}

std::string graph_dot(const NewtonGraph& g) {
  std::ostringstream out;
  out << "digraph newton {\n";
  for (const auto& [v, label] : g.labels) {
    out << "  \"" << v.first << "," << v.second << "\" [label=\"("
        << v.first << "," << v.second << ") " << label_char(label) << "\"";
    if (g.sinks.count(v)) out << " shape=doublecircle";
    else if (g.sources.count(v)) out << " shape=box";
    out << "];\n";
  }
  for (const Arrow& a : g.arrows)
    out << "  \"" << a.first.first << "," << a.first.second << "\" -> \""
        << a.second.first << "," << a.second.second << "\";\n";
  out << "}\n";
  return out.str();
}

namespace {

struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return Polynomial::compare(a, b) < 0;
  }
};

}  // namespace

std::vector<Polynomial> dehomogenize_trace(const Polynomial& start,
                                           const Polynomial& target,
                                           long long max_states) {
  require_unit_on_line(start, "dehomogenize_trace(start)");
  require_unit_on_line(target, "dehomogenize_trace(target)");
  const int d = start.degree();
  if (target.degree() > d)
    throw std::invalid_argument(
        "dehomogenize_trace: target degree exceeds the start degree");
  if (start == target) return {};

  std::map<Polynomial, Polynomial, PolyLess> parent;  // state -> predecessor
  std::deque<Polynomial> queue;
  parent.emplace(start, Polynomial(2));
  queue.push_back(start);
  long long expanded = 0;

  auto visit = [&](const Polynomial& from, Polynomial&& next) {
    if (parent.emplace(next, from).second) queue.push_back(std::move(next));
  };

  while (!queue.empty()) {
    const Polynomial state = queue.front();
    queue.pop_front();
    if (++expanded > max_states)
      throw BudgetExceeded("dehomogenize_trace: state budget exhausted before a walk was found");

    std::vector<Polynomial> nexts;
    for (const auto& [e, c] : state.terms()) {
      // merge with the up-neighbor: this term is x^{a+1} y^b
      if (e[0] >= 1) {
        const Exponent upper = {e[0] - 1, e[1] + 1};
        const Rational c2 = state.coefficient(upper);
        if (c.sign() > 0 && c2.sign() > 0) {
          const Rational m = c < c2 ? c : c2;
          Polynomial next = state;
          next.add_term(e, -m);
          next.add_term(upper, -m);
          next.add_term({e[0] - 1, e[1]}, m);
          nexts.push_back(std::move(next));
        }
      }
      // split below the top degree
      if (c.sign() > 0 && degree_of(e) < d) {
        Polynomial next = state;
        next.add_term(e, -c);
        next.add_term({e[0] + 1, e[1]}, c);
        next.add_term({e[0], e[1] + 1}, c);
        nexts.push_back(std::move(next));
      }
    }
    for (Polynomial& n : nexts) {
      if (n == target) {
        std::vector<Polynomial> path{target};
        Polynomial at = state;
        while (!(at == start)) {
          path.push_back(at);
          at = parent.at(at);
        }
        path.push_back(start);
        std::reverse(path.begin(), path.end());
        return path;
      }
      visit(state, std::move(n));
    }
  }
  throw BudgetExceeded("dehomogenize_trace: no walk exists within the explored space");
}

}  // namespace sharpmap
