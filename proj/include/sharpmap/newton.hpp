#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap {

using LatticePoint = std::pair<int, int>;
using Arrow = std::pair<LatticePoint, LatticePoint>;

enum class PointLabel { Positive, Negative, Zero };
char label_char(PointLabel l);  // 'P', 'N', 'Z'

// Directed diagram of the quotient q = (p - 1)/(x + y - 1).  Each lattice
// edge {(a,b),(a+1,b)} or {(a,b),(a,b+1)} is governed by its lower point:
// a P point (positive q coefficient) sends the edge outward, an N point
// (negative) receives it, a Z point (zero) induces no edge.  The domain is
// the set of arrow endpoints; a sink has incoming arrows only, a source
// outgoing only.
struct NewtonGraph {
  Polynomial subject;
  Polynomial quotient;
  std::map<LatticePoint, PointLabel> labels;  // every domain point
  std::set<Arrow> arrows;
  std::set<LatticePoint> domain;
  std::set<LatticePoint> sinks;
  std::set<LatticePoint> sources;
};

// Requires a two-variable p identically 1 on the line x + y = 1.
NewtonGraph build_graph(const Polynomial& p);

struct SinkCertificate {
  int sinks = 0;
  int terms = 0;
  bool holds = false;  // terms >= sinks; false would signal a bug
};

SinkCertificate sink_certificate(const Polynomial& p);

// Graphviz text form, one node or edge per line, deterministic order.
std::string graph_dot(const NewtonGraph& g);

// Breadth-first walk from a degree-d polynomial equal to 1 on the line to
// a target of degree at most d with the same property, using single-term
// moves that preserve that identity:
//   merge: c x^{a+1} y^b + c x^a y^{b+1} -> c x^a y^b  (c = the smaller of
//          the two coefficients, both strictly positive), or
//   split: c x^a y^b -> c x^{a+1} y^b + c x^a y^{b+1}  (whole coefficient,
//          only below the top degree).
// Returns every polynomial visited, start and target included; when start
// equals target no steps are needed and the walk is empty.  Throws
// BudgetExceeded when no walk is found within max_states expansions.
std::vector<Polynomial> dehomogenize_trace(const Polynomial& start,
                                           const Polynomial& target,
                                           long long max_states = 500'000);

}  // namespace sharpmap
