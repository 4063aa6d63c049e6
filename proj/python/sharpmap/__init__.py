"""Exact searches, closed-form families, and combinatorial certificates for
polynomials that equal 1 on the hyperplane x1 + ... + xn = 1.

The heavy lifting happens in the compiled extension; these wrappers return
plain dicts (parsed JSON) with every number carried as an exact fraction
string such as ``"573/28"``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetError, census_threshold, gap_admissible, sharp_bound

__version__ = _core.__version__

__all__ = [
    "BudgetError",
    "build_system",
    "census",
    "census_threshold",
    "fraction",
    "gap_admissible",
    "graph",
    "graph_dot",
    "invariant",
    "l1min",
    "search",
    "sharp_bound",
    "substitute",
    "symmetric_min_terms",
    "uniqueness",
    "verify",
    "whitney",
]


def fraction(s):
    """Parse an exact fraction string (or int) into ``fractions.Fraction``."""
    return Fraction(s)


def build_system(n, d, kind="homogenized", include_constant=False, reduce=False):
    """Coefficient system: matrix, right-hand side, and column monomials."""
    return json.loads(_core.system_json(n, d, kind, include_constant, reduce))


def search(
    n,
    d,
    kind="homogenized",
    reduce=False,
    constrained=True,
    enumerate_all=False,
    workers=1,
    max_support=-1,
    max_combinations=10_000_000,
):
    """Minimum-support nonnegative solution search."""
    return json.loads(
        _core.search_json(
            n, d, kind, reduce, constrained, enumerate_all,
            workers, max_support, max_combinations,
        )
    )


def uniqueness(d, workers=1, max_combinations=10_000_000):
    """All minimal-term degree-d solutions (odd d)."""
    return json.loads(_core.uniqueness_json(d, workers, max_combinations))


def symmetric_min_terms(d, max_combinations=10_000_000):
    """Minimum monomial count over the symmetric basis (odd d)."""
    return json.loads(_core.symmetric_json(d, max_combinations))


def l1min(n, d, basis="symmetric", include_constant=False, pin_top=False,
          enumerate_all=False):
    """Exact minimum of the weighted coefficient sum."""
    return json.loads(
        _core.l1min_json(n, d, basis, include_constant, pin_top, enumerate_all)
    )


def invariant(d):
    """Group-invariant sharp polynomial of degree d."""
    return json.loads(_core.invariant_json(d))


def whitney(n, d):
    """Generalized Whitney polynomial."""
    return json.loads(_core.whitney_json(n, d))


def substitute(d, m, a, b, c):
    """Substitution move lowering the coefficient sum."""
    return json.loads(_core.substitute_json(d, m, a, b, str(c)))


def graph(poly):
    """Directed lattice diagram of (p-1)/(x+y-1); ``poly`` is a polynomial dict."""
    return json.loads(_core.graph_json(json.dumps(poly)))


def graph_dot(poly):
    """Graphviz source for the lattice diagram."""
    return _core.graph_dot(json.dumps(poly))


def verify(poly, n=None):
    """Sharpness certificate for a candidate polynomial dict.

    ``n`` is the expected variable count; it defaults to the
    polynomial's own.
    """
    if n is None:
        n = poly["nvars"]
    return json.loads(_core.verify_json(json.dumps(poly), n))


def census(n, max_terms):
    """Sharp examples organized by term count N, up to max_terms."""
    return json.loads(_core.census_json(n, max_terms))
