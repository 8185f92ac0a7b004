# -*- coding:utf-8 -*-
"""
Exact fractional parameters over the rationals: fractional chromatic number
χ* with an optimal fractional clique, fractional directed local chromatic
number ψ_d*, and the h-local r-multi-colorings that bound ψ_d* from above.

Both LPs are solved through their duals, whose right-hand sides are
non-negative, so the simplex never needs a phase 1. Independent sets become
rows. Rows are either all enumerated up front or generated one at a time by
an exact pricing branch and bound; the fractional coloring is read off the
row duals of the final tableau.

χ* dual:   maximize Σ t_v   s.t.  Σ_{v∈A} t_v <= 1 for every maximal independent set A.

ψ_d* dual: maximize Σ y_v   s.t.  Σ_{v∈A} y_v - Σ_{u∈N_-(A)} z_u <= 0 for every nonempty
           independent set A, and Σ_u z_u <= 1; then ψ_d* = 1 + optimum.

"""

import logging
from collections import namedtuple
from fractions import Fraction
from math import gcd

from .bounds import bound_holds, ratio_bound, to_decimal
from .simplex import OPTIMAL, LinearProgram
from ..graphs.core import MultiColoring, VertexSet, as_digraph
from ..graphs.independent import clique_cover_bound, enumerate_independent_sets, extend_to_maximal, \
    is_independent, max_independent_set, max_weight_independent_set
from ..utils import EnumerationOverflow, SolverError, iter_bits

DEFAULT_COLUMN_LIMIT = 2000
DEFAULT_CG_ITERATIONS = 5000
METHODS = ('auto', 'enumerate', 'column_generation')


class FractionalColoring(object):
    """Non-negative rational weights on independent sets of ``graph``.

    :param graph: :class:`Graph`.
    :param weights: mapping (or pair iterable) from :class:`VertexSet` (or vertex iterables) to weights;
        zero weights are dropped, equal sets merged.
    """

    def __init__(self, graph, weights):
        items = weights.items() if isinstance(weights, dict) else weights
        merged = {}
        for s, w in items:
            s = s if isinstance(s, VertexSet) else VertexSet.of(graph.n, s)
            w = Fraction(w)
            if w < 0:
                raise ValueError(' fractional coloring weights must be non-negative ')
            if not is_independent(graph, s):
                raise ValueError(' support set {0} is not independent '.format(s.tolist()))
            if w:
                merged[s] = merged.get(s, Fraction(0)) + w
        self.graph = graph
        self.weights = merged

    @classmethod
    def from_coloring(cls, graph, coloring):
        """Each color class at weight 1."""
        return cls(graph, {s: 1 for s in coloring.classes().values()})

    @property
    def support(self):
        return sorted(self.weights)

    def total_weight(self):
        return sum(self.weights.values(), Fraction(0))

    def coverage(self, v):
        return sum((w for s, w in self.weights.items() if v in s), Fraction(0))

    def is_covering(self):
        return all(self.coverage(v) >= 1 for v in range(self.graph.n))

    def seen_weight(self, mask):
        """Total weight of the support sets meeting the vertex bitmask ``mask``."""
        return sum((w for s, w in self.weights.items() if s.mask & mask), Fraction(0))

    def items(self):
        return [(s, self.weights[s]) for s in self.support]

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return 'FractionalColoring(total={0}, support={1})'.format(self.total_weight(), len(self.weights))


class FractionalClique(namedtuple('FractionalClique', ['weights'])):
    """ FractionalClique
    Args:
        weights: tuple of non-negative Fractions ``t_v``.
    """
    __slots__ = ()

    def __new__(cls, weights):
        weights = tuple(Fraction(t) for t in weights)
        if any(t < 0 for t in weights):
            raise ValueError(' fractional clique weights must be non-negative ')
        return super(FractionalClique, cls).__new__(cls, weights)

    def total(self):
        return sum(self.weights, Fraction(0))

    def weight_of(self, s):
        return sum((self.weights[v] for v in s), Fraction(0))

    def is_feasible(self, graph):
        """Every independent set of ``graph`` carries weight at most 1."""
        heaviest, _ = max_weight_independent_set(graph, self.weights)
        return heaviest <= 1


ChiStarResult = namedtuple('ChiStarResult', ['value', 'coloring', 'clique'])
PsiDStarResult = namedtuple('PsiDStarResult', ['value', 'coloring'])
MulticoloringBound = namedtuple('MulticoloringBound', ['value', 'coloring'])
RatioReport = namedtuple('RatioReport', ['chi_star', 'psi_d_star', 'k', 'bound', 'holds', 'slack'])


def total_weight(fc):
    return fc.total_weight()


def seen_weights(d, fc, mode='exact'):
    """Per-vertex total weight of the support sets that meet N_+(v)."""
    d = as_digraph(d)
    return [fc.seen_weight(d.out_mask(v, mode)) for v in range(d.n)]


def local_weight(d, fc, mode='exact'):
    """``1 + max_v`` of the weight seen from ``v``.

    :param d: :class:`PartialOrientation` (a Graph counts as bidirected).
    :param fc: :class:`FractionalColoring` of the underlying graph.
    :param mode: ``'exact'`` or ``'pessimistic'`` out-neighborhoods.
    """
    seen = seen_weights(d, fc, mode)
    return 1 + max(seen) if seen else Fraction(1)


def _check_method(method):
    if method not in METHODS:
        raise ValueError(' `method` must be one of {0} '.format(METHODS))


def _greedy_cover(g):
    sets, covered = [], 0
    for v in range(g.n):
        if not covered >> v & 1:
            s = extend_to_maximal(g, VertexSet(1 << v, g.n))
            sets.append(s)
            covered |= s.mask
    return sets


def _clique_lp(g, sets):
    lp = LinearProgram([1] * g.n)
    for s in sets:
        lp.add_row({v: 1 for v in s}, 1)
    return lp


def _expect_optimal(result, what):
    if result.status != OPTIMAL:
        raise SolverError('{0}: simplex ended {1}'.format(what, result.status))
    return result


def fractional_chromatic(g, method='auto', limit=DEFAULT_COLUMN_LIMIT, max_iterations=DEFAULT_CG_ITERATIONS):
    """Exact fractional chromatic number with a strong-duality certificate.

    :param g: :class:`Graph` with at least one vertex.
    :param method: ``'enumerate'`` puts every maximal independent set in the LP, ``'column_generation'``
        prices them in by maximum weight independent set, ``'auto'`` enumerates up to ``limit`` sets and
        falls back to column generation.
    :param limit: maximal independent set cap for enumeration.
    :param max_iterations: column generation round cap.
    :return: :class:`ChiStarResult` ``(value, coloring, clique)`` with equal totals.
    """
    _check_method(method)
    if g.n == 0:
        raise ValueError(' fractional chromatic number needs at least one vertex ')
    sets = None
    if method in ('auto', 'enumerate'):
        try:
            sets = list(enumerate_independent_sets(g, maximal_only=True, limit=limit))
        except EnumerationOverflow:
            if method == 'enumerate':
                raise
            logging.info('chi*: more than {0} maximal independent sets, switching to column generation'.format(limit))
    if sets is not None:
        lp = _clique_lp(g, sets)
        result = _expect_optimal(lp.solve(), 'chi*')
    else:
        sets = _greedy_cover(g)
        lp = _clique_lp(g, sets)
        result = _expect_optimal(lp.solve(), 'chi*')
        for iteration in range(max_iterations):
            heaviest, s = max_weight_independent_set(g, result.primal)
            if heaviest <= 1:
                break
            s = extend_to_maximal(g, s)
            sets.append(s)
            lp.add_row({v: 1 for v in s}, 1)
            result = _expect_optimal(lp.solve(), 'chi*')
            logging.debug('chi*: round {0}, value {1}, {2} sets'.format(iteration + 1, result.value, len(sets)))
        else:
            raise SolverError('chi*: column generation did not converge in {0} rounds'.format(max_iterations))
        logging.info('chi*: column generation used {0} sets'.format(len(sets)))
    coloring = FractionalColoring(g, [(s, x) for s, x in zip(sets, result.duals) if x])
    clique = FractionalClique(result.primal)
    if coloring.total_weight() != result.value or clique.total() != result.value:
        raise SolverError('chi*: primal and dual totals disagree')
    return ChiStarResult(result.value, coloring, clique)


def _in_union(d, mask):
    union = 0
    for v in iter_bits(mask):
        union |= d.in_mask(v)
    return union


def _psi_row(d, s):
    n = d.n
    row = {v: 1 for v in s}
    for u in iter_bits(_in_union(d, s.mask)):
        row[n + u] = -1
    return row


def _price_local_column(d, y, z):
    """Nonempty independent set maximizing Σ_{v∈A} y_v - Σ_{u∈N_-(A)} z_u, by branch and bound."""
    g = d.base
    candidates = 0
    for v in range(d.n):
        if y[v] > 0:
            candidates |= 1 << v
    order_key = lambda v: (-y[v], v)
    best = [Fraction(0), 0]

    def penalty(hit):
        return sum((z[u] for u in iter_bits(hit)), Fraction(0))

    def branch(gain, hit, chosen, cand):
        value = gain - penalty(hit)
        if chosen and value > best[0]:
            best[0], best[1] = value, chosen
        if not cand or gain + clique_cover_bound(g, cand, y) - penalty(hit) <= best[0]:
            return
        v = min(iter_bits(cand), key=order_key)
        branch(gain + y[v], hit | d.in_mask(v), chosen | 1 << v, cand & ~g.adjacency(v) & ~(1 << v))
        branch(gain, hit, chosen, cand & ~(1 << v))

    branch(Fraction(0), 0, 0, candidates)
    return best[0], VertexSet(best[1], d.n)


def psi_d_star(d, method='auto', limit=DEFAULT_COLUMN_LIMIT, max_iterations=DEFAULT_CG_ITERATIONS):
    """Exact fractional directed local chromatic number.

    The LP ranges over all nonempty independent sets, not only maximal ones: a smaller set can be seen
    from fewer vertices.

    :param d: fully forced :class:`PartialOrientation`; a Graph is taken as its bidirected lift.
    :param method: ``'enumerate'``, ``'column_generation'`` or ``'auto'`` (enumerate up to ``limit``).
    :param limit: independent set cap for enumeration.
    :param max_iterations: column generation round cap.
    :return: :class:`PsiDStarResult` ``(value, coloring)`` with ``local_weight(d, coloring) == value``.
    """
    _check_method(method)
    d = as_digraph(d)
    if not d.is_full():
        raise ValueError(' psi_d* needs every edge forced ')
    if d.n == 0:
        raise ValueError(' psi_d* needs at least one vertex ')
    n = d.n
    sets = None
    if method in ('auto', 'enumerate'):
        try:
            sets = [s for s in enumerate_independent_sets(d.base, limit=limit + 1) if s]
        except EnumerationOverflow:
            if method == 'enumerate':
                raise
            logging.info('psi_d*: more than {0} independent sets, switching to column generation'.format(limit))
    generate = sets is None
    if generate:
        sets = [VertexSet(1 << v, n) for v in range(n)]
    lp = LinearProgram([1] * n + [0] * n)
    lp.add_row({n + u: 1 for u in range(n)}, 1)
    for s in sets:
        lp.add_row(_psi_row(d, s), 0)
    result = _expect_optimal(lp.solve(), 'psi_d*')
    if generate:
        for iteration in range(max_iterations):
            y, z = result.primal[:n], result.primal[n:]
            gain, s = _price_local_column(d, y, z)
            if gain <= 0:
                break
            sets.append(s)
            lp.add_row(_psi_row(d, s), 0)
            result = _expect_optimal(lp.solve(), 'psi_d*')
            logging.debug('psi_d*: round {0}, value {1}, {2} sets'.format(iteration + 1, 1 + result.value, len(sets)))
        else:
            raise SolverError('psi_d*: column generation did not converge in {0} rounds'.format(max_iterations))
        logging.info('psi_d*: column generation used {0} sets'.format(len(sets)))
    value = 1 + result.value
    coloring = FractionalColoring(d.base, [(s, x) for s, x in zip(sets, result.duals[1:]) if x])
    if not coloring.is_covering() or local_weight(d, coloring) != value:
        raise SolverError('psi_d*: dual solution is not an optimal fractional coloring')
    return PsiDStarResult(value, coloring)


def is_local_multicoloring(d, mc, strict=False):
    """True iff every color class is independent and every out-neighborhood uses at most ``h - r`` colors.

    :param d: :class:`PartialOrientation` (a Graph counts as bidirected).
    :param mc: :class:`MultiColoring`.
    :param strict: raise ``ValueError`` on a non-independent color class instead of returning False.
    """
    d = as_digraph(d)
    if mc.n != d.n:
        raise ValueError(' multicoloring covers {0} vertices, digraph has {1} '.format(mc.n, d.n))
    for color, mask in sorted(mc.color_classes().items()):
        if not is_independent(d.base, VertexSet(mask, d.n)):
            if strict:
                raise ValueError(' color class `{0}` is not independent '.format(color))
            return False
    return all(len(mc.union_of(d.out_mask(v, 'exact'))) <= mc.h - mc.r for v in range(d.n))


def psi_d_star_upper_from_multicoloring(d, mc):
    """``h/r`` together with its witness: every color class at weight ``1/r``.

    :raises ValueError: if ``mc`` is not an h-local r-multi-coloring of ``d``.
    :return: :class:`MulticoloringBound` ``(value, coloring)``.
    """
    d = as_digraph(d)
    if not is_local_multicoloring(d, mc, strict=True):
        raise ValueError(' multicoloring is not {0}-local '.format(mc.h))
    weight = Fraction(1, mc.r)
    coloring = FractionalColoring(d.base, [(VertexSet(mask, d.n), weight)
                                           for _, mask in sorted(mc.color_classes().items())])
    return MulticoloringBound(Fraction(mc.h, mc.r), coloring)


def _lcm(values):
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result


def multicoloring_from_fractional(d, fc):
    """Turn a covering rational fractional coloring into an h-local r-multi-coloring, ``h/r <= local_weight``.

    ``r`` is the common denominator; a set of weight ``p/r`` contributes ``p`` fresh colors. A vertex
    keeps the first ``r`` colors it receives.

    :return: :class:`MultiColoring`.
    """
    d = as_digraph(d)
    if not fc.is_covering():
        raise ValueError(' fractional coloring does not cover every vertex ')
    r = _lcm(w.denominator for w in fc.weights.values())
    received = [[] for _ in range(d.n)]
    color = 0
    for s, w in fc.items():
        for _ in range(int(w * r)):
            for v in s:
                received[v].append(color)
            color += 1
    sets = [frozenset(colors[:r]) for colors in received]
    h = r
    for v in range(d.n):
        seen = set()
        for w in iter_bits(d.out_mask(v, 'exact')):
            seen |= sets[w]
        h = max(h, r + len(seen))
    return MultiColoring(sets, r, h)


def vertex_transitive_chi_star(g):
    """``n / α(g)``, equal to χ* on vertex-transitive graphs and a lower bound otherwise."""
    alpha, _ = max_independent_set(g)
    if alpha == 0:
        raise ValueError(' graph has no vertices ')
    return Fraction(g.n, alpha)


def verify_ratio(d, k_upper=None, chi_star=None):
    """Check χ*(underlying(d)) <= k^k/(k-1)^(k-1) with ``k = ψ_d*(d)``.

    :param d: fully forced :class:`PartialOrientation` with at least one arc.
    :param k_upper: a certified upper bound on ψ_d* to use instead of solving it (the bound is
        increasing in ``k``).
    :param chi_star: a known χ* of the underlying graph to use instead of solving it.
    :return: :class:`RatioReport`.
    """
    d = as_digraph(d)
    if not d.arc_count():
        raise ValueError(' verify_ratio needs at least one arc ')
    psi = None
    if k_upper is None:
        psi = psi_d_star(d).value
        k = psi
    else:
        k = Fraction(k_upper)
    if chi_star is None:
        chi_star = fractional_chromatic(d.base).value
    bound = ratio_bound(k)
    holds = bound_holds(chi_star, bound)
    slack = bound.value - chi_star if bound.exact else bound.value - to_decimal(chi_star)
    return RatioReport(chi_star, psi, k, bound, holds, slack)
