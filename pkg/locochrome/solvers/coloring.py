# -*- coding:utf-8 -*-
"""
Exact integral coloring solvers: local chromatic number ψ, directed local
chromatic number ψ_d, chromatic number χ, enumeration of local colorings up
to color permutation, and orientation certificates.

All searches run on one backtracking engine. Each vertex ``w`` watches a set
``W(w)`` (its closed neighborhood, or ``{w}`` plus its out-neighbors) that may
carry at most ``k`` colors. A vertex may take a color already in use or the next
unused one, never a color of a neighbor, and never a color that would push a
full watch set over ``k``.

"""

import logging
from collections import namedtuple

from ..graphs.core import Coloring, PartialOrientation, as_digraph
from ..graphs.independent import max_clique
from ..utils import DEFAULT_CLASS_CAP, BudgetExhausted, EnumerationOverflow, UNLIMITED, iter_bits, popcount

MAX_EXHAUSTIVE_EDGES = 20

LocalityReport = namedtuple('LocalityReport', ['per_vertex', 'max'])
OrientationBounds = namedtuple('OrientationBounds', ['lower', 'upper', 'exact', 'witness', 'gaps'])


class _OutOfBudget(Exception):
    pass


def _base(g_or_d):
    return g_or_d.base if isinstance(g_or_d, PartialOrientation) else g_or_d


def _check_total(g, c):
    if c.n != g.n:
        raise ValueError(' coloring covers {0} vertices, graph has {1} '.format(c.n, g.n))


def is_proper(g, c):
    """:param g: :class:`Graph` (a :class:`PartialOrientation` is checked on its base graph).
    :param c: :class:`Coloring`.
    :return: True iff no edge is monochromatic.
    """
    g = _base(g)
    _check_total(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges)


def locality(g_or_d, c, directed=False, pessimistic=False):
    """Colors seen by each closed (out-)neighborhood.

    :param g_or_d: :class:`Graph` or :class:`PartialOrientation`; a Graph taken as directed is bidirected.
    :param c: proper :class:`Coloring`.
    :param directed: count ``{v} + N_+(v)`` instead of ``{v} + N(v)``.
    :param pessimistic: with ``directed``, use the pessimistic out-neighborhood covering every completion.
    :return: :class:`LocalityReport`.
    """
    if not is_proper(g_or_d, c):
        raise ValueError(' locality is defined for proper colorings only ')
    if directed:
        d = as_digraph(g_or_d)
        mode = 'pessimistic' if pessimistic else 'exact'
        masks = [(1 << v) | d.out_mask(v, mode) for v in range(d.n)]
    else:
        g = _base(g_or_d)
        masks = [(1 << v) | g.adjacency(v) for v in range(g.n)]
    per_vertex = tuple(len(c.colors_of(mask)) for mask in masks)
    return LocalityReport(per_vertex, max(per_vertex) if per_vertex else 0)


class LocalColoringSearch(object):
    """Backtracking over proper colorings whose watch sets carry at most ``k`` colors.

    :param adjacency: per-vertex neighbor bitmasks of the underlying graph.
    :param watch: per-vertex watch bitmasks, or ``None`` for plain proper coloring.
    :param k: color bound per watch set (ignored without ``watch``).
    :param max_colors: total palette size.
    :param meter: a :class:`BudgetMeter`.
    """

    def __init__(self, adjacency, watch, k, max_colors, meter):
        self.n = len(adjacency)
        self.adjacency = adjacency
        self.watch = watch
        self.k = k
        self.max_colors = max_colors
        self.meter = meter
        self.degree = [popcount(mask) for mask in adjacency]
        self.watchers = [[] for _ in range(self.n)]
        if watch is not None:
            for w, mask in enumerate(watch):
                for v in iter_bits(mask):
                    self.watchers[v].append(w)

    def colorings(self):
        """Yield every solution once per color-permutation class, as a tuple of colors."""
        n = self.n
        adjacency, watchers, k = self.adjacency, self.watchers, self.k
        limited = self.watch is not None
        color = [-1] * n
        counts = [[0] * max(self.max_colors, 1) for _ in range(n)] if limited else None
        present = [0] * n
        state = {'used': 0, 'uncolored': (1 << n) - 1}

        def domain(v):
            forbidden = 0
            for u in iter_bits(adjacency[v]):
                if color[u] >= 0:
                    forbidden |= 1 << color[u]
            used = state['used']
            allowed = (1 << used) - 1
            if used < self.max_colors:
                allowed |= 1 << used
            allowed &= ~forbidden
            if limited:
                for w in watchers[v]:
                    if popcount(present[w]) >= k:
                        allowed &= present[w]
            return allowed

        def assign(v, c):
            color[v] = c
            state['uncolored'] &= ~(1 << v)
            if c == state['used']:
                state['used'] += 1
            if limited:
                for w in watchers[v]:
                    counts[w][c] += 1
                    if counts[w][c] == 1:
                        present[w] |= 1 << c

        def unassign(v, c, used_before):
            color[v] = -1
            state['uncolored'] |= 1 << v
            state['used'] = used_before
            if limited:
                for w in watchers[v]:
                    counts[w][c] -= 1
                    if counts[w][c] == 0:
                        present[w] &= ~(1 << c)

        def search():
            if not state['uncolored']:
                yield tuple(color)
                return
            if not self.meter.tick():
                raise _OutOfBudget()
            best = None
            for v in iter_bits(state['uncolored']):
                allowed = domain(v)
                if not allowed:
                    return
                key = (popcount(allowed), -self.degree[v], v)
                if best is None or key < best[0]:
                    best = (key, v, allowed)
            _, v, allowed = best
            used_before = state['used']
            for c in iter_bits(allowed):
                assign(v, c)
                for found in search():
                    yield found
                unassign(v, c, used_before)

        return search()

    def first(self):
        for found in self.colorings():
            return found
        return None


def _undirected_watch(g):
    return [(1 << v) | g.adjacency(v) for v in range(g.n)]


def _directed_watch(d):
    return [(1 << v) | d.out_mask(v, 'exact') for v in range(d.n)]


def greedy_coloring(g):
    """DSATUR: repeatedly color the most saturated vertex (then highest degree, then lowest index) with its least free color."""
    colors = [-1] * g.n
    uncolored = set(range(g.n))
    while uncolored:
        def key(v):
            seen = set(colors[u] for u in iter_bits(g.adjacency(v)) if colors[u] >= 0)
            return (-len(seen), -g.degree(v), v)

        v = min(uncolored, key=key)
        taken = set(colors[u] for u in iter_bits(g.adjacency(v)))
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        uncolored.discard(v)
    return Coloring(colors)


def _budget_meter(budget, what):
    return (budget if budget is not None else UNLIMITED).meter(what)


def _deepen(what, n, adjacency, watch, lower, upper, witness, meter):
    """Least ``k`` in ``[lower, upper)`` with a solution, else ``upper`` with the given witness."""
    for k in range(lower, upper):
        logging.info('{0}: trying k={1} on {2} vertices'.format(what, k, n))
        search = LocalColoringSearch(adjacency, watch, k, n, meter)
        try:
            found = search.first()
        except _OutOfBudget:
            raise BudgetExhausted(what, k, upper, witness)
        if found is not None:
            return k, Coloring(found).canonical()
    return upper, witness


def local_chromatic(g, budget=None):
    """Exact local chromatic number by iterative deepening on ``k``.

    :param g: :class:`Graph`.
    :param budget: optional :class:`Budget`; exhaustion raises :class:`BudgetExhausted` with the bounds found.
    :return: ``(psi, witness)`` with ``witness`` a local psi-coloring.
    """
    if g.n == 0:
        return 0, Coloring(())
    witness = greedy_coloring(g).canonical()
    upper = locality(g, witness).max
    omega, _ = max_clique(g)
    lower = max(omega, 1 if not g.edges else (2 if g.is_bipartite() else 3))
    logging.info('psi: {0} vertices, bounds [{1}, {2}]'.format(g.n, lower, upper))
    meter = _budget_meter(budget, 'psi')
    adjacency = [g.adjacency(v) for v in range(g.n)]
    return _deepen('psi', g.n, adjacency, _undirected_watch(g), lower, upper, witness, meter)


def directed_local_chromatic(d, budget=None):
    """Exact directed local chromatic number of a digraph (a Graph counts as bidirected).

    :param d: fully forced :class:`PartialOrientation`.
    :param budget: optional :class:`Budget`.
    :return: ``(psi_d, witness)``.
    """
    d = as_digraph(d)
    if not d.is_full():
        raise ValueError(' directed local chromatic number needs every edge forced ')
    if d.n == 0:
        return 0, Coloring(())
    g = d.base
    candidates = [greedy_coloring(g).canonical(), Coloring(range(d.n))]
    witness = min(candidates, key=lambda c: locality(d, c, directed=True).max)
    upper = locality(d, witness, directed=True).max
    mutual_omega, _ = max_clique(d.mutual_graph())
    lower = max(mutual_omega, 2 if d.arc_count() else 1)
    logging.info('psi_d: {0} vertices, {1} arcs, bounds [{2}, {3}]'.format(d.n, d.arc_count(), lower, upper))
    meter = _budget_meter(budget, 'psi_d')
    adjacency = [g.adjacency(v) for v in range(g.n)]
    return _deepen('psi_d', d.n, adjacency, _directed_watch(d), lower, upper, witness, meter)


def enumerate_local_colorings(g, k, max_colors, cap=DEFAULT_CLASS_CAP, budget=None, directed=False):
    """All local ``k``-colorings with at most ``max_colors`` colors, one per color-permutation class.

    :param g: :class:`Graph`, or a fully forced :class:`PartialOrientation` with ``directed=True``.
    :param k: locality bound.
    :param max_colors: palette size, at most the vertex count.
    :param cap: raise :class:`EnumerationOverflow` beyond this many classes.
    :return: sorted list of canonical :class:`Coloring` (colors numbered by first appearance).
    """
    base = _base(g)
    if max_colors > base.n:
        raise ValueError(' `max_colors` must not exceed the vertex count {0} '.format(base.n))
    watch = _directed_watch(as_digraph(g)) if directed else _undirected_watch(base)
    adjacency = [base.adjacency(v) for v in range(base.n)]
    meter = _budget_meter(budget, 'enumerate local colorings')
    search = LocalColoringSearch(adjacency, watch, k, max_colors, meter)
    found = []
    try:
        for colors in search.colorings():
            found.append(Coloring(colors).canonical())
            if len(found) > cap:
                raise EnumerationOverflow('local coloring classes', cap)
    except _OutOfBudget:
        raise BudgetExhausted('enumerate local colorings', len(found))
    logging.info('enumerate local colorings: {0} classes for k={1}, {2} search nodes'.format(
        len(found), k, meter.nodes))
    return sorted(found)


def verify_orientation_certificate(d, c, k):
    """True iff ``c`` is a directed local ``k``-coloring under every completion of the free edges of ``d``.

    :raises ValueError: if ``c`` is not proper on the base graph.
    """
    return locality(d, c, directed=True, pessimistic=True).max <= k


def _edge_direction(d, edge):
    u, v = edge
    forward, backward = d.has_arc(u, v), d.has_arc(v, u)
    if forward == backward:
        return None
    return forward


def uncovered_patterns(g, orientations):
    """Partial assignments of edge directions that no orientation pattern in ``orientations`` matches.

    Each partial orientation stands for all orientations agreeing with its one-way forced arcs. The
    cylinders are split edge by edge, like a decision tree, until every branch is matched or empty.

    :return: list of gap patterns, each a sorted list of arcs; empty iff the patterns cover everything.
    """
    patterns = []
    for d in orientations:
        pattern = {}
        for edge in g.edges:
            direction = _edge_direction(d, edge)
            if direction is not None:
                pattern[edge] = direction
        patterns.append(pattern)

    def split(assignment, alive):
        alive = [p for p in alive if all(assignment.get(e, val) == val for e, val in p.items())]
        if not alive:
            return [sorted((u, v) if forward else (v, u) for (u, v), forward in assignment.items())]
        if any(all(e in assignment for e in p) for p in alive):
            return []
        edge = min(e for p in alive for e in p if e not in assignment)
        gaps = []
        for forward in (True, False):
            branch = dict(assignment)
            branch[edge] = forward
            gaps.extend(split(branch, alive))
        return gaps

    return split({}, patterns)


def directed_local_chromatic_max(g, strategy='exhaustive', certificates=None, budget=None):
    """Bounds on the maximum of ψ_d over all orientations of ``g``.

    :param g: :class:`Graph`.
    :param strategy: ``'exhaustive'`` solves every orientation (at most 20 edges); ``'certificates'``
        checks ``(partial orientation, coloring)`` pairs whose forced arcs must cover all orientations.
    :param certificates: the pairs for the ``'certificates'`` strategy.
    :param budget: optional :class:`Budget` for the inner ψ_d solves.
    :return: :class:`OrientationBounds`; ``upper`` is ``None`` when ``gaps`` lists uncovered patterns.
    """
    if strategy == 'exhaustive':
        if len(g.edges) > MAX_EXHAUSTIVE_EDGES:
            raise ValueError(' exhaustive strategy needs at most {0} edges, got {1} '.format(
                MAX_EXHAUSTIVE_EDGES, len(g.edges)))
        best, best_d = None, None
        for d in PartialOrientation(g).completions():
            value, _ = directed_local_chromatic(d, budget)
            if best is None or value > best:
                best, best_d = value, d
        if best is None:
            best, best_d = 0, PartialOrientation(g)
        return OrientationBounds(best, best, True, best_d, [])
    if strategy != 'certificates':
        raise ValueError(' `strategy` must be `exhaustive` or `certificates` ')
    if not certificates:
        raise ValueError(' the certificates strategy needs at least one certificate ')
    upper = 0
    for d, c in certificates:
        if d.base != g:
            raise ValueError(' certificate orientation is not over the given graph ')
        if not is_proper(g, c):
            raise ValueError(' certificate coloring is not proper ')
        upper = max(upper, locality(d, c, directed=True, pessimistic=True).max)
    gaps = uncovered_patterns(g, [d for d, _ in certificates])
    if gaps:
        logging.warning('psi_d,max: certificates leave {0} orientation patterns uncovered'.format(len(gaps)))
    lex = PartialOrientation.lexicographic(g)
    lower, _ = directed_local_chromatic(lex, budget)
    if gaps:
        return OrientationBounds(lower, None, False, lex, gaps)
    return OrientationBounds(lower, upper, lower == upper, lex, [])


def chromatic(g, budget=None):
    """Exact chromatic number, deepening on the palette size from the clique number.

    :return: ``(chi, witness)``.
    """
    if g.n == 0:
        return 0, Coloring(())
    witness = greedy_coloring(g).canonical()
    upper = witness.num_colors
    lower, _ = max_clique(g)
    meter = _budget_meter(budget, 'chi')
    adjacency = [g.adjacency(v) for v in range(g.n)]
    for colors in range(lower, upper):
        logging.info('chi: trying {0} colors on {1} vertices'.format(colors, g.n))
        search = LocalColoringSearch(adjacency, None, None, colors, meter)
        try:
            found = search.first()
        except _OutOfBudget:
            raise BudgetExhausted('chi', colors, upper, witness)
        if found is not None:
            return colors, Coloring(found).canonical()
    return upper, witness
