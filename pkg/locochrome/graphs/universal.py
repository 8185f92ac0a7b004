# -*- coding:utf-8 -*-
"""
Universal graphs for local colorings and their natural colorings, the 33-vertex
orientation gap graph with its two certificates, and set-family shadows.

Colors are ``1..m``. A vertex of U(m,k) carries the label ``(x, A)`` with ``A``
a sorted tuple; a vertex of U_d(m,h,r) carries ``(Q, H)`` with both sorted tuples.
Vertices are numbered in lexicographic label order.

"""

import itertools
import logging
from collections import namedtuple
from math import factorial

import numpy as np

from .core import Coloring, Graph, MultiColoring, PartialOrientation

KK_TOLERANCE = 1e-6


def _check_mk(m, k):
    if k < 1:
        raise ValueError(' `k` must be at least 1 ')
    if k > m:
        raise ValueError(' `k` must not exceed `m`, got k={0} > m={1} '.format(k, m))


def universal_labels(m, k):
    """All labels ``(x, A)``: ``x`` in ``1..m``, ``A`` a (k-1)-subset of ``1..m`` avoiding ``x``."""
    _check_mk(m, k)
    colors = range(1, m + 1)
    return [(x, a) for x in colors for a in itertools.combinations([c for c in colors if c != x], k - 1)]


def universal_undirected(m, k):
    """The graph U(m,k): ``(x, A)`` and ``(y, B)`` are adjacent iff ``x in B`` and ``y in A``.

    :param m: number of colors.
    :param k: locality, ``1 <= k <= m``.
    :return: :class:`Graph` with ``m * C(m-1, k-1)`` vertices.
    """
    labels = universal_labels(m, k)
    edges = [(i, j) for i, j in itertools.combinations(range(len(labels)), 2)
             if labels[i][0] in labels[j][1] and labels[j][0] in labels[i][1]]
    return Graph(len(labels), edges, labels)


def universal_directed(m, k):
    """The digraph U_d(m,k): arc ``(c, H) -> (c', H')`` iff ``c' in H``.

    Pairs where both memberships hold become bidirected pairs.

    :return: fully forced :class:`PartialOrientation`.
    """
    labels = universal_labels(m, k)
    arcs = [(i, j) for i, j in itertools.permutations(range(len(labels)), 2) if labels[j][0] in labels[i][1]]
    return PartialOrientation.from_arcs(len(labels), arcs, labels)


def _check_mhr(m, h, r):
    if r < 1:
        raise ValueError(' `r` must be at least 1 ')
    if 2 * r > h:
        raise ValueError(' `r` must be at most h/2, got r={0}, h={1} '.format(r, h))
    if h > m:
        raise ValueError(' `h` must not exceed `m`, got h={0} > m={1} '.format(h, m))


def universal_multi_labels(m, h, r):
    _check_mhr(m, h, r)
    colors = range(1, m + 1)
    labels = []
    for q in itertools.combinations(colors, r):
        rest = [c for c in colors if c not in q]
        labels.extend((q, hh) for hh in itertools.combinations(rest, h - r))
    return labels


def universal_multi(m, h, r):
    """The digraph U_d(m,h,r): arc ``(Q, H) -> (Q', H')`` iff ``Q' <= H``.

    :param m: number of colors.
    :param h: locality of the multi-coloring.
    :param r: colors per vertex, ``1 <= r <= h/2``.
    :return: fully forced :class:`PartialOrientation` with ``C(m,r) * C(m-r,h-r)`` vertices.
    """
    labels = universal_multi_labels(m, h, r)
    holds = [frozenset(hh) for _, hh in labels]
    arcs = [(i, j) for i, j in itertools.permutations(range(len(labels)), 2) if holds[i].issuperset(labels[j][0])]
    return PartialOrientation.from_arcs(len(labels), arcs, labels)


def natural_coloring(m, k):
    """``(x, A) -> x``, indexed like :func:`universal_undirected` and :func:`universal_directed`."""
    return Coloring(x for x, _ in universal_labels(m, k))


def natural_multicoloring(m, h, r):
    """``(Q, H) -> Q`` as an h-local r-multi-coloring of :func:`universal_multi`."""
    return MultiColoring([q for q, _ in universal_multi_labels(m, h, r)], r, h)


GAP_SPECIAL = ('x', 'y', 'z')
_GAP_ATTACHMENTS = (('x', (2, (1, 3))), ('y', (3, (1, 2))), ('z', (1, (4, 5))))


def counterexample_graph():
    """U(5,3) plus a triangle ``x, y, z`` attached at ``(2,{1,3})``, ``(3,{1,2})`` and ``(1,{4,5})``.

    :return: ``(graph, ('x', 'y', 'z'))``; the three extra vertices take indices 30, 31, 32.
    """
    base = universal_undirected(5, 3)
    labels = list(base.labels) + list(GAP_SPECIAL)
    index = {label: i for i, label in enumerate(labels)}
    edges = list(base.edges)
    edges += [(index['x'], index['y']), (index['x'], index['z']), (index['y'], index['z'])]
    edges += [(index[special], index[anchor]) for special, anchor in _GAP_ATTACHMENTS]
    return Graph(len(labels), edges, labels), GAP_SPECIAL


GapCertificate = namedtuple('GapCertificate', ['orientation', 'coloring'])


def counterexample_certificates(graph=None):
    """The two (partial orientation, coloring) pairs bounding every orientation of the gap graph by 3.

    With ``x -> y`` forced the coloring is natural on U(5,3) with ``x=1, y=2, z=4``; with ``y -> x``
    forced it is the same except ``x=3, y=1``. Every other edge is free.

    :return: list of two :class:`GapCertificate`.
    """
    if graph is None:
        graph, _ = counterexample_graph()
    x, y, z = (graph.index(label) for label in GAP_SPECIAL)
    natural = {label: label[0] for label in graph.labels if label not in GAP_SPECIAL}
    g = dict(natural, x=1, y=2, z=4)
    g_prime = dict(g, x=3, y=1)
    return [GapCertificate(PartialOrientation(graph, [(x, y)]), Coloring.from_labels(graph, g)),
            GapCertificate(PartialOrientation(graph, [(y, x)]), Coloring.from_labels(graph, g_prime))]


class SetFamily(object):
    """A family of equal-size subsets of ``1..m``."""

    def __init__(self, m, members):
        members = frozenset(frozenset(s) for s in members)
        sizes = set(len(s) for s in members)
        if len(sizes) > 1:
            raise ValueError(' members of a set family must share one size, got sizes {0} '.format(sorted(sizes)))
        for s in members:
            if any(not 1 <= e <= m for e in s):
                raise ValueError(' member {0} is not a subset of 1..{1} '.format(sorted(s), m))
        self.m = m
        self.members = members
        self.size = sizes.pop() if sizes else None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=sorted))

    def __contains__(self, s):
        return frozenset(s) in self.members

    def __eq__(self, other):
        return isinstance(other, SetFamily) and self.m == other.m and self.members == other.members

    def __hash__(self):
        return hash((self.m, self.members))

    def issubset(self, other):
        return self.members <= other.members

    def __repr__(self):
        return 'SetFamily(m={0}, members={1})'.format(self.m, [tuple(sorted(s)) for s in self])


def shadow(f, r):
    """All ``r``-subsets of members of ``f``.

    :param f: :class:`SetFamily`.
    :param r: shadow size, at most the member size of ``f``.
    :return: :class:`SetFamily`.
    """
    if f.size is not None and r > f.size:
        raise ValueError(' shadow size {0} exceeds member size {1} '.format(r, f.size))
    return SetFamily(f.m, (c for s in f.members for c in itertools.combinations(sorted(s), r)))


def generalized_binomial(l, j):
    """``l (l-1) ... (l-j+1) / j!`` for real ``l``."""
    value = 1.0
    for i in range(j):
        value *= l - i
    return value / factorial(j)


def kruskal_katona_l(size, j, precision=1e-9):
    """The real ``l >= j-1`` with ``C(l, j) = size``, by bisection.

    :param size: a positive family size.
    :param j: member size, at least 1.
    """
    if j < 1:
        raise ValueError(' member size must be at least 1 ')
    if size < 1:
        raise ValueError(' family size must be positive ')
    low, high = float(j - 1), float(j + size)
    while high - low > precision:
        mid = (low + high) / 2
        if generalized_binomial(mid, j) < size:
            low = mid
        else:
            high = mid
    return (low + high) / 2


KruskalKatonaCheck = namedtuple('KruskalKatonaCheck', ['family_size', 'shadow_size', 'l', 'bound', 'holds'])


def kruskal_katona_check(f, r):
    """Check ``|shadow(f, r)| >= C(l, r)`` where ``|f| = C(l, |member|)``.

    :return: :class:`KruskalKatonaCheck`.
    """
    l = kruskal_katona_l(len(f), f.size)
    bound = generalized_binomial(l, r)
    shadow_size = len(shadow(f, r))
    return KruskalKatonaCheck(len(f), shadow_size, l, bound, shadow_size >= bound - KK_TOLERANCE)


KruskalKatonaSweep = namedtuple('KruskalKatonaSweep', ['families', 'checks', 'violations'])


def _subset_masks(ground, j):
    return [sum(1 << (e - 1) for e in c) for c in itertools.combinations(range(1, ground + 1), j)]


def kruskal_katona_sweep(max_ground=8, families_per_size=2000, seed=1024):
    """Run :func:`kruskal_katona_check` over families of ``j``-sets on ground sets ``1..m``, ``m <= max_ground``.

    When a ground set and member size admit at most ``families_per_size`` nonempty families they are all
    checked; otherwise ``families_per_size`` families are drawn with a seeded generator.

    :return: :class:`KruskalKatonaSweep` whose ``violations`` lists ``(m, j, r, members)``.
    """
    rng = np.random.default_rng(seed)
    families = checks = 0
    violations = []
    for m in range(2, max_ground + 1):
        for j in range(2, m + 1):
            subsets = _subset_masks(m, j)
            pieces = {mask: [sum(1 << (e - 1) for e in c) for r in range(1, j)
                             for c in itertools.combinations(_bits(mask), r)] for mask in subsets}
            total = (1 << len(subsets)) - 1
            if total <= families_per_size:
                codes = range(1, total + 1)
            else:
                codes = (_random_code(rng, len(subsets)) for _ in range(families_per_size))
            for code in codes:
                members = [subsets[i] for i in range(len(subsets)) if code >> i & 1]
                families += 1
                l = kruskal_katona_l(len(members), j)
                covered = set()
                for mask in members:
                    covered.update(pieces[mask])
                for r in range(1, j):
                    checks += 1
                    size = sum(1 for piece in covered if bin(piece).count('1') == r)
                    if size < generalized_binomial(l, r) - KK_TOLERANCE:
                        violations.append((m, j, r, [_bits(mask) for mask in members]))
        logging.info('kruskal-katona sweep: ground set {0} done, {1} families so far'.format(m, families))
    return KruskalKatonaSweep(families, checks, violations)


def _bits(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _random_code(rng, width):
    # a uniform family size first, then a uniform family of that size
    count = int(rng.integers(1, width + 1))
    chosen = rng.choice(width, size=count, replace=False)
    return sum(1 << int(i) for i in chosen)
