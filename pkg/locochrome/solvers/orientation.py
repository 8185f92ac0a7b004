# -*- coding:utf-8 -*-
"""
Orientations attaining ψ_d* = χ*.

Given an optimal fractional clique ``t``, every vertex ``v0`` lies in an
independent set ``A0`` of clique weight exactly 1 (otherwise ``t_{v0}`` could
grow). Orienting every edge at ``A0`` away from ``A0`` makes each vertex of
``A0`` see its whole neighborhood, which pins ψ_d* of the result to χ*.

"""

import logging
from collections import namedtuple

from .fractional import fractional_chromatic, psi_d_star
from ..graphs.core import PartialOrientation, VertexSet
from ..graphs.independent import enumerate_independent_sets, extend_to_maximal, max_weight_independent_set
from ..utils import EnumerationOverflow, SolverError

TIGHT_SET_LIMIT = 10 ** 5
POLICIES = ('lexicographic', 'leave_free')


class TightSetCertificate(namedtuple('TightSetCertificate', ['v0', 'a0', 'clique', 'tightness', 'chi_star'])):
    """ TightSetCertificate
    Args:
        v0: the chosen vertex.
        a0: :class:`VertexSet`, independent, contains ``v0``.
        clique: optimal :class:`FractionalClique`.
        tightness: clique weight of ``a0``, exactly 1.
        chi_star: total weight of ``clique``.
    """
    __slots__ = ()


FrakceqReport = namedtuple('FrakceqReport', ['chi_star', 'psi_d_star', 'a0', 'equal', 'seen_in_a0', 'sees_enough',
                                             'outward', 'passed'])


def _check_vertex(g, v0):
    if g.n == 0:
        raise ValueError(' graph has no vertices ')
    if not 0 <= v0 < g.n:
        raise ValueError(' `v0` must be a vertex index in [0, {0}) '.format(g.n))


def _least_tight_maximal(g, v0, clique, limit):
    rest = [u for u in range(g.n) if u != v0 and not g.has_edge(u, v0)]
    sub = g.induced_subgraph(rest)
    best = None
    for s in enumerate_independent_sets(sub, maximal_only=True, limit=limit):
        a0 = VertexSet.of(g.n, [rest[i] for i in s] + [v0])
        if clique.weight_of(a0) == 1 and (best is None or a0 < best):
            best = a0
    return best


def tight_independent_set(g, v0=0, chi=None, limit=TIGHT_SET_LIMIT):
    """Independent set containing ``v0`` whose optimal fractional clique weight is exactly 1.

    Maximal independent sets through ``v0`` are searched first and the lexicographically least tight
    one is returned. Past ``limit`` such sets, a support set of the optimal fractional coloring through
    ``v0`` is used: complementary slackness makes it tight.

    :param g: :class:`Graph` with at least one vertex.
    :param v0: vertex index.
    :param chi: optional :class:`ChiStarResult` of ``g`` to reuse.
    :return: :class:`TightSetCertificate`.
    :raises SolverError: if no tight set is found, which an optimal clique rules out.
    """
    _check_vertex(g, v0)
    if chi is None:
        chi = fractional_chromatic(g)
    clique = chi.clique
    a0 = None
    try:
        a0 = _least_tight_maximal(g, v0, clique, limit)
    except EnumerationOverflow:
        logging.info('tight set: more than {0} maximal sets through v0={1}, using slack rows'.format(limit, v0))
    if a0 is None:
        for s, _ in chi.coloring.items():
            if v0 in s and clique.weight_of(s) == 1:
                a0 = extend_to_maximal(g, s)
                break
    if a0 is None:
        rest = g.all_mask & ~g.adjacency(v0) & ~(1 << v0)
        heaviest, s = max_weight_independent_set(g, clique.weights, rest)
        if clique.weights[v0] + heaviest == 1:
            a0 = extend_to_maximal(g, s | VertexSet(1 << v0, g.n))
    if a0 is None or clique.weight_of(a0) != 1:
        raise SolverError('no tight independent set through v0={0}; the fractional clique is not optimal'.format(v0))
    return TightSetCertificate(v0, a0, clique, clique.weight_of(a0), clique.total())


def max_orientation(g, v0=0, free_policy='lexicographic', certificate=None):
    """Orient every edge at the tight set ``A0`` away from it.

    :param g: :class:`Graph`.
    :param v0: vertex the tight set must contain.
    :param free_policy: ``'lexicographic'`` orients the remaining edges low to high index; ``'leave_free'``
        leaves them free.
    :param certificate: optional :class:`TightSetCertificate` to reuse.
    :return: :class:`PartialOrientation`.
    """
    if free_policy not in POLICIES:
        raise ValueError(' `free_policy` must be one of {0} '.format(POLICIES))
    if certificate is None:
        certificate = tight_independent_set(g, v0)
    a0 = certificate.a0
    arcs = []
    for u, w in g.edges:
        if u in a0:
            arcs.append((u, w))
        elif w in a0:
            arcs.append((w, u))
        elif free_policy == 'lexicographic':
            arcs.append((u, w))
    return PartialOrientation(g, arcs)


def verify_frakceq(g, v0=0, certificate=None):
    """Build the orientation for ``v0`` and check ψ_d* of it equals χ*(g) exactly.

    Also checks that every vertex of ``A0`` has its whole neighborhood as out-neighborhood, and that some
    vertex of ``A0`` sees weight at least χ* - 1 in the optimal fractional coloring.

    :return: :class:`FrakceqReport`.
    """
    if certificate is None:
        certificate = tight_independent_set(g, v0)
    d = max_orientation(g, v0, 'lexicographic', certificate)
    psi = psi_d_star(d)
    a0 = certificate.a0
    seen = max(psi.coloring.seen_weight(d.out_mask(v)) for v in a0)
    outward = all(d.out_mask(v) == g.adjacency(v) for v in a0)
    equal = psi.value == certificate.chi_star
    sees_enough = seen >= certificate.chi_star - 1
    logging.info('frakceq: chi*={0}, psi_d*={1}, |A0|={2}'.format(certificate.chi_star, psi.value, len(a0)))
    return FrakceqReport(certificate.chi_star, psi.value, a0, equal, seen, sees_enough, outward,
                         equal and sees_enough and outward)
