# -*- coding:utf-8 -*-
"""
Independent sets: membership test, enumeration (all or inclusion-maximal) and
exact maximum (weight) independent sets by branch and bound.

Maximal sets are the maximal cliques of the complement, so enumeration is a
pivoting Bron-Kerbosch recursion over complement bitmasks.

"""

from fractions import Fraction

from .core import VertexSet
from ..utils import DEFAULT_ENUMERATION_LIMIT, EnumerationOverflow, iter_bits, popcount


def is_independent(g, s):
    """:param g: :class:`Graph`.
    :param s: :class:`VertexSet` or an iterable of vertex indices.
    :return: True iff no edge of ``g`` has both endpoints in ``s``.
    """
    mask = s.mask if isinstance(s, VertexSet) else VertexSet.of(g.n, s).mask
    return all(g.adjacency(v) & mask == 0 for v in iter_bits(mask))


def _complement_masks(g):
    full = g.all_mask
    return [full & ~g.adjacency(v) & ~(1 << v) for v in range(g.n)]


def _maximal(g):
    comp = _complement_masks(g)

    def expand(chosen, candidates, excluded):
        if not candidates and not excluded:
            yield chosen
            return
        pivot = max(iter_bits(candidates | excluded), key=lambda u: (popcount(candidates & comp[u]), -u))
        for v in iter_bits(candidates & ~comp[pivot]):
            for found in expand(chosen | 1 << v, candidates & comp[v], excluded & comp[v]):
                yield found
            candidates &= ~(1 << v)
            excluded |= 1 << v

    return expand(0, g.all_mask, 0)


def _all(g):
    full = g.all_mask

    def extend(chosen, candidates):
        yield chosen
        for v in iter_bits(candidates):
            higher = full & ~((1 << (v + 1)) - 1)
            for found in extend(chosen | 1 << v, candidates & ~g.adjacency(v) & higher):
                yield found

    return extend(0, full)


def enumerate_independent_sets(g, maximal_only=False, limit=DEFAULT_ENUMERATION_LIMIT):
    """Stream the independent sets of ``g`` in a deterministic order.

    :param g: :class:`Graph`.
    :param maximal_only: yield only the inclusion-maximal sets; otherwise all sets, the empty set first.
    :param limit: raise :class:`EnumerationOverflow` before yielding set number ``limit + 1``.
    :return: generator of :class:`VertexSet`.
    """
    source = _maximal(g) if maximal_only else _all(g)
    count = 0
    for mask in source:
        count += 1
        if limit is not None and count > limit:
            raise EnumerationOverflow('independent set enumeration', limit)
        yield VertexSet(mask, g.n)


def clique_cover_bound(g, candidates, weights):
    # each clique of g contributes at most its heaviest vertex
    order = sorted(iter_bits(candidates), key=lambda v: (-weights[v], v))
    remaining = candidates
    bound = 0
    for v in order:
        if not remaining >> v & 1:
            continue
        bound += weights[v]
        clique = 1 << v
        common = g.adjacency(v) & remaining
        for u in order:
            if common >> u & 1:
                clique |= 1 << u
                common &= g.adjacency(u)
        remaining &= ~clique
    return bound


def max_weight_independent_set(g, weights, candidates=None):
    """Exact maximum weight independent set by branch and bound.

    :param g: :class:`Graph`.
    :param weights: per-vertex numbers (ints or Fractions); non-positive weights are never chosen.
    :param candidates: optional bitmask restricting the vertices that may be chosen.
    :return: ``(weight, VertexSet)``; the empty set with weight 0 if nothing positive exists.
    """
    mask = g.all_mask if candidates is None else candidates
    mask &= sum(1 << v for v in range(g.n) if weights[v] > 0)
    order_key = lambda v: (-weights[v], v)
    best = [0, 0]

    def branch(value, chosen, cand):
        if not cand:
            if value > best[0]:
                best[0], best[1] = value, chosen
            return
        if value + clique_cover_bound(g, cand, weights) <= best[0]:
            return
        v = min(iter_bits(cand), key=order_key)
        branch(value + weights[v], chosen | 1 << v, cand & ~g.adjacency(v) & ~(1 << v))
        branch(value, chosen, cand & ~(1 << v))

    branch(0, 0, mask)
    return best[0], VertexSet(best[1], g.n)


def max_independent_set(g):
    """:param g: :class:`Graph`.
    :return: ``(alpha, witness)`` with ``witness`` a maximum independent set.
    """
    alpha, witness = max_weight_independent_set(g, [1] * g.n)
    return alpha, witness


def max_clique(g):
    return max_independent_set(g.complement())


def extend_to_maximal(g, s):
    """Greedily add vertices in index order until ``s`` is inclusion-maximal."""
    mask = s.mask
    for v in range(g.n):
        if not mask >> v & 1 and g.adjacency(v) & mask == 0:
            mask |= 1 << v
    return VertexSet(mask, g.n)


def weight_of(s, weights):
    return sum((weights[v] for v in s), Fraction(0))
