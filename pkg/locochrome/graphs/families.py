# -*- coding:utf-8 -*-
"""
Small named graph and digraph families used by the solvers' test batteries.

"""

import itertools

import networkx as nx
import numpy as np

from .core import Graph, PartialOrientation


def cycle_graph(n):
    if n < 3:
        raise ValueError(' a cycle needs at least 3 vertices ')
    return Graph.from_networkx(nx.cycle_graph(n))


def complete_graph(n):
    return Graph.from_networkx(nx.complete_graph(n))


def path_graph(n):
    return Graph.from_networkx(nx.path_graph(n))


def petersen_graph():
    return Graph.from_networkx(nx.petersen_graph())


def empty_graph(n):
    return Graph(n)


def kneser_graph(m, r):
    """Vertices are the ``r``-subsets of ``1..m`` (sorted tuples, lexicographic); disjoint subsets are adjacent."""
    if not 1 <= r <= m:
        raise ValueError(' Kneser graph needs 1 <= r <= m, got m={0}, r={1} '.format(m, r))
    labels = list(itertools.combinations(range(1, m + 1), r))
    edges = [(i, j) for i, j in itertools.combinations(range(len(labels)), 2)
             if not set(labels[i]) & set(labels[j])]
    return Graph(len(labels), edges, labels)


def directed_cycle(n):
    """``0 -> 1 -> ... -> n-1 -> 0``."""
    if n < 3:
        raise ValueError(' a directed cycle needs at least 3 vertices ')
    return PartialOrientation.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def arcless_digraph(n):
    return PartialOrientation.from_arcs(n, [])


def random_digraph(n, density, seed):
    """Every ordered pair ``(u, v)``, ``u != v``, is an arc independently with probability ``density``.

    Both arcs of a pair may be drawn, giving a bidirected pair.

    :param n: number of vertices.
    :param density: arc probability in ``[0, 1]``.
    :param seed: seed for ``numpy.random.default_rng``.
    :return: fully forced :class:`PartialOrientation`.
    """
    if not 0 <= density <= 1:
        raise ValueError(' `density` must lie in [0, 1] ')
    rng = np.random.default_rng(seed)
    draws = rng.random((n, n))
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and draws[u, v] < density]
    return PartialOrientation.from_arcs(n, arcs)


def random_graph(n, density, seed):
    rng = np.random.default_rng(seed)
    draws = rng.random((n, n))
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if draws[u, v] < density])
