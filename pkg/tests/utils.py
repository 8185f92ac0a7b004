from __future__ import absolute_import, division, print_function

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from locochrome.graphs.core import Coloring, Graph, PartialOrientation
from locochrome.graphs.families import complete_graph, cycle_graph, path_graph, petersen_graph

SMALL_GRAPHS = {
    'P4': lambda: path_graph(4),
    'C4': lambda: cycle_graph(4),
    'C5': lambda: cycle_graph(5),
    'C6': lambda: cycle_graph(6),
    'K3': lambda: complete_graph(3),
    'K4': lambda: complete_graph(4),
    'petersen': petersen_graph,
}


def subsets(n):
    for mask in range(1 << n):
        yield mask


def brute_independent_sets(g):
    """Bitmasks of all independent sets, in increasing mask order."""
    return [mask for mask in subsets(g.n)
            if not any(mask >> u & 1 and mask >> v & 1 for u, v in g.edges)]


def brute_alpha(g):
    return max(bin(mask).count('1') for mask in brute_independent_sets(g))


def brute_clique_number(g):
    return brute_alpha(g.complement())


def restricted_growth(n, max_colors):
    """Every coloring of ``n`` vertices with colors numbered by first appearance."""
    if n == 0:
        yield ()
        return

    def extend(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(min(used + 1, max_colors)):
            for found in extend(prefix + [c], max(used, c + 1)):
                yield found

    for found in extend([], 0):
        yield found


def _proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges)


def _closed_counts(masks, colors):
    return max(len(set(colors[w] for w in range(len(colors)) if mask >> w & 1)) for mask in masks)


def brute_local_chromatic(g):
    masks = [(1 << v) | g.adjacency(v) for v in range(g.n)]
    return min(_closed_counts(masks, colors) for colors in restricted_growth(g.n, g.n) if _proper(g, colors))


def brute_directed_local_chromatic(d):
    masks = [(1 << v) | d.out_mask(v) for v in range(d.n)]
    return min(_closed_counts(masks, colors) for colors in restricted_growth(d.n, d.n) if _proper(d.base, colors))


def brute_chromatic(g):
    return min(len(set(colors)) for colors in restricted_growth(g.n, g.n) if _proper(g, colors))


def brute_local_colorings(g, k, max_colors):
    masks = [(1 << v) | g.adjacency(v) for v in range(g.n)]
    return sorted(Coloring(colors) for colors in restricted_growth(g.n, max_colors)
                  if _proper(g, colors) and _closed_counts(masks, colors) <= k)


def is_fractional_clique(g, weights):
    return all(sum((weights[v] for v in range(g.n) if mask >> v & 1), Fraction(0)) <= 1
               for mask in brute_independent_sets(g))


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    """Fully forced digraphs; each edge is one-way either direction or bidirected."""
    g = draw(graphs(min_n, max_n))
    arcs = []
    for u, v in g.edges:
        kind = draw(st.sampled_from(('forward', 'backward', 'both')))
        if kind != 'backward':
            arcs.append((u, v))
        if kind != 'forward':
            arcs.append((v, u))
    return PartialOrientation(g, arcs)


@st.composite
def partial_orientations(draw, min_n=1, max_n=6):
    g = draw(graphs(min_n, max_n))
    arcs = []
    for u, v in g.edges:
        kind = draw(st.sampled_from(('free', 'forward', 'backward', 'both')))
        if kind in ('forward', 'both'):
            arcs.append((u, v))
        if kind in ('backward', 'both'):
            arcs.append((v, u))
    return PartialOrientation(g, arcs)
