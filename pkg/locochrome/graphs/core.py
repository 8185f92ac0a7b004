# -*- coding:utf-8 -*-
"""
Graphs, partial orientations, vertex sets and colorings.

Vertices are indexed ``0..n-1``. Every graph also carries one label per
vertex (an int, a string or a nested tuple such as ``(x, (a, b))``), so that
constructions can be inspected by name while the solvers work on dense
indices and bitmasks.

"""

from collections import namedtuple

import networkx as nx

from ..utils import iter_bits, popcount

MODES = ('exact', 'pessimistic')


class VertexSet(object):
    """An immutable set of vertex indices of an ``n``-vertex graph, stored as a bitmask."""

    __slots__ = ('mask', 'n')

    def __init__(self, mask, n):
        if mask < 0 or mask >> n:
            raise ValueError(' vertex set {0:b} does not fit in {1} vertices '.format(mask, n))
        self.mask = mask
        self.n = n

    @classmethod
    def of(cls, n, vertices):
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(' vertex `{0}` out of range [0, {1}) '.format(v, n))
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def empty(cls, n):
        return cls(0, n)

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self):
        return self.mask != 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.mask == other.mask and self.n == other.n

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.mask, self.n))

    def __or__(self, other):
        return VertexSet(self.mask | other.mask, self.n)

    def __and__(self, other):
        return VertexSet(self.mask & other.mask, self.n)

    def __sub__(self, other):
        return VertexSet(self.mask & ~other.mask, self.n)

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other):
        return self.mask & other.mask == 0

    def tolist(self):
        return list(iter_bits(self.mask))

    def sort_key(self):
        return tuple(iter_bits(self.mask))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return 'VertexSet({0})'.format(self.tolist())


class Graph(object):
    """A finite simple undirected graph.

    :param n: number of vertices.
    :param edges: iterable of vertex index pairs.
    :param labels: optional sequence of ``n`` distinct hashable labels, defaults to ``0..n-1``.
    """

    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise ValueError(' `n` must be non-negative ')
        adjacency = [0] * n
        edge_set = set()
        for u, v in edges:
            if u == v:
                raise ValueError(' self-loop at vertex `{0}` is not allowed '.format(u))
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(' edge ({0}, {1}) out of range '.format(u, v))
            edge = (u, v) if u < v else (v, u)
            if edge in edge_set:
                raise ValueError(' parallel edge {0} is not allowed '.format(edge))
            edge_set.add(edge)
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(' expected {0} labels, got {1} '.format(n, len(labels)))
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ValueError(' duplicate label `{0}` '.format(label))
            index[label] = i
        self._n = n
        self._adjacency = tuple(adjacency)
        self._edges = tuple(sorted(edge_set))
        self._labels = labels
        self._index = index

    @property
    def n(self):
        return self._n

    @property
    def labels(self):
        return self._labels

    @property
    def edges(self):
        return self._edges

    @property
    def all_mask(self):
        return (1 << self._n) - 1

    def label(self, v):
        return self._labels[v]

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(' unknown vertex label `{0}` '.format(label))

    def adjacency(self, v):
        return self._adjacency[v]

    def neighbors(self, v):
        return VertexSet(self._adjacency[v], self._n)

    def degree(self, v):
        return popcount(self._adjacency[v])

    def has_edge(self, u, v):
        return bool(self._adjacency[u] >> v & 1)

    def complement(self):
        edges = [(u, v) for u in range(self._n) for v in range(u + 1, self._n) if not self.has_edge(u, v)]
        return Graph(self._n, edges, self._labels)

    def induced_subgraph(self, vertices):
        """Subgraph on ``vertices`` (indices), relabelled densely in increasing index order, labels kept."""
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        edges = [(position[u], position[v]) for u, v in self._edges if u in position and v in position]
        return Graph(len(keep), edges, [self._labels[v] for v in keep])

    def without(self, vertices):
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def is_bipartite(self):
        side = [None] * self._n
        for root in range(self._n):
            if side[root] is not None:
                continue
            side[root] = 0
            stack = [root]
            while stack:
                u = stack.pop()
                for w in iter_bits(self._adjacency[u]):
                    if side[w] is None:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self._labels)
        graph.add_edges_from((self._labels[u], self._labels[v]) for u, v in self._edges)
        return graph

    @classmethod
    def from_networkx(cls, graph):
        nodes = list(graph.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), [(position[u], position[v]) for u, v in graph.edges()], nodes)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self._n == other._n and self._edges == other._edges
                and self._labels == other._labels)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._edges, self._labels))

    def __repr__(self):
        return 'Graph(n={0}, edges={1})'.format(self._n, len(self._edges))


class PartialOrientation(object):
    """A graph some of whose edges carry a forced direction.

    Each edge of ``base`` is free, forced one way, or forced both ways (a
    bidirected pair). A digraph is the special case without free edges; an
    orientation additionally has no bidirected pairs.

    :param base: the underlying :class:`Graph`.
    :param arcs: iterable of ``(tail, head)`` index pairs, each an edge of ``base``.
    """

    def __init__(self, base, arcs=()):
        out_forced = [0] * base.n
        in_forced = [0] * base.n
        for tail, head in arcs:
            if not (0 <= tail < base.n and 0 <= head < base.n) or not base.has_edge(tail, head):
                raise ValueError(' arc ({0}, {1}) is not an edge of the base graph '.format(tail, head))
            out_forced[tail] |= 1 << head
            in_forced[head] |= 1 << tail
        self._base = base
        self._out = tuple(out_forced)
        self._in = tuple(in_forced)

    @classmethod
    def from_arcs(cls, n, arcs, labels=None):
        """Digraph on ``n`` vertices whose every edge is forced; ``(u, v)`` and ``(v, u)`` make a bidirected pair."""
        arcs = list(arcs)
        edges = set((u, v) if u < v else (v, u) for u, v in arcs)
        return cls(Graph(n, sorted(edges), labels), arcs)

    @classmethod
    def bidirected(cls, graph):
        return cls(graph, [arc for u, v in graph.edges for arc in ((u, v), (v, u))])

    @classmethod
    def lexicographic(cls, graph):
        """The orientation of ``graph`` sending every edge from its lower to its higher index."""
        return cls(graph, graph.edges)

    @property
    def base(self):
        return self._base

    @property
    def n(self):
        return self._base.n

    @property
    def labels(self):
        return self._base.labels

    def underlying(self):
        return self._base

    def arcs(self):
        return [(tail, head) for tail in range(self.n) for head in iter_bits(self._out[tail])]

    def arc_count(self):
        return sum(popcount(mask) for mask in self._out)

    def has_arc(self, tail, head):
        return bool(self._out[tail] >> head & 1)

    def free_edges(self):
        return [(u, v) for u, v in self._base.edges if not (self.has_arc(u, v) or self.has_arc(v, u))]

    def bidirected_pairs(self):
        return [(u, v) for u, v in self._base.edges if self.has_arc(u, v) and self.has_arc(v, u)]

    def is_full(self):
        return all(self._base.adjacency(v) & ~(self._out[v] | self._in[v]) == 0 for v in range(self.n))

    def is_orientation(self):
        return self.is_full() and all(self._out[v] & self._in[v] == 0 for v in range(self.n))

    def free_mask(self, v):
        return self._base.adjacency(v) & ~(self._out[v] | self._in[v])

    def out_mask(self, v, mode='exact'):
        if mode == 'exact':
            if self.free_mask(v):
                raise ValueError(' exact out-neighborhood of `{0}` is undefined: incident edges are free '.format(v))
            return self._out[v]
        if mode == 'pessimistic':
            # drop only the neighbors that are forced to point into v
            return self._base.adjacency(v) & ~(self._in[v] & ~self._out[v])
        raise ValueError(' `mode` must be one of {0} '.format(MODES))

    def in_mask(self, v):
        """Tails of the arcs forced into ``v``."""
        return self._in[v]

    def out_neighborhood(self, v, mode='exact'):
        """:param v: vertex index.
        :param mode: ``'exact'`` for N_+(v) of a digraph, ``'pessimistic'`` for the union of N_+(v) over all
            completions of the free edges.
        :return: :class:`VertexSet`.
        """
        return VertexSet(self.out_mask(v, mode), self.n)

    def force(self, tail, head):
        """A copy with ``tail -> head`` forced; an existing reverse arc is dropped."""
        arcs = [arc for arc in self.arcs() if arc != (head, tail)]
        return PartialOrientation(self._base, arcs + [(tail, head)])

    def complete(self, directions):
        """Orient the free edges: ``directions[i]`` true sends the i-th free edge ``(u, v)``, ``u < v``, as ``u -> v``."""
        free = self.free_edges()
        if len(directions) != len(free):
            raise ValueError(' expected {0} directions, got {1} '.format(len(free), len(directions)))
        extra = [(u, v) if forward else (v, u) for (u, v), forward in zip(free, directions)]
        return PartialOrientation(self._base, self.arcs() + extra)

    def lexicographic_completion(self):
        return self.complete([True] * len(self.free_edges()))

    def random_completion(self, rng):
        """:param rng: a ``numpy.random.Generator``."""
        free = self.free_edges()
        return self.complete([bool(bit) for bit in rng.integers(0, 2, size=len(free))])

    def completions(self):
        free = self.free_edges()
        for code in range(1 << len(free)):
            yield self.complete([bool(code >> i & 1) for i in range(len(free))])

    def mutual_graph(self):
        """The undirected graph formed by the bidirected pairs."""
        return Graph(self.n, self.bidirected_pairs(), self.labels)

    def reverse(self):
        return PartialOrientation(self._base, [(head, tail) for tail, head in self.arcs()])

    def __eq__(self, other):
        return isinstance(other, PartialOrientation) and self._base == other._base and self._out == other._out

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._base, self._out))

    def __repr__(self):
        return 'PartialOrientation(n={0}, arcs={1}, free={2})'.format(self.n, self.arc_count(), len(self.free_edges()))


class Coloring(namedtuple('Coloring', ['colors'])):
    """ Coloring
    Args:
        colors: tuple, ``colors[v]`` is the non-negative integer color of vertex ``v``.
    """
    __slots__ = ()

    def __new__(cls, colors):
        colors = tuple(int(c) for c in colors)
        if any(c < 0 for c in colors):
            raise ValueError(' colors must be non-negative integers ')
        return super(Coloring, cls).__new__(cls, colors)

    @classmethod
    def from_labels(cls, graph, mapping):
        """Build from a ``label -> color`` mapping covering every vertex of ``graph``."""
        missing = [label for label in graph.labels if label not in mapping]
        if missing:
            raise ValueError(' coloring is not total, e.g. `{0}` is uncolored '.format(missing[0]))
        return cls(mapping[label] for label in graph.labels)

    @property
    def n(self):
        return len(self.colors)

    @property
    def num_colors(self):
        return len(set(self.colors))

    def color_of(self, v):
        return self.colors[v]

    def classes(self):
        """``{color: VertexSet}``."""
        masks = {}
        for v, c in enumerate(self.colors):
            masks[c] = masks.get(c, 0) | 1 << v
        return {c: VertexSet(mask, self.n) for c, mask in masks.items()}

    def colors_of(self, mask):
        return frozenset(self.colors[v] for v in iter_bits(mask))

    def canonical(self):
        """Renumber colors 0, 1, ... in order of first appearance by vertex index."""
        renumber = {}
        for c in self.colors:
            if c not in renumber:
                renumber[c] = len(renumber)
        return Coloring(renumber[c] for c in self.colors)

    def same_partition(self, other):
        return self.canonical() == other.canonical()

    def recolor(self, mapping):
        """A copy with ``colors[v] = mapping[v]`` for the vertices in ``mapping``."""
        colors = list(self.colors)
        for v, c in mapping.items():
            colors[v] = c
        return Coloring(colors)


class MultiColoring(namedtuple('MultiColoring', ['sets', 'r', 'h'])):
    """ MultiColoring
    Args:
        sets: tuple of frozensets, ``sets[v]`` is the r-subset of colors of vertex ``v``.
        r: number of colors per vertex.
        h: locality parameter; out-neighborhoods may use at most ``h - r`` colors.
    """
    __slots__ = ()

    def __new__(cls, sets, r, h):
        sets = tuple(frozenset(s) for s in sets)
        if r < 1:
            raise ValueError(' `r` must be at least 1 ')
        if h < r:
            raise ValueError(' `h` must be at least `r` ')
        for v, s in enumerate(sets):
            if len(s) != r:
                raise ValueError(' vertex `{0}` has {1} colors, expected r={2} '.format(v, len(s), r))
        return super(MultiColoring, cls).__new__(cls, sets, r, h)

    @classmethod
    def from_coloring(cls, coloring, h):
        return cls([(c,) for c in coloring.colors], 1, h)

    @property
    def n(self):
        return len(self.sets)

    @property
    def palette(self):
        return tuple(sorted(set().union(*self.sets))) if self.sets else ()

    @property
    def m(self):
        return len(self.palette)

    def color_classes(self):
        """``{color: vertex mask}``."""
        masks = {}
        for v, s in enumerate(self.sets):
            for c in s:
                masks[c] = masks.get(c, 0) | 1 << v
        return masks

    def union_of(self, mask):
        colors = set()
        for v in iter_bits(mask):
            colors |= self.sets[v]
        return colors


def as_digraph(g_or_d):
    """A :class:`PartialOrientation` unchanged, a :class:`Graph` as its bidirected lift."""
    return g_or_d if isinstance(g_or_d, PartialOrientation) else PartialOrientation.bidirected(g_or_d)
