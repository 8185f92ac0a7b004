import pytest
from hypothesis import given, settings

from locochrome.graphs.core import Coloring, Graph, MultiColoring, PartialOrientation, VertexSet, as_digraph
from locochrome.graphs.families import complete_graph, cycle_graph, directed_cycle, petersen_graph
from locochrome.graphs.universal import counterexample_graph

from ..utils import partial_orientations


@pytest.mark.parametrize(
    'n,edges,labels',
    [(3, [(0, 0)], None), (3, [(0, 3)], None), (3, [(0, 1), (1, 0)], None), (2, [], ['a', 'a']),
     (2, [], ['a']), (-1, [], None)
     ]
)
def test_Graph_rejects(n, edges, labels):
    with pytest.raises(ValueError):
        Graph(n, edges, labels)


def test_Graph_adjacency_symmetric():
    g = petersen_graph()
    for u in range(g.n):
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert all(g.degree(v) == 3 for v in range(g.n))
    assert len(g.edges) == 15


def test_Graph_labels():
    g = Graph(3, [(0, 1), (1, 2)], ['a', ('b', (1, 2)), 7])
    assert g.index(('b', (1, 2))) == 1
    assert g.label(2) == 7
    with pytest.raises(ValueError):
        g.index('missing')
    sub = g.induced_subgraph([2, 1])
    assert sub.labels == (('b', (1, 2)), 7)
    assert sub.edges == ((0, 1),)


@pytest.mark.parametrize(
    'g,bipartite',
    [(cycle_graph(4), True), (cycle_graph(5), False), (complete_graph(2), True), (Graph(3), True),
     (petersen_graph(), False)
     ]
)
def test_Graph_is_bipartite(g, bipartite):
    assert g.is_bipartite() == bipartite


def test_Graph_complement():
    g = cycle_graph(5)
    h = g.complement()
    assert len(h.edges) == 5
    assert h.complement() == g


def test_Graph_networkx_round_trip():
    g = Graph(3, [(0, 2)], ['x', 'y', 'z'])
    assert Graph.from_networkx(g.to_networkx()) == g


def test_VertexSet_operations():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 3])
    assert (a | b).tolist() == [0, 2, 3]
    assert (a & b).tolist() == [2]
    assert (a - b).tolist() == [0]
    assert 2 in a and 1 not in a and 9 not in a
    assert len(a) == 2 and not VertexSet.empty(5)
    assert (a & b).issubset(a) and not a.isdisjoint(b)
    assert sorted([b, a]) == [a, b]
    with pytest.raises(ValueError):
        VertexSet.of(3, [3])


def test_out_neighborhood_directed_cycle():
    d = directed_cycle(3)
    assert d.out_neighborhood(0, 'exact').tolist() == [1]
    assert d.out_neighborhood(0, 'pessimistic').tolist() == [1]
    assert d.is_orientation()


def test_out_neighborhood_free_edge():
    d = PartialOrientation(complete_graph(2))
    assert d.out_neighborhood(0, 'pessimistic').tolist() == [1]
    with pytest.raises(ValueError):
        d.out_neighborhood(0, 'exact')
    with pytest.raises(ValueError):
        d.out_neighborhood(0, 'nonsense')


def test_out_neighborhood_gap_graph():
    g, (x, y, z) = counterexample_graph()
    d = PartialOrientation(g, [(g.index(x), g.index(y))])
    seen = set(g.label(v) for v in d.out_neighborhood(g.index(y), 'pessimistic'))
    assert seen == {z, (3, (1, 2))}


@given(partial_orientations())
@settings(deadline=None, max_examples=60)
def test_pessimistic_covers_every_completion(d):
    if len(d.free_edges()) > 6:
        return
    for completion in d.completions():
        assert completion.is_full()
        for v in range(d.n):
            assert completion.out_mask(v) & ~d.out_mask(v, 'pessimistic') == 0


def test_PartialOrientation_views():
    g = cycle_graph(4)
    d = PartialOrientation(g, [(0, 1), (1, 0), (1, 2)])
    assert d.bidirected_pairs() == [(0, 1)]
    assert d.free_edges() == [(0, 3), (2, 3)]
    assert not d.is_full()
    assert len(list(d.completions())) == 4
    full = d.lexicographic_completion()
    assert full.has_arc(0, 3) and full.has_arc(2, 3)
    assert full.mutual_graph().edges == ((0, 1),)
    assert full.reverse().has_arc(3, 0)
    assert PartialOrientation.lexicographic(g).is_orientation()
    with pytest.raises(ValueError):
        PartialOrientation(g, [(0, 2)])


def test_as_digraph_bidirects_graphs():
    d = as_digraph(complete_graph(3))
    assert d.is_full() and len(d.bidirected_pairs()) == 3
    assert as_digraph(d) is d


def test_Coloring_canonical():
    c = Coloring([5, 2, 5, 7])
    assert c.canonical() == Coloring([0, 1, 0, 2])
    assert c.same_partition(Coloring([1, 0, 1, 3]))
    assert c.num_colors == 3
    assert c.classes()[5].tolist() == [0, 2]
    assert c.recolor({3: 2}).num_colors == 2
    with pytest.raises(ValueError):
        Coloring([0, -1])


def test_Coloring_from_labels():
    g = Graph(2, [(0, 1)], ['a', 'b'])
    assert Coloring.from_labels(g, {'a': 3, 'b': 4}).colors == (3, 4)
    with pytest.raises(ValueError):
        Coloring.from_labels(g, {'a': 3})


@pytest.mark.parametrize(
    'sets,r,h',
    [([(1, 2), (3,)], 2, 4), ([(1,)], 0, 2), ([(1, 2)], 2, 1)
     ]
)
def test_MultiColoring_rejects(sets, r, h):
    with pytest.raises(ValueError):
        MultiColoring(sets, r, h)


def test_MultiColoring_palette():
    mc = MultiColoring([(1, 2), (3, 4), (1, 3)], 2, 4)
    assert mc.palette == (1, 2, 3, 4)
    assert mc.union_of(0b011) == {1, 2, 3, 4}
    assert mc.color_classes()[1] == 0b101
    assert MultiColoring.from_coloring(Coloring([0, 1]), 2).sets == (frozenset([0]), frozenset([1]))


if __name__ == "__main__":
    pass
