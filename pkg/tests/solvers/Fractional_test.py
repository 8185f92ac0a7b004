from fractions import Fraction

import pytest
from hypothesis import given, settings

from locochrome.graphs.core import Graph, MultiColoring, PartialOrientation
from locochrome.graphs.families import arcless_digraph, complete_graph, cycle_graph, directed_cycle, \
    empty_graph, kneser_graph, petersen_graph
from locochrome.graphs.universal import natural_multicoloring, universal_directed, universal_multi
from locochrome.solvers.coloring import chromatic, directed_local_chromatic
from locochrome.solvers.fractional import FractionalClique, FractionalColoring, fractional_chromatic, \
    is_local_multicoloring, local_weight, multicoloring_from_fractional, psi_d_star, \
    psi_d_star_upper_from_multicoloring, verify_ratio, vertex_transitive_chi_star
from locochrome.graphs.independent import max_clique

from ..utils import digraphs, graphs, is_fractional_clique


@pytest.mark.parametrize(
    'g,chi_star',
    [(cycle_graph(5), Fraction(5, 2)), (petersen_graph(), Fraction(5, 2)), (complete_graph(4), 4),
     (cycle_graph(4), 2), (kneser_graph(6, 2), 3), (empty_graph(3), 1), (cycle_graph(7), Fraction(7, 3))
     ]
)
@pytest.mark.parametrize('method', ['enumerate', 'column_generation'])
def test_fractional_chromatic(g, chi_star, method):
    result = fractional_chromatic(g, method=method)
    assert result.value == chi_star
    assert result.coloring.total_weight() == chi_star
    assert result.clique.total() == chi_star
    assert result.coloring.is_covering()
    assert result.clique.is_feasible(g)


def test_fractional_chromatic_rejects():
    with pytest.raises(ValueError):
        fractional_chromatic(Graph(0))
    with pytest.raises(ValueError):
        fractional_chromatic(cycle_graph(5), method='guess')


def test_fractional_chromatic_falls_back_to_column_generation():
    result = fractional_chromatic(petersen_graph(), limit=3)
    assert result.value == Fraction(5, 2)


@given(graphs(max_n=7))
@settings(deadline=None, max_examples=60)
def test_fractional_chromatic_sandwich(g):
    result = fractional_chromatic(g)
    assert max_clique(g)[0] <= result.value <= chromatic(g)[0]
    assert is_fractional_clique(g, result.clique.weights)


def test_FractionalColoring():
    g = cycle_graph(5)
    fc = FractionalColoring(g, [([0, 2], Fraction(1, 2)), ([0, 2], Fraction(1, 2)), ([1, 3], 1), ([4, 1], 0)])
    assert len(fc) == 2
    assert fc.coverage(0) == 1 and fc.coverage(4) == 0
    assert not fc.is_covering()
    assert fc.seen_weight(0b10001) == 1
    with pytest.raises(ValueError):
        FractionalColoring(g, [([0, 1], 1)])
    with pytest.raises(ValueError):
        FractionalColoring(g, [([0], -1)])


def test_FractionalClique():
    with pytest.raises(ValueError):
        FractionalClique([1, -1])
    assert FractionalClique([Fraction(1, 2)] * 5).is_feasible(cycle_graph(5))
    assert not FractionalClique([Fraction(2, 3)] * 5).is_feasible(cycle_graph(5))


@pytest.mark.parametrize(
    'd,value',
    [(directed_cycle(3), 2), (directed_cycle(5), 2), (PartialOrientation.bidirected(complete_graph(3)), 3),
     (arcless_digraph(3), 1), (universal_directed(4, 2), 2)
     ]
)
@pytest.mark.parametrize('method', ['enumerate', 'column_generation'])
def test_psi_d_star(d, value, method):
    result = psi_d_star(d, method=method)
    assert result.value == value
    assert local_weight(d, result.coloring) == value
    assert result.coloring.is_covering()


@pytest.mark.parametrize('method', ['enumerate', 'column_generation'])
def test_psi_d_star_bidirected_cycle(method):
    result = psi_d_star(PartialOrientation.bidirected(cycle_graph(5)), method=method)
    assert result.value == Fraction(5, 2)


@given(graphs(max_n=8))
@settings(deadline=None, max_examples=40)
def test_psi_d_star_bidirected_equals_chi_star(g):
    assert psi_d_star(PartialOrientation.bidirected(g)).value == fractional_chromatic(g).value


def test_psi_d_star_rejects():
    with pytest.raises(ValueError):
        psi_d_star(PartialOrientation(complete_graph(2)))
    with pytest.raises(ValueError):
        psi_d_star(arcless_digraph(0))


@given(digraphs(max_n=6))
@settings(deadline=None, max_examples=40)
def test_psi_d_star_methods_agree(d):
    enumerated = psi_d_star(d, method='enumerate')
    generated = psi_d_star(d, method='column_generation')
    assert enumerated.value == generated.value
    assert 1 <= enumerated.value <= directed_local_chromatic(d)[0]


@given(digraphs(max_n=6))
@settings(deadline=None, max_examples=40)
def test_multicoloring_from_fractional(d):
    result = psi_d_star(d)
    mc = multicoloring_from_fractional(d, result.coloring)
    assert is_local_multicoloring(d, mc)
    assert Fraction(mc.h, mc.r) <= result.value


def test_is_local_multicoloring():
    d = directed_cycle(3)
    good = MultiColoring([(1,), (2,), (3,)], 1, 2)
    assert is_local_multicoloring(d, good)
    assert not is_local_multicoloring(d, MultiColoring([(1,), (2,), (3,)], 1, 1))
    clash = MultiColoring([(1,), (1,), (2,)], 1, 3)
    assert not is_local_multicoloring(d, clash)
    with pytest.raises(ValueError):
        is_local_multicoloring(d, clash, strict=True)
    with pytest.raises(ValueError):
        is_local_multicoloring(d, MultiColoring([(1,)], 1, 2))


def test_psi_d_star_upper_from_multicoloring():
    d = universal_multi(5, 4, 2)
    bound = psi_d_star_upper_from_multicoloring(d, natural_multicoloring(5, 4, 2))
    assert bound.value == 2
    assert bound.coloring.is_covering()
    assert local_weight(d, bound.coloring) <= bound.value
    assert psi_d_star(d).value <= bound.value
    with pytest.raises(ValueError):
        psi_d_star_upper_from_multicoloring(directed_cycle(3), MultiColoring([(1,), (1,), (2,)], 1, 3))


@pytest.mark.parametrize(
    'g,value',
    [(petersen_graph(), Fraction(5, 2)), (cycle_graph(5), Fraction(5, 2)), (complete_graph(3), 3)
     ]
)
def test_vertex_transitive_chi_star(g, value):
    assert vertex_transitive_chi_star(g) == value


def test_verify_ratio():
    report = verify_ratio(directed_cycle(3))
    assert report.chi_star == 3 and report.psi_d_star == 2
    assert report.holds and report.slack == 1
    report = verify_ratio(directed_cycle(5), k_upper=2, chi_star=Fraction(5, 2))
    assert report.psi_d_star is None and report.holds
    with pytest.raises(ValueError):
        verify_ratio(arcless_digraph(3))


if __name__ == "__main__":
    pass
