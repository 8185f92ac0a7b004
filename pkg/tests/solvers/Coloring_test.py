import pytest
from hypothesis import given, settings

from locochrome.graphs.core import Coloring, PartialOrientation
from locochrome.graphs.families import complete_graph, cycle_graph, directed_cycle, empty_graph, path_graph, \
    petersen_graph
from locochrome.graphs.universal import counterexample_certificates, counterexample_graph, universal_directed, \
    universal_undirected
from locochrome.solvers.coloring import chromatic, directed_local_chromatic, directed_local_chromatic_max, \
    enumerate_local_colorings, greedy_coloring, is_proper, locality, uncovered_patterns, \
    verify_orientation_certificate
from locochrome.solvers.coloring import local_chromatic
from locochrome.utils import Budget, BudgetExhausted, EnumerationOverflow

from ..utils import brute_chromatic, brute_directed_local_chromatic, brute_local_chromatic, \
    brute_local_colorings, digraphs, graphs


def test_is_proper_and_locality():
    g = cycle_graph(5)
    c = Coloring([0, 1, 0, 1, 2])
    assert is_proper(g, c)
    report = locality(g, c)
    assert report.per_vertex == (3, 2, 2, 3, 3)
    assert report.max == 3
    assert not is_proper(g, Coloring([0, 0, 1, 0, 1]))
    with pytest.raises(ValueError):
        locality(g, Coloring([0, 0, 1, 0, 1]))
    with pytest.raises(ValueError):
        is_proper(g, Coloring([0, 1]))


def test_locality_directed():
    d = directed_cycle(3)
    c = Coloring([0, 1, 2])
    assert locality(d, c, directed=True).max == 2
    assert locality(d, c).max == 3


def test_greedy_coloring_is_proper():
    for g in (petersen_graph(), cycle_graph(7), universal_undirected(5, 3)):
        assert is_proper(g, greedy_coloring(g))


@pytest.mark.parametrize(
    'g,psi',
    [(path_graph(4), 2), (cycle_graph(4), 2), (cycle_graph(5), 3), (complete_graph(4), 4), (petersen_graph(), 3),
     (empty_graph(3), 1), (empty_graph(0), 0), (universal_undirected(4, 3), 3)
     ]
)
def test_local_chromatic(g, psi):
    value, witness = local_chromatic(g)
    assert value == psi
    assert is_proper(g, witness)
    assert locality(g, witness).max == psi


@pytest.mark.slow
def test_local_chromatic_gap_graph():
    g, _ = counterexample_graph()
    value, witness = local_chromatic(g)
    assert value == 4
    assert locality(g, witness).max == 4


@pytest.mark.parametrize(
    'd,psi_d',
    [(directed_cycle(3), 2), (directed_cycle(5), 2), (PartialOrientation.bidirected(complete_graph(3)), 3),
     (cycle_graph(5), 3), (PartialOrientation.from_arcs(3, []), 1), (universal_directed(4, 2), 2)
     ]
)
def test_directed_local_chromatic(d, psi_d):
    value, witness = directed_local_chromatic(d)
    assert value == psi_d
    assert locality(d, witness, directed=True).max == psi_d


def test_directed_local_chromatic_needs_full_digraph():
    with pytest.raises(ValueError):
        directed_local_chromatic(PartialOrientation(complete_graph(2)))


@pytest.mark.parametrize(
    'g,chi',
    [(cycle_graph(5), 3), (cycle_graph(6), 2), (complete_graph(4), 4), (petersen_graph(), 3), (empty_graph(3), 1)
     ]
)
def test_chromatic(g, chi):
    value, witness = chromatic(g)
    assert value == chi == witness.num_colors
    assert is_proper(g, witness)


def test_chromatic_budget_exhausted():
    with pytest.raises(BudgetExhausted) as info:
        chromatic(cycle_graph(5), Budget(work_units=1))
    assert info.value.lower == 2
    assert info.value.upper == 3
    assert is_proper(cycle_graph(5), info.value.witness)


@given(graphs(max_n=6))
@settings(deadline=None, max_examples=60)
def test_local_chromatic_matches_brute_force(g):
    assert local_chromatic(g)[0] == brute_local_chromatic(g)
    assert chromatic(g)[0] == brute_chromatic(g)


@given(digraphs(max_n=6))
@settings(deadline=None, max_examples=60)
def test_directed_local_chromatic_matches_brute_force(d):
    value, _ = directed_local_chromatic(d)
    assert value == brute_directed_local_chromatic(d)
    assert value <= local_chromatic(d.base)[0]


@given(graphs(max_n=6))
@settings(deadline=None, max_examples=40)
def test_enumerate_local_colorings_matches_brute_force(g):
    for k in (1, 2, 3):
        assert enumerate_local_colorings(g, k, g.n) == brute_local_colorings(g, k, g.n)


def test_enumerate_local_colorings_small():
    found = enumerate_local_colorings(cycle_graph(4), 2, 4)
    assert found == [Coloring([0, 1, 0, 1])]
    assert enumerate_local_colorings(complete_graph(3), 2, 3) == []
    assert len(enumerate_local_colorings(empty_graph(3), 1, 3)) == 5


def test_enumerate_local_colorings_limits():
    with pytest.raises(EnumerationOverflow):
        enumerate_local_colorings(empty_graph(3), 1, 3, cap=2)
    with pytest.raises(ValueError):
        enumerate_local_colorings(empty_graph(3), 1, 4)


def test_verify_orientation_certificate():
    d = PartialOrientation(complete_graph(2))
    assert verify_orientation_certificate(d, Coloring([0, 1]), 2)
    assert not verify_orientation_certificate(d, Coloring([0, 1]), 1)
    with pytest.raises(ValueError):
        verify_orientation_certificate(d, Coloring([0, 0]), 2)


def test_uncovered_patterns():
    g = complete_graph(2)
    assert uncovered_patterns(g, [PartialOrientation(g, [(0, 1)])]) == [[(1, 0)]]
    assert uncovered_patterns(g, [PartialOrientation(g, [(0, 1)]), PartialOrientation(g, [(1, 0)])]) == []
    assert uncovered_patterns(g, [PartialOrientation(g)]) == []


@pytest.mark.parametrize(
    'g,value',
    [(complete_graph(3), 3), (cycle_graph(4), 2), (cycle_graph(5), 3), (empty_graph(2), 1)
     ]
)
def test_directed_local_chromatic_max_exhaustive(g, value):
    bounds = directed_local_chromatic_max(g)
    assert bounds.exact
    assert bounds.lower == bounds.upper == value


def test_directed_local_chromatic_max_rejects():
    with pytest.raises(ValueError):
        directed_local_chromatic_max(complete_graph(7))
    with pytest.raises(ValueError):
        directed_local_chromatic_max(complete_graph(3), strategy='guess')
    with pytest.raises(ValueError):
        directed_local_chromatic_max(complete_graph(3), strategy='certificates', certificates=[])


def test_directed_local_chromatic_max_reports_gaps():
    g = complete_graph(3)
    certificate = (PartialOrientation(g, [(0, 1)]), Coloring([0, 1, 2]))
    bounds = directed_local_chromatic_max(g, strategy='certificates', certificates=[certificate])
    assert bounds.upper is None and not bounds.exact
    assert bounds.gaps == [[(1, 0)]]


@given(graphs(max_n=5))
@settings(deadline=None, max_examples=30)
def test_directed_local_chromatic_max_certificates_bracket_exhaustive(g):
    if len(g.edges) > 7:
        return
    exact = directed_local_chromatic_max(g)
    completions = list(PartialOrientation(g).completions())

    tight = [(d, directed_local_chromatic(d)[1]) for d in completions]
    bounds = directed_local_chromatic_max(g, strategy='certificates', certificates=tight)
    assert bounds.gaps == []
    assert bounds.lower <= exact.lower == bounds.upper

    _, c = chromatic(g)
    if g.edges:
        u, v = g.edges[0]
        coarse = [(PartialOrientation(g, [(u, v)]), c), (PartialOrientation(g, [(v, u)]), c)]
    else:
        coarse = [(PartialOrientation(g), c)]
    bounds = directed_local_chromatic_max(g, strategy='certificates', certificates=coarse)
    assert bounds.gaps == []
    assert bounds.lower <= exact.lower <= bounds.upper
    assert all(verify_orientation_certificate(d, c, bounds.upper) for d, _ in coarse)

    if len(completions) > 1:
        partial = tight[1:]
        bounds = directed_local_chromatic_max(g, strategy='certificates', certificates=partial)
        assert bounds.upper is None and bounds.gaps


@pytest.mark.slow
def test_directed_local_chromatic_max_gap_graph():
    g, _ = counterexample_graph()
    bounds = directed_local_chromatic_max(g, strategy='certificates', certificates=counterexample_certificates(g))
    assert bounds.gaps == []
    assert bounds.lower == bounds.upper == 3


if __name__ == "__main__":
    pass
