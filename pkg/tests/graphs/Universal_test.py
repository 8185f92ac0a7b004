import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locochrome.graphs.core import PartialOrientation
from locochrome.graphs.universal import SetFamily, counterexample_certificates, counterexample_graph, \
    generalized_binomial, kruskal_katona_check, kruskal_katona_l, kruskal_katona_sweep, natural_coloring, \
    natural_multicoloring, shadow, universal_directed, universal_labels, universal_multi, universal_undirected
from locochrome.solvers.coloring import is_proper, locality, verify_orientation_certificate
from locochrome.solvers.fractional import is_local_multicoloring


@pytest.mark.parametrize(
    'm,k',
    [(3, 2), (4, 3), (5, 3), (4, 1), (4, 4)
     ]
)
def test_universal_vertex_counts(m, k):
    assert len(universal_labels(m, k)) == m * comb(m - 1, k - 1)
    assert universal_undirected(m, k).n == m * comb(m - 1, k - 1)


@pytest.mark.parametrize(
    'm,k',
    [(3, 0), (3, 4)
     ]
)
def test_universal_rejects(m, k):
    with pytest.raises(ValueError):
        universal_undirected(m, k)


@pytest.mark.parametrize(
    'm,k',
    [(4, 2), (4, 3), (5, 3)
     ]
)
def test_natural_colorings_are_local(m, k):
    c = natural_coloring(m, k)
    assert is_proper(universal_undirected(m, k), c)
    assert locality(universal_undirected(m, k), c).max <= k
    assert locality(universal_directed(m, k), c, directed=True).max <= k
    assert c.num_colors == m


@pytest.mark.parametrize(
    'm,k',
    [(4, 2), (4, 3), (5, 3)
     ]
)
def test_mutual_graph_of_directed_universal(m, k):
    d = universal_directed(m, k)
    assert d.is_full()
    assert d.mutual_graph() == universal_undirected(m, k)


@pytest.mark.parametrize(
    'm,k',
    [(4, 3), (5, 3)
     ]
)
def test_color_permutations_are_automorphisms(m, k):
    g = universal_undirected(m, k)
    for perm in itertools.permutations(range(1, m + 1)):
        p = dict(zip(range(1, m + 1), perm))
        image = [g.index((p[x], tuple(sorted(p[c] for c in a)))) for x, a in g.labels]
        assert sorted(image) == list(range(g.n))
        for u, v in g.edges:
            assert g.has_edge(image[u], image[v])


def test_universal_directed_arcs():
    d = universal_directed(5, 3)
    tail = d.base.index((1, (2, 3)))
    assert d.has_arc(tail, d.base.index((2, (1, 4))))
    assert not d.has_arc(tail, d.base.index((4, (1, 2))))


@pytest.mark.parametrize(
    'm,h,r,n',
    [(5, 4, 2, 30), (4, 2, 1, 12), (6, 5, 2, 60)
     ]
)
def test_universal_multi(m, h, r, n):
    d = universal_multi(m, h, r)
    assert d.n == n
    mc = natural_multicoloring(m, h, r)
    assert mc.r == r and mc.h == h
    assert is_local_multicoloring(d, mc, strict=True)


@pytest.mark.parametrize(
    'm,h,r',
    [(5, 3, 2), (3, 4, 1), (5, 4, 0)
     ]
)
def test_universal_multi_rejects(m, h, r):
    with pytest.raises(ValueError):
        universal_multi(m, h, r)


def test_counterexample_graph():
    g, (x, y, z) = counterexample_graph()
    assert g.n == 33
    assert len(g.edges) == len(universal_undirected(5, 3).edges) + 6
    assert [g.index(label) for label in (x, y, z)] == [30, 31, 32]
    assert g.has_edge(g.index(x), g.index((2, (1, 3))))
    assert g.has_edge(g.index(z), g.index((1, (4, 5))))


def test_counterexample_certificates():
    g, (x, y, _) = counterexample_graph()
    certificates = counterexample_certificates(g)
    assert len(certificates) == 2
    forward, backward = certificates
    assert forward.orientation.has_arc(g.index(x), g.index(y))
    assert backward.orientation.has_arc(g.index(y), g.index(x))
    for d, c in certificates:
        assert isinstance(d, PartialOrientation) and len(d.arcs()) == 1
        assert is_proper(g, c)
        assert verify_orientation_certificate(d, c, 3)
        assert not verify_orientation_certificate(d, c, 2)


def test_SetFamily():
    f = SetFamily(4, [(1, 2), (2, 1), (3, 4)])
    assert len(f) == 2 and f.size == 2
    assert (1, 2) in f
    assert [tuple(sorted(s)) for s in f] == [(1, 2), (3, 4)]
    with pytest.raises(ValueError):
        SetFamily(4, [(1, 2), (3,)])
    with pytest.raises(ValueError):
        SetFamily(3, [(1, 4)])


def test_shadow():
    f = SetFamily(4, [(1, 2, 3), (2, 3, 4)])
    s = shadow(f, 2)
    assert len(s) == 5
    assert len(shadow(f, 1)) == 4
    with pytest.raises(ValueError):
        shadow(f, 4)


def test_shadow_of_full_layer():
    layer = SetFamily(4, itertools.combinations(range(1, 5), 3))
    assert len(layer) == 4
    assert len(shadow(layer, 2)) == 6
    assert shadow(layer, 2) == SetFamily(4, itertools.combinations(range(1, 5), 2))


@given(st.sets(st.sampled_from(list(itertools.combinations(range(1, 6), 3)))), st.data())
@settings(deadline=None, max_examples=60)
def test_shadow_monotone(members, data):
    smaller = data.draw(st.sets(st.sampled_from(sorted(members)))) if members else set()
    a, b = SetFamily(5, smaller), SetFamily(5, members)
    assert a.issubset(b)
    for r in (1, 2):
        assert shadow(a, r).issubset(shadow(b, r))


@pytest.mark.parametrize(
    'size,j,l',
    [(10, 3, 5), (1, 2, 2), (6, 2, 4), (35, 4, 7)
     ]
)
def test_kruskal_katona_l_on_binomials(size, j, l):
    assert kruskal_katona_l(size, j) == pytest.approx(l, abs=1e-6)
    assert generalized_binomial(l, j) == pytest.approx(size)


def test_kruskal_katona_check_full_layer():
    f = SetFamily(5, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    check = kruskal_katona_check(f, 2)
    assert check.family_size == 4 and check.shadow_size == 6
    assert check.l == pytest.approx(4, abs=1e-6)
    assert check.holds


def test_kruskal_katona_sweep_small():
    sweep = kruskal_katona_sweep(max_ground=5, families_per_size=64, seed=7)
    assert sweep.families > 0 and sweep.checks > 0
    assert sweep.violations == []


if __name__ == "__main__":
    pass
