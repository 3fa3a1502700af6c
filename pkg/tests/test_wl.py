import networkx as nx
import pytest
from hypothesis import given, strategies as st

from parakit.graphlab.graph import cycle, path
from parakit.graphlab.oracles import oracle_iso, to_networkx
from parakit.graphlab.wl import DISTINGUISHED, SAME_COLORS, WLRefiner, refines, stable_coloring, wl
from strategies import graphs

TWO_TRIANGLES = cycle(3).disjoint_union(cycle(3))


def test_c6_vs_two_triangles():
    assert wl(1, cycle(6), TWO_TRIANGLES) == SAME_COLORS
    assert wl(2, cycle(6), TWO_TRIANGLES) == DISTINGUISHED
    assert wl(3, cycle(6), TWO_TRIANGLES) == DISTINGUISHED
    assert not oracle_iso(cycle(6), TWO_TRIANGLES)


def test_c5_relabelled_is_isomorphic():
    g = cycle(5)
    h = g.relabel([2, 4, 1, 0, 3])
    assert oracle_iso(g, h)
    assert all(wl(k, g, h) == SAME_COLORS for k in (1, 2, 3))


@pytest.mark.parametrize("k", [0, 4, -1])
def test_levels_outside_range_refused(k):
    with pytest.raises(ValueError):
        wl(k, path(3), path(3))


def test_colour_refinement_matches_networkx_hash(corpus7):
    # 1-WL agrees with networkx's WL hash on which order-6 graphs it separates
    six = [g for g in corpus7 if g.n == 6]
    ours = {}
    theirs = {}
    for g in six:
        ours.setdefault(stable_coloring(g, 1).fingerprint, []).append(g)
        theirs.setdefault(nx.weisfeiler_lehman_graph_hash(to_networkx(g), iterations=6), []).append(g)
    assert sorted(map(len, ours.values())) == sorted(map(len, theirs.values()))


@given(graphs(max_n=6), st.randoms(use_true_random=False), st.integers(1, 3))
def test_isomorphism_invariance(g, rng, k):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert wl(k, g, g.relabel(perm)) == SAME_COLORS


@given(graphs(max_n=6), graphs(max_n=6), st.integers(1, 3))
def test_soundness(g, h, k):
    if wl(k, g, h) == DISTINGUISHED:
        assert not oracle_iso(g, h)


@given(graphs(max_n=6))
def test_refinement_is_monotone(g):
    parts = [stable_coloring(g, k).vertex_partition() for k in (1, 2, 3)]
    assert refines(parts[1], parts[0])
    assert refines(parts[2], parts[1])


def test_private_refiner_agrees_with_shared():
    r = WLRefiner()
    assert r.run(cycle(6), 2).vertex_partition() == stable_coloring(cycle(6), 2).vertex_partition()
