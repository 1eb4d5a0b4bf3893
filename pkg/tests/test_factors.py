import itertools
import random

import pytest

from defcol.constructions import complete_graph, cycle_graph, petersen_graph, random_regular_multigraph, shannon_graph
from defcol.errors import PreconditionError
from defcol.factors import (
    Factor,
    euler_split_even,
    euler_split_odd,
    f_factor,
    k_factor_bridged,
    k_factor_containing,
    petersen_decompose,
)
from defcol.graph import Multigraph, connected_components, find_bridges

from graphs import bridged_regular, single_bridge, f_factor_exists, random_f_instance


def doubled(g):
    return Multigraph(g.n, g.edges + g.edges)


def two_sh7_bridged():
    a = shannon_graph(7)
    low = a.degrees.index(6)
    edges = a.edges + tuple((u + 3, v + 3) for u, v in a.edges) + ((low, low + 3),)
    return Multigraph(6, edges)


# --- Factor value ---------------------------------------------------------------

def test_factor_value():
    g = shannon_graph(4)
    f = Factor(g, (3, 0, 5))
    assert f.edges == (0, 3, 5)
    assert f.serialize() == "0 3 5"
    assert sorted(f.complement().edges + f.edges) == list(range(g.m))
    assert f.subgraph().m == 3
    with pytest.raises(ValueError):
        Factor(g, (1, 1))


# --- Euler splits -----------------------------------------------------------------

@pytest.mark.parametrize("g,k", [(cycle_graph(4), 1), (shannon_graph(4), 2), (complete_graph(5), 2)])
def test_euler_split_even(g, k):
    a, b = euler_split_even(g)
    assert a.is_k_factor(k) and b.is_k_factor(k)
    assert sorted(a.edges + b.edges) == list(range(g.m))


TWO_SQUARES = Multigraph(8, cycle_graph(4).edges + tuple((u + 4, v + 4) for u, v in cycle_graph(4).edges))


@pytest.mark.parametrize("g", [shannon_graph(5), TWO_SQUARES, Multigraph(3, ((0, 1), (1, 2)))])
def test_euler_split_even_preconditions(g):
    with pytest.raises(PreconditionError):
        euler_split_even(g)


def test_euler_split_even_rejects_odd_edge_count():
    with pytest.raises(PreconditionError, match="odd"):
        euler_split_even(cycle_graph(3))


def test_euler_split_odd_examples():
    for e in range(3):
        a, b = euler_split_odd(cycle_graph(3), e)
        assert len(a) == len(b) == 1 and e not in a.edges + b.edges
    g = shannon_graph(6)
    for e in range(g.m):
        a, b = euler_split_odd(g, e)
        assert len(a) == len(b) == 4
        assert max(a.degrees) <= 3 and max(b.degrees) <= 3
        assert sorted(a.edges + b.edges + (e,)) == list(range(g.m))
    with pytest.raises(PreconditionError):
        euler_split_odd(shannon_graph(4), 0)


# --- Petersen decomposition ---------------------------------------------------------

@pytest.mark.parametrize("g,r", [(cycle_graph(6), 1), (complete_graph(5), 2), (shannon_graph(8), 4)])
def test_petersen_examples(g, r):
    parts = petersen_decompose(g)
    assert len(parts) == r
    assert all(p.is_k_factor(2) for p in parts)
    assert sorted(e for p in parts for e in p.edges) == list(range(g.m))


@pytest.mark.parametrize("g", [petersen_graph(), shannon_graph(5)])
def test_petersen_rejects(g):
    with pytest.raises(PreconditionError):
        petersen_decompose(g)


def test_petersen_random_suite():
    rng = random.Random(3)
    for _ in range(150):
        n, r = rng.randint(2, 12), rng.randint(1, 4)
        g = random_regular_multigraph(n, 2 * r, rng.randrange(10**6))
        parts = petersen_decompose(g)
        assert len(parts) == r and all(p.is_k_factor(2) for p in parts)
        assert sorted(e for p in parts for e in p.edges) == list(range(g.m))
        # any group of j parts is a 2j-factor
        assert Factor(g, tuple(e for p in parts[:2] for e in p.edges)).is_k_factor(2 * min(2, r))


# --- f-factors -------------------------------------------------------------------

def test_f_factor_examples():
    assert f_factor(complete_graph(2), [1, 1]).edges == (0,)
    pm = f_factor(complete_graph(4), [1] * 4)
    assert pm.is_k_factor(1)
    assert f_factor(complete_graph(4), [3] * 4).edges == tuple(range(6))
    assert f_factor(shannon_graph(5), [3, 3, 3]) is None
    with pytest.raises(PreconditionError):
        f_factor(complete_graph(3), [3, 0, 0])
    with pytest.raises(PreconditionError):
        f_factor(complete_graph(3), [1, 1])


def test_f_factor_matches_exhaustive_search():
    rng = random.Random(2024)
    for _ in range(300):
        g, f = random_f_instance(rng)
        got = f_factor(g, f)
        assert (got is not None) == f_factor_exists(g, f)
        if got is not None:
            assert got.degrees == tuple(f)


def test_exhaustive_helper_against_itertools():
    rng = random.Random(9)
    for _ in range(80):
        g, f = random_f_instance(rng, max_m=10)
        brute = any(
            Factor(g, sub).degrees == tuple(f)
            for r in range(g.m + 1)
            for sub in itertools.combinations(range(g.m), r)
        )
        assert brute == f_factor_exists(g, f)


def test_f_factor_deterministic():
    g = random_regular_multigraph(10, 5, 1)
    assert f_factor(g, [2] * 10) == f_factor(g, [2] * 10)


# --- k-factors through an edge ---------------------------------------------------------

def test_k_factor_containing_examples():
    dk4 = doubled(complete_graph(4))
    for e in range(dk4.m):
        f = k_factor_containing(dk4, 4, e)
        assert e in f.edges and f.is_k_factor(4)
    k5 = complete_graph(5)
    for e in range(k5.m):
        f = k_factor_containing(k5, 2, e)
        assert e in f.edges and f.is_k_factor(2)
    p = petersen_graph()
    for e in range(p.m):
        f = k_factor_containing(p, 2, e)
        assert e in f.edges and f.is_k_factor(2)


def test_k_factor_containing_preconditions():
    with pytest.raises(PreconditionError):
        k_factor_containing(complete_graph(5), 3, 0)
    with pytest.raises(PreconditionError):
        k_factor_containing(complete_graph(4), 4, 0)
    with pytest.raises(PreconditionError, match="2-edge-connected"):
        k_factor_containing(two_sh7_bridged(), 4, 0)


def test_k_factor_containing_random_suite():
    rng = random.Random(17)
    done = 0
    while done < 60:
        n = rng.randrange(2, 11, 2)
        delta = rng.randint(3, 9)
        if n * delta % 2:
            continue
        g = random_regular_multigraph(n, delta, rng.randrange(10**6))
        if len(connected_components(g)) != 1 or find_bridges(g):
            continue
        done += 1
        for k in range(2, 2 * delta // 3 + 1, 2):
            for e in range(g.m):
                f = k_factor_containing(g, k, e)
                assert e in f.edges and f.is_k_factor(k)


# --- k-factors with a Shannon bridge ----------------------------------------------------

def test_k_factor_bridged_examples():
    g = two_sh7_bridged()
    assert g.is_regular(7) and len(find_bridges(g)) == 1
    assert k_factor_bridged(g, 4).is_k_factor(4)
    assert k_factor_bridged(complete_graph(5), 2).is_k_factor(2)
    assert k_factor_bridged(shannon_graph(6), 4).is_k_factor(4)
    assert len(k_factor_bridged(g, 0)) == 0


def test_k_factor_bridged_single_shannon_end():
    count = 0
    for delta in (3, 5, 7, 9, 11):
        for seed in range(8):
            g = single_bridge(delta, seed, shannon=1 + seed % 2)
            assert g.is_regular(delta) and len(find_bridges(g)) == 1
            for k in range(2, 2 * delta // 3 + 1, 2):
                assert k_factor_bridged(g, k).is_k_factor(k)
                count += 1
    assert count > 0


def test_k_factor_bridged_rejects_two_bridges():
    g = bridged_regular(5, 0, arms=2, max_depth=0)
    assert len(find_bridges(g)) == 2
    with pytest.raises(PreconditionError):
        k_factor_bridged(g, 2)


def test_k_factor_bridged_rejects_non_shannon_bridge():
    # K5 plus a 2-edge matching has degrees (5,5,5,5,4); two copies joined
    # at their degree-4 vertices give a 5-regular graph with one bridge
    # whose sides both have five vertices
    side = complete_graph(5).edges + ((0, 1), (2, 3))
    g = Multigraph(10, side + tuple((u + 5, v + 5) for u, v in side) + ((4, 9),))
    assert g.is_regular(5) and find_bridges(g) == {g.m - 1}
    for h in (g, single_bridge(7, 3, shannon=0)):
        with pytest.raises(PreconditionError, match="Shannon"):
            k_factor_bridged(h, 2)
