import random
from collections import Counter

import pytest

from propcolor import (
    BipartiteMultigraph,
    PreconditionError,
    build_assignment,
    build_color_vertex_multigraph,
    build_family,
    decompose_regular,
    perfect_matching_with_forced_edge,
    saturating_matching,
)
from propcolor.matching import _adjacency, _kuhn

from helpers import exhaustive_left_saturating, random_regular_multigraph


def two_by_two(k: int = 1) -> BipartiteMultigraph:
    mult = {(x, 10 + y): k for x in (0, 1) for y in (0, 1)}
    return BipartiteMultigraph([0, 1], [10, 11], mult)


def test_build_color_vertex_multigraph():
    g = build_family("complete", [2])
    L = build_assignment(g, [[1, 2]] * 2)
    B = build_color_vertex_multigraph(g, L)
    assert B.regular_degree() == 2
    assert B.mult == {(0, 1): 1, (0, 2): 1, (1, 1): 1, (1, 2): 1}
    Lm = build_assignment(g, [[1, 1], [1, 2]], multi=True)
    Bm = build_color_vertex_multigraph(g, Lm)
    assert Bm.mult[(0, 1)] == 2


def test_multigraph_regular_when_all_eta_k():
    rng = random.Random(5)
    for _ in range(50):
        size, k = rng.randint(1, 6), rng.randint(1, 4)
        left, right, mult = random_regular_multigraph(rng, size, k)
        B = BipartiteMultigraph(left, right, mult)
        assert B.regular_degree() == k


def test_saturating_matching_basic():
    B = two_by_two()
    pairs, violator = saturating_matching(B)
    assert violator is None and len(pairs) == 2
    empty = BipartiteMultigraph([], [10], {})
    assert saturating_matching(empty) == ([], None)


def test_saturating_matching_violator():
    B = BipartiteMultigraph([0, 1], [10], {(0, 10): 1, (1, 10): 1})
    pairs, violator = saturating_matching(B)
    assert pairs is None and violator == [0, 1]


def test_violator_only_when_truly_infeasible():
    rng = random.Random(9)
    for _ in range(300):
        nx, ny = rng.randint(1, 5), rng.randint(1, 5)
        mult = {
            (x, 10 + y): 1
            for x in range(nx) for y in range(ny) if rng.random() < 0.4
        }
        B = BipartiteMultigraph(range(nx), [10 + y for y in range(ny)], mult)
        pairs, violator = saturating_matching(B)
        adj = _adjacency(B.mult)
        feasible = exhaustive_left_saturating(list(range(nx)), adj)
        if pairs is not None:
            assert feasible and len(pairs) == nx
            assert len({y for _, y in pairs}) == nx
            assert all(B.mult.get(e, 0) >= 1 for e in pairs)
        else:
            assert not feasible
            neighborhood = {y for x in violator for y in adj.get(x, ())}
            assert len(neighborhood) < len(violator)


def test_decompose_regular_examples():
    one = BipartiteMultigraph([0, 1], [10, 11], {(0, 10): 1, (1, 11): 1})
    assert decompose_regular(one, 1) == [[(0, 10), (1, 11)]]
    rounds = decompose_regular(two_by_two(), 2)
    assert sorted(map(sorted, rounds)) == [
        [(0, 10), (1, 11)], [(0, 11), (1, 10)],
    ]
    with pytest.raises(PreconditionError):
        decompose_regular(two_by_two(), 3)


def test_decompose_regular_random():
    rng = random.Random(17)
    for _ in range(60):
        size, k = rng.randint(1, 8), rng.randint(1, 5)
        left, right, mult = random_regular_multigraph(rng, size, k)
        B = BipartiteMultigraph(left, right, mult)
        rounds = decompose_regular(B, k)
        assert len(rounds) == k
        total: Counter = Counter()
        for pairs in rounds:
            assert len(pairs) == size
            assert len({x for x, _ in pairs}) == size
            assert len({y for _, y in pairs}) == size
            total.update(pairs)
        assert total == Counter(B.mult)


def test_forced_edge_examples():
    one = BipartiteMultigraph([0, 1], [10, 11], {(0, 10): 1, (1, 11): 1})
    assert perfect_matching_with_forced_edge(one, 1, (0, 10)) == [(0, 10), (1, 11)]
    pairs = perfect_matching_with_forced_edge(two_by_two(), 2, (0, 11))
    assert pairs == [(0, 11), (1, 10)]
    with pytest.raises(PreconditionError):
        perfect_matching_with_forced_edge(one, 1, (0, 11))  # absent edge
    with pytest.raises(PreconditionError):
        perfect_matching_with_forced_edge(
            BipartiteMultigraph([0], [10], {(0, 10): 1}), 2, (0, 10)
        )  # not 2-regular


def test_forced_edge_random():
    rng = random.Random(23)
    for _ in range(60):
        size, k = rng.randint(1, 8), rng.randint(1, 5)
        left, right, mult = random_regular_multigraph(rng, size, k)
        B = BipartiteMultigraph(left, right, mult)
        forced = rng.choice(sorted(B.mult))
        pairs = perfect_matching_with_forced_edge(B, k, forced)
        assert forced in pairs
        assert len(pairs) == size
        assert len({x for x, _ in pairs}) == size
        assert len({y for _, y in pairs}) == size


def test_kuhn_is_deterministic():
    B = two_by_two()
    assert saturating_matching(B) == saturating_matching(B)
    adj = _adjacency(B.mult)
    assert _kuhn([0, 1], adj) == _kuhn([0, 1], adj)
