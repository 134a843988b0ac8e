"""Shared generators and independent brute-force oracles for the test suite.

The brute forcers here deliberately re-implement the definitions from
scratch (plain product enumeration, direct arithmetic) so that they stay
independent of the package's search engine.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, permutations, product

from propcolor import Graph, ListAssignment, build_assignment


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_assignment(rng: random.Random, g: Graph, k: int,
                      pool: int | None = None) -> ListAssignment:
    hi = pool if pool is not None else 2 * k
    rows = [sorted(rng.sample(range(1, hi + 1), k)) for _ in range(g.n)]
    return build_assignment(g, rows, k=k)


def all_graphs(n: int) -> list[Graph]:
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(2 ** len(pairs)):
        out.append(Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1]))
    return out


def brute_force_proportional(g: Graph, L: ListAssignment):
    """First proportional coloring by plain product enumeration, or None."""
    bounds = {}
    for c in L.palette:
        eta = L.eta(c)
        bounds[c] = (eta // L.k, -(-eta // L.k))
    for colors in product(*[sorted(set(row)) for row in L.lists]):
        if any(colors[u] == colors[v] for u, v in g.edges):
            continue
        counts = Counter(colors)
        if all(lo <= counts.get(c, 0) <= hi for c, (lo, hi) in bounds.items()):
            return list(colors)
    return None


def brute_force_no_excess(g: Graph, L: ListAssignment):
    """First proper coloring with every color used at most ceil(eta/k) times."""
    caps = {c: -(-L.eta(c) // L.k) for c in L.palette}
    for colors in product(*[sorted(set(row)) for row in L.lists]):
        if any(colors[u] == colors[v] for u, v in g.edges):
            continue
        counts = Counter(colors)
        if all(counts.get(c, 0) <= caps[c] for c in caps):
            return list(colors)
    return None


def naive_decide(g: Graph, k: int) -> bool:
    """Choosability decision without any symmetry breaking.

    Any k-assignment touches at most n*k distinct colors, so quantifying
    over lists drawn from {1..n*k} is exhaustive up to renaming.
    """
    pool = list(range(1, g.n * k + 1))
    for rows in product(list(combinations(pool, k)), repeat=g.n):
        L = ListAssignment(list(rows), k=k)
        if brute_force_proportional(g, L) is None:
            return False
    return True


def exhaustive_left_saturating(left: list[int], adj: dict[int, list[int]]) -> bool:
    """Does any injective left-saturating matching exist?  Pure recursion."""

    def rec(i: int, taken: frozenset[int]) -> bool:
        if i == len(left):
            return True
        return any(
            y not in taken and rec(i + 1, taken | {y})
            for y in adj.get(left[i], ())
        )

    return rec(0, frozenset())


def random_regular_multigraph(rng: random.Random, size: int, k: int):
    """k-regular bipartite multigraph built by overlaying k random permutations."""
    mult: Counter[tuple[int, int]] = Counter()
    for _ in range(k):
        perm = list(range(size))
        rng.shuffle(perm)
        for x, y in enumerate(perm):
            mult[(x, 100 + y)] += 1
    return list(range(size)), [100 + y for y in range(size)], mult


def brute_force_equitable_k(g: Graph, k: int) -> bool:
    """Equitable k-colorability by enumerating all functions V -> {1..k}."""
    lo, hi = g.n // k, -(-g.n // k)
    for colors in product(range(1, k + 1), repeat=g.n):
        if any(colors[u] == colors[v] for u, v in g.edges):
            continue
        counts = Counter(colors)
        if all(lo <= counts.get(c, 0) <= hi for c in range(1, k + 1)):
            return True
    return g.n == 0


def spanning_subgraphs(g: Graph) -> list[Graph]:
    out = []
    for r in range(len(g.edges) + 1):
        for chosen in combinations(g.edges, r):
            out.append(Graph(g.n, chosen))
    return out


__all__ = [name for name in dir() if not name.startswith("_")]
