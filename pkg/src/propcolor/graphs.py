"""Finite simple graphs on vertex set {0, ..., n-1} and named graph families.

The vertex numbering of every family is fixed so that hand-built list
assignments referring to concrete vertices stay reproducible:

* ``complete [n]``            vertices 0..n-1
* ``star [m]``                center 0, leaves 1..m
* ``path [n]``                edges i -- i+1
* ``cycle [n]``               path numbering plus the closing edge (n-1, 0)
* ``balanced_bipartite [m]``  K_{m,m}: side A = 0..m-1, side B = m..2m-1
* ``doubled_multipartite [m]`` complete m-partite graph with parts {2i, 2i+1}
* ``star_forest [k]``         k disjoint copies of K_{1,k}; block i starts at
  vertex i*(k+1) with the center first, then its k leaves
* ``clique_union [s1, ...]``  disjoint cliques, blockwise numbering
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "FAMILY_NAMES",
    "build_family",
    "disjoint_union",
    "induced_subgraph",
    "components",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
]


class Graph:
    """Immutable simple undirected graph.

    Edges are stored as a sorted tuple of pairs (u, v) with u < v; adjacency
    is kept both as per-vertex frozensets and as per-vertex bitmasks (the
    bitmasks are an internal detail used by the backtracking searches).
    """

    __slots__ = ("n", "edges", "adj", "adj_bits")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {tuple(e)} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop edge at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        self.n = n
        self.edges = tuple(sorted(seen))
        adj = [set() for _ in range(n)]
        bits = [0] * n
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adj = tuple(frozenset(s) for s in adj)
        self.adj_bits = tuple(bits)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def _star(m: int) -> Graph:
    return Graph(m + 1, ((0, i) for i in range(1, m + 1)))


def _path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def _balanced_bipartite(m: int) -> Graph:
    return Graph(2 * m, ((a, m + b) for a in range(m) for b in range(m)))


def _doubled_multipartite(m: int) -> Graph:
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            for a in (2 * i, 2 * i + 1):
                for b in (2 * j, 2 * j + 1):
                    edges.append((a, b))
    return Graph(2 * m, edges)


def _star_forest(k: int) -> Graph:
    edges = []
    for i in range(k):
        center = i * (k + 1)
        edges.extend((center, center + 1 + j) for j in range(k))
    return Graph(k * (k + 1), edges)


def _clique_union(sizes: Sequence[int]) -> Graph:
    return disjoint_union([_complete(s) for s in sizes])


FAMILY_NAMES = (
    "complete",
    "star",
    "path",
    "cycle",
    "balanced_bipartite",
    "doubled_multipartite",
    "star_forest",
    "clique_union",
)


def build_family(name: str, params: Sequence[int]) -> Graph:
    """Build a named family graph; see the module docstring for numbering."""
    name = name.replace("-", "_")
    params = list(params)
    if name not in FAMILY_NAMES:
        raise InputError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    if any((not isinstance(p, int)) or p < 1 for p in params):
        raise InputError(f"family parameters must be positive integers, got {params}")
    if name == "clique_union":
        if not params:
            raise InputError("clique_union needs at least one clique size")
        return _clique_union(params)
    if len(params) != 1:
        raise InputError(f"family {name!r} takes exactly one parameter, got {params}")
    p = params[0]
    builder = {
        "complete": _complete,
        "star": _star,
        "path": _path,
        "cycle": _cycle,
        "balanced_bipartite": _balanced_bipartite,
        "doubled_multipartite": _doubled_multipartite,
        "star_forest": _star_forest,
    }[name]
    return builder(p)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Disjoint union with blockwise vertex numbering (parts in given order)."""
    n = 0
    edges = []
    for g in parts:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``.

    Returns the new graph together with the old->new index map; kept vertices
    are renumbered in increasing order.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} outside 0..{g.n - 1}")
    index = {old: new for new, old in enumerate(kept)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(kept), edges), index


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"graph document must have 'n' and 'edges': {exc}")
    if not isinstance(n, int):
        raise InputError(f"'n' must be an integer, got {n!r}")
    return Graph(n, [tuple(e) for e in edges])


def graph_to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines)
