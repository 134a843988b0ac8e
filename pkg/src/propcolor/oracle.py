"""Brute-force ground truth on small instances.

This module decides, by exhaustive search, whether a proportional coloring
exists for a concrete assignment, whether a graph is proportionally
k-choosable (quantifying over all k-assignments up to color renaming),
the proportional choice number, and the equitable analogues.  It also emits
the four hard-instance constructions ("gallery") that certify lower bounds.

Resource limits are explicit: the per-instance search refuses to start when
the product of list sizes exceeds ``search_cap``, and assignment enumeration
refuses when ``n * k`` exceeds ``nk_cap`` (default 16).  Full enumeration is
simply infeasible beyond that; statements about larger instances must come
from the constructive solvers, whose outputs are always re-verified.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .assignments import ListAssignment, build_assignment
from .errors import InputError, ResourceCapError
from .graphs import Graph, build_family
from . import graphs as _graphs
from . import assignments as _assignments

__all__ = [
    "DEFAULT_SEARCH_CAP",
    "DEFAULT_NK_CAP",
    "ChoosabilityVerdict",
    "ChiPcReport",
    "GalleryInstance",
    "GALLERY_SOURCES",
    "exists_proportional_coloring",
    "find_no_excess_coloring",
    "decide_proportional_k_choosability",
    "chi_pc",
    "equitable_colorable",
    "equitable_choosable",
    "canonical_assignments",
    "gallery_instance",
]

DEFAULT_SEARCH_CAP = 10_000_000
DEFAULT_NK_CAP = 16


def _ceil(a: int, b: int) -> int:
    return -(-a // b)


def _search(adj_bits: Sequence[int], rows: Sequence[Sequence[int]],
            lo_map: Mapping[int, int], hi_map: Mapping[int, int],
            cap: int, proper: bool = True):
    """Backtracking search for a labelling obeying per-color usage bounds.

    Vertices are colored in ascending order, colors tried in ascending order,
    so the first hit is the lexicographically smallest solution.  Pruning:
    per-color ceilings, adjacency (if ``proper``), total remaining demand of
    unmet floors, and per-color remaining supply.

    Returns ``(found, coloring_or_None, prunes)``.
    """
    n = len(rows)
    distinct = [tuple(dict.fromkeys(row)) for row in rows]
    size = 1
    for row in distinct:
        size *= max(len(row), 1)
        if size > cap:
            raise ResourceCapError(
                f"search space exceeds cap: product of list sizes > {cap}"
            )
    palette = sorted(set().union(*rows)) if rows else []
    idx = {c: i for i, c in enumerate(palette)}
    P = len(palette)
    lo = [lo_map.get(c, 0) for c in palette]
    hi = [hi_map.get(c, n) for c in palette]
    row_idx = [tuple(idx[c] for c in row) for row in distinct]
    # suffix[v][ci] = number of vertices >= v whose list offers color ci
    suffix = [[0] * P for _ in range(n + 1)]
    for v in range(n - 1, -1, -1):
        nxt = suffix[v + 1]
        cur = suffix[v]
        cur[:] = nxt
        for ci in row_idx[v]:
            cur[ci] += 1
    for ci in range(P):
        if lo[ci] > suffix[0][ci]:
            return False, None, 0
    deficit = sum(lo)
    if deficit > n:
        return False, None, 0
    used = [0] * P
    wear = [0] * P
    out = [0] * n
    prunes = 0

    def dfs(v: int) -> bool:
        nonlocal deficit, prunes
        if v == n:
            return True  # demand pruning forces deficit == 0 here
        rem_after = n - v - 1
        abits = adj_bits[v]
        nxt = suffix[v + 1]
        for ci in row_idx[v]:
            if used[ci] >= hi[ci]:
                prunes += 1
                continue
            if proper and (wear[ci] & abits):
                prunes += 1
                continue
            d = deficit - (1 if used[ci] < lo[ci] else 0)
            if d > rem_after:
                prunes += 1
                continue
            ok = True
            for cj in row_idx[v]:
                need = lo[cj] - used[cj] - (1 if cj == ci else 0)
                if need > nxt[cj]:
                    ok = False
                    break
            if not ok:
                prunes += 1
                continue
            saved = deficit
            used[ci] += 1
            wear[ci] |= 1 << v
            deficit = d
            out[v] = ci
            if dfs(v + 1):
                return True
            used[ci] -= 1
            wear[ci] &= ~(1 << v)
            deficit = saved
        return False

    if dfs(0):
        return True, [palette[out[v]] for v in range(n)], prunes
    return False, None, prunes


def _proportional_bounds(rows: Sequence[Sequence[int]], k: int):
    eta: Counter[int] = Counter()
    for row in rows:
        eta.update(row)
    lo = {c: e // k for c, e in eta.items()}
    hi = {c: _ceil(e, k) for c, e in eta.items()}
    return lo, hi


def exists_proportional_coloring(g: Graph, L: ListAssignment,
                                 cap: int = DEFAULT_SEARCH_CAP):
    """Decide proportional L-colorability by backtracking.

    Returns ``(True, coloring)`` with the lexicographically first solution,
    or ``(False, None)``.
    """
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    lo, hi = _proportional_bounds(L.lists, L.k)
    found, coloring, _ = _search(g.adj_bits, L.lists, lo, hi, cap, proper=True)
    return found, coloring


def find_no_excess_coloring(g: Graph, L: ListAssignment,
                            cap: int = DEFAULT_SEARCH_CAP):
    """Proper list coloring using no color more than ceil(eta/k) times, if any."""
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    _, hi = _proportional_bounds(L.lists, L.k)
    lo = {c: 0 for c in hi}
    found, coloring, _ = _search(g.adj_bits, L.lists, lo, hi, cap, proper=True)
    return found, coloring


@lru_cache(maxsize=None)
def _candidate_lists(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All admissible next lists when colors 1..m are already in use.

    New colors must form the consecutive run m+1..m+t, which is what keeps
    the enumeration closed under color renaming.
    """
    out = []
    for t in range(k + 1):
        new = tuple(range(m + 1, m + 1 + t))
        for old in combinations(range(1, m + 1), k - t):
            out.append(old + new)
    out.sort()
    return tuple(out)


def canonical_assignments(n: int, k: int,
                          prefix: tuple[tuple[int, ...], ...] = ()) -> Iterator[tuple]:
    """Enumerate k-assignments for n vertices up to color renaming.

    Colors are introduced in first-use order reading vertices 0, 1, ...;
    every assignment is color-isomorphic to at least one enumerated tuple.
    Enumeration is lexicographic over the concatenated sorted lists.
    """
    m = max((row[-1] for row in prefix), default=0)

    def rec(assignment: tuple, m: int) -> Iterator[tuple]:
        if len(assignment) == n:
            yield assignment
            return
        for cand in _candidate_lists(m, k):
            yield from rec(assignment + (cand,), max(m, cand[-1] if cand else m))

    yield from rec(prefix, m)


@dataclass
class ChoosabilityVerdict:
    """Outcome of a proportional k-choosability decision.

    ``witness`` is the lexicographically first canonical bad assignment when
    the decision is negative (re-verified by search before being returned).
    """

    k: int
    decision: bool
    witness: tuple[tuple[int, ...], ...] | None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "decision": self.decision,
            "witness": None if self.witness is None else {
                "k": self.k, "multi": False,
                "lists": [list(row) for row in self.witness],
            },
            "stats": self.stats,
        }


def _decide_serial(g: Graph, k: int, search_cap: int,
                   prefix: tuple = ()) -> ChoosabilityVerdict:
    assignments = 0
    prunes = 0
    for rows in canonical_assignments(g.n, k, prefix):
        lo, hi = _proportional_bounds(rows, k)
        found, _, p = _search(g.adj_bits, rows, lo, hi, search_cap, proper=True)
        assignments += 1
        prunes += p
        if not found:
            return ChoosabilityVerdict(
                k, False, rows, {"assignments": assignments, "prunes": prunes}
            )
    return ChoosabilityVerdict(
        k, True, None, {"assignments": assignments, "prunes": prunes}
    )


def _decide_shard(args) -> tuple[bool, tuple | None, int, int]:
    n, edges, k, prefix, search_cap = args
    g = Graph(n, edges)
    verdict = _decide_serial(g, k, search_cap, prefix=prefix)
    return (
        verdict.decision,
        verdict.witness,
        verdict.stats["assignments"],
        verdict.stats["prunes"],
    )


def decide_proportional_k_choosability(
    g: Graph, k: int, nk_cap: int = DEFAULT_NK_CAP,
    search_cap: int = DEFAULT_SEARCH_CAP, threads: int = 1,
) -> ChoosabilityVerdict:
    """Decide proportional k-choosability by canonical enumeration.

    Refuses (``ResourceCapError``) when n*k exceeds ``nk_cap``.  With
    ``threads > 1`` the enumeration is sharded on the second vertex's
    canonical list; the decision is scheduling-independent and the witness is
    the global lexicographic minimum.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if g.n * k > nk_cap:
        raise ResourceCapError(
            f"n*k = {g.n * k} exceeds the enumeration cap {nk_cap}"
        )
    first = tuple(range(1, k + 1))
    if threads <= 1 or g.n < 2:
        return _decide_serial(g, k, search_cap)
    shards = [
        (g.n, g.edges, k, (first, cand), search_cap)
        for cand in _candidate_lists(k, k)
    ]
    assignments = 0
    prunes = 0
    witness = None
    decision = True
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for ok, wit, a, p in pool.map(_decide_shard, shards):
            assignments += a
            prunes += p
            if not ok and witness is None:
                decision = False
                witness = wit  # shards are in prefix-lex order
    if witness is not None:
        found, _, _ = _search(
            g.adj_bits, witness, *_proportional_bounds(witness, k), cap=search_cap
        )
        assert not found, "witness must admit no proportional coloring"
    return ChoosabilityVerdict(
        k, decision, witness, {"assignments": assignments, "prunes": prunes}
    )


@dataclass
class ChiPcReport:
    """Ascending scan for the proportional choice number.

    ``value`` is the least k with a positive verdict, or None when every
    k <= k_max failed (so the true value exceeds ``k_max``).
    """

    value: int | None
    k_max: int
    verdicts: dict[int, bool]

    def to_json(self) -> dict:
        return {
            "chi_pc": self.value,
            "k_max": self.k_max,
            "verdicts": {str(k): v for k, v in self.verdicts.items()},
        }


def chi_pc(g: Graph, k_max: int, nk_cap: int = DEFAULT_NK_CAP,
           search_cap: int = DEFAULT_SEARCH_CAP, threads: int = 1) -> ChiPcReport:
    """Smallest k <= k_max with a positive choosability verdict.

    Monotonicity in k makes the first positive verdict final.  A resource
    cap hit is re-raised with the partial report attached.
    """
    verdicts: dict[int, bool] = {}
    for k in range(1, k_max + 1):
        try:
            verdict = decide_proportional_k_choosability(
                g, k, nk_cap=nk_cap, search_cap=search_cap, threads=threads
            )
        except ResourceCapError as exc:
            raise ResourceCapError(
                f"cap hit at k={k}: {exc}", partial=ChiPcReport(None, k_max, verdicts)
            ) from exc
        verdicts[k] = verdict.decision
        if verdict.decision:
            return ChiPcReport(k, k_max, verdicts)
    return ChiPcReport(None, k_max, verdicts)


def equitable_colorable(g: Graph, k: int, cap: int = DEFAULT_SEARCH_CAP) -> bool:
    """Brute-force equitable k-colorability.

    Classes are the k colors 1..k (empty classes counted), so sizes must all
    lie in {floor(n/k), ceil(n/k)}.  Color symmetry is broken by introducing
    colors in first-use order.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    n = g.n
    if n == 0:
        return True
    size = 1
    for _ in range(n):
        size *= k
        if size > cap:
            raise ResourceCapError(f"search space k^n exceeds cap {cap}")
    lo, hi = n // k, _ceil(n, k)
    counts = [0] * k
    colors = [0] * n
    wear = [0] * k
    adj_bits = g.adj_bits

    def demand(opened: int) -> int:
        d = sum(max(lo - counts[c], 0) for c in range(opened))
        return d + (k - opened) * lo

    def dfs(v: int, opened: int) -> bool:
        if v == n:
            return demand(opened) == 0
        abits = adj_bits[v]
        limit = min(opened + 1, k)
        for c in range(limit):
            if counts[c] >= hi or (wear[c] & abits):
                continue
            counts[c] += 1
            wear[c] |= 1 << v
            colors[v] = c
            new_opened = max(opened, c + 1)
            if demand(new_opened) <= n - v - 1 and dfs(v + 1, new_opened):
                return True
            counts[c] -= 1
            wear[c] &= ~(1 << v)
        return False

    return dfs(0, 0)


def equitable_choosable(g: Graph, k: int, nk_cap: int = DEFAULT_NK_CAP,
                        cap: int = DEFAULT_SEARCH_CAP) -> bool:
    """Brute-force equitable k-choosability via canonical enumeration.

    For every canonical k-assignment, searches for a proper list coloring
    with every class of size at most ceil(n/k)."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if g.n * k > nk_cap:
        raise ResourceCapError(f"n*k = {g.n * k} exceeds the enumeration cap {nk_cap}")
    top = _ceil(g.n, k)
    for rows in canonical_assignments(g.n, k):
        palette = set().union(*rows) if rows else set()
        lo = {c: 0 for c in palette}
        hi = {c: top for c in palette}
        found, _, _ = _search(g.adj_bits, rows, lo, hi, cap, proper=True)
        if not found:
            return False
    return True


GALLERY_SOURCES = ("star_odd", "doubled_multipartite", "star_forest", "balanced_bipartite")

_GALLERY_MINIMUM = {
    "star_odd": 1,
    "doubled_multipartite": 2,
    "star_forest": 1,
    "balanced_bipartite": 1,
}


@dataclass(frozen=True)
class GalleryInstance:
    """A hard instance: a (graph, assignment) pair with no proportional coloring."""

    source: str
    param: int
    graph: Graph
    assignment: ListAssignment
    expected: str = "no proportional coloring"

    def to_json(self) -> dict:
        return {
            "source": self.source.replace("_", "-"),
            "param": self.param,
            "graph": _graphs.graph_to_json(self.graph),
            "assignment": _assignments.assignment_to_json(self.assignment),
            "expected": self.expected,
        }


def gallery_instance(source: str, param: int) -> GalleryInstance:
    """Build one of the four lower-bound constructions.

    * ``star_odd k``: the star with 2k-1 leaves under the constant assignment
      {1..k} (the center's color class would have size 1, but every class
      must have size 2).
    * ``doubled_multipartite m``: parts {2i, 2i+1} with lists
      {1..m-1} + {m-1+i+1}; colors 1..m-1 are forced onto the parts, pinning
      the last part to a color of multiplicity 2.
    * ``star_forest k``: k copies of K_{1,k}; centers get {1..k}, block i's
      leaves share {1} + a private (k-1)-run; pigeonhole kills every case.
    * ``balanced_bipartite m``: K_{m,m} with side lists {1..m} and
      {1, m+1..2m-1}; color 1 lands twice on one side, starving the other
      side's private colors.
    """
    source = source.replace("-", "_")
    if source not in GALLERY_SOURCES:
        raise InputError(f"unknown gallery source {source!r}; expected {GALLERY_SOURCES}")
    if not isinstance(param, int) or param < _GALLERY_MINIMUM[source]:
        raise InputError(
            f"gallery {source!r} needs an integer parameter >= {_GALLERY_MINIMUM[source]}"
        )
    if source == "star_odd":
        k = param
        g = build_family("star", [2 * k - 1])
        rows = [tuple(range(1, k + 1))] * g.n
        return GalleryInstance(source, param, g, build_assignment(g, rows))
    if source == "doubled_multipartite":
        m = param
        g = build_family("doubled_multipartite", [m])
        rows = []
        for i in range(1, m + 1):
            row = tuple(range(1, m)) + (m - 1 + i,)
            rows.extend([row, row])
        return GalleryInstance(source, param, g, build_assignment(g, rows))
    if source == "star_forest":
        k = param
        g = build_family("star_forest", [k])
        rows: list[tuple[int, ...]] = []
        for i in range(1, k + 1):
            center = tuple(range(1, k + 1))
            leaf = (1,) + tuple(range(i * (k - 1) + 2, (i + 1) * (k - 1) + 2))
            rows.append(center)
            rows.extend([leaf] * k)
        return GalleryInstance(source, param, g, build_assignment(g, rows))
    m = param  # balanced_bipartite
    g = build_family("balanced_bipartite", [m])
    a_row = tuple(range(1, m + 1))
    b_row = (1,) + tuple(range(m + 1, 2 * m))
    rows = [a_row] * m + [b_row] * m
    return GalleryInstance(source, param, g, build_assignment(g, rows))
