"""Bipartite multigraph matching primitives.

The color/vertex multigraph puts graph vertices on the left, colors on the
right, and one edge per list slot.  Saturating matchings are found with
augmenting paths; a failed search yields a Hall violator certificate.  A
k-regular bipartite multigraph decomposes into k perfect matchings, and any
present edge can be forced into one of them.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .assignments import ListAssignment
from .errors import InputError, PreconditionError, SearchInvariantError
from .graphs import Graph

__all__ = [
    "BipartiteMultigraph",
    "build_color_vertex_multigraph",
    "saturating_matching",
    "decompose_regular",
    "perfect_matching_with_forced_edge",
]


class BipartiteMultigraph:
    """Bipartite multigraph with integer-labelled sides X (left) and Y (right).

    ``mult[(x, y)]`` is the edge multiplicity; only positive entries are kept.
    The two sides live in separate namespaces, so ids may coincide.
    """

    __slots__ = ("left", "right", "mult")

    def __init__(self, left: Iterable[int], right: Iterable[int],
                 mult: Mapping[tuple[int, int], int]):
        self.left = tuple(sorted(set(left)))
        self.right = tuple(sorted(set(right)))
        lset, rset = set(self.left), set(self.right)
        clean: dict[tuple[int, int], int] = {}
        for (x, y), a in mult.items():
            if a < 0:
                raise InputError(f"negative multiplicity on edge ({x}, {y})")
            if a == 0:
                continue
            if x not in lset or y not in rset:
                raise InputError(f"edge ({x}, {y}) leaves the declared sides")
            clean[(x, y)] = a
        self.mult = clean

    def neighbors(self, x: int) -> list[int]:
        return sorted(y for (xx, y) in self.mult if xx == x)

    def left_degree(self, x: int) -> int:
        return sum(a for (xx, _), a in self.mult.items() if xx == x)

    def right_degree(self, y: int) -> int:
        return sum(a for (_, yy), a in self.mult.items() if yy == y)

    def regular_degree(self) -> int | None:
        """The common degree if every vertex on both sides has it, else None."""
        degs = {self.left_degree(x) for x in self.left}
        degs |= {self.right_degree(y) for y in self.right}
        if len(degs) == 1:
            return degs.pop()
        return None

    def __repr__(self):
        return (
            f"BipartiteMultigraph(left={len(self.left)}, right={len(self.right)}, "
            f"edges={sum(self.mult.values())})"
        )


def build_color_vertex_multigraph(g: Graph, L: ListAssignment) -> BipartiteMultigraph:
    """Left side = vertices of g, right side = palette, one edge per list slot."""
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    mult: dict[tuple[int, int], int] = {}
    for v, row in enumerate(L.lists):
        for c in row:
            mult[(v, c)] = mult.get((v, c), 0) + 1
    return BipartiteMultigraph(range(g.n), L.palette, mult)


def _adjacency(mult: Mapping[tuple[int, int], int]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for (x, y), a in mult.items():
        if a > 0:
            adj.setdefault(x, []).append(y)
    for ys in adj.values():
        ys.sort()
    return adj


def _kuhn(left: Iterable[int], adj: Mapping[int, list[int]]):
    """Augmenting-path matching over the left side, in ascending id order.

    Returns (match_of_x, None) on success or (None, violator) where the
    violator is a left subset S with |N(S)| < |S|.
    """
    match_of_y: dict[int, int] = {}
    match_of_x: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in adj.get(x, ()):
            if y in seen:
                continue
            seen.add(y)
            if y not in match_of_y or augment(match_of_y[y], seen):
                match_of_y[y] = x
                match_of_x[x] = y
                return True
        return False

    for x in sorted(left):
        seen: set[int] = set()
        if not augment(x, seen):
            # every explored right vertex is matched; its partners plus the
            # failed vertex form a Hall violator
            violator = {x} | {match_of_y[y] for y in seen}
            return None, sorted(violator)
    return match_of_x, None


def saturating_matching(B: BipartiteMultigraph):
    """Find a matching saturating the left side, or a Hall violator.

    Returns ``(pairs, None)`` with pairs sorted, or ``(None, violator)``
    where ``violator`` is a subset S of the left side with |N(S)| < |S|.
    The search is deterministic: vertices and neighbors in ascending order.
    """
    match_of_x, violator = _kuhn(B.left, _adjacency(B.mult))
    if match_of_x is None:
        return None, violator
    return sorted(match_of_x.items()), None


def decompose_regular(B: BipartiteMultigraph, k: int) -> list[list[tuple[int, int]]]:
    """Partition the edge multiset of a k-regular instance into k perfect matchings."""
    if k < 1:
        raise PreconditionError(f"degree must be positive, got {k}")
    if not B.left and not B.right:
        return [[] for _ in range(k)]
    if B.regular_degree() != k:
        raise PreconditionError(f"multigraph is not {k}-regular")
    work = dict(B.mult)
    rounds: list[list[tuple[int, int]]] = []
    for _ in range(k):
        match_of_x, violator = _kuhn(B.left, _adjacency(work))
        if match_of_x is None:
            raise SearchInvariantError(
                f"regular multigraph lost Hall's condition at violator {violator}"
            )
        if len(match_of_x) != len(B.left) or len(set(match_of_x.values())) != len(B.right):
            raise SearchInvariantError("matching in a regular multigraph is not perfect")
        pairs = sorted(match_of_x.items())
        for e in pairs:
            work[e] -= 1
        rounds.append(pairs)
    assert all(a == 0 for a in work.values()), "decomposition left edges behind"
    return rounds


def perfect_matching_with_forced_edge(B: BipartiteMultigraph, k: int,
                                      forced: tuple[int, int]) -> list[tuple[int, int]]:
    """Perfect matching of a k-regular instance containing ``forced``.

    Deletes both endpoints, saturates the rest (regularity keeps Hall's
    condition), and reinserts the forced edge.
    """
    x0, y0 = forced
    if B.regular_degree() != k:
        raise PreconditionError(f"multigraph is not {k}-regular")
    if B.mult.get((x0, y0), 0) < 1:
        raise PreconditionError(f"forced edge ({x0}, {y0}) is absent")
    reduced = {
        (x, y): a for (x, y), a in B.mult.items() if x != x0 and y != y0
    }
    rest = [x for x in B.left if x != x0]
    match_of_x, violator = _kuhn(rest, _adjacency(reduced))
    if match_of_x is None:
        raise SearchInvariantError(
            f"reduced regular multigraph lost Hall's condition at {violator}"
        )
    return sorted(match_of_x.items() | {forced})
