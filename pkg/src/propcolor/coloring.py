"""Verification predicates over labellings, per-color usage classification,
the almost-excessive counting identity, and the coloring-extension combiner.

A *labelling* assigns one color to every vertex (index i of the list is the
color of vertex i).  A labelling is *proportional* for an assignment L when
every palette color c is used between floor(eta(c)/k) and ceil(eta(c)/k)
times; a *proportional coloring* is additionally proper.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .assignments import ListAssignment, restrict_assignment
from .errors import InputError, PreconditionError, SearchInvariantError
from .graphs import Graph, induced_subgraph

__all__ = [
    "VerifyMode",
    "UsageClass",
    "Verdict",
    "verify",
    "classify_usage",
    "count_almost_excessive_identity",
    "combine_extension",
]


class VerifyMode(str, Enum):
    PROPER = "proper"
    PROPORTIONAL_LABELLING = "proportional-labelling"
    PROPORTIONAL_COLORING = "proportional-coloring"
    EQUITABLE_K_COLORING = "equitable-k-coloring"
    EQUITABLE_L_COLORING = "equitable-l-coloring"


class UsageClass(str, Enum):
    PERFECTLY_USED = "perfectly-used"
    ALMOST_EXCESSIVE = "almost-excessive"
    ALMOST_DEFICIENT = "almost-deficient"
    EXCESSIVE = "excessive"
    DEFICIENT = "deficient"


@dataclass
class Verdict:
    ok: bool
    mode: VerifyMode
    violations: list[dict]

    def to_json(self) -> dict:
        return {"mode": self.mode.value, "ok": self.ok, "violations": self.violations}


def _ceil(a: int, b: int) -> int:
    return -(-a // b)


def _check_total(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.n:
        raise InputError(f"labelling has {len(colors)} entries for {g.n} vertices")
    for v, c in enumerate(colors):
        if not isinstance(c, int):
            raise InputError(f"labelling entry for vertex {v} is not an integer: {c!r}")


def _list_violations(L: ListAssignment, colors: Sequence[int]) -> list[dict]:
    return [
        {"kind": "color-not-in-list", "vertex": v, "color": colors[v]}
        for v in range(len(colors))
        if colors[v] not in L.set_of(v)
    ]


def _edge_violations(g: Graph, colors: Sequence[int]) -> list[dict]:
    return [
        {"kind": "monochromatic-edge", "edge": [u, v], "color": colors[u]}
        for u, v in g.edges
        if colors[u] == colors[v]
    ]


def _usage_violations(L: ListAssignment, counts: Counter) -> list[dict]:
    out = []
    for c in L.palette:
        p = L.profiles[c]
        lo, hi = p.q, p.q + (1 if p.r else 0)
        used = counts.get(c, 0)
        if not lo <= used <= hi:
            out.append({
                "kind": "usage-out-of-bounds", "color": c, "used": used,
                "floor": lo, "ceil": hi,
            })
    return out


def verify(g: Graph, L: ListAssignment, colors: Sequence[int],
           mode: VerifyMode | str) -> Verdict:
    """Check a total labelling against one of the verification predicates.

    * ``proper``: no monochromatic edge and every color drawn from its list.
    * ``proportional-labelling``: list-respecting with per-color usage within
      [floor(eta/k), ceil(eta/k)]; properness not required.
    * ``proportional-coloring``: both of the above.
    * ``equitable-k-coloring``: proper coloring whose k class sizes (empty
      classes counted, classes = palette colors) differ by at most one.
    * ``equitable-l-coloring``: proper list coloring with every class of size
      at most ceil(n/k).

    Violations are collected exhaustively in a deterministic order, never
    fail-fast.
    """
    mode = VerifyMode(mode)
    _check_total(g, colors)
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    counts = Counter(colors)
    violations: list[dict] = []
    if mode is VerifyMode.PROPER:
        violations += _list_violations(L, colors)
        violations += _edge_violations(g, colors)
    elif mode is VerifyMode.PROPORTIONAL_LABELLING:
        violations += _list_violations(L, colors)
        violations += _usage_violations(L, counts)
    elif mode is VerifyMode.PROPORTIONAL_COLORING:
        violations += _list_violations(L, colors)
        violations += _edge_violations(g, colors)
        violations += _usage_violations(L, counts)
    elif mode is VerifyMode.EQUITABLE_K_COLORING:
        # a k-coloring has exactly k, possibly empty, classes; class sizes are
        # then forced into {floor(n/k), ceil(n/k)}
        k = L.k
        palette = set(L.palette)
        if len(palette) != k:
            violations.append({
                "kind": "palette-size", "size": len(palette), "expected": k,
            })
        for v in range(g.n):
            if colors[v] not in palette:
                violations.append({
                    "kind": "color-not-in-palette", "vertex": v, "color": colors[v],
                })
        violations += _edge_violations(g, colors)
        lo, hi = g.n // k, _ceil(g.n, k)
        for c in L.palette:
            size = counts.get(c, 0)
            if not lo <= size <= hi:
                violations.append({
                    "kind": "class-size-imbalance", "color": c, "size": size,
                    "floor": lo, "ceil": hi,
                })
    elif mode is VerifyMode.EQUITABLE_L_COLORING:
        violations += _list_violations(L, colors)
        violations += _edge_violations(g, colors)
        cap = _ceil(g.n, L.k)
        for c in L.palette:
            size = counts.get(c, 0)
            if size > cap:
                violations.append({
                    "kind": "class-too-large", "color": c, "size": size, "max": cap,
                })
    return Verdict(not violations, mode, violations)


def classify_usage(L: ListAssignment, colors: Sequence[int]) -> dict[int, UsageClass]:
    """Classify every palette color by how the labelling uses it.

    Excessive/deficient means outside [floor(eta/k), ceil(eta/k)]; within the
    bounds a well-distributed color is perfectly used and any other color is
    almost excessive (at the ceiling) or almost deficient (at the floor).
    """
    counts = Counter(colors)
    out: dict[int, UsageClass] = {}
    for c in L.palette:
        p = L.profiles[c]
        used = counts.get(c, 0)
        hi = p.q + (1 if p.r else 0)
        if used > hi:
            out[c] = UsageClass.EXCESSIVE
        elif used < p.q:
            out[c] = UsageClass.DEFICIENT
        elif p.r == 0:
            out[c] = UsageClass.PERFECTLY_USED
        elif used == hi:
            out[c] = UsageClass.ALMOST_EXCESSIVE
        else:
            out[c] = UsageClass.ALMOST_DEFICIENT
    return out


def count_almost_excessive_identity(g: Graph, L: ListAssignment,
                                    colors: Sequence[int]) -> tuple[int, int, bool]:
    """Count almost-excessive colors and compare with (1/k) * sum of remainders.

    Requires the labelling to be a proportional coloring; the two numbers
    agree on every such coloring.
    """
    verdict = verify(g, L, colors, VerifyMode.PROPORTIONAL_COLORING)
    if not verdict.ok:
        raise PreconditionError(
            f"labelling is not a proportional coloring: {verdict.violations[:3]}"
        )
    classes = classify_usage(L, colors)
    count = sum(1 for u in classes.values() if u is UsageClass.ALMOST_EXCESSIVE)
    total_r = sum(L.profiles[c].r for c in L.palette)
    assert total_r % L.k == 0, "sum of remainders is always divisible by k"
    expected = total_r // L.k
    return count, expected, count == expected


def combine_extension(g: Graph, L: ListAssignment, S: set[int],
                      f1: Mapping[int, int], f2: Mapping[int, int],
                      m: Mapping[int, int]) -> list[int]:
    """Glue a proportional coloring of G-S with an exact-usage coloring of G[S].

    Preconditions (each failure names its clause):

    * every color a appearing on lists inside S appears there exactly
      ``m[a] * k`` times;
    * ``f1`` is a proportional coloring of G-S under the restricted lists;
    * ``f2`` is a proper coloring of G[S] that stays inside each list, avoids
      the f1-color of every outside neighbor, and uses each a exactly m[a]
      times.

    The merged labelling is then a proportional coloring of G.
    """
    S = set(S)
    for v in S:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} outside 0..{g.n - 1}")
    outside = [v for v in range(g.n) if v not in S]
    if set(f1) != set(outside):
        raise PreconditionError("domain clause: f1 must color exactly V(G) - S")
    if set(f2) != S:
        raise PreconditionError("domain clause: f2 must color exactly S")

    in_S_count: Counter[int] = Counter()
    for v in S:
        in_S_count.update(L.lists[v])
    for a in sorted(set(in_S_count) | set(m)):
        expect = m.get(a, 0) * L.k
        if in_S_count.get(a, 0) != expect:
            raise PreconditionError(
                f"multiplicity clause: color {a} fills {in_S_count.get(a, 0)} "
                f"list slots in S, expected m_a*k = {expect}"
            )

    sub, _ = induced_subgraph(g, outside)
    subL = restrict_assignment(L, outside)
    f1_list = [f1[v] for v in outside]
    verdict = verify(sub, subL, f1_list, VerifyMode.PROPORTIONAL_COLORING)
    if not verdict.ok:
        raise PreconditionError(
            f"f1 clause: not a proportional coloring of G-S: {verdict.violations[:3]}"
        )

    for v in sorted(S):
        c = f2[v]
        if c not in L.set_of(v):
            raise PreconditionError(f"f2 list clause: color {c} not in the list of {v}")
        for u in sorted(g.adj[v]):
            if u in S:
                if u > v and f2[u] == c:
                    raise PreconditionError(
                        f"f2 properness clause: edge ({v}, {u}) monochromatic"
                    )
            elif f1[u] == c:
                raise PreconditionError(
                    f"f2 avoidance clause: {v} repeats the f1-color of neighbor {u}"
                )
    usage = Counter(f2.values())
    wanted = {a: cnt for a, cnt in m.items() if cnt > 0}
    if dict(usage) != wanted:
        raise PreconditionError(
            f"f2 usage clause: got {dict(usage)}, expected {wanted}"
        )

    merged = [f1[v] if v not in S else f2[v] for v in range(g.n)]
    final = verify(g, L, merged, VerifyMode.PROPORTIONAL_COLORING)
    if not final.ok:  # the preconditions guarantee this never happens
        raise SearchInvariantError(f"combined labelling failed: {final.violations[:3]}")
    return merged
