"""Constructive procedures that produce verified proportional colorings.

Every solver re-verifies its output before returning; a solver never hands
back an unverified labelling.  All solvers take plain k-assignments (no
repeated colors inside a list); multisets only appear internally, inside the
well-distributed expansion.

The workhorses:

* ``proportional_labelling_via_huing`` -- expansion + huing + forced-edge
  perfect matching; always yields a proportional labelling, and a coloring
  whenever the huing is good.
* ``repair_deficiencies`` -- color shifting along a directed path to remove
  deficient colors from a proper coloring (multiplicities below 2k).
* ``color_without_excess`` -- recursion over vertex removal producing proper
  colorings with no excessive color under a slack parameter l >= 2.
* ``solve_order_bound`` / ``solve_smallorder`` / ``solve_star`` /
  ``solve_components`` -- complete solvers for k at least the order bound,
  the max-degree + half-order bound, stars, and graphs with small components.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .assignments import (
    Huing,
    ListAssignment,
    is_good_huing,
    make_huing,
    restrict_assignment,
    well_distributed_expansion,
)
from .coloring import UsageClass, VerifyMode, classify_usage, verify
from .errors import InputError, PreconditionError, SearchInvariantError
from .graphs import Graph, build_family, components, induced_subgraph
from .matching import (
    BipartiteMultigraph,
    _kuhn,
    perfect_matching_with_forced_edge,
    saturating_matching,
)
from .oracle import find_no_excess_coloring

__all__ = [
    "ComponentProfile",
    "component_profiles",
    "assignment_potential",
    "proportional_labelling_via_huing",
    "lift_monotone",
    "repair_deficiencies",
    "color_without_excess",
    "solve_smallorder",
    "solve_order_bound",
    "solve_star",
    "solve_components",
]

logger = logging.getLogger(__name__)


def _ceil(a: int, b: int) -> int:
    return -(-a // b)


def _require_sets(L: ListAssignment) -> None:
    if L.multi:
        raise InputError("solvers operate on plain k-assignments, not multisets")


def _check_verified(g: Graph, L: ListAssignment, f: Sequence[int],
                    mode: VerifyMode) -> list[int]:
    verdict = verify(g, L, f, mode)
    if not verdict.ok:
        raise SearchInvariantError(
            f"solver output failed {mode.value} verification: {verdict.violations[:3]}"
        )
    return list(f)


# ---------------------------------------------------------------------------
# huing pipeline
# ---------------------------------------------------------------------------

def proportional_labelling_via_huing(
    g: Graph, L: ListAssignment, huing: Huing | None = None,
    anchor: tuple[int, int] | None = None,
) -> list[int]:
    """Proportional labelling via expansion, huing, and a perfect matching.

    Pipeline: expand so every color is well distributed, extend the huing
    (the new vertex v_c absorbs the scarce hue of c; star slots are grouped
    into fresh hues of multiplicity exactly k), build the k-regular
    vertex/hue multigraph, take a perfect matching (through the anchor slot
    when one is given), restrict to the original vertices, and project hues
    back to their parent colors.

    The result always verifies as a proportional labelling with
    ``f[v0] == c0`` for an anchor ``(v0, c0)``; it is additionally a proper
    coloring whenever the huing is good.
    """
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    if g.n == 0:
        return []
    k = L.k
    if huing is None:
        huing = make_huing(L)
    elif huing.source != L:
        raise InputError("huing was built over a different assignment")
    if anchor is not None:
        v0, c0 = anchor
        if not 0 <= v0 < g.n or c0 not in L.set_of(v0):
            raise PreconditionError(f"anchor color {c0} is not in the list of vertex {v0}")

    rec = well_distributed_expansion(g, L)
    rows: list[list[int]] = [list(r) for r in huing.hued.lists]
    extra: dict[int, list[int]] = {}
    next_hue = (max(huing.parent) if huing.parent else max(L.palette)) + 1
    star_slots: list[int] = []
    for c in sorted(rec.added_vertex):
        vc = rec.added_vertex[c]
        r = L.profiles[c].r
        scarce = huing.scarce_hue_of(c)
        assert scarce is not None, "expanded colors always have a scarce hue"
        extra[vc] = [scarce] * (k - r)
        star_slots.extend([vc] * r)
    assert len(star_slots) % k == 0, "total remainder mass is divisible by k"
    for i in range(0, len(star_slots), k):
        for v in star_slots[i:i + k]:
            extra[v].append(next_hue)
        next_hue += 1
    all_rows = rows + [extra[v] for v in sorted(extra)]

    mult: Counter[tuple[int, int]] = Counter()
    for v, row in enumerate(all_rows):
        for h in row:
            mult[(v, h)] += 1
    hue_ids = sorted({h for row in all_rows for h in row})
    B = BipartiteMultigraph(range(len(all_rows)), hue_ids, mult)
    assert B.regular_degree() == k, "extended hued assignment must be k-regular"

    if anchor is not None:
        forced = (anchor[0], huing.hue_at(anchor[0], anchor[1]))
        pairs = perfect_matching_with_forced_edge(B, k, forced)
    else:
        pairs, violator = saturating_matching(B)
        if pairs is None:
            raise SearchInvariantError(
                f"regular multigraph had no saturating matching: {violator}"
            )
    assigned = dict(pairs)
    f = [huing.parent[assigned[v]] for v in range(g.n)]
    _check_verified(g, L, f, VerifyMode.PROPORTIONAL_LABELLING)
    if anchor is not None:
        assert f[anchor[0]] == anchor[1]
    return f


def lift_monotone(g: Graph, L: ListAssignment,
                  solve_k: Callable[[Graph, ListAssignment], Sequence[int]]) -> list[int]:
    """Solve a (k+1)-assignment with a solver for k-assignments.

    A proportional labelling phi (any huing) is peeled off the lists; the
    sub-solver colors the leftover k-assignment, and its output is already
    proportional for the original lists.
    """
    _require_sets(L)
    if L.k < 2:
        raise PreconditionError("lifting needs list size at least 2")
    phi = proportional_labelling_via_huing(g, L)
    rows = []
    for v in range(g.n):
        row = list(L.lists[v])
        row.remove(phi[v])
        rows.append(row)
    reduced = ListAssignment(rows, k=L.k - 1)
    f = list(solve_k(g, reduced))
    sub = verify(g, reduced, f, VerifyMode.PROPORTIONAL_COLORING)
    if not sub.ok:
        raise PreconditionError(
            f"sub-solver output is not proportional for the reduced lists: {sub.violations[:3]}"
        )
    return _check_verified(g, L, f, VerifyMode.PROPORTIONAL_COLORING)


# ---------------------------------------------------------------------------
# color shifting along directed paths
# ---------------------------------------------------------------------------

def _lex_shortest_path(L: ListAssignment, f: dict[int, int], vset: set[int],
                       sources: Iterable[int], targets: Iterable[int]):
    """Lexicographically smallest shortest path in the shift digraph.

    Arcs run u -> v whenever the color of u lies in v's list (both in
    ``vset``); uncolored vertices have no outgoing arcs.  Returns the vertex
    sequence from a source to a target, or None when unreachable.
    """
    targets = sorted(t for t in targets if t in vset)
    if not targets:
        return None
    wearers: dict[int, list[int]] = defaultdict(list)
    for v in sorted(vset):
        c = f.get(v)
        if c is not None:
            wearers[c].append(v)
    dist = {t: 0 for t in targets}
    frontier = targets
    while frontier:
        nxt = []
        for v in frontier:
            for c in L.set_of(v):
                for u in wearers.get(c, ()):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
        frontier = sorted(set(nxt))
    starts = [s for s in sources if s in dist]
    if not starts:
        return None
    best = min(dist[s] for s in starts)
    cur = min(s for s in starts if dist[s] == best)
    path = [cur]
    while dist[cur] > 0:
        c = f[cur]
        want = dist[cur] - 1
        cur = min(v for v in vset if c in L.set_of(v) and dist.get(v, -1) == want)
        path.append(cur)
    return path


def _shift_along(f: dict[int, int], path: Sequence[int], head_color: int) -> None:
    # move each color one step down the path, then give the head its new color
    prev = [f.get(v) for v in path]
    for i in range(len(path) - 1, 0, -1):
        f[path[i]] = prev[i - 1]
    f[path[0]] = head_color


def repair_deficiencies(g: Graph, L: ListAssignment, f: Sequence[int],
                        t: int = 0) -> list[int]:
    """Remove every deficient color from a proper coloring by path shifting.

    Requires every multiplicity below 2k and at most ``t`` excessive colors
    in the input.  Each round finds the shortest path from a vertex whose
    list holds a deficient color to a wearer of an over-floor color, shifts
    colors along it, and recolors the head; the number of deficient colors
    strictly decreases and the number of excessive colors never grows.  With
    ``t == 0`` the result is a proportional coloring.
    """
    _require_sets(L)
    k = L.k
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    if any(p.eta >= 2 * k for p in L.profiles.values()):
        raise PreconditionError("every multiplicity must be below 2k")
    verdict = verify(g, L, f, VerifyMode.PROPER)
    if not verdict.ok:
        raise PreconditionError(f"input is not a proper coloring: {verdict.violations[:3]}")
    floors = {c: L.profiles[c].q for c in L.palette}
    ceils = {c: floors[c] + (1 if L.profiles[c].r else 0) for c in L.palette}

    def tally(coloring):
        counts = Counter(coloring)
        deficient = sorted(c for c in L.palette if counts.get(c, 0) < floors[c])
        excessive = sorted(c for c in L.palette if counts.get(c, 0) > ceils[c])
        return counts, deficient, excessive

    out = list(f)
    counts, deficient, excessive = tally(out)
    if len(excessive) > t:
        raise PreconditionError(
            f"input uses {len(excessive)} colors excessively, budget is {t}"
        )
    vset = set(range(g.n))
    while deficient:
        over_floor = {c for c in L.palette if counts.get(c, 0) > floors[c]}
        sources = [v for v in range(g.n) if L.set_of(v) & set(deficient)]
        targets = [v for v in range(g.n) if out[v] in over_floor]
        f_map = dict(enumerate(out))
        path = _lex_shortest_path(L, f_map, vset, sources, targets)
        if path is None:
            raise SearchInvariantError("shift path guaranteed by counting was not found")
        head_color = min(set(deficient) & L.set_of(path[0]))
        _shift_along(f_map, path, head_color)
        out = [f_map[v] for v in range(g.n)]
        counts, new_deficient, new_excessive = tally(out)
        assert len(new_deficient) < len(deficient), "deficient count must strictly drop"
        assert len(new_excessive) <= len(excessive), "excessive count must never grow"
        deficient, excessive = new_deficient, new_excessive
    if t == 0:
        return _check_verified(g, L, out, VerifyMode.PROPORTIONAL_COLORING)
    return _check_verified(g, L, out, VerifyMode.PROPER)


# ---------------------------------------------------------------------------
# proper colorings without excessive colors
# ---------------------------------------------------------------------------

def color_without_excess(g: Graph, L: ListAssignment, l) -> list[int]:
    """Proper list coloring using no color more than ceil(eta/k) times.

    Requires ``l >= 2`` and ``k >= max(l * max_degree, l*n / (2(l-1)))``.
    The construction removes vertices one at a time (ascending index) and,
    on the way back, places each vertex by a direct color, a single swap
    with a once-used color, or a shift along the color digraph; a failure of
    any guaranteed step falls back to exhaustive search with a logged
    diagnostic.
    """
    _require_sets(L)
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    lf = Fraction(l)
    if lf < 2:
        raise PreconditionError(f"slack parameter must be at least 2, got {l}")
    k, n, delta = L.k, g.n, g.max_degree
    bound = max(lf * delta, lf * n / (2 * (lf - 1)))
    if k < bound:
        raise PreconditionError(
            f"needs k >= max(l*max_degree, l*n/(2(l-1))) = {bound}, got {k}"
        )
    f = _cwe_solve(g, L, tuple(range(n)))
    out = [f[v] for v in range(n)]
    verdict = verify(g, L, out, VerifyMode.PROPER)
    assert verdict.ok
    classes = classify_usage(L, out)
    assert UsageClass.EXCESSIVE not in classes.values()
    return out


def _cwe_solve(g: Graph, L: ListAssignment, verts: tuple[int, ...]) -> dict[int, int]:
    if not verts:
        return {}
    y = verts[0]
    f = _cwe_solve(g, L, verts[1:])
    return _cwe_place(g, L, verts, y, f)


def _cwe_place(g: Graph, L: ListAssignment, verts: tuple[int, ...], y: int,
               f: dict[int, int]) -> dict[int, int]:
    """Extend a capped proper coloring of verts - {y} to all of verts."""
    k = L.k
    vset = set(verts)
    eta: Counter[int] = Counter()
    for v in verts:
        eta.update(L.lists[v])
    cap = {c: _ceil(e, k) for c, e in eta.items()}
    for _ in range(4):
        counts = Counter(f.values())
        assert all(counts[c] <= cap[c] for c in counts)
        allowed = [
            c for c in L.lists[y]
            if all(f.get(u) != c for u in g.adj[y])
        ]
        direct = [c for c in allowed if counts[c] < cap[c]]
        if direct:
            f[y] = min(direct)
            return f
        allowed_set = set(allowed)
        once_used = sorted(c for c in eta if counts[c] == 1 and cap[c] > 1)
        if once_used:
            c_star = once_used[0]
            v_star = min(v for v, col in f.items() if col == c_star)
            blocked = set(g.adj[v_star]) | {v_star}
            r_side = {v for v in vset if c_star in L.set_of(v) and v not in blocked}
            u_side = {v for v in f if f[v] in allowed_set}
            swap = sorted(u_side & r_side)
            if not swap:
                break
            x = swap[0]
            f[y] = f[x]
            f[x] = c_star
            return f
        unused = sorted(c for c in eta if counts[c] == 0 and cap[c] > 0)
        if not unused:
            break
        unused_set = set(unused)
        sources = sorted(v for v in vset if L.set_of(v) & unused_set)
        assert y not in sources, "a direct color would have been available"
        reach = _forward_reach(L, f, vset, sources)
        if y not in reach:
            rest = tuple(sorted(vset - reach))
            merged = _cwe_solve(g, L, rest)
            merged.update({v: f[v] for v in reach})
            return merged
        targets = sorted({v for v in f if counts[f[v]] == 2} | {y})
        path = _lex_shortest_path(L, f, vset, sources, targets)
        if path is None:
            break
        head_color = min(unused_set & L.set_of(path[0]))
        _shift_along(f, path, head_color)
        if path[-1] == y:
            return f
        # a doubly-used color just dropped to one use; retry via the swap case
    logger.warning(
        "guaranteed placement failed for vertex %d on %d vertices; "
        "falling back to exhaustive search", y, len(verts),
    )
    sub, index = induced_subgraph(g, verts)
    found, colors = find_no_excess_coloring(sub, restrict_assignment(L, verts))
    if not found:
        raise SearchInvariantError("no capped proper coloring exists; bound analysis is wrong")
    return {old: colors[new] for old, new in index.items()}


def _forward_reach(L: ListAssignment, f: dict[int, int], vset: set[int],
                   sources: Iterable[int]) -> set[int]:
    support: dict[int, list[int]] = {}
    seen = set(sources)
    stack = list(seen)
    while stack:
        u = stack.pop()
        c = f.get(u)
        if c is None:
            continue
        if c not in support:
            support[c] = [v for v in vset if c in L.set_of(v)]
        for v in support[c]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


# ---------------------------------------------------------------------------
# complete solvers
# ---------------------------------------------------------------------------

def solve_order_bound(g: Graph, L: ListAssignment) -> list[int]:
    """Proportional coloring when k >= n, or k = n-1 on a non-complete graph.

    For k >= n every color may be used at most once: forced colors (full
    multiplicity) are placed injectively and the rest is finished greedily
    with pairwise distinct colors.  For k = n-1: constant lists reuse one
    color on a nonadjacent pair; otherwise the high-multiplicity colors are
    placed one per vertex and the remaining vertices get pairwise distinct
    leftover colors (with a single swap when the leftover lists collapse to
    one common set); if every color has high multiplicity the lists form a
    sunflower over k+1 colors and an explicit cyclic coloring works.
    """
    _require_sets(L)
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    n, k = g.n, L.k
    if not (k >= n or (k == n - 1 and not g.is_complete())):
        raise PreconditionError(
            f"needs k >= n, or k = n-1 on a non-complete graph; got n={n}, k={k}"
        )
    f = _rainbow_coloring(g, L) if k >= n else _order_minus_one(g, L)
    return _check_verified(g, L, f, VerifyMode.PROPORTIONAL_COLORING)


def _rainbow_coloring(g: Graph, L: ListAssignment) -> list[int]:
    n, k = g.n, L.k
    forced = [c for c in L.palette if L.profiles[c].eta >= k]  # eta = n = k: on every list
    f: list[int | None] = [None] * n
    for i, c in enumerate(forced):
        f[i] = c
    used = set(forced)
    for v in range(len(forced), n):
        options = [c for c in L.lists[v] if c not in used]
        assert options, "k - n + 1 >= 1 colors always remain"
        f[v] = options[0]
        used.add(options[0])
    return f  # type: ignore[return-value]


def _distinct_colors(vertices: Sequence[int], avail: dict[int, Sequence[int]]):
    """Injective system of distinct colors via augmenting paths, or None."""
    adj = {v: sorted(set(avail[v])) for v in vertices}
    match_of_x, _ = _kuhn(vertices, adj)
    return match_of_x


def _order_minus_one(g: Graph, L: ListAssignment) -> list[int]:
    n, k = g.n, L.k  # n == k + 1
    if all(row == L.lists[0] for row in L.lists):
        pair = next(
            (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
        )
        colors = list(L.lists[0])
        f: list[int | None] = [None] * n
        f[pair[0]] = f[pair[1]] = colors[0]
        rest = iter(colors[1:])
        for w in range(n):
            if f[w] is None:
                f[w] = next(rest)
        return f  # type: ignore[return-value]
    high = [c for c in L.palette if L.profiles[c].eta >= k]
    if len(high) == k + 1:
        return _sunflower_rotation(g, L)
    placed: dict[int, int] = {}
    for c in high:
        v = min(v for v in range(n) if v not in placed and c in L.set_of(v))
        placed[v] = c
    high_set = set(high)
    rest = [v for v in range(n) if v not in placed]
    avail = {v: [c for c in L.lists[v] if c not in high_set] for v in rest}
    assign = _distinct_colors(rest, avail)
    if assign is None:
        # Hall fails only when every leftover list is one common set B
        common = set(avail[rest[0]])
        assert all(set(avail[v]) == common for v in rest)
        movable = [v for v in sorted(placed) if set(L.set_of(v)) != common | high_set]
        if not movable:
            raise SearchInvariantError("non-constant lists must leave a movable vertex")
        vi = movable[0]
        u = rest[0]
        placed[u] = placed.pop(vi)
        swapped = sorted([v for v in rest if v != u] + [vi])
        avail = {v: [c for c in L.lists[v] if c not in high_set] for v in swapped}
        assign = _distinct_colors(swapped, avail)
        if assign is None:
            raise SearchInvariantError("swap must restore a distinct-color completion")
    placed.update(assign)
    return [placed[v] for v in range(n)]


def _sunflower_rotation(g: Graph, L: ListAssignment) -> list[int]:
    # every color misses exactly one list; rotate colors one step
    n, k = g.n, L.k
    palette = list(L.palette)
    assert len(palette) == k + 1
    assert all(L.profiles[c].eta == k for c in palette)
    owner: dict[int, int] = {}
    for v in range(n):
        missing = set(palette) - L.set_of(v)
        assert len(missing) == 1, "each vertex misses exactly one color"
        owner[missing.pop()] = v
    assert len(owner) == n
    f = [0] * n
    for i, c in enumerate(palette):
        f[owner[c]] = palette[(i + 1) % (k + 1)]
    return f


def solve_star(m: int, L: ListAssignment) -> list[int]:
    """Proportional coloring of the star with m leaves (center = vertex 0).

    Needs k >= 1 + ceil(m/2); below that bound some assignment admits no
    proportional coloring (the max degree forces k > (max_degree + 1) / 2).
    Large k defers to the order bound; otherwise either some center color is
    scarce (anchor it on the center via the huing pipeline) or every center
    color is plentiful (double one color on two leaves, spread the rest, and
    repair the deficiencies).
    """
    _require_sets(L)
    g = build_family("star", [m])
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, the star has {g.n}")
    k = L.k
    need = 1 + _ceil(m, 2)
    if k < need:
        raise PreconditionError(f"stars with {m} leaves need k >= {need}, got {k}")
    if k >= m:
        return solve_order_bound(g, L)
    # now 1 + ceil(m/2) <= k <= m - 1, hence m >= 4 and k >= 3
    center = L.lists[0]
    scarce = [a for a in center if L.profiles[a].eta <= k]
    if scarce:
        a = scarce[0]
        f = proportional_labelling_via_huing(g, L, anchor=(0, a))
        # the anchor color fits in one class, so no leaf repeats the center
        return _check_verified(g, L, f, VerifyMode.PROPORTIONAL_COLORING)
    cs = list(center)
    f_map: dict[int, int] = {0: cs[0]}

    def free_leaves_with(c: int) -> list[int]:
        return [v for v in range(1, m + 1) if v not in f_map and c in L.set_of(v)]

    doubled = free_leaves_with(cs[1])
    assert len(doubled) >= 2, "multiplicity >= k+1 leaves at least k leaves per center color"
    f_map[doubled[0]] = f_map[doubled[1]] = cs[1]
    for r in range(2, k):
        cand = free_leaves_with(cs[r])
        assert cand, "at least k-r+1 free leaves carry this center color"
        f_map[cand[0]] = cs[r]
    leftovers = [v for v in range(1, m + 1) if v not in f_map]
    assert 1 <= len(leftovers) <= k - 2
    banned = {cs[0], cs[1]}
    used: set[int] = set()
    for v in leftovers:
        options = [c for c in L.lists[v] if c not in banned and c not in used]
        assert options, "lists keep >= k-2 usable colors"
        f_map[v] = options[0]
        used.add(options[0])
    f = [f_map[v] for v in range(m + 1)]
    classes = classify_usage(L, f)
    assert UsageClass.EXCESSIVE not in classes.values()
    return repair_deficiencies(g, L, f, t=0)


# ---------------------------------------------------------------------------
# graphs whose components fit inside one list
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentProfile:
    """Orders of the components of G[V_c] and the isolated-vertex deficit.

    ``counts[j]`` is the number of components of order j among the vertices
    whose lists contain the color; ``deficit`` is
    ``-counts[1] + sum((k - j) * counts[j] for j >= 2)``.
    """

    color: int
    counts: dict[int, int]
    deficit: int


def component_profiles(g: Graph, L: ListAssignment) -> list[ComponentProfile]:
    out = []
    for c in L.palette:
        support = L.profiles[c].support
        sub, _ = induced_subgraph(g, support)
        sizes = Counter(len(comp) for comp in components(sub))
        deficit = -sizes.get(1, 0) + sum(
            (L.k - j) * a for j, a in sizes.items() if j >= 2
        )
        out.append(ComponentProfile(c, dict(sizes), deficit))
    return out


def assignment_potential(g: Graph, L: ListAssignment) -> int:
    """Sum of the positive per-color deficits; zero means directly solvable."""
    return sum(max(p.deficit, 0) for p in component_profiles(g, L))


def _component_respecting_huing(g: Graph, L: ListAssignment) -> Huing:
    """Hue each nontrivial component of G[V_c] together with isolated padding.

    Requires every per-color deficit <= 0 (enough isolated vertices); the
    resulting huing is good because both ends of any edge inside G[V_c] sit
    in the same component, hence the same hue.
    """
    grouping: dict[int, list[list[int]]] = {}
    for c in L.palette:
        support = L.profiles[c].support
        sub, index = induced_subgraph(g, support)
        back = {new: old for old, new in index.items()}
        comps = [sorted(back[v] for v in comp) for comp in components(sub)]
        nontrivial = sorted((c_ for c_ in comps if len(c_) >= 2))
        isolated = deque(sorted(v for comp in comps if len(comp) == 1 for v in comp))
        blocks = []
        for comp in nontrivial:
            if len(isolated) < L.k - len(comp):
                raise SearchInvariantError(
                    f"color {c} lacks isolated padding; deficit should be <= 0"
                )
            pad = [isolated.popleft() for _ in range(L.k - len(comp))]
            blocks.append(comp + pad)
        rest = list(isolated)
        blocks.extend(rest[i:i + L.k] for i in range(0, len(rest), L.k))
        grouping[c] = blocks
    return make_huing(L, grouping)


def solve_components(g: Graph, L: ListAssignment) -> list[int]:
    """Proportional coloring when no component has more than k vertices.

    While some color has positive deficit, add k fresh isolated vertices
    listing k-1 brand-new colors plus the deficient one (this strictly
    decreases the total potential); once every deficit is nonpositive, the
    component-respecting huing is good and the huing pipeline finishes.
    The added vertices are forced to use each fresh color once, so dropping
    them leaves a proportional coloring of the original instance.
    """
    _require_sets(L)
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    k = L.k
    if any(len(comp) > k for comp in components(g)):
        raise PreconditionError(f"a component has more than k = {k} vertices")
    cur_g, cur_L = g, L
    sigma = assignment_potential(cur_g, cur_L)
    while True:
        bad = [p for p in component_profiles(cur_g, cur_L) if p.deficit > 0]
        if not bad:
            break
        c = bad[0].color
        base = max(cur_L.palette) + 1
        fresh = list(range(base, base + k - 1))
        new_row = tuple(sorted(fresh + [c]))
        cur_g = Graph(cur_g.n + k, cur_g.edges)
        cur_L = ListAssignment(list(cur_L.lists) + [new_row] * k, k=k)
        new_sigma = assignment_potential(cur_g, cur_L)
        assert new_sigma < sigma, "augmentation must strictly decrease the potential"
        sigma = new_sigma
    huing = _component_respecting_huing(cur_g, cur_L)
    good, witness = is_good_huing(cur_g, huing)
    assert good, f"component-respecting huing must be good, offending edge {witness}"
    full = proportional_labelling_via_huing(cur_g, cur_L, huing)
    return _check_verified(g, L, full[:g.n], VerifyMode.PROPORTIONAL_COLORING)


def solve_smallorder(g: Graph, L: ListAssignment) -> list[int]:
    """Proportional coloring whenever k >= max_degree + ceil(n/2).

    Small graphs (n <= k) go through the order bound; otherwise a proper
    coloring with no excessive color exists for slack l = 1 + n/(2*max_degree)
    and path shifting repairs all deficiencies (every multiplicity is below
    2k here).
    """
    _require_sets(L)
    if L.n != g.n:
        raise InputError(f"assignment covers {L.n} vertices, graph has {g.n}")
    n, k, delta = g.n, L.k, g.max_degree
    if delta < 1:
        raise PreconditionError("needs at least one edge (edgeless graphs are trivial)")
    if k < delta + _ceil(n, 2):
        raise PreconditionError(
            f"needs k >= max_degree + ceil(n/2) = {delta + _ceil(n, 2)}, got {k}"
        )
    if n <= k:
        return solve_order_bound(g, L)
    slack = 1 + Fraction(n, 2 * delta)
    f = color_without_excess(g, L, slack)
    return repair_deficiencies(g, L, f, t=0)
