"""List assignments, multiplicity bookkeeping, well-distributed expansions,
and huings.

A *k-assignment* attaches a list of exactly k colors to every vertex; a
*k-multi-assignment* allows repeated colors inside a list.  The multiplicity
``eta(c)`` of a color is the number of list slots containing it (counted with
repetition for multi-assignments), written ``eta = k*q + r`` with
``0 <= r <= k-1``.  A color is *well distributed* when ``r == 0``.

A *huing* splits every color c into ``ceil(eta(c)/k)`` fresh colors ("hues"),
each occupying exactly k list slots except possibly one *scarce hue* with
``r`` slots.  A huing is *good* when no edge joins vertices whose lists carry
two different hues of the same parent color.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .graphs import Graph

__all__ = [
    "ColorProfile",
    "ListAssignment",
    "build_assignment",
    "multiplicity_profile",
    "restrict_assignment",
    "ExpansionRecord",
    "well_distributed_expansion",
    "Huing",
    "make_huing",
    "is_good_huing",
    "assignment_to_json",
    "assignment_from_json",
]


@dataclass(frozen=True)
class ColorProfile:
    """Per-color bookkeeping: eta = k*q + r and the supporting vertex set."""

    color: int
    eta: int
    q: int
    r: int
    support: tuple[int, ...]

    @property
    def well_distributed(self) -> bool:
        return self.r == 0


class ListAssignment:
    """Immutable per-vertex color lists with eagerly derived profiles.

    Lists are stored sorted.  ``multi`` permits repeated colors within a
    single list; without it any repetition is an input error.
    """

    __slots__ = ("k", "multi", "lists", "palette", "profiles", "_sets")

    def __init__(self, lists: Sequence[Iterable[int]], k: int | None = None,
                 multi: bool = False):
        rows = [tuple(sorted(row)) for row in lists]
        if k is None:
            if not rows:
                raise InputError("list size k must be given for an empty assignment")
            k = len(rows[0])
        if k < 1:
            raise InputError(f"list size must be at least 1, got {k}")
        for v, row in enumerate(rows):
            if len(row) != k:
                raise InputError(
                    f"vertex {v} has a list of length {len(row)}, expected {k}"
                )
            for c in row:
                if not isinstance(c, int) or c < 0:
                    raise InputError(f"color {c!r} at vertex {v} is not a nonnegative integer")
            if not multi and len(set(row)) != k:
                raise InputError(f"vertex {v} repeats a color but multi=False: {row}")
        self.k = k
        self.multi = multi
        self.lists = tuple(rows)
        eta: Counter[int] = Counter()
        support: defaultdict[int, list[int]] = defaultdict(list)
        for v, row in enumerate(rows):
            eta.update(row)
            for c in set(row):
                support[c].append(v)
        self.palette = tuple(sorted(eta))
        self.profiles = {
            c: ColorProfile(c, eta[c], eta[c] // k, eta[c] % k, tuple(support[c]))
            for c in self.palette
        }
        self._sets = tuple(frozenset(row) for row in rows)

    @property
    def n(self) -> int:
        return len(self.lists)

    def set_of(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def eta(self, c: int) -> int:
        p = self.profiles.get(c)
        return p.eta if p else 0

    def __eq__(self, other):
        return (
            isinstance(other, ListAssignment)
            and self.k == other.k
            and self.multi == other.multi
            and self.lists == other.lists
        )

    def __hash__(self):
        return hash((self.k, self.multi, self.lists))

    def __repr__(self):
        return f"ListAssignment(k={self.k}, multi={self.multi}, lists={list(self.lists)})"


def build_assignment(g: Graph, lists: Sequence[Iterable[int]],
                     multi: bool = False, k: int | None = None) -> ListAssignment:
    """Validate ``lists`` against the graph's vertex count and build."""
    rows = list(lists)
    if len(rows) != g.n:
        raise InputError(f"{len(rows)} lists for a graph on {g.n} vertices")
    return ListAssignment(rows, k=k, multi=multi)


def multiplicity_profile(L: ListAssignment) -> list[ColorProfile]:
    """All color profiles, sorted by color id."""
    return [L.profiles[c] for c in L.palette]


def restrict_assignment(L: ListAssignment, keep: Iterable[int]) -> ListAssignment:
    """Restrict to ``keep``; result rows follow the sorted order of ``keep``."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < L.n:
            raise InputError(f"vertex {v} outside 0..{L.n - 1}")
    return ListAssignment([L.lists[v] for v in kept], k=L.k, multi=L.multi)


@dataclass(frozen=True)
class ExpansionRecord:
    """Result of a well-distributed expansion.

    ``added_vertex`` maps each non-well-distributed color c to its new
    isolated vertex v_c; ``star_color`` maps c to the padding color used in
    L(v_c).  In the default ``shared`` mode a single star color is shared by
    all new vertices, which makes every color of the expanded assignment well
    distributed (the star multiplicity is the sum of all remainders, a
    multiple of k).  In ``per_color`` mode each c gets its own star, whose
    multiplicity r_c is generally *not* divisible by k; consumers regroup the
    star slots during huing.
    """

    graph: Graph
    assignment: ListAssignment
    added_vertex: dict[int, int]
    star_color: dict[int, int]
    star_mode: str


def well_distributed_expansion(g: Graph, L: ListAssignment,
                               star_mode: str = "shared") -> ExpansionRecord:
    """Add one isolated vertex per non-well-distributed color.

    The new vertex v_c carries ``k - r_c`` copies of c plus ``r_c`` copies of
    a star color outside the original palette, so that c becomes well
    distributed.  Original vertices keep their lists unchanged; if every
    color is already well distributed the input is returned as-is.
    """
    if star_mode not in ("shared", "per_color"):
        raise InputError(f"unknown star mode {star_mode!r}")
    expanded = [c for c in L.palette if L.profiles[c].r > 0]
    if not expanded:
        return ExpansionRecord(g, L, {}, {}, star_mode)
    base = max(L.palette) + 1
    added_vertex: dict[int, int] = {}
    star_color: dict[int, int] = {}
    new_rows: list[tuple[int, ...]] = []
    for i, c in enumerate(expanded):
        r = L.profiles[c].r
        star = base if star_mode == "shared" else base + i
        added_vertex[c] = g.n + i
        star_color[c] = star
        new_rows.append((c,) * (L.k - r) + (star,) * r)
    g2 = Graph(g.n + len(expanded), g.edges)
    L2 = ListAssignment(list(L.lists) + new_rows, k=L.k, multi=True)
    return ExpansionRecord(g2, L2, added_vertex, star_color, star_mode)


class Huing:
    """A huing of an assignment, slot-aligned with its source.

    ``hued.lists[v][i]`` is the hue replacing ``source.lists[v][i]``; hue ids
    are allocated above the source palette maximum, in increasing parent
    color order, so sorting preserves the alignment.
    """

    __slots__ = ("source", "hued", "parent", "scarce", "_scarce_of")

    def __init__(self, source: ListAssignment, hued: ListAssignment,
                 parent: dict[int, int], scarce: frozenset[int]):
        self.source = source
        self.hued = hued
        self.parent = parent
        self.scarce = scarce
        self._scarce_of = {parent[h]: h for h in scarce}

    def hue_at(self, v: int, color: int) -> int:
        """The hue occupying (one of) vertex v's slots of ``color``."""
        for i, c in enumerate(self.source.lists[v]):
            if c == color:
                return self.hued.lists[v][i]
        raise InputError(f"color {color} not in the list of vertex {v}")

    def scarce_hue_of(self, color: int) -> int | None:
        return self._scarce_of.get(color)

    def hues_of(self, color: int) -> list[int]:
        return sorted(h for h, c in self.parent.items() if c == color)

    def project_lists(self) -> tuple[tuple[int, ...], ...]:
        """Map every hue slot back to its parent color (round-trip check)."""
        return tuple(
            tuple(sorted(self.parent[h] for h in row)) for row in self.hued.lists
        )


def _default_grouping(L: ListAssignment) -> dict[int, list[list[int]]]:
    # greedy in vertex order: chunks of k, remainder (the scarce hue) last
    out: dict[int, list[list[int]]] = {}
    for c in L.palette:
        slots: list[int] = []
        for v in L.profiles[c].support:
            slots.extend([v] * L.lists[v].count(c))
        out[c] = [slots[i:i + L.k] for i in range(0, len(slots), L.k)]
    return out


def make_huing(L: ListAssignment,
               grouping: Mapping[int, Sequence[Sequence[int]]] | None = None) -> Huing:
    """Split every color into hues according to ``grouping``.

    ``grouping[c]`` must partition the eta(c) list slots of c (given as
    vertex ids, repeated per multiplicity) into blocks of size k plus at most
    one block of size r_c.  Without a grouping, slots are filled greedily in
    vertex order.
    """
    groups = grouping if grouping is not None else _default_grouping(L)
    next_id = (max(L.palette) + 1) if L.palette else 0
    parent: dict[int, int] = {}
    scarce: set[int] = set()
    pending: list[dict[int, deque[int]]] = [defaultdict(deque) for _ in range(L.n)]
    for c in L.palette:
        prof = L.profiles[c]
        slots = Counter()
        for v in prof.support:
            slots[v] = L.lists[v].count(c)
        blocks = [list(b) for b in groups.get(c, ())]
        combined = Counter()
        for b in blocks:
            combined.update(b)
        if combined != slots:
            raise InputError(f"grouping for color {c} does not partition its slots")
        full = [b for b in blocks if len(b) == L.k]
        short = [b for b in blocks if len(b) != L.k]
        if prof.r == 0:
            if short:
                raise InputError(
                    f"color {c} is well distributed; all blocks must have size {L.k}"
                )
        else:
            if len(short) != 1 or len(short[0]) != prof.r:
                raise InputError(
                    f"color {c} needs blocks of size {L.k} plus one of size {prof.r}"
                )
        for b in full + short:  # scarce hue allocated last
            hue = next_id
            next_id += 1
            parent[hue] = c
            if len(b) != L.k:
                scarce.add(hue)
            for v in sorted(b):
                pending[v][c].append(hue)
    hued_rows = []
    for v in range(L.n):
        hued_rows.append([pending[v][c].popleft() for c in L.lists[v]])
    hued = ListAssignment(hued_rows, k=L.k, multi=L.multi)
    huing = Huing(L, hued, parent, frozenset(scarce))
    assert huing.project_lists() == L.lists, "huing lost slot alignment"
    return huing


def is_good_huing(g: Graph, h: Huing) -> tuple[bool, tuple[int, int] | None]:
    """True iff no edge sees two different hues of one parent color.

    On failure the lexicographically first offending edge is returned.
    """
    by_parent: list[dict[int, set[int]]] = []
    for row in h.hued.lists:
        d: dict[int, set[int]] = defaultdict(set)
        for hue in row:
            d[h.parent[hue]].add(hue)
        by_parent.append(d)
    for u, v in g.edges:
        for c in sorted(by_parent[u].keys() & by_parent[v].keys()):
            if len(by_parent[u][c] | by_parent[v][c]) >= 2:
                return False, (u, v)
    return True, None


def assignment_to_json(L: ListAssignment) -> dict:
    return {"k": L.k, "multi": L.multi, "lists": [list(row) for row in L.lists]}


def assignment_from_json(obj: dict) -> ListAssignment:
    try:
        k = obj["k"]
        multi = obj.get("multi", False)
        lists = obj["lists"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"assignment document must have 'k' and 'lists': {exc}")
    return ListAssignment([tuple(row) for row in lists], k=k, multi=bool(multi))
