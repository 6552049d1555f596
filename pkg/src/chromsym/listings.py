"""Part listings of (3+1)-free posets and the bicoloured-graph reduction.

A listing is a word of parts.  ``Vertex(i)`` is one element on level ``i``;
``Bico(i, H)`` places the ``r`` lower vertices of ``H`` on level ``i`` and its
``s`` upper vertices on level ``i + 1``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence, Union

from .combinatorics import (
    catalan,
    check_area_sequence,
    hessenberg_to_dyck,
)
from .errors import (
    ChromsymError,
    InternalSearchFailure,
    NotABicoPart,
    NotUnitIntervalOrder,
)
from .graphs import Poset, find_isomorphism, is_unit_interval_order, poset_from_hessenberg


@dataclass(frozen=True)
class BicoloredGraph:
    r: int
    s: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (1 <= a <= self.r and 1 <= b <= self.s):
                raise ChromsymError(f"edge ({a},{b}) outside [{self.r}]x[{self.s}]")
        object.__setattr__(self, "edges", edges)


@dataclass(frozen=True)
class Vertex:
    level: int


@dataclass(frozen=True)
class Bico:
    level: int
    graph: BicoloredGraph


Part = Union[Vertex, Bico]


@dataclass(frozen=True)
class PartListing:
    parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if p.level < 0:
                raise ChromsymError("levels must be nonnegative")

    @classmethod
    def from_levels(cls, levels: Sequence[int]) -> "PartListing":
        return cls(tuple(Vertex(int(a)) for a in levels))

    def __len__(self):
        return len(self.parts)

    def __add__(self, other: "PartListing") -> "PartListing":
        return PartListing(self.parts + other.parts)

    @property
    def size(self) -> int:
        return sum(1 if isinstance(p, Vertex) else p.graph.r + p.graph.s for p in self.parts)

    def bico_positions(self) -> list:
        return [k for k, p in enumerate(self.parts) if isinstance(p, Bico)]

    def levels(self):
        """Levels of a listing without bicoloured parts."""
        if self.bico_positions():
            raise ChromsymError("listing still contains bicoloured parts")
        return tuple(p.level for p in self.parts)

    def to_json(self) -> list:
        out = []
        for p in self.parts:
            if isinstance(p, Vertex):
                out.append({"v": p.level})
            else:
                H = p.graph
                out.append({"b": {"level": p.level, "r": H.r, "s": H.s,
                                  "edges": [list(e) for e in sorted(H.edges)]}})
        return out

    @classmethod
    def from_json(cls, data) -> "PartListing":
        if isinstance(data, str):
            data = json.loads(data)
        parts = []
        for item in data:
            if "v" in item:
                parts.append(Vertex(int(item["v"])))
            elif "b" in item:
                b = item["b"]
                H = BicoloredGraph(int(b["r"]), int(b["s"]),
                                   frozenset(tuple(e) for e in b.get("edges", [])))
                parts.append(Bico(int(b["level"]), H))
            else:
                raise ChromsymError(f"unrecognised part {item!r}")
        return cls(tuple(parts))

    def __str__(self):
        words = []
        for p in self.parts:
            if isinstance(p, Vertex):
                words.append(f"v{p.level}")
            else:
                words.append(f"b{p.level}{p.level + 1}({p.graph.r}x{p.graph.s}:{sorted(p.graph.edges)})")
        return " ".join(words)


def _elements(L: PartListing):
    """Per element: (level, part index, bico side key or None), in listing order."""
    elems = []
    for idx, p in enumerate(L.parts):
        if isinstance(p, Vertex):
            elems.append((p.level, idx, None))
        else:
            for a in range(1, p.graph.r + 1):
                elems.append((p.level, idx, ("lo", a)))
            for b in range(1, p.graph.s + 1):
                elems.append((p.level + 1, idx, ("up", b)))
    return elems


def poset_from_listing(L: PartListing) -> Poset:
    """Elements are numbered in listing order; a bico lists lower then upper vertices."""
    elems = _elements(L)
    rel = set()
    for x, (lx, px, sx) in enumerate(elems, start=1):
        for y, (ly, py, sy) in enumerate(elems, start=1):
            gap = ly - lx
            if gap >= 2:
                rel.add((x, y))
            elif gap == 1:
                if px < py:
                    rel.add((x, y))
                elif px == py and sx is not None:
                    H = L.parts[px].graph
                    if sx[0] == "lo" and sy[0] == "up" and (sx[1], sy[1]) in H.edges:
                        rel.add((x, y))
    return Poset(len(elems), frozenset(rel))


def matching_probabilities(H: BicoloredGraph) -> tuple:
    """``q[j]``: chance a uniform maximum cross matching shares ``j`` edges with H.

    Enumerates all ``max(r,s)! / |r-s|!`` maximum matchings of the complete
    bipartite graph.
    """
    if H.r < 1 or H.s < 1:
        raise ChromsymError("bicoloured graph needs r, s >= 1")
    small, big = min(H.r, H.s), max(H.r, H.s)
    counts = Counter()
    for image in permutations(range(1, big + 1), small):
        if H.r <= H.s:
            shared = sum((a, b) in H.edges for a, b in zip(range(1, small + 1), image))
        else:
            shared = sum((a, b) in H.edges for b, a in zip(range(1, small + 1), image))
        counts[shared] += 1
    total = sum(counts.values())
    return tuple(Fraction(counts[j], total) for j in range(small + 1))


def max_matching_size(H: BicoloredGraph) -> int:
    """Maximum matching of H by augmenting paths (polynomial time)."""
    adj = {a: [b for (x, b) in sorted(H.edges) if x == a] for a in range(1, H.r + 1)}
    match_up = {}

    def augment(a, seen):
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_up or augment(match_up[b], seen):
                match_up[b] = a
                return True
        return False

    return sum(augment(a, set()) for a in range(1, H.r + 1))


def replacement(level: int, r: int, s: int, j: int) -> PartListing:
    """``U_j = v_{i+1}^{s-j} v_i^r v_{i+1}^j`` if r >= s, else ``D_j = v_i^j v_{i+1}^s v_i^{r-j}``."""
    lo, up = level, level + 1
    if r >= s:
        levels = [up] * (s - j) + [lo] * r + [up] * j
    else:
        levels = [lo] * j + [up] * s + [lo] * (r - j)
    return PartListing.from_levels(levels)


def decompose_bico(L: PartListing, pos: int) -> list:
    """``[(q_j, L_j)]`` for ``j = 0..min(r, s)`` with ``X(L) = sum q_j X(L_j)``."""
    if not (0 <= pos < len(L.parts)) or not isinstance(L.parts[pos], Bico):
        raise NotABicoPart(f"part {pos} of {L} is not a bicoloured graph")
    part = L.parts[pos]
    H = part.graph
    q = matching_probabilities(H)
    out = []
    for j, qj in enumerate(q):
        middle = replacement(part.level, H.r, H.s, j)
        out.append((qj, PartListing(L.parts[:pos] + middle.parts + L.parts[pos + 1:])))
    return out


def dominant_reduction(L: PartListing) -> PartListing:
    """Replace every bico by its largest-index replacement with nonzero weight."""
    parts = []
    for p in L.parts:
        if isinstance(p, Vertex):
            parts.append(p)
        else:
            j = max_matching_size(p.graph)
            parts.extend(replacement(p.level, p.graph.r, p.graph.s, j).parts)
    return PartListing(tuple(parts))


# ---------------------------------------------------------------------------
# unit interval orders
# ---------------------------------------------------------------------------

def unit_interval_hessenberg(P: Poset) -> tuple:
    """Hessenberg function of the Dyck path whose indifference graph is G(P).

    Elements are sorted by (down-set size, -up-set size); for a unit interval
    order this labelling makes ``i < j`` exactly when ``h(i) < j``.
    """
    down, up = P.down_sets(), P.up_sets()
    order = sorted(range(1, P.n + 1), key=lambda v: (len(down[v]), -len(up[v]), v))
    h = tuple(P.n - len(up[v]) for v in order)
    label = {v: k + 1 for k, v in enumerate(order)}
    if any(h[i] < i + 1 for i in range(P.n)) or any(h[i] > h[i + 1] for i in range(P.n - 1)):
        raise NotUnitIntervalOrder("poset is not a unit interval order")
    relabelled = {(label[a], label[b]) for a, b in P.relations}
    if relabelled != set(poset_from_hessenberg(h).relations):
        raise NotUnitIntervalOrder("poset is not a unit interval order")
    return h


def _valid_area_tuples(n: int):
    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for nxt in range(prefix[-1] + 1, -1, -1):
            prefix.append(nxt)
            yield from rec(prefix)
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from rec([0])


def _signature(P: Poset) -> tuple:
    down, up = P.down_sets(), P.up_sets()
    return tuple(sorted((len(down[v]), len(up[v])) for v in range(1, P.n + 1)))


@lru_cache(maxsize=16)
def _listing_index(n: int) -> dict:
    index = {}
    for a in _valid_area_tuples(n):
        P = poset_from_listing(PartListing.from_levels(a))
        index.setdefault(_signature(P), []).append((a, P))
    assert sum(len(v) for v in index.values()) == catalan(n)
    return index


def lex_maximal_listing(P: Poset) -> tuple:
    """The canonical tuple ``a`` (a_1 = 0, a_{i+1} <= a_i + 1) whose listing gives P.

    Found by search over all Catalan-many tuples, filtered by a cheap
    signature and confirmed by poset isomorphism.
    """
    if not is_unit_interval_order(P):
        raise NotUnitIntervalOrder("poset is not (3+1)- and (2+2)-free")
    for a, Q in _listing_index(P.n).get(_signature(P), []):
        if find_isomorphism(P.n, P.relations, Q.relations) is not None:
            return check_area_sequence(a)
    raise InternalSearchFailure("no canonical listing matched the poset")


def greedy_weight_31free(L: PartListing) -> tuple:
    """Dominant coloring weight of G(P(L)) for a (3+1)-free listing."""
    from .csf import greedy_weight

    P = poset_from_listing(dominant_reduction(L))
    return greedy_weight(hessenberg_to_dyck(unit_interval_hessenberg(P)))
