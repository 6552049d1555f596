"""Simple graphs, posets, rook boards and the structural predicates on them.

Vertices and poset elements are ``1..n``.  Board cells use matrix
coordinates ``(row, column)``, both 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .combinatorics import DyckPath, check_hessenberg, dyck_to_hessenberg, partition
from .errors import ChromsymError, CoBipartiteViolation


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for i, j in self.edges:
            if i == j:
                raise ChromsymError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ChromsymError(f"edge {i}-{j} outside [1,{self.n}]")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(self.n, frozenset(
            (i, j) for i, j in combinations(range(1, self.n + 1), 2) if (i, j) not in self.edges))

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        vs = sorted(vertices)
        idx = {v: k + 1 for k, v in enumerate(vs)}
        return SimpleGraph(len(vs), frozenset(
            (idx[i], idx[j]) for i, j in self.edges if i in idx and j in idx))

    def is_clique(self, vertices) -> bool:
        return all(self.has_edge(i, j) for i, j in combinations(sorted(vertices), 2))

    @classmethod
    def parse(cls, n: int, text: str) -> "SimpleGraph":
        """Parse ``"1-2,2-3"``; an empty string is the edgeless graph."""
        edges = []
        for item in filter(None, (s.strip() for s in text.split(","))):
            a, b = item.split("-")
            edges.append((int(a), int(b)))
        return cls(n, frozenset(edges))

    def format(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in sorted(self.edges))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def transitive_closure(n: int, pairs) -> frozenset:
    below = {v: set() for v in range(1, n + 1)}
    for a, b in pairs:
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for v in below:
            extra = set()
            for u in below[v]:
                extra |= below[u]
            if not extra <= below[v]:
                below[v] |= extra
                changed = True
    return frozenset((a, b) for b, s in below.items() for a in s)


@dataclass(frozen=True)
class Poset:
    """A strict partial order; ``relations`` holds every pair ``(a, b)`` with a < b."""

    n: int
    relations: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.relations:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ChromsymError(f"relation {a}<{b} outside [1,{self.n}]")
        closed = transitive_closure(self.n, self.relations)
        if any(a == b for a, b in closed):
            raise ChromsymError("relations contain a cycle")
        object.__setattr__(self, "relations", closed)

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relations

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.relations or (b, a) in self.relations

    def down_sets(self) -> dict:
        down = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.relations:
            down[b].add(a)
        return down

    def up_sets(self) -> dict:
        up = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.relations:
            up[a].add(b)
        return up

    def covers(self) -> list:
        rel = self.relations
        return sorted((a, b) for a, b in rel
                      if not any((a, c) in rel and (c, b) in rel for c in range(1, self.n + 1)))

    @classmethod
    def parse(cls, n: int, text: str) -> "Poset":
        """Parse cover relations ``"1<4,2<4"``."""
        pairs = []
        for item in filter(None, (s.strip() for s in text.split(","))):
            a, b = item.split("<")
            pairs.append((int(a), int(b)))
        return cls(n, frozenset(pairs))


def chain(n: int) -> Poset:
    return Poset(n, frozenset((i, i + 1) for i in range(1, n)))


def antichain(n: int) -> Poset:
    return Poset(n)


@dataclass(frozen=True)
class Board:
    n1: int
    n2: int
    cells: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        for i, j in cells:
            if not (1 <= i <= self.n1 and 1 <= j <= self.n2):
                raise ChromsymError(f"cell ({i},{j}) outside [{self.n1}]x[{self.n2}]")
        object.__setattr__(self, "cells", cells)

    def transpose(self) -> "Board":
        return Board(self.n2, self.n1, frozenset((j, i) for i, j in self.cells))

    @classmethod
    def parse(cls, n1: int, n2: int, text: str) -> "Board":
        """Parse ``"(1,1),(2,2)"``."""
        nums = [int(t) for t in text.replace("(", " ").replace(")", " ").replace(",", " ").split()]
        return cls(n1, n2, frozenset(zip(nums[0::2], nums[1::2])))


def ferrers_board(mu, n1: int | None = None, n2: int | None = None) -> Board:
    """The left-justified board with ``mu[i]`` cells in row ``i``."""
    mu = partition(mu)
    n1 = len(mu) if n1 is None else n1
    n2 = (mu[0] if mu else 0) if n2 is None else n2
    if len(mu) > n1 or (mu and mu[0] > n2):
        raise ChromsymError(f"{mu} does not fit in [{n1}]x[{n2}]")
    return Board(n1, n2, frozenset((i + 1, j + 1) for i, m in enumerate(mu) for j in range(m)))


def board_is_ferrers(board: Board):
    """Return the partition if ``board`` is a Ferrers board, else ``None``."""
    rows = [sorted(j for i, j in board.cells if i == r) for r in range(1, board.n1 + 1)]
    mu = []
    for r in rows:
        if r != list(range(1, len(r) + 1)):
            return None
        mu.append(len(r))
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        return None
    return partition(mu)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def indifference_graph(d: DyckPath) -> SimpleGraph:
    h = dyck_to_hessenberg(d)
    return SimpleGraph(d.n, frozenset(
        (i, j) for i in range(1, d.n + 1) for j in range(i + 1, h[i - 1] + 1)))


def incomparability_graph(P: Poset) -> SimpleGraph:
    return SimpleGraph(P.n, frozenset(
        (i, j) for i, j in combinations(range(1, P.n + 1), 2) if not P.comparable(i, j)))


def poset_from_hessenberg(h) -> Poset:
    h = check_hessenberg(h)
    n = len(h)
    return Poset(n, frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if h[i - 1] < j))


def cobipartite_board(G: SimpleGraph, n1: int, n2: int) -> Board:
    """Board with cell ``(i, j)`` for every missing cross edge ``(i, n1 + j)``."""
    if n1 + n2 != G.n:
        raise CoBipartiteViolation(f"n1 + n2 = {n1 + n2} but the graph has {G.n} vertices")
    if not G.is_clique(range(1, n1 + 1)) or not G.is_clique(range(n1 + 1, G.n + 1)):
        raise CoBipartiteViolation(f"parts [1,{n1}] and [{n1 + 1},{G.n}] are not both cliques")
    return Board(n1, n2, frozenset(
        (i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1) if not G.has_edge(i, n1 + j)))


def graph_from_board(B: Board) -> SimpleGraph:
    """Inverse of :func:`cobipartite_board`: two cliques joined off the board."""
    n = B.n1 + B.n2
    edges = set(combinations(range(1, B.n1 + 1), 2))
    edges |= set(combinations(range(B.n1 + 1, n + 1), 2))
    edges |= {(i, B.n1 + j) for i in range(1, B.n1 + 1) for j in range(1, B.n2 + 1)
              if (i, j) not in B.cells}
    return SimpleGraph(n, frozenset(edges))


def abelian_split(d: DyckPath):
    """Smallest ``n1`` such that ``1..n1`` and ``n1+1..n`` are cliques of G(d), or None."""
    h = dyck_to_hessenberg(d)
    n = d.n
    for n1 in range(0, n + 1):
        # 1..n1 is a clique iff h(1) >= n1; the tail is always a clique iff h(n1+1) = n.
        if (n1 == 0 or h[0] >= n1) and (n1 == n or h[n1] == n):
            return n1
    return None


def is_abelian(d: DyckPath) -> bool:
    return abelian_split(d) is not None


def abelian_ferrers(d: DyckPath):
    """``(mu, n1, n2)`` for an abelian path: the cross non-edges form ``B_mu``.

    Row ``i`` misses the last ``n - h(i)`` vertices of the second clique, so
    reading that clique right to left gives a left-justified board.
    """
    n1 = abelian_split(d)
    if n1 is None:
        raise CoBipartiteViolation(f"{d} is not abelian")
    h = dyck_to_hessenberg(d)
    mu = partition([d.n - h[i] for i in range(n1)])
    return mu, n1, d.n - n1


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def is_claw_free(G: SimpleGraph) -> bool:
    adj = G.adjacency()
    for centre in adj:
        for a, b, c in combinations(sorted(adj[centre]), 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return False
    return True


def _chains(P: Poset, length: int, up: dict):
    def rec(seq):
        if len(seq) == length:
            yield tuple(seq)
            return
        for nxt in sorted(up[seq[-1]]):
            seq.append(nxt)
            yield from rec(seq)
            seq.pop()

    for start in range(1, P.n + 1):
        yield from rec([start])


def _longest_chain(P: Poset, elements) -> int:
    down = P.down_sets()
    best = {}
    for v in sorted(elements, key=lambda x: len(down[x])):
        best[v] = 1 + max((best[u] for u in down[v] if u in best), default=0)
    return max(best.values(), default=0)


def is_mn_free(P: Poset, m: int, n: int) -> bool:
    """True iff P has no disjoint m-chain and n-chain that are mutually incomparable."""
    if m < 1 or n < 1:
        raise ChromsymError("chain lengths must be positive")
    up = P.up_sets()
    everything = set(range(1, P.n + 1))
    for ch in _chains(P, m, up):
        free = {v for v in everything
                if all(v != c and not P.comparable(v, c) for c in ch)}
        if free and _longest_chain(P, free) >= n:
            return False
    return True


def is_unit_interval_order(P: Poset) -> bool:
    return is_mn_free(P, 3, 1) and is_mn_free(P, 2, 2)


# ---------------------------------------------------------------------------
# isomorphism of small relational structures
# ---------------------------------------------------------------------------

def _refine(n: int, out_adj: list, in_adj: list) -> list:
    colour = [(len(out_adj[v]), len(in_adj[v])) for v in range(n)]
    for _ in range(n):
        new = [(colour[v],
                tuple(sorted(colour[u] for u in out_adj[v])),
                tuple(sorted(colour[u] for u in in_adj[v]))) for v in range(n)]
        palette = {c: k for k, c in enumerate(sorted(set(new)))}
        new = [palette[c] for c in new]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    return colour


def find_isomorphism(n: int, rel_a, rel_b):
    """Map ``a -> b`` (0-based list) carrying relation set ``rel_a`` onto ``rel_b``.

    Relations are sets of ordered pairs over ``1..n``; pass both orientations
    for undirected graphs.  Returns ``None`` when no isomorphism exists.
    """
    rel_a, rel_b = set(rel_a), set(rel_b)
    if len(rel_a) != len(rel_b):
        return None
    out_a = [set() for _ in range(n)]
    in_a = [set() for _ in range(n)]
    out_b = [set() for _ in range(n)]
    in_b = [set() for _ in range(n)]
    for x, y in rel_a:
        out_a[x - 1].add(y - 1)
        in_a[y - 1].add(x - 1)
    for x, y in rel_b:
        out_b[x - 1].add(y - 1)
        in_b[y - 1].add(x - 1)
    # joint refinement keeps colour names comparable across the two structures
    joint_out = out_a + [{u + n for u in s} for s in out_b]
    joint_in = in_a + [{u + n for u in s} for s in in_b]
    colour = _refine(2 * n, joint_out, joint_in)
    ca, cb = colour[:n], colour[n:]
    if sorted(ca) != sorted(cb):
        return None

    order = sorted(range(n), key=lambda v: (ca.count(ca[v]), v))
    mapping = [-1] * n
    used = [False] * n

    def consistent(v, w):
        for u in out_a[v]:
            if mapping[u] >= 0 and mapping[u] not in out_b[w]:
                return False
        for u in in_a[v]:
            if mapping[u] >= 0 and mapping[u] not in in_b[w]:
                return False
        return True

    def rec(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if not used[w] and cb[w] == ca[v] and consistent(v, w):
                mapping[v] = w
                used[w] = True
                if rec(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return list(mapping) if rec(0) else None


def posets_isomorphic(P: Poset, Q: Poset) -> bool:
    return P.n == Q.n and find_isomorphism(P.n, P.relations, Q.relations) is not None


def graphs_isomorphic(G: SimpleGraph, H: SimpleGraph) -> bool:
    if G.n != H.n:
        return False
    sym = lambda E: {(i, j) for i, j in E} | {(j, i) for i, j in E}
    return find_isomorphism(G.n, sym(G.edges), sym(H.edges)) is not None
