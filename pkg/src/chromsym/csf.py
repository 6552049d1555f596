"""Chromatic symmetric functions and greedy coloring weights."""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from functools import lru_cache
from math import factorial

from .combinatorics import (
    DyckPath,
    conjugate,
    dominance_leq,
    dyck_to_hessenberg,
    partition,
    sort_partition,
)
from .errors import TooLarge
from .graphs import Board, SimpleGraph, graph_from_board, incomparability_graph
from .symfunc import SymFunc

MAX_VERTICES = 12


def _block_type_counts(n: int, adj: tuple) -> dict:
    """Set partitions of the vertex set into independent blocks, by block sizes."""

    @lru_cache(maxsize=None)
    def rec(mask: int):
        if mask == 0:
            return {(): 1}
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        out = Counter()

        def grow(block, size, candidates):
            for key, cnt in rec(mask ^ block).items():
                out[tuple(sorted(key + (size,), reverse=True))] += cnt
            while candidates:
                bit = candidates & -candidates
                candidates ^= bit
                u = bit.bit_length() - 1
                grow(block | bit, size + 1, candidates & ~adj[u])

        grow(low, 1, rest & ~adj[v])
        return dict(out)

    return rec((1 << n) - 1)


def csf_bruteforce(G: SimpleGraph, max_vertices: int = MAX_VERTICES) -> SymFunc:
    """Monomial expansion of X_G by counting proper colorings.

    The coefficient of ``m_lam`` counts colorings whose i-th color class has
    exactly ``lam_i`` vertices: an unordered split into independent blocks of
    type ``lam``, times the ways to hand equal-sized blocks distinct colors.
    """
    if G.n > max_vertices:
        raise TooLarge(f"{G.n} vertices exceeds the brute-force cap {max_vertices}")
    adj = [0] * G.n
    for i, j in G.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    counts = _block_type_counts(G.n, tuple(adj))
    coeffs = {}
    for lam, cnt in counts.items():
        weight = 1
        for part in set(lam):
            weight *= factorial(lam.count(part))
        coeffs[lam] = cnt * weight
    return SymFunc(G.n, "m", coeffs)


def csf_cobipartite(B: Board) -> SymFunc:
    """Closed form ``sum_i i! (n-2i)! r_i(B) m_{2^i 1^{n-2i}}``."""
    from .rooks import rook_numbers

    n = B.n1 + B.n2
    coeffs = {}
    for i, r in enumerate(rook_numbers(B)):
        if r:
            coeffs[(2,) * i + (1,) * (n - 2 * i)] = factorial(i) * factorial(n - 2 * i) * r
    return SymFunc(n, "m", coeffs)


def csf_listing(L, max_vertices: int = MAX_VERTICES) -> SymFunc:
    """X of a part listing: peel bicoloured parts left to right, brute force the rest."""
    from .listings import decompose_bico, poset_from_listing

    if L.size > max_vertices:
        raise TooLarge(f"{L.size} vertices exceeds the brute-force cap {max_vertices}")
    positions = L.bico_positions()
    if not positions:
        return csf_bruteforce(incomparability_graph(poset_from_listing(L)), max_vertices)
    total = SymFunc(L.size, "m")
    for q, Lj in decompose_bico(L, positions[0]):
        if q:
            total = total + q * csf_listing(Lj, max_vertices)
    return total


def csf_dyck(d: DyckPath) -> SymFunc:
    from .graphs import indifference_graph

    return csf_bruteforce(indifference_graph(d))


# ---------------------------------------------------------------------------
# greedy coloring
# ---------------------------------------------------------------------------

def greedy_coloring(d: DyckPath) -> list:
    """Bounce-path coloring of G(d); entry ``v - 1`` is the color of vertex v.

    Each color starts at the first uncolored vertex ``j`` and repeatedly jumps
    to the first uncolored vertex after ``h(j)``.
    """
    h = dyck_to_hessenberg(d)
    colour = [0] * d.n
    uncoloured = list(range(1, d.n + 1))
    c = 0
    while uncoloured:
        c += 1
        picked = []
        k = 0
        while k < len(uncoloured):
            j = uncoloured[k]
            picked.append(j)
            colour[j - 1] = c
            k = bisect_right(uncoloured, h[j - 1], lo=k + 1)
        taken = set(picked)
        uncoloured = [v for v in uncoloured if v not in taken]
    return colour


def greedy_weight(d: DyckPath) -> tuple:
    colour = greedy_coloring(d)
    counts = Counter(colour)
    weight = tuple(counts[c] for c in range(1, len(counts) + 1))
    assert weight == sort_partition(weight)
    return weight


def first_fit_weight(G: SimpleGraph) -> tuple:
    """Weight of the first-fit coloring of ``G`` in the vertex order 1..n."""
    adj = G.adjacency()
    colour = {}
    for v in range(1, G.n + 1):
        taken = {colour[u] for u in adj[v] if u in colour}
        colour[v] = next(c for c in range(1, G.n + 2) if c not in taken)
    counts = Counter(colour.values())
    return tuple(counts[c] for c in range(1, len(counts) + 1))


def greedy_weight_from_partition(lam) -> DyckPath:
    """Disjoint cliques of sizes ``lam'_1, ..., lam'_m`` realise ``lam`` as greedy weight."""
    lam = partition(lam)
    return DyckPath("".join("n" * c + "e" * c for c in conjugate(lam)))


def is_nice_witness(f: SymFunc) -> bool:
    """True iff the partition support is closed downward under dominance."""
    from .combinatorics import partitions_of

    support = set(f.support())
    for lam in support:
        for mu in partitions_of(f.degree):
            if mu not in support and dominance_leq(mu, lam):
                return False
    return True


def cobipartite_graph(B: Board) -> SimpleGraph:
    return graph_from_board(B)
