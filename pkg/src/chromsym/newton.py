"""Supports of symmetric functions, permutahedra, SNP and M-convexity.

Points are tuples of nonnegative ints of a fixed length k.  Everything is
exact; convex-hull membership is decided with a small rational simplex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .combinatorics import DyckPath, dominance_leq, partition, partitions_of, sort_partition
from .errors import ChromsymError
from .symfunc import SymFunc, to_monomial


@dataclass(frozen=True)
class SupportSet:
    k: int
    n: int
    points: frozenset = field(default_factory=frozenset)
    symmetric: bool = False  # closed under permuting coordinates

    def __post_init__(self):
        pts = frozenset(tuple(int(x) for x in p) for p in self.points)
        for p in pts:
            if len(p) != self.k or sum(p) != self.n or min(p, default=0) < 0:
                raise ChromsymError(f"{p} is not a point of the simplex D({self.k},{self.n})")
        object.__setattr__(self, "points", pts)

    def __contains__(self, p):
        return tuple(p) in self.points

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def partitions(self) -> set:
        return {sort_partition(p) for p in self.points}

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "n": self.n, "points": [list(p) for p in sorted(self.points)]})


@dataclass(frozen=True)
class Verdict:
    """A boolean answer plus the witness found when it is False."""

    ok: bool
    witness: Optional[tuple] = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def distinct_permutations(lam, k: int) -> set:
    lam = tuple(lam)
    if len(lam) > k:
        return set()
    return set(permutations(lam + (0,) * (k - len(lam))))


def simplex_points(k: int, n: int):
    """All points of D(k, n) in descending lexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in simplex_points(k - 1, n - first):
            yield (first,) + rest


def support_from_partitions(parts, k: int, n: int) -> SupportSet:
    pts = set()
    for lam in parts:
        pts |= distinct_permutations(partition(lam), k)
    return SupportSet(k, n, frozenset(pts), symmetric=True)


def expand_support(f: SymFunc, k: int) -> SupportSet:
    """All k-variable exponent vectors of ``f``; a Schur or e input is converted first."""
    if f.basis != "m":
        f = to_monomial(f)
    return support_from_partitions([lam for lam in f.support() if len(lam) <= k], k, f.degree)


def permutahedron_points(lam, k: int) -> SupportSet:
    """Lattice points of the permutahedron of ``lam`` in k coordinates (empty if k < len)."""
    lam = partition(lam)
    n = sum(lam)
    if len(lam) > k:
        return SupportSet(k, n, frozenset(), symmetric=True)
    return support_from_partitions([mu for mu in partitions_of(n)
                                    if len(mu) <= k and dominance_leq(mu, lam)], k, n)


def in_permutahedron(alpha, lam) -> bool:
    """Rado: alpha is in the permutahedron of lam iff sort(alpha) is dominated by lam."""
    lam = partition(lam)
    alpha = tuple(alpha)
    if sum(alpha) != sum(lam) or any(a < 0 for a in alpha) or len(lam) > len(alpha):
        return False
    return dominance_leq(sorted(alpha, reverse=True), lam)


# ---------------------------------------------------------------------------
# M-convexity
# ---------------------------------------------------------------------------

def exchange_fails(S: SupportSet, alpha, beta, i: int) -> bool:
    """True if no j with alpha_j < beta_j completes the exchange at index i (1-based)."""
    alpha, beta = tuple(alpha), tuple(beta)
    i -= 1
    if not (alpha in S and beta in S) or alpha[i] <= beta[i]:
        return False
    for j in range(S.k):
        if alpha[j] < beta[j]:
            a2 = list(alpha)
            a2[i] -= 1
            a2[j] += 1
            b2 = list(beta)
            b2[j] -= 1
            b2[i] += 1
            if tuple(a2) in S.points and tuple(b2) in S.points:
                return False
    return True


def _block_sorted(beta, alpha) -> bool:
    """beta is weakly decreasing on every run of equal entries of alpha."""
    return all(beta[t] >= beta[t + 1] for t in range(len(alpha) - 1) if alpha[t] == alpha[t + 1])


def _scan_m_convex(S: SupportSet, reduce: bool) -> Verdict:
    pts = sorted(S.points, reverse=True)
    alphas = pts
    if reduce:
        alphas = [a for a in pts if list(a) == sorted(a, reverse=True)]
    for alpha in alphas:
        for beta in pts:
            if reduce and not _block_sorted(beta, alpha):
                continue
            for i in range(S.k):
                if alpha[i] > beta[i] and exchange_fails(S, alpha, beta, i + 1):
                    return Verdict(False, (alpha, beta, i + 1))
    return Verdict(True)


def _is_permutahedral(S: SupportSet) -> bool:
    parts = S.partitions()
    top = max(parts)
    if not all(dominance_leq(mu, top) for mu in parts):
        return False
    return S.points == permutahedron_points(top, S.k).points


def is_m_convex(S: SupportSet, method: str = "auto") -> Verdict:
    """Symmetric exchange property; on failure the witness is ``(alpha, beta, i)``.

    For a symmetric set it suffices to scan sorted ``alpha`` and ``beta``
    sorted within each run of equal ``alpha`` entries: any failing triple can
    be permuted into that form.  In ``auto`` mode a symmetric set that is the
    full lattice point set of a permutahedron is accepted at once, since those
    are M-convex.
    """
    if method not in ("auto", "scan", "full"):
        raise ChromsymError(f"unknown method {method!r}")
    if not S.points:
        return Verdict(True)
    if method == "auto" and S.symmetric and _is_permutahedral(S):
        return Verdict(True)
    return _scan_m_convex(S, reduce=S.symmetric and method != "full")


# ---------------------------------------------------------------------------
# convex hulls and SNP
# ---------------------------------------------------------------------------

def _phase_one(A, b) -> bool:
    """Is ``{x >= 0 : A x = b}`` nonempty?  Exact simplex with Bland's rule."""
    m, n = len(A), len(A[0]) if A else 0
    rows = []
    for r in range(m):
        row = [Fraction(v) for v in A[r]]
        rhs = Fraction(b[r])
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        art = [Fraction(0)] * m
        art[r] = Fraction(1)
        rows.append(row + art + [rhs])
    basis = [n + r for r in range(m)]
    width = n + m
    # reduced costs for minimising the sum of artificials
    cost = [-sum(rows[r][j] for r in range(m)) for j in range(width)]
    for r in range(m):
        cost[n + r] = Fraction(0)
    value = -sum(rows[r][-1] for r in range(m))
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for r in range(m):
            if rows[r][enter] > 0:
                ratio = rows[r][-1] / rows[r][enter]
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:  # unbounded cannot happen: objective is bounded below by 0
            break
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [v / piv for v in rows[r]]
        for t in range(m):
            if t != r and rows[t][enter]:
                f = rows[t][enter]
                rows[t] = [a - f * c for a, c in zip(rows[t], rows[r])]
        f = cost[enter]
        cost = [a - f * c for a, c in zip(cost, rows[r][:-1])]
        value -= f * rows[r][-1]
        basis[r] = enter
    return value == 0


def in_convex_hull(alpha, points) -> bool:
    """Exact test whether alpha is a convex combination of the given points."""
    alpha = tuple(alpha)
    points = sorted(set(tuple(p) for p in points))
    if not points:
        return False
    if alpha in points:
        return True
    k = len(alpha)
    for c in range(k):
        col = [p[c] for p in points]
        if not (min(col) <= alpha[c] <= max(col)):
            return False
    A = [[p[c] for p in points] for c in range(k)] + [[1] * len(points)]
    return _phase_one(A, list(alpha) + [1])


def is_snp(S: SupportSet) -> Verdict:
    """Support equals the lattice points of its convex hull.

    Points of the simplex are scanned in descending lexicographic order; the
    witness is the first hull point missing from S.  For a symmetric S the
    hull is symmetric too, and the lex-largest point of an orbit is the sorted
    one, so only weakly decreasing points need to be visited.
    """
    if not S.points:
        return Verdict(True)
    pts = sorted(S.points)
    for alpha in simplex_points(S.k, S.n):
        if S.symmetric and any(alpha[t] < alpha[t + 1] for t in range(S.k - 1)):
            continue
        if alpha not in S.points and in_convex_hull(alpha, pts):
            return Verdict(False, alpha)
    return Verdict(True)


def newton_equals_permutahedron(f: SymFunc, k: int, lam) -> bool:
    """Support of f in k variables equals the lattice points of the permutahedron of lam."""
    lam = partition(lam)
    S = expand_support(f, k)
    if sum(lam) != S.n:
        return False
    if not all(in_permutahedron(p, lam) for p in S.points):
        return False
    for mu in partitions_of(S.n):
        if len(mu) <= k and dominance_leq(mu, lam):
            if not distinct_permutations(mu, k) <= S.points:
                return False
    return True


def nonvanishing_decision(obj, alpha) -> bool:
    """Is the coefficient of x^alpha in X nonzero?  Uses only the greedy weight."""
    from .csf import greedy_weight
    from .listings import PartListing, greedy_weight_31free

    if isinstance(obj, DyckPath):
        lam = greedy_weight(obj)
    elif isinstance(obj, PartListing):
        lam = greedy_weight_31free(obj)
    else:
        raise ChromsymError("expected a DyckPath or a PartListing")
    return in_permutahedron(alpha, lam)
