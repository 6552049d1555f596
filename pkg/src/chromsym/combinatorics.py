"""Partitions, dominance order and the three encodings of Dyck paths.

A Dyck path of length ``n`` is stored as a string of ``2n`` lowercase steps,
``'n'`` for North and ``'e'`` for East.  Hessenberg functions and area
sequences are plain tuples of ints (1-based meaning, 0-based storage).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    InvalidAreaSequence,
    InvalidDyckPath,
    InvalidHessenberg,
    InvalidPartition,
    SizeMismatch,
    TooLarge,
)

Partition = tuple  # weakly decreasing tuple of positive ints

MAX_ENUMERATION = 12


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def partition(parts: Sequence[int]) -> Partition:
    """Validate and normalise ``parts`` to a partition tuple (no zeros)."""
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p):
        raise InvalidPartition(f"negative part in {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidPartition(f"parts not weakly decreasing: {parts!r}")
    return p


def sort_partition(parts: Sequence[int]) -> Partition:
    """Sort a weight vector into the partition it represents."""
    return tuple(sorted((x for x in parts if x), reverse=True))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partition_from_multiplicities(pairs) -> Partition:
    """Build a partition from ``(part, multiplicity)`` pairs, e.g. ``2^3 1^2``."""
    parts = []
    for part, mult in pairs:
        parts.extend([part] * mult)
    return sort_partition(parts)


def dominance_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """Prefix-sum dominance ``x ⪯ y``.

    Vectors are compared exactly as given (composition dominance); shorter
    inputs are padded with zeros.
    """
    if sum(x) != sum(y):
        raise SizeMismatch(f"sizes differ: {sum(x)} vs {sum(y)}")
    sx = sy = 0
    for i in range(max(len(x), len(y))):
        sx += x[i] if i < len(x) else 0
        sy += y[i] if i < len(y) else 0
        if sx > sy:
            return False
    return True


# ---------------------------------------------------------------------------
# Dyck paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for ch in self.steps:
            if ch == "n":
                height += 1
            elif ch == "e":
                height -= 1
            else:
                raise InvalidDyckPath(f"bad step {ch!r} in {self.steps!r}")
            if height < 0:
                raise InvalidDyckPath(f"path dips below the diagonal: {self.steps!r}")
        if height != 0:
            raise InvalidDyckPath(f"unbalanced path: {self.steps!r}")

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        """Parse ``n``/``e`` steps, any case, no whitespace."""
        if any(ch.isspace() for ch in text):
            raise InvalidDyckPath("whitespace is not allowed in a Dyck path")
        return cls(text.lower())

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps


def dyck_to_hessenberg(d: DyckPath) -> tuple:
    """Column heights: ``h(i)`` is the number of North steps before the i-th East."""
    h = []
    norths = 0
    for ch in d.steps:
        if ch == "n":
            norths += 1
        else:
            h.append(norths)
    return tuple(h)


def check_hessenberg(h: Sequence[int]) -> tuple:
    h = tuple(int(x) for x in h)
    n = len(h)
    for i, v in enumerate(h, start=1):
        if not i <= v <= n:
            raise InvalidHessenberg(f"h({i})={v} outside [{i},{n}]")
        if i < n and h[i] < v:
            raise InvalidHessenberg(f"h not weakly increasing at {i}")
    return h


def hessenberg_to_dyck(h: Sequence[int]) -> DyckPath:
    h = check_hessenberg(h)
    out = []
    norths = 0
    for v in h:
        out.append("n" * (v - norths))
        norths = v
        out.append("e")
    return DyckPath("".join(out))


def area_sequence(d: DyckPath) -> tuple:
    """``a_i`` = full cells in row i strictly between the path and the diagonal."""
    a = []
    easts = 0
    for ch in d.steps:
        if ch == "n":
            a.append(len(a) - easts)
        else:
            easts += 1
    return tuple(a)


def check_area_sequence(a: Sequence[int]) -> tuple:
    a = tuple(int(x) for x in a)
    if not a:
        return a
    if a[0] != 0:
        raise InvalidAreaSequence("area sequence must start with 0")
    for i in range(len(a) - 1):
        if not 0 <= a[i + 1] <= a[i] + 1:
            raise InvalidAreaSequence(f"step a[{i + 2}]={a[i + 1]} after a[{i + 1}]={a[i]}")
    return a


def area_to_dyck(a: Sequence[int]) -> DyckPath:
    a = check_area_sequence(a)
    out = []
    for i, ai in enumerate(a):
        nxt = a[i + 1] if i + 1 < len(a) else 0
        out.append("n" + "e" * (ai - nxt + 1))
    return DyckPath("".join(out))


def area(d: DyckPath) -> int:
    return sum(area_sequence(d))


def bounce_points(d: DyckPath) -> list:
    """Diagonal points hit by the bounce path, excluding (0,0), ending at (n,n)."""
    h = dyck_to_hessenberg(d)
    pts = []
    j = 0
    while j < d.n:
        j = h[j]  # from (j,j) go north to h(j+1), then east to the diagonal
        pts.append((j, j))
    return pts


def bounce(d: DyckPath) -> int:
    """Bounce statistic: sum of ``n - j`` over interior bounce points."""
    return sum(d.n - j for j, _ in bounce_points(d)[:-1])


def zeta(d_prime: DyckPath) -> DyckPath:
    """Level-scan construction of the zeta map on Dyck paths.

    For ``b = 0, 1, ..., max(a) + 1`` the area word ``a`` of ``d_prime`` is read
    left to right, emitting North for each entry equal to ``b`` and East for
    each entry equal to ``b - 1``.
    """
    a = area_sequence(d_prime)
    if not a:
        return DyckPath("")
    out = []
    for b in range(max(a) + 2):
        for x in a:
            if x == b:
                out.append("n")
            elif x == b - 1:
                out.append("e")
    return DyckPath("".join(out))


def staircase(n: int) -> DyckPath:
    return DyckPath("ne" * n)


def full_path(n: int) -> DyckPath:
    return DyckPath("n" * n + "e" * n)


def enumerate_dyck(n: int, force: bool = False) -> Iterator[DyckPath]:
    """Yield every Dyck path of length ``n`` in lexicographic order ('e' < 'n')."""
    if n > MAX_ENUMERATION and not force:
        raise TooLarge(f"refusing to enumerate Dyck paths of length {n} > {MAX_ENUMERATION}")

    def rec(prefix, up, down):
        if up == n and down == n:
            yield "".join(prefix)
            return
        if down < up:
            prefix.append("e")
            yield from rec(prefix, up, down + 1)
            prefix.pop()
        if up < n:
            prefix.append("n")
            yield from rec(prefix, up + 1, down)
            prefix.pop()

    for s in rec([], 0, 0):
        yield DyckPath(s)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
