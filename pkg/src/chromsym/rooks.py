"""Rook numbers, hit numbers, hit polynomials and permanents of 0-1 matrices."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from .combinatorics import conjugate, partition
from .errors import IndexOutOfRange, NotSquare, NotZeroOne, TooLarge
from .graphs import Board, ferrers_board
from .polys import Polynomial, is_real_rooted  # noqa: F401  (re-exported)


def rook_numbers(B: Board) -> tuple:
    """``r[k]``: placements of k non-attacking rooks on B, for k = 0..min(n1, n2)."""
    rows = [sorted(j for i, j in B.cells if i == r) for r in range(1, B.n1 + 1)]
    counts = [0] * (min(B.n1, B.n2) + 1)

    def rec(row, used, k):
        if row == len(rows):
            counts[k] += 1
            return
        rec(row + 1, used, k)
        for j in rows[row]:
            if not used & (1 << j):
                rec(row + 1, used | (1 << j), k + 1)

    rec(0, 0, 0)
    return tuple(counts)


def hit_numbers(B: Board) -> tuple:
    """``h[j]``: maximum rook placements on the full rectangle with j rooks inside B."""
    small, big = min(B.n1, B.n2), max(B.n1, B.n2)
    counts = [0] * (small + 1)
    for image in permutations(range(1, big + 1), small):
        if B.n1 <= B.n2:
            cells = zip(range(1, small + 1), image)
        else:
            cells = ((i, j) for j, i in zip(range(1, small + 1), image))
        counts[sum(c in B.cells for c in cells)] += 1
    return tuple(counts)


def hit_numbers_from_rooks(B: Board) -> tuple:
    """Hit numbers from rook numbers: ``sum_j h_j y^j = sum_k r_k (N-k)!/(N-m)! (y-1)^k``."""
    m, N = min(B.n1, B.n2), max(B.n1, B.n2)
    total = Polynomial()
    for k, r in enumerate(rook_numbers(B)):
        total = total + Polynomial((-1, 1)) ** k * (r * factorial(N - k) // factorial(N - m))
    cs = list(total.coeffs) + [0] * (m + 1 - len(total.coeffs))
    return tuple(cs[: m + 1])


def hit_polynomial(mu) -> Polynomial:
    """``T(x; mu) = sum_i (N - i)! r_i(B_mu) (x - 1)^i`` with ``N = mu_1 >= len(mu)``."""
    mu = partition(mu)
    if not mu:
        raise IndexOutOfRange("hit polynomial needs a nonempty partition")
    if len(mu) > mu[0]:
        mu = conjugate(mu)
    N = mu[0]
    r = rook_numbers(ferrers_board(mu, N, N))
    out = Polynomial()
    for i, ri in enumerate(r):
        out = out + Polynomial((-1, 1)) ** i * (factorial(N - i) * ri)
    return out


def ulc_inequality_check(mu, i: int) -> bool:
    """``r_i^2 >= (1+1/i)(1+1/(l-i))(1+1/(mu_1-i)) r_{i-1} r_{i+1}`` on ``B_mu``."""
    mu = partition(mu)
    ell, width = len(mu), (mu[0] if mu else 0)
    if i < 1 or i > min(ell, width):
        raise IndexOutOfRange(f"index {i} outside 1..{min(ell, width)}")
    r = rook_numbers(ferrers_board(mu))
    r_next = r[i + 1] if i + 1 < len(r) else 0
    if r_next == 0:
        return True
    factor = (1 + Fraction(1, i)) * (1 + Fraction(1, ell - i)) * (1 + Fraction(1, width - i))
    return r[i] ** 2 >= factor * r[i - 1] * r_next


def raw_ulc_inequality(r, n: int, i: int):
    """Both sides of ``r_i^2 >= (1+1/i)(1+2/(n-2i))(1+1/(n-2i)) r_{i-1} r_{i+1}``.

    Works for the rook vector of any board; ``n`` is ``n1 + n2``.
    Returns ``(holds, lhs, rhs)``.
    """
    if i < 1 or n - 2 * i <= 0:
        raise IndexOutOfRange(f"index {i} invalid for n = {n}")
    get = lambda k: r[k] if 0 <= k < len(r) else 0
    m = n - 2 * i
    lhs = Fraction(get(i) ** 2)
    rhs = (1 + Fraction(1, i)) * (1 + Fraction(2, m)) * (1 + Fraction(1, m)) * get(i - 1) * get(i + 1)
    return lhs >= rhs, lhs, rhs


def first_condition(r, n: int, i: int) -> bool:
    """``2 i! (n-2i)! r_i <= (i-1)! (n-2i+2)! r_{i-1}``, valid for every board."""
    if i < 1 or n - 2 * i < 0:
        raise IndexOutOfRange(f"index {i} invalid for n = {n}")
    get = lambda k: r[k] if 0 <= k < len(r) else 0
    return 2 * factorial(i) * factorial(n - 2 * i) * get(i) <= factorial(i - 1) * factorial(n - 2 * i + 2) * get(i - 1)


def _check_01(A) -> int:
    n = len(A)
    if any(len(row) != n for row in A):
        raise NotSquare("permanent needs a square matrix")
    if any(v not in (0, 1) for row in A for v in row):
        raise NotZeroOne("permanent expects a 0-1 matrix")
    return n


def permanent(A, max_n: int = 12) -> int:
    """Exact permanent by Ryser's inclusion-exclusion with Gray-code updates."""
    n = _check_01(A)
    if n > max_n:
        raise TooLarge(f"{n}x{n} permanent exceeds cap {max_n}")
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    subset = 0
    for k in range(1, 1 << n):
        # flip the column given by the lowest set bit of k (Gray code order)
        col = (k & -k).bit_length() - 1
        subset ^= 1 << col
        sign = 1 if subset & (1 << col) else -1
        for i in range(n):
            row_sums[i] += sign * A[i][col]
        prod = 1
        for s in row_sums:
            prod *= s
            if not prod:
                break
        total += (-1) ** bin(subset).count("1") * prod
    return (-1) ** n * total


def support_board(A) -> Board:
    n = _check_01(A)
    return Board(n, n, frozenset((i + 1, j + 1) for i in range(n) for j in range(n) if A[i][j]))
