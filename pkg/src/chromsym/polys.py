"""Exact univariate polynomials, Sturm chains and characteristic polynomials.

Coefficients are Python ints or Fractions stored in ascending degree.
Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotSquare, NotSymmetric, ZeroPolynomial


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_norm(Fraction(c) if not isinstance(c, int) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _coerce(self, other):
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = Fraction(other.lead)
        for k in range(len(q) - 1, -1, -1):
            coef = rem[k + other.degree] / lead
            q[k] = coef
            if coef:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= coef * b
        return Polynomial(q), Polynomial(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "Polynomial":
        return Polynomial([Fraction(c) / Fraction(self.lead) for c in self.coeffs])

    def shift(self, a) -> "Polynomial":
        """``p(x + a)``."""
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * Polynomial((a, 1)) + c
        return out

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_strings(self) -> list:
        return [str(c) for c in self.coeffs]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Polynomial) -> Polynomial:
    g = poly_gcd(p, p.derivative())
    return p // g if g.degree > 0 else p.monic()


def sturm_chain(p: Polynomial) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, by a Sturm chain."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no finite root count")
    chain = sturm_chain(p)
    at_neg_inf = [q.lead * (-1) ** q.degree for q in chain]
    at_pos_inf = [q.lead for q in chain]
    return sign_changes(at_neg_inf) - sign_changes(at_pos_inf)


def is_real_rooted(p: Polynomial) -> bool:
    """All complex roots real, decided on the square-free part."""
    if p.is_zero():
        raise ZeroPolynomial("real-rootedness of the zero polynomial is undefined")
    sf = squarefree_part(p)
    return count_real_roots(sf) == sf.degree


def positive_root_count(p: Polynomial) -> int:
    """Positive roots with multiplicity of a real-rooted ``p`` (Descartes is exact here)."""
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    return sign_changes(cs)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def check_square(M) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquare(f"matrix is not square ({n} rows)")
    return n


def check_symmetric(M) -> int:
    n = check_square(M)
    for i in range(n):
        for j in range(i + 1, n):
            if M[i][j] != M[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    return n


def charpoly(M) -> Polynomial:
    """``det(xI - M)`` by Faddeev-LeVerrier; integer input stays integral."""
    n = check_square(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- M * Mk_prev + c_{n-k+1} I
        prod = [[sum(M[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        Mk = prod
        trace = sum(sum(M[i][t] * Mk[t][i] for t in range(n)) for i in range(n))
        c = Fraction(-trace, k)
        coeffs[n - k] = _norm(c)
    return Polynomial(coeffs)


def determinant(M):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = check_square(M)
    if n == 0:
        return 1
    A = [[Fraction(v) for v in row] for row in M]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return _norm(sign * A[n - 1][n - 1])


def positive_eigenvalue_count(M) -> int:
    """Positive eigenvalues of a symmetric matrix, counted with multiplicity."""
    check_symmetric(M)
    return positive_root_count(charpoly(M))
