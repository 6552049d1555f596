"""Homogeneous symmetric functions with exact rational coefficients.

Three bases are supported: monomial (``"m"``), Schur (``"s"``) and
elementary (``"e"``).  Conversions go through the monomial basis using
Kostka numbers and 0-1 matrix counts, both solved as unitriangular systems.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import conjugate, dominance_leq, partition, partitions_of
from .errors import ChromsymError, TooLarge

BASES = ("m", "s", "e")
MAX_DEGREE = 12


def _key(lam) -> tuple:
    return partition(lam)


class SymFunc:
    """``sum coeffs[lam] * b_lam`` for one basis ``b``; zero coefficients are dropped."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs=None):
        if basis not in BASES:
            raise ChromsymError(f"unknown basis {basis!r}")
        self.degree = int(degree)
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = _key(lam)
            if sum(lam) != self.degree:
                raise ChromsymError(f"{lam} is not a partition of {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in clean.items() if c}

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise ChromsymError("degree or basis mismatch")
        return True

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        if isinstance(scalar, SymFunc):
            return NotImplemented
        scalar = Fraction(scalar)
        return SymFunc(self.degree, self.basis, {lam: c * scalar for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self.degree, self.basis, self.coeffs) == (other.degree, other.basis, other.coeffs)

    def __getitem__(self, lam):
        return self.coeffs.get(_key(lam), Fraction(0))

    def support(self) -> list:
        return sorted(self.coeffs, reverse=True)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def __repr__(self):
        return f"SymFunc({self.degree}, {self.basis!r}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for lam in self.support():
            c = self.coeffs[lam]
            terms.append(f"{c} {self.basis}{''.join(map(str, lam)) if max(lam) < 10 else list(lam)}")
        return " + ".join(terms)

    # -- serialisation ----------------------------------------------------
    def to_dict(self) -> dict:
        return {"degree": self.degree, "basis": self.basis,
                "coeffs": {",".join(map(str, lam)): str(self.coeffs[lam]) for lam in self.support()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = {}
        for key, val in data["coeffs"].items():
            lam = tuple(int(x) for x in key.split(",") if x.strip())
            coeffs[lam] = Fraction(val)
        return cls(int(data["degree"]), data["basis"], coeffs)


def basis_element(basis: str, lam, coeff=1) -> SymFunc:
    lam = _key(lam)
    return SymFunc(sum(lam), basis, {lam: coeff})


# ---------------------------------------------------------------------------
# transition coefficients
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def kostka(lam: tuple, mu: tuple) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu``.

    The largest entry occupies a horizontal strip; strip it off and recurse.
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    if not dominance_leq(sorted(mu, reverse=True), lam):
        return 0
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    lam = list(lam)

    def strips(i, remaining, nu):
        nonlocal total
        if i == len(lam):
            if remaining == 0:
                total += kostka(partition(nu), rest)
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(remaining, lam[i] - lower) + 1):
            nu.append(lam[i] - take)
            strips(i + 1, remaining - take, nu)
            nu.pop()

    strips(0, last, [])
    return total


@lru_cache(maxsize=None)
def zero_one_count(rows: tuple, cols: tuple) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1
    first, rest = rows[0], rows[1:]
    groups = {}
    for c in cols:
        if c:
            groups[c] = groups.get(c, 0) + 1
    values = sorted(groups)
    total = 0

    def choose(k, remaining, new_cols, weight):
        nonlocal total
        if k == len(values):
            if remaining == 0:
                total += weight * zero_one_count(rest, tuple(sorted(new_cols, reverse=True)))
            return
        v, g = values[k], groups[values[k]]
        for t in range(0, min(g, remaining) + 1):
            choose(k + 1, remaining - t,
                   new_cols + [v - 1] * t + [v] * (g - t), weight * comb(g, t))

    choose(0, first, [], 1)
    return total


def _guard(f: SymFunc, max_degree: int):
    if f.degree > max_degree:
        raise TooLarge(f"degree {f.degree} exceeds cap {max_degree}")


def to_monomial(f: SymFunc, max_degree: int = MAX_DEGREE) -> SymFunc:
    _guard(f, max_degree)
    if f.basis == "m":
        return f
    out = {}
    for mu in partitions_of(f.degree):
        total = Fraction(0)
        for lam, c in f.coeffs.items():
            t = kostka(lam, mu) if f.basis == "s" else zero_one_count(lam, mu)
            if t:
                total += c * t
        if total:
            out[mu] = total
    return SymFunc(f.degree, "m", out)


def to_schur(f: SymFunc, max_degree: int = MAX_DEGREE) -> SymFunc:
    """Schur expansion via the unitriangular Kostka system (reverse-lex sweep)."""
    _guard(f, max_degree)
    if f.basis == "s":
        return f
    f = to_monomial(f, max_degree)
    out = {}
    for lam in partitions_of(f.degree):
        c = f[lam] - sum(d * kostka(nu, lam) for nu, d in out.items())
        if c:
            out[lam] = c
    return SymFunc(f.degree, "s", out)


def to_elementary(f: SymFunc, max_degree: int = MAX_DEGREE) -> SymFunc:
    """Elementary expansion; ``e_lam`` leads with ``m_{lam'}`` with coefficient 1."""
    _guard(f, max_degree)
    if f.basis == "e":
        return f
    f = to_monomial(f, max_degree)
    out = {}
    for mu in partitions_of(f.degree):
        c = f[mu] - sum(g * zero_one_count(lam, mu) for lam, g in out.items())
        if c:
            out[conjugate(mu)] = c
    return SymFunc(f.degree, "e", out)


def convert(f: SymFunc, basis: str, max_degree: int = MAX_DEGREE) -> SymFunc:
    return {"m": to_monomial, "s": to_schur, "e": to_elementary}[basis](f, max_degree)


def is_schur_positive(f: SymFunc) -> bool:
    return to_schur(f).is_nonnegative()


def is_e_positive(f: SymFunc) -> bool:
    return to_elementary(f).is_nonnegative()


def multinomial_permutations(lam, k: int) -> int:
    """Number of distinct arrangements of ``lam`` padded to length ``k``."""
    if len(lam) > k:
        return 0
    padded = list(lam) + [0] * (k - len(lam))
    out = factorial(k)
    for v in set(padded):
        out //= factorial(padded.count(v))
    return out
