"""Exact Lorentzian checks for symmetric functions restricted to k variables.

A homogeneous f of degree n with nonnegative coefficients is Lorentzian when
its support is M-convex and every Hessian of an order n-2 derivative has at
most one positive eigenvalue.  Eigenvalues are counted from an exact
characteristic polynomial with Descartes' rule, never with floats.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

from .combinatorics import partitions_of, sort_partition
from .errors import DegreeTooSmall, NegativeCoefficient
from .newton import Verdict, expand_support, is_m_convex, simplex_points
from .polys import Polynomial, charpoly, check_symmetric, is_real_rooted, positive_root_count
from .rooks import rook_numbers
from .graphs import ferrers_board
from .symfunc import SymFunc, to_monomial


def _monomial(f: SymFunc) -> SymFunc:
    return f if f.basis == "m" else to_monomial(f)


def _check_nonnegative(f: SymFunc):
    if not f.is_nonnegative():
        raise NegativeCoefficient("coefficients must be nonnegative")


def coefficient(f: SymFunc, alpha) -> object:
    """Coefficient of x^alpha in the monomial expansion of a symmetric f."""
    return f[sort_partition(alpha)]


def vec_factorial(alpha) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def hessian_at(f: SymFunc, k: int, alpha) -> list:
    """Hessian of the alpha-th derivative: entry (r, s) is ``(alpha+e_r+e_s)! c_{alpha+e_r+e_s}``."""
    f = _monomial(f)
    if f.degree < 2:
        raise DegreeTooSmall("Hessians need degree at least 2")
    alpha = list(alpha) + [0] * (k - len(alpha))
    if len(alpha) != k or sum(alpha) != f.degree - 2:
        raise DegreeTooSmall(f"alpha must be a point of D({k},{f.degree - 2})")
    H = [[0] * k for _ in range(k)]
    for r in range(k):
        for s in range(r, k):
            beta = list(alpha)
            beta[r] += 1
            beta[s] += 1
            v = vec_factorial(beta) * coefficient(f, beta)
            v = int(v) if v.denominator == 1 else v
            H[r][s] = H[s][r] = v
    return H


def count_positive_eigenvalues(M) -> int:
    check_symmetric(M)
    return positive_root_count(charpoly(M))


def _hessian_alphas(k: int, n: int, unrestricted: bool):
    if unrestricted:
        yield from simplex_points(k, n - 2)
        return
    for lam in sorted(partitions_of(n - 2)):
        if len(lam) <= k:
            yield lam + (0,) * (k - len(lam))


def is_lorentzian(f: SymFunc, k: int, exhaustive: bool = False, unrestricted: bool = False) -> Verdict:
    """M-convex support plus at most one positive eigenvalue per Hessian.

    Only sorted alpha are visited unless ``unrestricted``; symmetry of f makes
    the Hessians at permuted alpha conjugate by a permutation matrix.  The
    witness is an exchange triple or the first failing alpha.  With
    ``exhaustive`` every failing alpha is collected in ``detail["failures"]``.
    """
    f = _monomial(f)
    _check_nonnegative(f)
    if f.degree < 2:
        raise DegreeTooSmall("Lorentzian checks need degree at least 2")
    detail = {"m_convex": True, "hessians_checked": 0, "max_positive_eigenvalues": 0,
              "failures": []}
    mc = is_m_convex(expand_support(f, k))
    if not mc:
        detail["m_convex"] = False
        detail["kind"] = "exchange"
        return Verdict(False, mc.witness, detail)
    first = None
    for alpha in _hessian_alphas(k, f.degree, unrestricted):
        pos = count_positive_eigenvalues(hessian_at(f, k, alpha))
        detail["hessians_checked"] += 1
        detail["max_positive_eigenvalues"] = max(detail["max_positive_eigenvalues"], pos)
        if pos > 1:
            detail["failures"].append(alpha)
            if first is None:
                first = alpha
            if not exhaustive:
                break
    if first is not None:
        detail["kind"] = "hessian"
        return Verdict(False, first, detail)
    return Verdict(True, None, detail)


def lorentzian_report(v: Verdict) -> dict:
    witness = None
    if not v.ok:
        if v.detail.get("kind") == "exchange":
            a, b, i = v.witness
            witness = {"kind": "exchange", "alpha": list(a), "beta": list(b), "i": i}
        else:
            witness = {"kind": "hessian", "alpha": list(v.witness),
                       "all": [list(a) for a in v.detail.get("failures", [])]}
    return {"lorentzian": v.ok, "m_convex": v.detail["m_convex"],
            "hessians_checked": v.detail["hessians_checked"],
            "max_positive_eigenvalues": v.detail["max_positive_eigenvalues"],
            "witness": witness}


def discrete_log_concavity(f: SymFunc, k: int, normalized: bool = True,
                           unrestricted: bool = False) -> Verdict:
    """Check ``(a!)^2 c_a^2 >= (a+e_i-e_j)! (a-e_i+e_j)! c_+ c_-`` over the simplex.

    With ``normalized=False`` the factorials are dropped.  For symmetric f
    only sorted alpha need checking (with all i, j) unless ``unrestricted``.
    Witness: ``(alpha, i, j)`` with 1-based indices.
    """
    f = _monomial(f)
    _check_nonnegative(f)
    n = f.degree
    for alpha in simplex_points(k, n):
        if not unrestricted and any(alpha[t] < alpha[t + 1] for t in range(k - 1)):
            continue
        c = coefficient(f, alpha)
        for i in range(k):
            for j in range(k):
                if i == j or alpha[j] == 0 or alpha[i] == 0:
                    # one of the neighbours leaves the simplex, so its coefficient is 0
                    continue
                plus = list(alpha)
                plus[i] += 1
                plus[j] -= 1
                minus = list(alpha)
                minus[i] -= 1
                minus[j] += 1
                rhs = coefficient(f, plus) * coefficient(f, minus)
                lhs = c * c
                if normalized:
                    lhs *= vec_factorial(alpha) ** 2
                    rhs *= vec_factorial(plus) * vec_factorial(minus)
                if lhs < rhs:
                    return Verdict(False, (alpha, i + 1, j + 1))
    return Verdict(True)


# ---------------------------------------------------------------------------
# the block matrices of the abelian case
# ---------------------------------------------------------------------------

def block_matrix(p: int, q: int, a, b, c) -> list:
    """M_{p,q}(a,b,c): blocks of sizes p+1 and q+1 (a size of 0 is allowed).

    First block: 0 on the diagonal, a off it.  Second block: b on the
    diagonal, c off it.  Every cross entry is b.
    """
    n1, n2 = p + 1, q + 1
    if n1 < 0 or n2 < 0:
        raise ValueError("block sizes must be nonnegative")
    N = n1 + n2
    M = [[0] * N for _ in range(N)]
    for r in range(N):
        for s in range(N):
            if r < n1 and s < n1:
                M[r][s] = 0 if r == s else a
            elif r >= n1 and s >= n1:
                M[r][s] = b if r == s else c
            else:
                M[r][s] = b
    return M


@dataclass(frozen=True)
class FactoredPolynomial:
    factors: tuple  # (Polynomial, exponent) pairs

    def expand(self) -> Polynomial:
        out = Polynomial((1,))
        for poly, e in self.factors:
            out = out * poly ** e
        return out

    def __str__(self):
        return " * ".join(f"({p})" + (f"^{e}" if e != 1 else "") for p, e in self.factors if e)


def block_charpoly(p: int, q: int, a, b, c, verify: bool = True) -> FactoredPolynomial:
    """``(x+a)^p (x-b+c)^q (x^2 - x(pa+b+qc) - (p+1)(q+1)b^2 + pa(b+qc))``."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    quad = Polynomial((-(p + 1) * (q + 1) * b * b + p * a * (b + q * c), -(p * a + b + q * c), 1))
    out = FactoredPolynomial(((Polynomial((a, 1)), p), (Polynomial((c - b, 1)), q), (quad, 1)))
    if verify:
        assert out.expand() == charpoly(block_matrix(p, q, a, b, c))
    return out


def abelian_parameters(r, n: int, i: int) -> tuple:
    """The scalars a, b, c attached to ``alpha = (2^{i-1}, 1^{n-2i}, 0, ...)``."""
    get = lambda t: r[t] if 0 <= t < len(r) else 0
    a = 0
    if n - 2 * i - 2 >= 0:
        a = 2 ** (i + 1) * factorial(i + 1) * factorial(n - 2 * i - 2) * get(i + 1)
    b = 2 ** i * factorial(i) * factorial(n - 2 * i) * get(i)
    c = 2 ** (i - 1) * factorial(i - 1) * factorial(n - 2 * i + 2) * get(i - 1)
    return a, b, c


def abelian_alpha(n: int, k: int, i: int) -> tuple:
    return (2,) * (i - 1) + (1,) * (n - 2 * i) + (0,) * (k - n + i + 1)


def abelian_certificate(mu, n1: int, n2: int, k: int) -> Verdict:
    """Closed-form inequalities proving the Lorentzian property of a co-bipartite X.

    For each i with ``1 <= i <= n/2`` whose alpha fits in k variables, check
    ``b - c <= 0`` and ``-(n-2i)(k-n+i+1) b^2 + (n-2i-1) a (b + (k-n+i) c) <= 0``.
    ``detail["rows"]`` lists every i with its a, b, c and both verdicts.
    """
    n = n1 + n2
    r = rook_numbers(ferrers_board(mu, n1, n2))
    rows = []
    ok = True
    witness = None
    for i in range(1, n // 2 + 1):
        if k - n + i + 1 < 0:
            continue
        a, b, c = abelian_parameters(r, n, i)
        first = b - c <= 0
        second = -(n - 2 * i) * (k - n + i + 1) * b * b + (n - 2 * i - 1) * a * (b + (k - n + i) * c) <= 0
        rows.append({"i": i, "a": a, "b": b, "c": c, "first": first, "second": second})
        if not (first and second) and ok:
            ok, witness = False, i
    return Verdict(ok, witness, {"rows": rows, "rooks": r})


# ---------------------------------------------------------------------------
# stability probing
# ---------------------------------------------------------------------------

def specialize_line(f: SymFunc, k: int, u, v) -> Polynomial:
    """Exact univariate polynomial ``t -> f(u + t v)``."""
    f = _monomial(f)
    lines = [Polynomial((u[i], v[i])) for i in range(k)]
    powers = [[Polynomial((1,))] for _ in range(k)]
    for i in range(k):
        for _ in range(f.degree):
            powers[i].append(powers[i][-1] * lines[i])
    total = Polynomial()
    for alpha in expand_support(f, k).points:
        term = Polynomial((coefficient(f, alpha),))
        for i, e in enumerate(alpha):
            if e:
                term = term * powers[i][e]
        total = total + term
    return total


def probe_stability(f: SymFunc, k: int, trials: int = 100, seed: int = 0,
                    u_range=(-5, 5), v_range=(1, 5), stop_at_first: bool = False) -> dict:
    """Random real-rootedness probes of ``f(u + t v)``; evidence, not proof."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    passed, failures = 0, []
    done = 0
    for _ in range(trials):
        u = [rng.randint(*u_range) for _ in range(k)]
        v = [rng.randint(*v_range) for _ in range(k)]
        p = specialize_line(f, k, u, v)
        done += 1
        if p.is_zero() or is_real_rooted(p):
            passed += 1
        else:
            failures.append({"u": u, "v": v, "poly": p.to_strings()})
            if stop_at_first:
                break
    return {"trials": done, "seed": seed, "passed": passed, "failed": len(failures),
            "failures": failures}
