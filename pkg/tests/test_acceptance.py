"""Acceptance criteria, one test per criterion.

The conftest prints one PASS/FAIL line per criterion at the end of the run.
"""

import random
import time
from fractions import Fraction

from chromsym.combinatorics import (
    DyckPath,
    area_to_dyck,
    dominance_leq,
    dyck_to_hessenberg,
    enumerate_dyck,
    hessenberg_to_dyck,
    zeta,
)
from chromsym.csf import cobipartite_graph, csf_bruteforce, csf_cobipartite, csf_dyck, csf_listing, greedy_weight
from chromsym.graphs import Board, abelian_ferrers, ferrers_board, incomparability_graph, is_abelian
from chromsym.listings import (
    Bico,
    BicoloredGraph,
    PartListing,
    decompose_bico,
    greedy_weight_31free,
    lex_maximal_listing,
    matching_probabilities,
    poset_from_listing,
    unit_interval_hessenberg,
)
from chromsym.lorentzian import (
    abelian_alpha,
    abelian_certificate,
    abelian_parameters,
    block_matrix,
    coefficient,
    count_positive_eigenvalues,
    hessian_at,
    is_lorentzian,
)
from chromsym.newton import (
    exchange_fails,
    expand_support,
    is_m_convex,
    is_snp,
    newton_equals_permutahedron,
    nonvanishing_decision,
    simplex_points,
)
from chromsym.polys import Polynomial, charpoly
from chromsym.rooks import permanent, raw_ulc_inequality, rook_numbers, support_board
from chromsym.scan import ScanConfig, failures, run_scan, zeta_conjecture_check
from chromsym.symfunc import SymFunc, to_schur


def _m(n, table):
    return SymFunc(n, "m", dict(table))


def _ones(k):
    return (1,) * k


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def test_criterion_01_running_example():
    with Timer() as t:
        d = hessenberg_to_dyck((3, 3, 5, 5, 5))
        X = csf_dyck(d)
        assert X == _m(5, {_ones(5): 120, (2, 1, 1, 1): 24, (2, 2, 1): 4})
        assert to_schur(X) == SymFunc(5, "s", {_ones(5): 36, (2, 1, 1, 1): 16, (2, 2, 1): 4})
        assert greedy_weight(d) == (2, 2, 1)
        for k in (3, 4, 5):
            assert newton_equals_permutahedron(X, k, (2, 2, 1))
    assert t.seconds < 1


C4_HESSIAN = [
    [0, 8, 8, 8, 8],
    [8, 0, 8, 8, 8],
    [8, 8, 8, 24, 24],
    [8, 8, 24, 8, 24],
    [8, 8, 24, 24, 8],
]


def test_criterion_02_c4_lorentzian_failure():
    x = Polynomial.x()
    with Timer() as t:
        # C4 as the co-bipartite graph of the diagonal board
        diag = Board(2, 2, frozenset({(1, 1), (2, 2)}))
        X = csf_cobipartite(diag)
        assert X == csf_bruteforce(cobipartite_graph(diag)) == _m(4, {_ones(4): 24, (2, 1, 1): 4, (2, 2): 2})
        H = hessian_at(X, 5, (1, 1, 0, 0, 0))
        assert H == C4_HESSIAN
        assert charpoly(H) == (x + 8) * (x + 16) ** 2 * (x ** 2 - 64 * x + 64)
        assert count_positive_eigenvalues(H) == 2
        assert not is_lorentzian(X, 5)
        assert is_m_convex(expand_support(X, 5))
    assert t.seconds < 1


def test_criterion_03_abelian_theorem():
    checked = 0
    with Timer() as t:
        for n in range(2, 8):
            for d in enumerate_dyck(n):
                if not is_abelian(d):
                    continue
                X = csf_dyck(d)
                mu, n1, n2 = abelian_ferrers(d)
                r = rook_numbers(ferrers_board(mu, n1, n2))
                for k in range(1, 10):
                    assert is_lorentzian(X, k), (d.steps, k)
                    assert abelian_certificate(mu, n1, n2, k), (d.steps, k)
                    for i in range(1, n // 2 + 1):
                        if k - n + i + 1 < 0:
                            continue
                        H = hessian_at(X, k, abelian_alpha(n, k, i))
                        a, b, c = abelian_parameters(r, n, i)
                        assert all(v == 0 for row in H[: i - 1] for v in row)
                        tail = [row[i - 1:] for row in H[i - 1:]]
                        assert tail == block_matrix(n - 2 * i - 1, k - n + i, a, b, c), (d.steps, k, i)
                    checked += 1
    assert checked > 1000
    assert t.seconds < 600


def test_criterion_04_conjecture_scan():
    with Timer() as t:
        for n in range(1, 7):
            rep = run_scan(ScanConfig(n, 6, ("lorentzian",), k_min=1))
            assert rep["summary"]["lorentzian"]["fail"] == 0, failures(rep)
    assert t.seconds < 1800


H_BIG = BicoloredGraph(2, 2, frozenset({(1, 1), (2, 1), (2, 2)}))
BIG = PartListing.from_levels((0, 1, 2, 2, 0)) + PartListing((Bico(0, H_BIG),))

X_BIG = {
    _ones(9): 362880, (2,) + _ones(7): 90720, (2, 2) + _ones(5): 23040, (2, 2, 2, 1, 1, 1): 6048,
    (2, 2, 2, 2, 1): 1728, (3,) + _ones(6): 1440, (3, 2, 1, 1, 1, 1): 384, (3, 2, 2, 1, 1): 112,
    (3, 2, 2, 2): 48,
}
X_L1 = {  # printed with m_{21^8}; brute force puts 85680 on m_{21^7}
    _ones(9): 362880, (2,) + _ones(7): 85680, (2, 2) + _ones(5): 20160, (2, 2, 2, 1, 1, 1): 4752,
    (2, 2, 2, 2, 1): 1152, (3,) + _ones(6): 1440, (3, 2, 1, 1, 1, 1): 336, (3, 2, 2, 1, 1): 80,
    (3, 2, 2, 2): 24,
}
X_L2 = {
    _ones(9): 362880, (2,) + _ones(7): 95760, (2, 2) + _ones(5): 25920, (2, 2, 2, 1, 1, 1): 7344,
    (2, 2, 2, 2, 1): 2304, (3,) + _ones(6): 1440, (3, 2, 1, 1, 1, 1): 432, (3, 2, 2, 1, 1): 144,
    (3, 2, 2, 2): 72,
}
X_L0 = {
    _ones(9): 362880, (2,) + _ones(7): 75600, (2, 2) + _ones(5): 14880, (2, 2, 2, 1, 1, 1): 2664,
    (2, 2, 2, 2, 1): 384, (3,) + _ones(6): 1440, (3, 2, 1, 1, 1, 1): 240, (3, 2, 2, 1, 1): 32,
}


def _X(L):
    return csf_bruteforce(incomparability_graph(poset_from_listing(L)))


def test_criterion_05_big_example():
    with Timer() as t:
        assert matching_probabilities(H_BIG) == (0, Fraction(1, 2), Fraction(1, 2))
        X = csf_listing(BIG)
        assert X == _m(9, X_BIG) == _X(BIG)
        parts = decompose_bico(BIG, 5)
        Xs = [_X(Lj) for _, Lj in parts]
        assert Xs == [_m(9, X_L0), _m(9, X_L1), _m(9, X_L2)]
        combo = SymFunc(9, "m", {})
        for (q, _), Xj in zip(parts, Xs):
            combo = combo + q * Xj
        assert combo == X
        for lam, c in X.coeffs.items():
            assert c == Fraction(1, 2) * Xs[1][lam] + Fraction(1, 2) * Xs[2][lam]
        lam = greedy_weight_31free(BIG)
        assert lam == (3, 2, 2, 2)
        for k in (4, 5, 6):
            assert newton_equals_permutahedron(X, k, lam)
    assert t.seconds < 120


def test_criterion_06_greedy_dominance():
    with Timer() as t:
        for n in range(1, 7):
            for d in enumerate_dyck(n):
                X = csf_dyck(d)
                lam = greedy_weight(d)
                assert lam in X.support(), d.steps
                assert all(dominance_leq(mu, lam) for mu in X.support()), d.steps
    assert t.seconds < 300


TRIFORCE = SymFunc(6, "s", {_ones(6): 162, (2, 1, 1, 1, 1): 72, (2, 2, 1, 1): 12, (2, 2, 2): 6, (3, 1, 1, 1): 6})
SIX_TREE = SymFunc(6, "s", {_ones(6): 32, (2, 1, 1, 1, 1): 40, (2, 2, 1, 1): 18, (2, 2, 2): 8,
                            (3, 1, 1, 1): 16, (3, 2, 1): 6, (3, 3): 2, (4, 1, 1): 2})


def test_criterion_07_counterexamples():
    with Timer() as t:
        S = expand_support(TRIFORCE, 6)
        assert is_snp(S)
        v = is_m_convex(S)
        assert not v and exchange_fails(S, *v.witness)
        assert exchange_fails(S, (1, 1, 1, 3, 0, 0), (0, 0, 2, 2, 2, 0), 4)

        S = expand_support(SIX_TREE, 6)
        v = is_m_convex(S)
        assert not v and exchange_fails(S, *v.witness)
        assert exchange_fails(S, (0, 0, 0, 3, 0, 3), (0, 0, 0, 4, 1, 1), 6)

        v = is_snp(expand_support(SymFunc(12, "s", {(6, 2, 2, 2): 1, (4, 4, 4): 1}), 4))
        assert not v and v.witness == (5, 3, 3, 1)
    assert t.seconds < 30


def test_criterion_08_rook_cross_checks():
    with Timer() as t:
        assert rook_numbers(ferrers_board((2, 2), 2, 3)) == (1, 4, 2)
        diag = Board(2, 2, frozenset({(1, 1), (2, 2)}))
        r = rook_numbers(diag)
        assert r == (1, 2, 1)
        assert raw_ulc_inequality(r, 4, 1) == (False, 4, 6)
        rng = random.Random(100)
        for _ in range(100):
            n = rng.randint(1, 6)
            A = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
            assert permanent(A) == rook_numbers(support_board(A))[n]
    assert t.seconds < 60


def _random_dyck(n, rng):
    # cycle lemma: n+1 north and n east steps, rotated to start after the last
    # minimum, stay strictly positive; dropping the leading n leaves a Dyck path
    word = ["n"] * (n + 1) + ["e"] * n
    rng.shuffle(word)
    height, low, cut = 0, 0, 0
    for t, ch in enumerate(word):
        height += 1 if ch == "n" else -1
        if height <= low:
            low, cut = height, t + 1
    rotated = word[cut:] + word[:cut]
    return DyckPath("".join(rotated[1:]))


def test_criterion_09_nonvanishing():
    for n in range(1, 6):
        for d in enumerate_dyck(n):
            X = csf_dyck(d)
            for k in range(1, n + 1):
                for alpha in simplex_points(k, n):
                    assert nonvanishing_decision(d, alpha) == (coefficient(X, alpha) != 0)
    rng = random.Random(9)
    worst = 0.0
    for _ in range(20):
        d = _random_dyck(100, rng)
        assert d.n == 100
        cuts = sorted(rng.sample(range(1, 100), 20))
        alpha = [b - a for a, b in zip([0] + cuts, cuts + [100])] + [0] * 80
        rng.shuffle(alpha)
        with Timer() as t:
            nonvanishing_decision(d, alpha)
        worst = max(worst, t.seconds)
    assert worst < 0.010, worst


BIG_TABLE = [
    ((0, 1, 2, 2, 0, 1, 1, 0, 0), (4, 5, 7, 7, 7, 9, 9, 9, 9), (3, 2, 2, 1, 1)),
    ((0, 1, 2, 2, 0, 1, 0, 0, 1), (4, 5, 6, 6, 7, 9, 9, 9, 9), (3, 2, 2, 2)),
    ((0, 1, 2, 2, 0, 0, 0, 1, 1), (4, 5, 5, 5, 7, 9, 9, 9, 9), (3, 2, 2, 2)),
]


def test_criterion_10_zeta_conjecture():
    with Timer() as t:
        findings = []
        for n in range(1, 7):
            for d in enumerate_dyck(n):
                v = zeta_conjecture_check(d)
                if not v:
                    findings.append(v.detail)
        assert findings == []
        for (_, Lj), (listing, hess, lam) in zip(decompose_bico(BIG, 5), BIG_TABLE):
            P = poset_from_listing(Lj)
            assert lex_maximal_listing(P) == listing
            assert unit_interval_hessenberg(P) == hess
            d = hessenberg_to_dyck(hess)
            assert dyck_to_hessenberg(zeta(area_to_dyck(listing))) == hess
            assert zeta_conjecture_check(d).detail["listing"] == list(listing)
            assert greedy_weight(d) == lam
    assert t.seconds < 120
