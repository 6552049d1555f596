import random
from math import factorial

import pytest

from chromsym.combinatorics import DyckPath, conjugate, dominance_leq, enumerate_dyck, full_path, hessenberg_to_dyck, partitions_of, staircase
from chromsym.csf import (
    cobipartite_graph,
    csf_bruteforce,
    csf_cobipartite,
    csf_dyck,
    csf_listing,
    first_fit_weight,
    greedy_coloring,
    greedy_weight,
    greedy_weight_from_partition,
    is_nice_witness,
)
from chromsym.errors import TooLarge
from chromsym.graphs import Board, SimpleGraph, cobipartite_board, complete_graph, indifference_graph
from chromsym.listings import PartListing
from chromsym.symfunc import SymFunc, basis_element, to_elementary, to_schur
from oracles import naive_csf

RUNNING = hessenberg_to_dyck((3, 3, 5, 5, 5))
X_RUNNING = SymFunc(5, "m", {(1, 1, 1, 1, 1): 120, (2, 1, 1, 1): 24, (2, 2, 1): 4})


def test_running_example():
    assert csf_dyck(RUNNING) == X_RUNNING
    assert csf_cobipartite(Board(2, 3, frozenset({(1, 2), (1, 3), (2, 2), (2, 3)}))) == X_RUNNING
    assert to_elementary(X_RUNNING).is_nonnegative()


def test_small_graphs():
    for n in range(1, 6):
        assert csf_bruteforce(complete_graph(n)) == SymFunc(n, "m", {(1,) * n: factorial(n)})
    c4 = SimpleGraph.parse(4, "1-2,2-3,3-4,1-4")
    assert csf_bruteforce(c4) == SymFunc(4, "m", {(1, 1, 1, 1): 24, (2, 1, 1): 4, (2, 2): 2})
    p4 = SimpleGraph.parse(4, "1-2,3-4,2-3")
    assert csf_bruteforce(p4) == SymFunc(4, "m", {(1, 1, 1, 1): 24, (2, 1, 1): 6, (2, 2): 2})
    # P4 is co-bipartite with cliques {1,2} and {3,4}
    assert csf_cobipartite(cobipartite_board(p4, 2, 2)) == csf_bruteforce(p4)
    assert csf_cobipartite(Board(1, 1, frozenset())) == SymFunc(2, "m", {(1, 1): 2})
    assert csf_listing(PartListing.from_levels((0,))) == basis_element("m", (1,))


def test_bruteforce_matches_naive_oracle():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(1, 6)
        edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.4]
        G = SimpleGraph(n, frozenset(edges))
        assert csf_bruteforce(G).coeffs == naive_csf(n, edges)


def test_cobipartite_formula_random_boards():
    rng = random.Random(2024)
    for _ in range(200):
        n1 = rng.randint(1, 5)
        n2 = rng.randint(1, 8 - n1)
        cells = frozenset((i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1) if rng.random() < 0.5)
        B = Board(n1, n2, cells)
        assert csf_cobipartite(B) == csf_bruteforce(cobipartite_graph(B))


def test_bruteforce_guard():
    with pytest.raises(TooLarge):
        csf_bruteforce(complete_graph(13))


def test_greedy_examples():
    assert greedy_weight(RUNNING) == (2, 2, 1)
    assert greedy_weight(full_path(5)) == (1,) * 5
    assert greedy_weight(staircase(4)) == (4,)
    assert greedy_weight(DyckPath("nnenee" + "ne")) == (3, 1)
    cols = greedy_coloring(RUNNING)
    G = indifference_graph(RUNNING)
    assert all(cols[a - 1] != cols[b - 1] for a, b in G.edges)


def test_greedy_matches_first_fit():
    for n in range(1, 8):
        for d in enumerate_dyck(n):
            assert greedy_weight(d) == first_fit_weight(indifference_graph(d))


def test_greedy_weight_from_partition():
    assert greedy_weight_from_partition((2, 2, 1)) == DyckPath("nnneeennee")
    assert greedy_weight_from_partition((1, 1, 1)) == full_path(3)
    assert greedy_weight_from_partition((3,)) == staircase(3)
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert greedy_weight(greedy_weight_from_partition(lam)) == lam


def test_greedy_dominance_and_schur_positivity():
    for n in range(1, 7):
        for d in enumerate_dyck(n):
            X = csf_dyck(d)
            lam = greedy_weight(d)
            assert lam in X.support()
            assert all(dominance_leq(mu, lam) for mu in X.support())
            S = to_schur(X)
            assert S.is_nonnegative()
            assert all(dominance_leq(mu, lam) for mu in S.support())
            assert is_nice_witness(X)


def test_nice_witness_examples():
    assert is_nice_witness(X_RUNNING)
    assert not is_nice_witness(basis_element("m", (2, 2, 1)))
    assert is_nice_witness(SymFunc(4, "m", {(1, 1, 1, 1): 24}))
    star = SimpleGraph.parse(4, "1-2,1-3,1-4")
    assert not is_nice_witness(csf_bruteforce(star))


def test_conjugate_gives_first_run_lengths():
    lam = (3, 2, 2, 1)
    d = greedy_weight_from_partition(lam)
    first = conjugate(lam)[0]
    assert d.steps.startswith("n" * first + "e" * first)
