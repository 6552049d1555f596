import random
from fractions import Fraction

import pytest

from chromsym.combinatorics import area_to_dyck, dyck_to_hessenberg, enumerate_dyck, zeta
from chromsym.csf import csf_bruteforce, csf_listing, greedy_weight
from chromsym.errors import NotABicoPart, NotUnitIntervalOrder
from chromsym.graphs import (
    Poset,
    antichain,
    chain,
    find_isomorphism,
    incomparability_graph,
    is_mn_free,
    poset_from_hessenberg,
)
from chromsym.listings import (
    Bico,
    BicoloredGraph,
    PartListing,
    Vertex,
    decompose_bico,
    dominant_reduction,
    greedy_weight_31free,
    lex_maximal_listing,
    matching_probabilities,
    poset_from_listing,
)
from chromsym.symfunc import SymFunc, to_schur

H_BIG = BicoloredGraph(2, 2, frozenset({(1, 1), (2, 1), (2, 2)}))
BIG = PartListing.from_levels((0, 1, 2, 2, 0)) + PartListing((Bico(0, H_BIG),))


def m(n, table):
    return SymFunc(n, "m", {tuple(lam): c for lam, c in table.items()})


X_BIG = m(9, {
    (1,) * 9: 362880, (2,) + (1,) * 7: 90720, (2, 2) + (1,) * 5: 23040,
    (2, 2, 2, 1, 1, 1): 6048, (2, 2, 2, 2, 1): 1728, (3,) + (1,) * 6: 1440,
    (3, 2, 1, 1, 1, 1): 384, (3, 2, 2, 1, 1): 112, (3, 2, 2, 2): 48,
})


def X(L):
    return csf_bruteforce(incomparability_graph(poset_from_listing(L)))


def test_big_example_poset():
    P = poset_from_listing(BIG)
    assert P.n == 9
    assert is_mn_free(P, 3, 1)
    # the bico adds 6<8, 7<8, 7<9 on top of the level relations
    assert {(6, 8), (7, 8), (7, 9)} <= P.relations and (6, 9) not in P.relations


def test_big_example_probabilities_and_decomposition():
    assert matching_probabilities(H_BIG) == (0, Fraction(1, 2), Fraction(1, 2))
    parts = decompose_bico(BIG, 5)
    assert [q for q, _ in parts] == [0, Fraction(1, 2), Fraction(1, 2)]
    levels = [Lj.levels() for _, Lj in parts]
    assert levels == [(0, 1, 2, 2, 0, 1, 1, 0, 0), (0, 1, 2, 2, 0, 1, 0, 0, 1), (0, 1, 2, 2, 0, 0, 0, 1, 1)]


def test_big_example_csf_and_identity():
    assert csf_listing(BIG) == X_BIG
    assert X(BIG) == X_BIG
    total = SymFunc(9, "m", {})
    for q, Lj in decompose_bico(BIG, 5):
        total = total + q * X(Lj)
    assert total == X_BIG


def test_big_example_l1_has_twenty_one_seven():
    _, L1 = decompose_bico(BIG, 5)[1]
    X1 = X(L1)
    assert X1[(2,) + (1,) * 7] == 85680
    assert X1[(3, 2, 2, 2)] == 24


def test_big_example_greedy_weight():
    assert greedy_weight_31free(BIG) == (3, 2, 2, 2)
    assert dominant_reduction(BIG).levels() == (0, 1, 2, 2, 0, 0, 0, 1, 1)


def test_poset_from_listing_small():
    assert poset_from_listing(PartListing.from_levels((0, 0, 0))) == antichain(3)
    assert poset_from_listing(PartListing.from_levels((0, 1))) == chain(2)
    # later vertex one level up but earlier in the word: incomparable
    assert poset_from_listing(PartListing.from_levels((1, 0))).relations == frozenset()


def test_matching_probabilities_trivial():
    assert matching_probabilities(BicoloredGraph(2, 3)) == (1, 0, 0)
    full = BicoloredGraph(2, 2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
    assert matching_probabilities(full) == (0, 0, 1)


def test_probabilities_sum_to_one():
    rng = random.Random(3)
    for r in range(1, 6):
        for s in range(1, 6):
            for _ in range(3):
                edges = {(a, b) for a in range(1, r + 1) for b in range(1, s + 1) if rng.random() < 0.4}
                q = matching_probabilities(BicoloredGraph(r, s, frozenset(edges)))
                assert sum(q) == 1 and all(0 <= x <= 1 for x in q)


def test_decompose_single_vertex_pairs():
    edgeless = PartListing((Bico(0, BicoloredGraph(1, 1)),))
    assert [(q, L.levels()) for q, L in decompose_bico(edgeless, 0) if q] == [(1, (1, 0))]
    edge = PartListing((Bico(0, BicoloredGraph(1, 1, frozenset({(1, 1)}))),))
    assert [(q, L.levels()) for q, L in decompose_bico(edge, 0) if q] == [(1, (0, 1))]
    with pytest.raises(NotABicoPart):
        decompose_bico(BIG, 0)


def _random_listing(rng, max_vertices=8):
    r, s = rng.randint(1, 3), rng.randint(1, 3)
    rest = rng.randint(0, max_vertices - r - s)
    lvl = rng.randint(0, 2)
    H = BicoloredGraph(r, s, frozenset((a, b) for a in range(1, r + 1) for b in range(1, s + 1) if rng.random() < 0.5))
    parts = [Vertex(rng.randint(0, 3)) for _ in range(rest)]
    parts.insert(rng.randint(0, rest), Bico(lvl, H))
    return PartListing(tuple(parts))


def test_decomposition_identity_random():
    rng = random.Random(11)
    for _ in range(60):
        L = _random_listing(rng)
        pos = L.bico_positions()[0]
        total = SymFunc(L.size, "m", {})
        for q, Lj in decompose_bico(L, pos):
            total = total + q * X(Lj)
        assert total == X(L), str(L)
        assert to_schur(total).is_nonnegative()


def test_decomposition_order_does_not_matter():
    rng = random.Random(5)
    H1 = BicoloredGraph(1, 2, frozenset({(1, 2)}))
    H2 = BicoloredGraph(2, 1, frozenset({(1, 1)}))
    L = PartListing((Vertex(1), Bico(0, H1), Bico(1, H2)))
    assert csf_listing(L) == X(L)
    for _ in range(5):
        parts = list(L.parts)
        rng.shuffle(parts)
        L2 = PartListing(tuple(parts))
        assert csf_listing(L2) == X(L2)


def test_support_monotone_in_j():
    rng = random.Random(2)
    for _ in range(30):
        L = _random_listing(rng)
        supports = [set(X(Lj).support()) for _, Lj in decompose_bico(L, L.bico_positions()[0])]
        for a, b in zip(supports, supports[1:]):
            assert a <= b


def test_lex_maximal_listing_examples():
    _, _, (_, L2) = decompose_bico(BIG, 5)
    assert lex_maximal_listing(poset_from_listing(L2)) == (0, 1, 2, 2, 0, 0, 0, 1, 1)
    assert lex_maximal_listing(antichain(4)) == (0, 0, 0, 0)
    assert lex_maximal_listing(chain(3)) == (0, 1, 2)
    with pytest.raises(NotUnitIntervalOrder):
        lex_maximal_listing(Poset.parse(4, "1<2,3<4"))


def test_lex_maximal_listing_round_trip():
    for n in range(1, 7):
        for d in enumerate_dyck(n):
            P = poset_from_hessenberg(dyck_to_hessenberg(d))
            a = lex_maximal_listing(P)
            assert a[0] == 0 and all(y <= x + 1 for x, y in zip(a, a[1:]))
            Q = poset_from_listing(PartListing.from_levels(a))
            assert find_isomorphism(n, P.relations, Q.relations) is not None


def test_greedy_weight_31free_trivial_and_zeta():
    assert greedy_weight_31free(PartListing.from_levels((0, 1, 2, 3))) == (4,)
    assert greedy_weight_31free(PartListing.from_levels((0,) * 5)) == (1,) * 5
    # a plain listing a gives the path zeta(area_to_dyck(a))
    for n in range(1, 7):
        for d in enumerate_dyck(n):
            a = lex_maximal_listing(poset_from_hessenberg(dyck_to_hessenberg(d)))
            assert greedy_weight_31free(PartListing.from_levels(a)) == greedy_weight(zeta(area_to_dyck(a)))


def test_json_round_trip():
    data = BIG.to_json()
    assert data[-1] == {"b": {"level": 0, "r": 2, "s": 2, "edges": [[1, 1], [2, 1], [2, 2]]}}
    assert PartListing.from_json(data) == BIG
