import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pbzstar.errors import NoBounds, NotALattice, PbzError
from pbzstar.families import small_lattices
from pbzstar.lattice import (CoverList, CyclicCovers, bits, chain_lattice, direct_product, dual,
                             from_covers, from_leq, from_meet_table, is_distributive,
                             is_modular, lattice_from_covers, order_profile)

N5 = from_covers(5, [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
                 ["0", "a", "b", "c", "1"])
M3 = from_covers(5, [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
                 ["0", "a", "b", "c", "1"])
LATTICES = ([chain_lattice(n) for n in range(1, 6)] + [N5, M3, dual(N5)]
            + [direct_product(chain_lattice(2), chain_lattice(3))]
            + list(small_lattices(5)) + list(small_lattices(6)))
lattices = st.sampled_from(LATTICES)


def brute_meet(L, a, b):
    lower = [x for x in range(L.n) if L.le(x, a) and L.le(x, b)]
    best = [g for g in lower if all(L.le(x, g) for x in lower)]
    return best[0]


def test_bits():
    assert bits(0) == []
    assert bits(0b10110) == [1, 2, 4]


@given(lattices)
def test_meet_join_are_glb_lub(L):
    D = dual(L)
    for a, b in itertools.product(range(L.n), repeat=2):
        assert L.meet[a][b] == brute_meet(L, a, b)
        assert L.join[a][b] == brute_meet(D, a, b)


@settings(max_examples=60)
@given(lattices, st.data())
def test_lattice_laws(L, data):
    r = st.integers(0, L.n - 1)
    a, b, c = data.draw(r), data.draw(r), data.draw(r)
    m, j = L.meet, L.join
    assert m[a][b] == m[b][a] and j[a][b] == j[b][a]
    assert m[a][m[b][c]] == m[m[a][b]][c]
    assert j[a][j[b][c]] == j[j[a][b]][c]
    assert m[a][j[a][b]] == a and j[a][m[a][b]] == a
    assert (m[a][b] == a) == L.le(a, b) == (j[a][b] == b)
    assert L.le(L.bot, a) and L.le(a, L.top)


def test_small_lattice_counts():
    # number of unlabelled lattices on n elements
    assert [len(small_lattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


def test_chain_and_dual():
    L = chain_lattice(4)
    assert order_profile(L).is_chain and order_profile(L).length == 3
    D = dual(N5)
    assert D.bot == N5.top and D.top == N5.bot
    for a, b in itertools.product(range(5), repeat=2):
        assert D.le(a, b) == N5.le(b, a)


def test_from_meet_table_roundtrip():
    assert from_meet_table(N5.meet) == N5


def test_product_order():
    P = direct_product(chain_lattice(2), chain_lattice(3))
    assert P.n == 6
    for p, q in itertools.product(range(6), repeat=2):
        assert P.le(p, q) == (p // 3 <= q // 3 and p % 3 <= q % 3)
    assert P.label(4) == "(1,1)"


def test_not_a_lattice():
    # two incomparable elements with two incomparable upper bounds
    with pytest.raises(NotALattice):
        from_covers(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])


def test_no_bounds_and_cycles():
    with pytest.raises(NoBounds):
        from_leq(2, lambda a, b: a == b)
    with pytest.raises(CyclicCovers):
        lattice_from_covers(CoverList(3, ((0, 1), (1, 2), (2, 1))))
    with pytest.raises(PbzError):
        lattice_from_covers(CoverList(2, ((0, 5),)))
    with pytest.raises(NoBounds):
        lattice_from_covers(CoverList(2, ((0, 1),), bot=1))


def test_order_profile_n5():
    pr = order_profile(N5)
    assert {N5.label(a) for a in pr.atoms} == {"a", "c"}
    assert {N5.label(a) for a in pr.coatoms} == {"b", "c"}
    assert {N5.label(a) for a in pr.join_irreducible} == {"a", "b", "c"}
    assert pr.length == 3 and not pr.is_chain


def test_covers_match_definition():
    for L in LATTICES:
        want = sorted((a, b) for a in range(L.n) for b in range(L.n)
                      if a != b and L.le(a, b)
                      and not any(c not in (a, b) and L.le(a, c) and L.le(c, b) for c in range(L.n)))
        assert L.covers() == want


def test_distributive_modular():
    assert not is_modular(N5) and not is_distributive(N5)
    assert is_modular(M3) and not is_distributive(M3)
    assert is_distributive(direct_product(chain_lattice(3), chain_lattice(3)))


def test_labels_and_index():
    assert N5.index("b") == 2 and N5.index("3") == 3
    with pytest.raises(KeyError):
        N5.index("q")
    assert N5 == N5.with_labels(None)
