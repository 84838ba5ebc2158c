import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PBZ_POOL, pbz_algebras
from pbzstar import catalog
from pbzstar.errors import NotPseudoKleene, SizeLimit, TrivialSummand
from pbzstar.lattice import chain_lattice, dual
from pbzstar.structures import BZAlgebra, classify
from pbzstar.subalg import isomorphic
from pbzstar.sums import (MO_MAX, boolean_square, canonical_aol, chain, horizontal_sum, hsum,
                          mo, ordinal_sum, product)

NONTRIVIAL = [A for A in PBZ_POOL if A.n > 2]


def test_ordinal_sum_order():
    L, M = boolean_square().lat, chain_lattice(3)
    S, smap = ordinal_sum(L, M)
    assert S.n == L.n + M.n - 1
    pl, pm = smap.positions
    for a, b in itertools.product(range(L.n), repeat=2):
        assert S.le(pl[a], pl[b]) == L.le(a, b)
    for a, b in itertools.product(range(M.n), repeat=2):
        assert S.le(pm[a], pm[b]) == M.le(a, b)
    for a in range(L.n):
        for b in range(M.n):
            assert S.le(pl[a], pm[b])
    assert smap.describe(pl[L.top]) == "A.3=B.0"


def test_horizontal_sum_structure():
    S, smap = horizontal_sum([mo(1), chain(3)], "BZ")
    assert S.n == 5
    assert isomorphic(S, catalog.algebra("M3")) is not None
    # middles of different summands are incomparable, meet to 0 and join to 1
    a = smap.positions[0][1]
    b = smap.positions[1][1]
    assert not S.le(a, b) and not S.le(b, a)
    assert S.meet[a][b] == S.bot and S.join[a][b] == S.top
    assert smap.provenance(S.bot) == [(0, 0), (1, 0)]


def test_horizontal_sum_levels():
    S = hsum(mo(1), chain(3), level="lattice")
    assert S.inv is None and S.brouwer is None
    S = hsum(mo(1), chain(3), level="BI")
    assert S.inv is not None and S.brouwer is None
    with pytest.raises(TrivialSummand):
        hsum(chain(1), chain(3))


@settings(max_examples=40)
@given(st.sampled_from(NONTRIVIAL), st.sampled_from(NONTRIVIAL))
def test_hsum_commutes(A, B):
    assert isomorphic(hsum(A, B), hsum(B, A)) is not None


@settings(max_examples=40)
@given(st.sampled_from(NONTRIVIAL), st.sampled_from(NONTRIVIAL))
def test_hsum_pbz_iff_one_orthomodular(A, B):
    S = hsum(A, B)
    one = "Orthomodular" in classify(A) or "Orthomodular" in classify(B)
    assert ("PBZStar" in classify(S)) == one
    assert "BZ" in classify(S) or not one


def test_mo_sizes():
    for k in range(0, 6):
        assert mo(k).n == 2 * k + 2
    assert mo(3).label(1) == "a" and mo(3).label(2) == "a'"
    with pytest.raises(SizeLimit):
        mo(MO_MAX + 1)
    with pytest.raises(ValueError):
        mo(-1)


def test_chain():
    D = chain(5)
    assert D.inv == (4, 3, 2, 1, 0)
    assert D.brouwer == (4, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        chain(0)


def test_product_componentwise():
    P = product(chain(2), chain(3))
    for p in range(P.n):
        i, j = divmod(p, 3)
        assert P.inv[p] == (1 - i) * 3 + (2 - j)
    assert "PBZStar" in classify(P) and "Antiortholattice" not in classify(P)


def test_canonical_aol_d2_mo2():
    A = canonical_aol(chain_lattice(2), mo(2))
    assert A.n == 8
    assert "Antiortholattice" in classify(A)
    assert isomorphic(A, catalog.algebra("D2+MO2+D2")) is not None


@settings(max_examples=30)
@given(st.sampled_from([chain_lattice(2), chain_lattice(3), boolean_square().lat]),
       st.sampled_from([A for A in PBZ_POOL if A.n <= 6]))
def test_canonical_aol_is_aol(M, K):
    A, m1, m2 = canonical_aol(M, K, with_maps=True)
    assert A.n == 2 * M.n + K.n - 2
    assert "Antiortholattice" in classify(A)
    # the involution swaps the two copies of M
    pm, pd = m1.positions[0], m2.positions[1]
    for x in range(M.n):
        assert A.inv[pm[x]] == pd[x]
    D = dual(M)
    for a, b in itertools.product(range(M.n), repeat=2):
        assert A.le(pd[a], pd[b]) == D.le(a, b)


def test_canonical_aol_errors():
    with pytest.raises(TrivialSummand):
        canonical_aol(chain_lattice(1), chain(2))
    notpk = BZAlgebra(boolean_square().lat, (3, 1, 2, 0), None, "B4")
    with pytest.raises(NotPseudoKleene):
        canonical_aol(chain_lattice(2), notpk)


def test_labels_unique_after_sum():
    S = hsum(chain(3), chain(3))
    assert len(set(S.lat.labels)) == S.n


@given(pbz_algebras)
def test_product_with_d2_keeps_pbz(A):
    assert "PBZStar" in classify(product(A, chain(2)))
