from hypothesis import given, settings

from conftest import pbz_algebras
from pbzstar import catalog
from pbzstar.checks import (charg_conditions, horizontal_components, in_oml_hsum_aol,
                            oml_aol_decomposition)
from pbzstar.families import (family, hsum_family, involutions, ordinal_family, small_aols,
                              small_lattices)
from pbzstar.structures import classify
from pbzstar.subalg import isomorphic
from pbzstar.sums import chain, hsum, mo


def test_family_sizes_are_deterministic():
    a = [A.name for A in hsum_family(14)]
    assert a == [A.name for A in hsum_family(14)]
    assert len(a) == 58 and len(ordinal_family(14)) == 137
    assert all(A.n <= 14 for A in family("all", 14))
    sizes = [A.n for A in hsum_family(14)]
    assert sizes == sorted(sizes)


def test_hsum_family_members_are_pbz():
    for A in hsum_family(10):
        assert "PBZStar" in classify(A)


def test_ordinal_family_members_are_aol():
    for A in ordinal_family(10):
        assert "Antiortholattice" in classify(A)


def test_involutions_of_boolean_square():
    # the four-element lattices are D4 and D2^2
    counts = sorted(len(involutions(L)) for L in small_lattices(4))
    assert counts == [1, 2]


def test_small_aols():
    aols = small_aols(6)
    assert [A.n for A in aols] == [1, 2, 3, 4, 5, 6, 6]
    for n in range(1, 7):
        assert any(isomorphic(A, chain(n)) is not None for A in aols)
    assert any(isomorphic(A, catalog.algebra("HEX")) is not None for A in aols)


def test_horizontal_components():
    A = hsum(mo(2), chain(4))
    comps = horizontal_components(A)
    # each atom of MO2 is its own component; the chain middle is one block
    assert sorted(len(c) for c in comps) == [1, 1, 1, 1, 2]


def test_decomposition_examples():
    K = catalog.algebra("K")
    assert oml_aol_decomposition(K) is None and not in_oml_hsum_aol(K)
    S, T = oml_aol_decomposition(hsum(mo(2), chain(4)))
    assert len(S) == 6 and len(T) == 4
    S, T = oml_aol_decomposition(chain(5))
    assert len(S) == 2 and len(T) == 5


@settings(max_examples=50)
@given(pbz_algebras)
def test_charg_conditions_agree(A):
    vals = charg_conditions(A)
    assert len(vals) == 9 and len(set(vals)) == 1


def test_charg_on_sums_with_aol():
    for B in (chain(3), chain(4), catalog.algebra("HEX")):
        assert all(charg_conditions(hsum(mo(2), B)))
    assert not any(charg_conditions(hsum(mo(1), catalog.algebra("K"))))
