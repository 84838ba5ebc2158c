import pytest
from hypothesis import given, settings

from conftest import permuted, small_algebras
from pbzstar import catalog
from pbzstar.congruence import Partition, congruence_lattice
from pbzstar.errors import NotACongruence, UnexpectedType
from pbzstar.lattice import chain_lattice
from pbzstar.structures import is_subuniverse
from pbzstar.subalg import generate, isomorphic, quotient, singleton_class, subalgebra
from pbzstar.sums import boolean_square, chain, hsum, mo


def is_isomorphism(A, B, f):
    n = A.n
    if sorted(f) != list(range(n)):
        return False
    for a in range(n):
        for b in range(n):
            if f[A.meet[a][b]] != B.meet[f[a]][f[b]] or f[A.join[a][b]] != B.join[f[a]][f[b]]:
                return False
        if A.inv is not None and f[A.inv[a]] != B.inv[f[a]]:
            return False
        if A.brouwer is not None and f[A.brouwer[a]] != B.brouwer[f[a]]:
            return False
    return True


def test_generate_empty_and_mo2():
    A = mo(2)
    assert generate(A, set()).elements == {A.bot, A.top}
    a = A.index("a")
    assert set(A.names(generate(A, {a}).elements)) == {"0", "a", "a'", "1"}


def test_generate_hex():
    A = catalog.algebra("D2+MO2+D2")
    x = next(x for x in range(A.n) if not A.le(x, A.inv[x]) and not A.le(A.inv[x], x))
    sub = subalgebra(A, generate(A, {x}).elements)
    assert sub.n == 6
    assert isomorphic(sub, catalog.algebra("HEX")) is not None


@settings(max_examples=40)
@given(small_algebras)
def test_generated_is_least_subuniverse(A):
    if A.brouwer is None:
        return
    for x in range(A.n):
        g = generate(A, {x}).elements
        assert is_subuniverse(A, g) and x in g
        # dropping any non-bound element breaks closure or loses x
        for y in g - {A.bot, A.top, x}:
            assert not is_subuniverse(A, g - {y})


def test_quotients():
    for A in (chain(5), mo(2), catalog.algebra("K")):
        assert isomorphic(quotient(A, Partition.delta(A.n)), A) is not None
        assert quotient(A, Partition.nabla(A.n)).n == 1
    D5 = chain(5)
    Q = quotient(D5, Partition.from_classes(5, [[0], [1, 2], [3], [4]]).join(
        Partition.from_classes(5, [[0], [1], [2, 3], [4]])))
    assert isomorphic(Q, chain(3)) is not None


def test_quotient_needs_congruence():
    D5 = chain(5)
    with pytest.raises(NotACongruence):
        quotient(D5, Partition.from_classes(5, [[0], [1, 2], [3], [4]]))


def test_quotient_d5_to_d4_lattice():
    L = chain_lattice(5)
    from pbzstar.structures import BZAlgebra
    A = BZAlgebra(L)
    Q = quotient(A, Partition.from_classes(5, [[0], [1, 2], [3], [4]]))
    assert isomorphic(Q, chain_lattice(4), "lattice") is not None


def test_quotient_by_every_congruence_is_algebra():
    A = catalog.algebra("K")
    for theta in congruence_lattice(A, "BZ"):
        Q = quotient(A, theta)
        assert Q.n == theta.k


def test_isomorphic_examples():
    assert isomorphic(boolean_square().lat, chain_lattice(4), "lattice") is None
    A, B = hsum(mo(2), chain(3)), hsum(chain(3), mo(2))
    f = isomorphic(A, B)
    assert f is not None and is_isomorphism(A, B, f)
    # same lattice, different involution: D2^2 with swapped vs fixed atoms
    from pbzstar.structures import BZAlgebra
    fixed = BZAlgebra(boolean_square().lat, (3, 1, 2, 0), None)
    assert isomorphic(mo(1).bi_reduct(), fixed, "BI") is None
    assert isomorphic(mo(1).lat, fixed.lat, "lattice") is not None


@settings(max_examples=60)
@given(permuted())
def test_relabelled_copies_are_isomorphic(pair):
    A, B = pair
    f = isomorphic(A, B)
    assert f is not None and is_isomorphism(A, B, f)


def test_level_selection():
    A = catalog.algebra("NM11")
    with pytest.raises(ValueError):
        isomorphic(A.lat, A, "BZ")
    assert isomorphic(A.lat, A.lat) is not None


def test_singleton_class_examples():
    A = hsum(mo(3), chain(4))
    assert singleton_class(A, A.bot) == "D2"
    assert singleton_class(A, A.index("A.a")) == "D2SQ"
    D4 = chain(4)
    assert singleton_class(D4, 1) == "D4"
    assert singleton_class(chain(1), 0) == "D1"
    assert singleton_class(catalog.algebra("HEX"), 2) == "HEX"


def test_singleton_class_fixed_point_is_reported():
    # a fixed point of ' generates a copy of D3, outside the five types
    with pytest.raises(UnexpectedType):
        singleton_class(chain(3), 1)
