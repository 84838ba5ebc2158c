import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import levels, partitions, small_algebras
from pbzstar import catalog
from pbzstar.congruence import (Partition, all_partitions, brute_force_congruences,
                                congruence_lattice, generated_congruence, irreducibility,
                                is_congruence, principal_congruence, sum_congruence_horizontal,
                                sum_congruence_ordinal)
from pbzstar.errors import ImproperInput, SizeLimit
from pbzstar.lattice import chain_lattice
from pbzstar.sums import canonical_aol, chain, horizontal_sum, mo, ordinal_sum


def target(A, level):
    return A.lat if level == "lattice" else A


def applicable(A, level):
    return (level == "lattice" or (level == "BI" and A.inv is not None)
            or (level == "BZ" and A.brouwer is not None))


# ---- partitions ----

def pairs(labels):
    return {(a, b) for a in range(len(labels)) for b in range(len(labels)) if labels[a] == labels[b]}


@given(partitions(), st.data())
def test_partition_meet_join(p, data):
    n = len(p)
    q = data.draw(partitions(max_n=n).filter(lambda x: len(x) == n))
    P, Q = Partition.of(p), Partition.of(q)
    assert pairs(P.meet(Q).blocks) == pairs(p) & pairs(q)
    # join: transitive closure of the union
    rel = pairs(p) | pairs(q)
    changed = True
    while changed:
        extra = {(a, c) for a, b in rel for b2, c in rel if b == b2} - rel
        changed = bool(extra)
        rel |= extra
    assert pairs(P.join(Q).blocks) == rel
    assert P.refines(P.join(Q)) and P.meet(Q).refines(P)
    assert P.refines(Q) == (pairs(p) <= pairs(q))


def test_partition_basics():
    P = Partition.from_classes(4, [[0, 2], [1], [3]])
    assert P.blocks == (0, 1, 0, 2) and P.k == 3
    assert [list(c) for c in P.classes()] == [[0, 2], [1], [3]]
    assert Partition.of([5, 5, 1]) == Partition.of([0, 0, 9])
    assert Partition.delta(3).is_delta() and Partition.nabla(3).is_nabla()
    assert P.show() == "{{0,2}, {1}, {3}}"


def test_all_partitions_bell():
    assert [sum(1 for _ in all_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


# ---- congruences ----

@settings(max_examples=60)
@given(small_algebras, levels)
def test_enumeration_matches_brute_force(A, level):
    if not applicable(A, level):
        return
    X = target(A, level)
    assert congruence_lattice(X, level).cons == brute_force_congruences(X, level)


@settings(max_examples=40)
@given(small_algebras, levels, st.data())
def test_principal_is_least(A, level, data):
    if not applicable(A, level) or A.n < 2:
        return
    X = target(A, level)
    a = data.draw(st.integers(0, A.n - 1))
    b = data.draw(st.integers(0, A.n - 1))
    p = principal_congruence(X, a, b, level)
    assert is_congruence(X, p, level) and p.same(a, b)
    for c in brute_force_congruences(X, level):
        if c.same(a, b):
            assert p.refines(c)


@settings(max_examples=40)
@given(small_algebras, levels)
def test_con_is_lattice_under_refinement(A, level):
    if not applicable(A, level):
        return
    con = congruence_lattice(target(A, level), level)
    c = con.cons
    for i, j in itertools.product(range(len(c)), repeat=2):
        m = c[con.meet[i][j]]
        assert m == c[i].meet(c[j])
        assert c[con.join[i][j]] == c[i].join(c[j])
    L = con.as_lattice()
    assert L.n == len(c)
    assert con.cons[con.delta].is_delta() and con.cons[con.nabla].is_nabla()


def test_generated_congruence():
    D = chain(5)
    g = generated_congruence(D, [(1, 2)], "BZ")
    # the involution forces 2 ~ 3 as well
    assert g == Partition.of([0, 1, 1, 1, 2])
    assert generated_congruence(D, [], "BZ").is_delta()


def test_levels_nest():
    A = catalog.algebra("D6")
    lat = set(congruence_lattice(A.lat, "lattice").cons)
    bi = set(congruence_lattice(A, "BI").cons)
    bz = set(congruence_lattice(A, "BZ").cons)
    assert bz <= bi <= lat
    assert (len(lat), len(bi), len(bz)) == (32, 8, 5)


def test_size_limits():
    with pytest.raises(SizeLimit):
        congruence_lattice(chain(30), "BZ")
    with pytest.raises(SizeLimit):
        congruence_lattice(chain(12).lat, "lattice", max_cons=100)


# ---- sums of congruences ----

def test_ordinal_sum_congruence():
    L, M = chain_lattice(3), chain_lattice(3)
    S, smap = ordinal_sum(L, M)
    a = Partition.of([0, 0, 1])
    b = Partition.of([0, 1, 1])
    s = sum_congruence_ordinal(a, b, smap)
    assert s == Partition.of([0, 0, 1, 2, 2])
    assert is_congruence(S, s, "lattice")


def test_horizontal_sum_congruence():
    A, B = mo(1), chain(4)
    S, smap = horizontal_sum([A, B], "BZ")
    alpha = Partition.delta(4)
    beta = Partition.of([0, 1, 1, 2])
    s = sum_congruence_horizontal([alpha, beta], smap)
    assert is_congruence(S, s, "BZ")
    assert s.k == S.n - 1
    with pytest.raises(ImproperInput):
        sum_congruence_horizontal([alpha, Partition.nabla(4)], smap)


# ---- irreducibility ----

def test_chain_irreducibility():
    r = irreducibility(chain(5), "BZ")
    assert r.subdirectly_irreducible and not r.simple
    assert r.monolith == Partition.of([0, 1, 1, 1, 2])
    r = irreducibility(chain(4), "BI")
    # Con_BI(D4) is a four-element Boolean lattice, but its coatoms do not permute
    assert not r.subdirectly_irreducible and r.directly_irreducible
    r = irreducibility(chain(1), "BZ")
    assert r.simple and r.subdirectly_irreducible and r.directly_irreducible
    assert irreducibility(chain(2), "BZ").simple


def test_direct_reducibility_of_product():
    from pbzstar.sums import product
    P = product(chain(2), chain(3))
    r = irreducibility(P, "BZ")
    assert not r.directly_irreducible
    a, b = r.factor_pair
    assert a.meet(b).is_delta() and a.join(b).is_nabla() and a.permutes_to_nabla(b)


def test_mo_simple():
    assert not irreducibility(mo(1), "BZ").directly_irreducible
    for k in range(2, 5):
        assert irreducibility(mo(k), "BZ").simple


@settings(max_examples=30)
@given(small_algebras)
def test_si_iff_unique_atom(A):
    if A.brouwer is None or A.n < 2:
        return
    cons = brute_force_congruences(A, "BZ")
    nontrivial = [c for c in cons if not c.is_delta()]
    least = [c for c in nontrivial if all(c.refines(d) for d in nontrivial)]
    r = irreducibility(A, "BZ")
    assert r.subdirectly_irreducible == bool(least)
    assert r.simple == (len(cons) == 2)


def test_canonical_aol_con_size():
    A = canonical_aol(chain_lattice(2), chain(2))
    # Con(D2) x Con_BI(D2) has 4 elements
    assert len(congruence_lattice(A, "BI")) == 4
