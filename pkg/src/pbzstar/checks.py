"""Per-algebra decision procedures for the horizontal-sum characterization."""

from itertools import product as iproduct

from .structures import classify, element_sets, is_closed, is_subuniverse
from .subalg import subalgebra

CHARG_CONDITIONS = (
    "OML[+]AOL decomposition",
    "T subuniverse and L = S [+] T",
    "L = S u T",
    "T subuniverse",
    "T closed under '",
    "T' closed under '",
    "T = T'",
    "T' closed under ~",
    "T u T' closed under ~",
)


def in_oml_hsum_aol(A):
    """Membership test: every element is sharp or in T."""
    es = element_sets(A)
    return es.sharp | es.t_set == frozenset(range(A.n))


def horizontal_components(A):
    """Classes of A minus the bounds under the smallest equivalence linking
    x and y when they are comparable, meet above 0 or join below 1."""
    mid = [x for x in range(A.n) if x not in (A.bot, A.top)]
    parent = {x: x for x in mid}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, x in enumerate(mid):
        for y in mid[i + 1:]:
            if (A.le(x, y) or A.le(y, x) or A.meet[x][y] != A.bot
                    or A.join[x][y] != A.top):
                parent[find(x)] = find(y)
    comps = {}
    for x in mid:
        comps.setdefault(find(x), []).append(x)
    return sorted(comps.values())


def oml_aol_decomposition(A):
    """(S_part, T_part) with A = S_part [+] T_part, the first an orthomodular
    subalgebra and the second an antiortholattice subalgebra; None if there
    is no such split.  Found by trying every grouping of the horizontal
    components, independently of the sharp/dense element sets."""
    if A.n == 1:
        return frozenset({0}), frozenset({0})
    comps = horizontal_components(A)
    bounds = {A.bot, A.top}
    for choice in iproduct((0, 1), repeat=len(comps)):
        left = set(bounds)
        right = set(bounds)
        for c, side in zip(comps, choice):
            (left if side == 0 else right).update(c)
        if not (is_subuniverse(A, left) and is_subuniverse(A, right)):
            continue
        if "Orthomodular" not in classify(subalgebra(A, left)):
            continue
        if "Antiortholattice" not in classify(subalgebra(A, right)):
            continue
        return frozenset(left), frozenset(right)
    return None


def charg_conditions(A):
    """The nine conditions, evaluated independently, for a nontrivial PBZ*
    algebra A."""
    es = element_sets(A)
    S, T = es.sharp, es.t_set
    inv, z = A.inv, A.brouwer
    Tp = frozenset(inv[x] for x in T)
    universe = frozenset(range(A.n))
    bounds = {A.bot, A.top}
    t_sub = is_subuniverse(A, T)

    def is_hsum_of(X, Y):
        if X | Y != universe or X & Y != bounds:
            return False
        for x in X - bounds:
            for y in Y - bounds:
                if A.le(x, y) or A.le(y, x):
                    return False
                if A.meet[x][y] != A.bot or A.join[x][y] != A.top:
                    return False
        return is_subuniverse(A, X) and is_subuniverse(A, Y)

    return (
        oml_aol_decomposition(A) is not None,
        t_sub and is_hsum_of(S, T),
        S | T == universe,
        t_sub,
        is_closed(A, T, ("inv",)),
        is_closed(A, Tp, ("inv",)),
        T == Tp,
        all(z[x] in Tp for x in Tp),
        all(z[x] in (T | Tp) for x in T | Tp),
    )
