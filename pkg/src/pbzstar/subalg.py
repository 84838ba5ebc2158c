"""Generated subalgebras, quotients, isomorphism and the classification of
singleton-generated subalgebras."""

from dataclasses import dataclass

from .congruence import is_congruence
from .errors import NotACongruence, SizeLimit, UnexpectedType
from .lattice import FinLattice, from_leq
from .structures import BZAlgebra

ISO_MAX_N = 4096


@dataclass(frozen=True)
class Subuniverse:
    parent: str
    elements: frozenset
    ops: tuple

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def _ops_of(A):
    ops = ["meet", "join"]
    if A.inv is not None:
        ops.append("inv")
    if A.brouwer is not None:
        ops.append("brouwer")
    return tuple(ops)


def generate(A, S):
    """Least subuniverse containing S and the bounds."""
    elems = set(S) | {A.bot, A.top}
    unary = [f for f in (A.inv, A.brouwer) if f is not None]
    m, j = A.meet, A.join
    frontier = list(elems)
    while frontier:
        new = set()
        cur = list(elems)
        for x in frontier:
            for f in unary:
                new.add(f[x])
            for y in cur:
                new.add(m[x][y])
                new.add(j[x][y])
        new -= elems
        elems |= new
        frontier = list(new)
    return Subuniverse(A.name, frozenset(elems), _ops_of(A))


def subalgebra(A, S):
    """The subalgebra on a subuniverse S, reindexed in increasing order."""
    idx = sorted(S)
    pos = {x: i for i, x in enumerate(idx)}
    lat = from_leq(len(idx), lambda a, b: A.le(idx[a], idx[b]),
                   [A.label(x) for x in idx])

    def restrict(f):
        return None if f is None else tuple(pos[f[x]] for x in idx)

    return BZAlgebra(lat, restrict(A.inv), restrict(A.brouwer), f"sub({A.name})")


def quotient(A, theta):
    """A / theta; each block is labelled by the label of its least element."""
    level = "BZ" if A.brouwer is not None else ("BI" if A.inv is not None else "lattice")
    if not is_congruence(A, theta, level):
        raise NotACongruence(theta.show(A.label))
    classes = theta.classes()
    reps = [c[0] for c in classes]
    b = theta.blocks

    lat = from_leq(len(classes), lambda x, y: b[A.join[reps[x]][reps[y]]] == y,
                   [A.label(r) for r in reps])

    def induced(f):
        return None if f is None else tuple(b[f[r]] for r in reps)

    return BZAlgebra(lat, induced(A.inv), induced(A.brouwer), f"{A.name}/theta")


def _parts(X):
    if isinstance(X, FinLattice):
        return X, None, None
    return X.lat, X.inv, X.brouwer


def _signature(L, inv, brw, x):
    h = bin(L.down[x]).count("1")
    d = bin(L.up[x]).count("1")
    sig = (h, d, len(L.lower_covers[x]), len(L.upper_covers[x]))
    if inv is not None:
        sig += (inv[x] == x, bin(L.down[inv[x]]).count("1"))
    if brw is not None:
        sig += (brw[x] == L.bot, brw[x] == L.top, brw[brw[x]] == x)
    return sig


def isomorphic(A, B, level=None):
    """An isomorphism A -> B as a tuple, or None.

    level selects the signature: 'lattice', 'BI' or 'BZ'.  By default the
    richest signature both algebras carry is used."""
    LA, iA, bA = _parts(A)
    LB, iB, bB = _parts(B)
    if level is None:
        level = "BZ" if (bA is not None and bB is not None) else (
            "BI" if (iA is not None and iB is not None) else "lattice")
    if level == "lattice":
        iA = iB = bA = bB = None
    elif level == "BI":
        bA = bB = None
        if iA is None or iB is None:
            raise ValueError("BI level needs involutions on both sides")
    elif bA is None or bB is None:
        raise ValueError("BZ level needs Brouwer complements on both sides")
    if LA.n != LB.n:
        return None
    n = LA.n
    if n > ISO_MAX_N:
        raise SizeLimit(f"isomorphism search limited to {ISO_MAX_N} elements")
    sa = [_signature(LA, iA, bA, x) for x in range(n)]
    sb = [_signature(LB, iB, bB, x) for x in range(n)]
    if sorted(sa) != sorted(sb):
        return None
    by_sig = {}
    for y in range(n):
        by_sig.setdefault(sb[y], []).append(y)
    # visit A's elements bottom-up, most constrained signature first
    order = sorted(range(n), key=lambda x: (sa[x][0], len(by_sig[sa[x]]), x))
    f = [-1] * n
    used = [False] * n
    unaryA = [u for u in (iA, bA) if u is not None]
    unaryB = [u for u in (iB, bB) if u is not None]
    assigned = []

    def ok(x, y):
        for x2 in assigned:
            y2 = f[x2]
            if LA.le(x, x2) != LB.le(y, y2) or LA.le(x2, x) != LB.le(y2, y):
                return False
        for ua, ub in zip(unaryA, unaryB):
            if f[ua[x]] != -1 and f[ua[x]] != ub[y]:
                return False
            for x2 in assigned:
                if ua[x2] == x and ub[f[x2]] != y:
                    return False
            if ua[x] == x and ub[y] != y:
                return False
        return True

    def rec(k):
        if k == n:
            return True
        x = order[k]
        for y in by_sig[sa[x]]:
            if used[y] or not ok(x, y):
                continue
            f[x] = y
            used[y] = True
            assigned.append(x)
            if rec(k + 1):
                return True
            assigned.pop()
            used[y] = False
            f[x] = -1
        return False

    return tuple(f) if rec(0) else None


SINGLETON_TYPES = ("D1", "D2", "D2SQ", "D4", "HEX")


def singleton_models():
    from .sums import boolean_square, canonical_aol, chain, mo
    return {
        "D1": chain(1),
        "D2": chain(2),
        "D2SQ": boolean_square(),
        "D4": chain(4),
        "HEX": canonical_aol(chain(2).lat, mo(1)),
    }


_MODELS = None


def singleton_class(A, a):
    """Isomorphism type of <a>; raises UnexpectedType when it is none of
    D1, D2, D2SQ, D4, HEX."""
    global _MODELS
    if _MODELS is None:
        _MODELS = singleton_models()
    sub = subalgebra(A, generate(A, {a}).elements)
    for name in SINGLETON_TYPES:
        if isomorphic(sub, _MODELS[name]) is not None:
            return name
    raise UnexpectedType(f"<{A.label(a)}> in {A.name or 'algebra'} has {sub.n} elements "
                         "and matches none of the five types")
