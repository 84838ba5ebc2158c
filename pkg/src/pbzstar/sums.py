"""Ordinal sums, horizontal sums, products, canonical antiortholattices,
MO_k and chains."""

from dataclasses import dataclass

from .errors import NotPseudoKleene, SizeLimit, TrivialSummand
from .lattice import direct_product, dual, from_leq
from .structures import BZAlgebra, classify, trivial_brouwer

MO_MAX = 100


@dataclass(frozen=True)
class SumIndexMap:
    """positions[s][i] is the index in the sum of element i of summand s.
    glue lists the classes of identified summand elements as (s, i) pairs."""

    kind: str
    positions: tuple
    glue: tuple

    def provenance(self, x):
        return [(s, i) for s, pos in enumerate(self.positions)
                for i, p in enumerate(pos) if p == x]

    def describe(self, x):
        return "=".join(f"{chr(65 + s)}.{i}" for s, i in self.provenance(x))


def _unique_labels(labels):
    seen = {}
    out = []
    for lab in labels:
        base = lab
        k = seen.get(base, 0)
        while lab in seen:
            k += 1
            lab = f"{base}_{k}"
        seen[base] = k
        seen[lab] = 0
        out.append(lab)
    return out


def ordinal_sum(L, M):
    """L (+) M.  L keeps its indices; M's non-bottom elements follow in M's
    index order; M's bottom is glued onto L's top."""
    pos_l = tuple(range(L.n))
    pos_m = []
    k = L.n
    for j in range(M.n):
        if j == M.bot:
            pos_m.append(L.top)
        else:
            pos_m.append(k)
            k += 1
    pos_m = tuple(pos_m)
    origin = {}
    for j, p in enumerate(pos_m):
        origin[p] = j

    def le(a, b):
        if a < L.n and b < L.n:
            return L.le(a, b)
        if a in origin and b in origin:
            return M.le(origin[a], origin[b])
        return a < L.n and b in origin

    labels = [L.label(i) for i in range(L.n)] + [""] * (k - L.n)
    for j in range(M.n):
        if j != M.bot:
            labels[pos_m[j]] = M.label(j)
    lat = from_leq(k, le, _unique_labels(labels))
    smap = SumIndexMap("ordinal", (pos_l, pos_m), (((0, L.top), (1, M.bot)),))
    return lat, smap


def canonical_aol(M, K, with_maps=False):
    """The antiortholattice M (+) K (+) M^d with the carrier identity as the
    dual isomorphism M -> M^d and trivial Brouwer complement.

    M is a FinLattice (or an algebra whose lattice reduct is used), K an
    algebra with pseudo-Kleene BI reduct.  With with_maps, also returns the
    SumIndexMaps of M (+) K and of (M (+) K) (+) M^d."""
    if isinstance(M, BZAlgebra):
        M = M.lat
    if M.n < 2:
        raise TrivialSummand("M must be nontrivial")
    if "PseudoKleene" not in classify(K.bi_reduct()):
        raise NotPseudoKleene(f"{K.name or 'K'} is not pseudo-Kleene")
    Md = dual(M)
    first, m1 = ordinal_sum(M, K.lat)
    lat, m2 = ordinal_sum(first, Md)
    pos_m = m1.positions[0]
    pos_k = tuple(m2.positions[0][p] for p in m1.positions[1])
    pos_d = m2.positions[1]
    inv = [None] * lat.n
    for x in range(M.n):
        inv[pos_m[x]] = pos_d[x]
        inv[pos_d[x]] = pos_m[x]
    for x in range(K.n):
        y = inv[pos_k[x]]
        want = pos_k[K.inv[x]]
        assert y is None or y == want
        inv[pos_k[x]] = want
    labels = [""] * lat.n
    for x in range(K.n):
        labels[pos_k[x]] = K.label(x)
    for x in range(M.n):
        labels[pos_m[x]] = "m" + M.label(x)
        labels[pos_d[x]] = "m" + M.label(x) + "'"
    labels[lat.bot], labels[lat.top] = "0", "1"
    lat = lat.with_labels(_unique_labels(labels))
    name = f"{_nm(M)}+{K.name or 'K'}+{_nm(M)}^d"
    A = BZAlgebra(lat, tuple(inv), trivial_brouwer(lat), name)
    return (A, m1, m2) if with_maps else A


def _nm(x):
    return getattr(x, "name", "") or "M"


def horizontal_sum(parts, level="BZ"):
    """Horizontal sum of nontrivial algebras.  Index 0 is the glued bottom,
    the last index the glued top, summand middles in between in order.

    level is 'lattice', 'BI' or 'BZ' and selects which unary operations are
    carried over."""
    level = level.upper() if level.lower() != "lattice" else "lattice"
    for p in parts:
        if p.n < 2:
            raise TrivialSummand(f"{p.name or 'summand'} is trivial")
    positions = []
    origin = {0: None}
    k = 1
    for s, p in enumerate(parts):
        pos = []
        for i in range(p.n):
            if i == p.bot:
                pos.append(0)
            elif i == p.top:
                pos.append(-1)
            else:
                pos.append(k)
                origin[k] = (s, i)
                k += 1
        positions.append(pos)
    n = k + 1
    positions = tuple(tuple(n - 1 if x == -1 else x for x in pos) for pos in positions)

    def le(a, b):
        if a == 0 or b == n - 1 or a == b:
            return True
        if b == 0 or a == n - 1:
            return False
        sa, ia = origin[a]
        sb, ib = origin[b]
        return sa == sb and parts[sa].le(ia, ib)

    labels = ["0"] + [""] * (n - 2) + ["1"]
    for x in range(1, n - 1):
        s, i = origin[x]
        labels[x] = parts[s].label(i)
    if len(set(labels)) != n:
        for x in range(1, n - 1):
            s, i = origin[x]
            labels[x] = f"{chr(65 + s)}.{parts[s].label(i)}"
    lat = from_leq(n, le, _unique_labels(labels))

    def carry(op):
        out = [None] * n
        for s, p in enumerate(parts):
            f = op(p)
            for i in range(p.n):
                out[positions[s][i]] = positions[s][f[i]]
        return tuple(out)

    inv = brouwer = None
    if level in ("BI", "BZ"):
        inv = carry(lambda p: p.inv)
    if level == "BZ":
        if any(p.brouwer is None for p in parts):
            raise ValueError("BZ-level sum needs a Brouwer complement on every part")
        brouwer = carry(lambda p: p.brouwer)
        if brouwer[0] != n - 1 or brouwer[n - 1] != 0:
            raise ValueError("Brouwer complements disagree on the bounds")
    glue = (tuple((s, p.bot) for s, p in enumerate(parts)),
            tuple((s, p.top) for s, p in enumerate(parts)))
    name = "[+]".join(p.name or "?" for p in parts)
    return BZAlgebra(lat, inv, brouwer, name), SumIndexMap("horizontal", positions, glue)


def hsum(*parts, level="BZ"):
    return horizontal_sum(list(parts), level)[0]


def product(A, B):
    """Direct product with componentwise operations; pair (i, j) sits at
    index i*|B| + j."""
    lat = direct_product(A.lat, B.lat)
    m = B.n

    def comp(f, g):
        if f is None or g is None:
            return None
        return tuple(f[p // m] * m + g[p % m] for p in range(lat.n))

    return BZAlgebra(lat, comp(A.inv, B.inv), comp(A.brouwer, B.brouwer),
                     f"{A.name or '?'}x{B.name or '?'}")


def boolean_square(names=("a", "a'")):
    lat = from_leq(4, lambda x, y: x == 0 or y == 3 or x == y,
                   ["0", names[0], names[1], "1"])
    inv = (3, 2, 1, 0)
    return BZAlgebra(lat, inv, inv, "MO1")


def _mo_names(k):
    if k <= 26:
        return [(c, c + "'") for c in "abcdefghijklmnopqrstuvwxyz"[:k]]
    return [(f"a{i}", f"a{i}'") for i in range(1, k + 1)]


def mo(k):
    """MO_k: k copies of the Boolean square glued at the bounds, ' = ~."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MO_MAX:
        raise SizeLimit(f"MO_{k} exceeds the limit k <= {MO_MAX}")
    if k == 0:
        return chain(2).renamed("MO0")
    if k == 1:
        return boolean_square()
    A = hsum(*[boolean_square(nm) for nm in _mo_names(k)])
    return A.renamed(f"MO{k}")


def chain(n):
    """D_n with its unique antitone involution and trivial Brouwer complement."""
    if n < 1:
        raise ValueError("chains need at least one element")
    lat = from_leq(n, lambda a, b: a <= b, [str(i) for i in range(n)])
    inv = tuple(n - 1 - i for i in range(n))
    return BZAlgebra(lat, inv, trivial_brouwer(lat), f"D{n}")
