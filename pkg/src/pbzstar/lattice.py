"""Finite bounded lattices.

Order relations are kept as one Python int per element (a bit row), meet and
join as full tables.  Element indices are the identity of an element; labels
are only for display.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import NoBounds, NotALattice, PbzError


def bits(x):
    """Indices of the set bits of x, ascending."""
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class CoverList:
    n: int
    covers: tuple
    bot: int | None = None
    top: int | None = None


@dataclass(frozen=True, eq=False)
class FinLattice:
    n: int
    down: tuple  # down[a] has bit b set iff b <= a
    meet: tuple
    join: tuple
    bot: int
    top: int
    labels: tuple = field(default=None)

    def __eq__(self, other):
        if not isinstance(other, FinLattice):
            return NotImplemented
        return (self.n, self.meet, self.join) == (other.n, other.meet, other.join)

    def __hash__(self):
        return hash((self.n, self.meet))

    def __len__(self):
        return self.n

    def le(self, a, b):
        return (self.down[b] >> a) & 1 == 1

    @cached_property
    def up(self):
        up = [0] * self.n
        for b in range(self.n):
            for a in bits(self.down[b]):
                up[a] |= 1 << b
        return tuple(up)

    @cached_property
    def leq(self):
        m = np.zeros((self.n, self.n), dtype=bool)
        for b in range(self.n):
            for a in bits(self.down[b]):
                m[a, b] = True
        return m

    @cached_property
    def meet_np(self):
        return np.array(self.meet, dtype=np.int32).reshape(self.n, self.n)

    @cached_property
    def join_np(self):
        return np.array(self.join, dtype=np.int32).reshape(self.n, self.n)

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def index(self, name):
        """Element index from a label or a decimal index string."""
        if self.labels and name in self.labels:
            return self.labels.index(name)
        if isinstance(name, int) or (isinstance(name, str) and name.isdigit()):
            i = int(name)
            if 0 <= i < self.n:
                return i
        raise KeyError(name)

    @cached_property
    def lower_covers(self):
        out = []
        for a in range(self.n):
            below = self.down[a] & ~(1 << a)
            cov = [b for b in bits(below)
                   if below & self.up[b] & ~(1 << b) == 0]
            out.append(tuple(cov))
        return tuple(out)

    @cached_property
    def upper_covers(self):
        out = [[] for _ in range(self.n)]
        for a in range(self.n):
            for b in self.lower_covers[a]:
                out[b].append(a)
        return tuple(tuple(x) for x in out)

    def covers(self):
        """All covering pairs (a, b) with b covering a, sorted."""
        return sorted((b, a) for a in range(self.n) for b in self.lower_covers[a])

    def with_labels(self, labels):
        return FinLattice(self.n, self.down, self.meet, self.join,
                          self.bot, self.top, tuple(labels) if labels else None)


class CyclicCovers(PbzError):
    pass


def _closure(n, covers):
    up = [1 << i for i in range(n)]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise PbzError(f"cover {a}<{b} out of range for universe {n}")
        if a == b:
            raise CyclicCovers(f"self-cover at {a}")
        up[a] |= 1 << b
    for k in range(n):
        bk = 1 << k
        uk = up[k]
        for i in range(n):
            if up[i] & bk:
                up[i] |= uk
    for a in range(n):
        for b in bits(up[a]):
            if b != a and (up[b] >> a) & 1:
                raise CyclicCovers(f"cover relation has a cycle through {a} and {b}")
    down = [0] * n
    for a in range(n):
        for b in bits(up[a]):
            down[b] |= 1 << a
    return down, up


def _glb_table(n, down, err_kind="glb"):
    D = np.array([[(d >> x) & 1 for x in range(n)] for d in down], dtype=bool)
    pop = D.sum(axis=1)
    tab = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        lower = D[a] & D  # row b: common lower bounds of a and b
        g = np.argmax(np.where(lower, pop, -1), axis=1)
        bad = ~lower.any(axis=1) | (D[g] != lower).any(axis=1)
        if bad.any():
            raise NotALattice(a, int(np.argmax(bad)), err_kind)
        tab[a] = g
    return tuple(tuple(int(x) for x in r) for r in tab)


def _from_order(n, down, up, labels=None):
    if n == 0:
        raise NoBounds("empty universe")
    full = (1 << n) - 1
    bots = [a for a in range(n) if up[a] == full]
    tops = [a for a in range(n) if down[a] == full]
    if len(bots) != 1 or len(tops) != 1:
        raise NoBounds("order has no unique minimum or maximum")
    meet = _glb_table(n, down, "glb")
    join = _glb_table(n, up, "lub")
    return FinLattice(n, tuple(down), meet, join, bots[0], tops[0],
                      tuple(labels) if labels else None)


def lattice_from_covers(c, labels=None):
    """Build a FinLattice from a CoverList (or an (n, covers) pair)."""
    if not isinstance(c, CoverList):
        n, covers = c
        c = CoverList(n, tuple(covers))
    down, up = _closure(c.n, c.covers)
    L = _from_order(c.n, down, up, labels)
    if c.bot is not None and c.bot != L.bot:
        raise NoBounds(f"declared bottom {c.bot} is not the minimum")
    if c.top is not None and c.top != L.top:
        raise NoBounds(f"declared top {c.top} is not the maximum")
    return L


def from_covers(n, covers, labels=None):
    """Convenience: covers given as pairs of indices or labels."""
    if labels:
        idx = {s: i for i, s in enumerate(labels)}
        covers = [(idx.get(a, a), idx.get(b, b)) for a, b in covers]
    return lattice_from_covers(CoverList(n, tuple(covers)), labels)


def from_leq(n, le, labels=None):
    """Build from a predicate le(a, b)."""
    down = [0] * n
    up = [0] * n
    for a in range(n):
        for b in range(n):
            if le(a, b):
                down[b] |= 1 << a
                up[a] |= 1 << b
    return _from_order(n, down, up, labels)


def from_meet_table(meet, labels=None):
    """Build from a meet table; order is a <= b iff meet[a][b] == a."""
    n = len(meet)
    return from_leq(n, lambda a, b: meet[a][b] == a, labels)


def chain_lattice(n):
    return from_leq(n, lambda a, b: a <= b, [str(i) for i in range(n)])


def dual(L):
    return FinLattice(L.n, L.up, L.join, L.meet, L.top, L.bot, L.labels)


def product_index(i, j, m):
    """Index of the pair (i, j) in L x M where |M| = m."""
    return i * m + j


def direct_product(L, M):
    """L x M with pair (i, j) at index i*|M| + j."""
    n, m = L.n, M.n

    def le(p, q):
        return L.le(p // m, q // m) and M.le(p % m, q % m)

    labels = None
    if L.labels or M.labels:
        labels = [f"({L.label(i)},{M.label(j)})" for i in range(n) for j in range(m)]
    return from_leq(n * m, le, labels)


@dataclass(frozen=True)
class OrderProfile:
    atoms: tuple
    coatoms: tuple
    join_irreducible: tuple
    meet_irreducible: tuple
    is_chain: bool
    length: int


def order_profile(L):
    lc, uc = L.lower_covers, L.upper_covers
    atoms = tuple(a for a in range(L.n) if lc[a] == (L.bot,) and a != L.bot)
    coatoms = tuple(a for a in range(L.n) if uc[a] == (L.top,) and a != L.top)
    ji = tuple(a for a in range(L.n) if len(lc[a]) == 1)
    mi = tuple(a for a in range(L.n) if len(uc[a]) == 1)
    is_chain = all(L.le(a, b) or L.le(b, a) for a in range(L.n) for b in range(L.n))
    # longest chain: heights computed along a linear extension
    order = sorted(range(L.n), key=lambda a: bin(L.down[a]).count("1"))
    height = [0] * L.n
    for a in order:
        height[a] = max((height[b] + 1 for b in lc[a]), default=0)
    return OrderProfile(atoms, coatoms, ji, mi, is_chain, height[L.top])


def is_distributive(L):
    m, j = L.meet, L.join
    r = range(L.n)
    return all(m[a][j[b][c]] == j[m[a][b]][m[a][c]] for a in r for b in r for c in r)


def is_modular(L):
    m, j = L.meet, L.join
    r = range(L.n)
    return all(j[a][m[b][c]] == m[j[a][b]][c]
               for a in r for b in r for c in r if L.le(a, c))
