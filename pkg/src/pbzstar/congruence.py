"""Partitions, congruences, congruence lattices and irreducibility."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import ImproperInput, SizeLimit
from .lattice import from_leq

MAX_N = 24
MAX_CONGRUENCES = 20000
LEVELS = ("lattice", "BI", "BZ")


def norm_level(level):
    key = str(level).strip().lower()
    for lv in LEVELS:
        if lv.lower() == key:
            return lv
    raise ValueError(f"unknown signature level {level!r}")


def _canon(labels):
    seen = {}
    return tuple(seen.setdefault(b, len(seen)) for b in labels)


@dataclass(frozen=True)
class Partition:
    blocks: tuple  # blocks[x] = block id of x, ids numbered by first occurrence

    @staticmethod
    def of(labels):
        return Partition(_canon(labels))

    @staticmethod
    def from_classes(n, classes):
        lab = [None] * n
        for k, cls in enumerate(classes):
            for x in cls:
                if lab[x] is not None:
                    raise ValueError(f"element {x} in two classes")
                lab[x] = k
        nxt = len(classes)
        for x in range(n):
            if lab[x] is None:
                lab[x] = nxt
                nxt += 1
        return Partition.of(lab)

    @staticmethod
    def delta(n):
        return Partition(tuple(range(n)))

    @staticmethod
    def nabla(n):
        return Partition((0,) * n)

    @property
    def n(self):
        return len(self.blocks)

    @property
    def k(self):
        return max(self.blocks) + 1 if self.blocks else 0

    def classes(self):
        out = [[] for _ in range(self.k)]
        for x, b in enumerate(self.blocks):
            out[b].append(x)
        return [tuple(c) for c in out]

    def block_of(self, x):
        b = self.blocks[x]
        return tuple(y for y, c in enumerate(self.blocks) if c == b)

    def same(self, x, y):
        return self.blocks[x] == self.blocks[y]

    def is_delta(self):
        return self.k == self.n

    def is_nabla(self):
        return self.k <= 1

    def refines(self, other):
        """self <= other in the refinement order."""
        img = {}
        for x, b in enumerate(self.blocks):
            c = other.blocks[x]
            if img.setdefault(b, c) != c:
                return False
        return True

    def meet(self, other):
        return Partition.of(list(zip(self.blocks, other.blocks)))

    def join(self, other):
        uf = _UnionFind(self.n)
        for part in (self, other):
            first = {}
            for x, b in enumerate(part.blocks):
                if b in first:
                    uf.union(first[b], x)
                else:
                    first[b] = x
        return uf.partition()

    def permutes_to_nabla(self, other):
        """theta o zeta = nabla (equivalently zeta o theta = nabla)."""
        pairs = set(zip(self.blocks, other.blocks))
        return len(pairs) == self.k * other.k

    def show(self, labels=None):
        lab = labels or (lambda x: str(x))
        return "{" + ", ".join("{" + ",".join(lab(x) for x in c) + "}" for c in self.classes()) + "}"


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.p[ra] = rb
        return True

    def partition(self):
        return Partition.of([self.find(x) for x in range(len(self.p))])


def _ops(A, level):
    level = norm_level(level)
    unary = []
    if level in ("BI", "BZ"):
        if A.inv is None:
            raise ValueError("BI level needs a Kleene complement")
        unary.append(A.inv)
    if level == "BZ":
        if A.brouwer is None:
            raise ValueError("BZ level needs a Brouwer complement")
        unary.append(A.brouwer)
    lat = A.lat if hasattr(A, "lat") else A
    return lat, unary


def is_congruence(A, p, level="BZ"):
    lat, unary = _ops(A, level)
    m, j = lat.meet, lat.join
    for cls in p.classes():
        if len(cls) < 2:
            continue
        x = cls[0]
        for y in cls[1:]:
            for f in unary:
                if not p.same(f[x], f[y]):
                    return False
            mx, my, jx, jy = m[x], m[y], j[x], j[y]
            for z in range(lat.n):
                if not p.same(mx[z], my[z]) or not p.same(jx[z], jy[z]):
                    return False
    return True


def _close(lat, unary, uf, queue):
    m, j = lat.meet, lat.join
    rng = range(lat.n)
    while queue:
        x, y = queue.popleft()
        for f in unary:
            if uf.union(f[x], f[y]):
                queue.append((f[x], f[y]))
        mx, my, jx, jy = m[x], m[y], j[x], j[y]
        for z in rng:
            if uf.union(mx[z], my[z]):
                queue.append((mx[z], my[z]))
            if uf.union(jx[z], jy[z]):
                queue.append((jx[z], jy[z]))
    return uf.partition()


def principal_congruence(A, a, b, level="BZ"):
    """Least congruence identifying a and b."""
    lat, unary = _ops(A, level)
    uf = _UnionFind(lat.n)
    queue = deque()
    if uf.union(a, b):
        queue.append((a, b))
    return _close(lat, unary, uf, queue)


def generated_congruence(A, pairs, level="BZ"):
    lat, unary = _ops(A, level)
    uf = _UnionFind(lat.n)
    queue = deque()
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    return _close(lat, unary, uf, queue)


def all_partitions(n):
    """Every partition of range(n), as restricted growth strings."""
    if n == 0:
        yield Partition(())
        return
    a = [0] * n

    def rec(i, mx):
        if i == n:
            yield Partition(tuple(a))
            return
        for b in range(mx + 2):
            a[i] = b
            yield from rec(i + 1, max(mx, b))

    a[0] = 0
    yield from rec(1, 0)


def brute_force_congruences(A, level="BZ"):
    return sorted((p for p in all_partitions(A.n) if is_congruence(A, p, level)),
                  key=_sort_key)


def _sort_key(p):
    return (-p.k, p.blocks)


class CongruenceLattice:
    """Con_V(A) at one signature level, ordered by refinement."""

    def __init__(self, algebra, level, cons):
        self.algebra = algebra
        self.level = level
        self.cons = sorted(cons, key=_sort_key)
        self.index = {p: i for i, p in enumerate(self.cons)}
        n = algebra.n
        self.delta = self.index[Partition.delta(n)]
        self.nabla = self.index[Partition.nabla(n)]
        bot, top = algebra.bot, algebra.top
        self.con_0 = [i for i, p in enumerate(self.cons)
                      if p.block_of(bot) == (bot,)]
        self.con_01 = [i for i in self.con_0
                       if self.cons[i].block_of(top) == (top,)]

    def __len__(self):
        return len(self.cons)

    def __iter__(self):
        return iter(self.cons)

    def __contains__(self, p):
        return p in self.index

    @cached_property
    def leq(self):
        c = self.cons
        return [[c[i].refines(c[j]) for j in range(len(c))] for i in range(len(c))]

    @cached_property
    def meet(self):
        c, ix = self.cons, self.index
        return [[ix[c[i].meet(c[j])] for j in range(len(c))] for i in range(len(c))]

    @cached_property
    def join(self):
        c, ix = self.cons, self.index
        return [[ix[c[i].join(c[j])] for j in range(len(c))] for i in range(len(c))]

    def as_lattice(self, subset=None):
        """The (sub)poset of Con as a FinLattice."""
        idx = list(range(len(self.cons))) if subset is None else list(subset)
        leq = self.leq
        return from_leq(len(idx), lambda a, b: leq[idx[a]][idx[b]])

    def atoms(self):
        leq = self.leq
        out = []
        for i in range(len(self.cons)):
            if i == self.delta:
                continue
            if not any(j not in (i, self.delta) and leq[j][i] for j in range(len(self.cons))):
                out.append(i)
        return out

    def covers(self):
        leq = self.leq
        N = len(self.cons)
        out = []
        for i in range(N):
            for j in range(N):
                if i != j and leq[i][j] and not any(
                        k not in (i, j) and leq[i][k] and leq[k][j] for k in range(N)):
                    out.append((i, j))
        return out


def congruence_lattice(A, level="BZ", max_n=MAX_N, max_cons=MAX_CONGRUENCES):
    level = norm_level(level)
    n = A.n
    if n > max_n:
        raise SizeLimit(f"universe of {n} elements exceeds the enumeration limit {max_n}")
    principals = []
    seen = {Partition.delta(n)}
    for a in range(n):
        for b in range(a + 1, n):
            p = principal_congruence(A, a, b, level)
            if p not in seen:
                seen.add(p)
                principals.append(p)
    found = set(seen)
    work = list(principals)
    while work:
        c = work.pop()
        for p in principals:
            q = c.join(p)
            if q not in found:
                found.add(q)
                if len(found) > max_cons:
                    raise SizeLimit(f"more than {max_cons} congruences")
                work.append(q)
    return CongruenceLattice(A, level, found)


def sum_congruence_ordinal(alpha, beta, smap):
    """alpha (+) beta on L (+) M."""
    pos_l, pos_m = smap.positions
    n = max(max(pos_l), max(pos_m)) + 1
    top_l = smap.glue[0][0][1]
    bot_m = smap.glue[0][1][1]
    classes = []
    glued = set()
    for cls in alpha.classes():
        if top_l in cls:
            glued.update(pos_l[x] for x in cls)
        else:
            classes.append([pos_l[x] for x in cls])
    for cls in beta.classes():
        if bot_m in cls:
            glued.update(pos_m[x] for x in cls)
        else:
            classes.append([pos_m[x] for x in cls])
    classes.append(sorted(glued))
    return Partition.from_classes(n, classes)


def sum_congruence_horizontal(parts, smap):
    """Horizontal sum of proper congruences: 0-classes glued, 1-classes
    glued, other classes kept."""
    n = max(max(pos) for pos in smap.positions) + 1
    zero, one, classes = set(), set(), []
    for s, alpha in enumerate(parts):
        pos = smap.positions[s]
        b, t = smap.glue[0][s][1], smap.glue[1][s][1]
        if alpha.same(b, t):
            raise ImproperInput(f"congruence {s} is not proper")
        for cls in alpha.classes():
            img = [pos[x] for x in cls]
            if b in cls:
                zero.update(img)
            elif t in cls:
                one.update(img)
            else:
                classes.append(img)
    return Partition.from_classes(n, [sorted(zero), sorted(one)] + classes)


@dataclass(frozen=True)
class IrreducibilityReport:
    simple: bool
    subdirectly_irreducible: bool
    monolith: Partition | None
    directly_irreducible: bool
    factor_pair: tuple | None


def irreducibility(A, level="BZ", con=None):
    con = con or congruence_lattice(A, level)
    N = len(con)
    simple = N == 2 or A.n == 1
    monolith = None
    si = A.n == 1
    if A.n > 1:
        atoms = con.atoms()
        if len(atoms) == 1:
            si = True
            monolith = con.cons[atoms[0]]
    factor = None
    proper = [i for i in range(N) if i not in (con.delta, con.nabla)]
    for x in proper:
        for y in proper:
            if y <= x:
                continue
            if con.meet[x][y] != con.delta or con.join[x][y] != con.nabla:
                continue
            p, q = con.cons[x], con.cons[y]
            if p.permutes_to_nabla(q):
                factor = (p, q)
                break
        if factor:
            break
    return IrreducibilityReport(simple, si, monolith, factor is None, factor)
