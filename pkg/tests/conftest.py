"""Shared fixtures, brute-force oracles and hypothesis strategies."""

import itertools

import pytest
from hypothesis import strategies as st

from pbzstar import catalog
from pbzstar.lattice import from_leq
from pbzstar.structures import BZAlgebra, classify
from pbzstar.sums import chain, hsum, mo, product


def permute(A, p):
    """Copy of A with element x moved to index p[x]."""
    n = A.n
    q = [0] * n
    for x, y in enumerate(p):
        q[y] = x
    lat = from_leq(n, lambda a, b: A.le(q[a], q[b]), [A.label(q[i]) for i in range(n)])

    def move(f):
        return None if f is None else tuple(p[f[q[i]]] for i in range(n))

    return BZAlgebra(lat, move(A.inv), move(A.brouwer), A.name)


def naive_eval(t, A, env):
    """Plain recursive evaluator, independent of the numpy one."""
    if t.op == "var":
        return env[t.value]
    if t.op == "const":
        return A.top if t.value == 1 else A.bot
    if t.op == "'":
        return A.inv[naive_eval(t.args[0], A, env)]
    if t.op == "~":
        return A.brouwer[naive_eval(t.args[0], A, env)]
    a, b = (naive_eval(s, A, env) for s in t.args)
    return A.meet[a][b] if t.op == "^" else A.join[a][b]


def naive_satisfies(A, ident):
    """First failing assignment in lexicographic order, or None."""
    vs = ident.variables()
    for vals in itertools.product(range(A.n), repeat=len(vs)):
        env = dict(zip(vs, vals))
        if naive_eval(ident.lhs, A, env) != naive_eval(ident.rhs, A, env):
            return env
    return None


def _pool():
    out = [e.algebra for e in catalog.load_catalog() if e.algebra.n <= 8]
    out += [chain(n) for n in range(1, 8)] + [mo(k) for k in range(4)]
    out += [product(chain(2), chain(3)), hsum(mo(1), chain(4)), hsum(chain(3), chain(4))]
    return out


POOL = _pool()
PBZ_POOL = [A for A in POOL if "PBZStar" in classify(A)]
BZ_POOL = [A for A in POOL if "BZ" in classify(A)]
SMALL_POOL = [A for A in POOL if A.n <= 6]

algebras = st.sampled_from(POOL)
pbz_algebras = st.sampled_from(PBZ_POOL)
bz_algebras = st.sampled_from(BZ_POOL)
small_algebras = st.sampled_from(SMALL_POOL)
levels = st.sampled_from(["lattice", "BI", "BZ"])


@st.composite
def permuted(draw, source=algebras):
    A = draw(source)
    p = draw(st.permutations(range(A.n)))
    return A, permute(A, p)


@st.composite
def partitions(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    labels = [0]
    for i in range(1, n):
        labels.append(draw(st.integers(0, max(labels) + 1)))
    return labels


@st.composite
def terms_text(draw, depth=3, variables="xyz"):
    if depth == 0 or draw(st.integers(0, 3)) == 0:
        return draw(st.sampled_from(list(variables) + ["0", "1"]))
    kind = draw(st.sampled_from(["^", "v", "'", "~", "<>", "[]"]))
    a = draw(terms_text(depth - 1, variables))
    if kind in ("^", "v"):
        b = draw(terms_text(depth - 1, variables))
        return f"({a} {kind} {b})"
    if kind in ("'", "~"):
        return f"({a}){kind}"
    return f"{kind}({a})"


@pytest.fixture(scope="session")
def cat():
    return {e.name: e.algebra for e in catalog.load_catalog()}
