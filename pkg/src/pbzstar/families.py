"""Deterministically generated families of algebras used by the verification
suites and the search command, plus exhaustive enumeration of small lattices
and antiortholattices."""

from functools import lru_cache
from itertools import permutations, product as iproduct

from . import catalog
from .errors import PbzError
from .lattice import from_leq
from .structures import BZAlgebra, classify, involution_problem, trivial_brouwer
from .subalg import isomorphic
from .sums import canonical_aol, chain, hsum

FAMILIES = ("catalog", "hsum", "ordinal", "all")


def _dedupe(algs, level):
    out = []
    for A in algs:
        if not any(B.n == A.n and isomorphic(A, B, level) is not None for B in out):
            out.append(A)
    return out


@lru_cache(maxsize=None)
def _catalog_classes():
    return tuple((e.algebra, classify(e.algebra)) for e in catalog.load_catalog())


def hsum_family(max_size):
    """A [+] B for catalog orthomodular A and catalog PBZ* B, both with more
    than two elements; pairs of orthomodular lattices are taken once."""
    cls = _catalog_classes()
    omls = [(i, A) for i, (A, c) in enumerate(cls) if "Orthomodular" in c and A.n > 2]
    pbz = [(i, B) for i, (B, c) in enumerate(cls) if "PBZStar" in c and B.n > 2]
    out = []
    for i, A in omls:
        for j, B in pbz:
            if A.n + B.n - 2 > max_size:
                continue
            if "Orthomodular" in cls[j][1] and j < i:
                continue
            out.append(hsum(A, B).renamed(f"{A.name}[+]{B.name}"))
    return sorted(out, key=lambda A: A.n)


def ordinal_family(max_size):
    """Canonical antiortholattices M (+) K (+) M^d with M a catalog lattice
    reduct and K a catalog pseudo-Kleene algebra (or D1), up to isomorphism of
    the parts."""
    cls = _catalog_classes()
    ms = _dedupe([BZAlgebra(A.lat, None, None, A.name) for A, _ in cls if A.n >= 2],
                 "lattice")
    ks = _dedupe([A.bi_reduct() for A, c in cls if "PseudoKleene" in c], "BI")
    out = []
    for M in ms:
        for K in ks:
            if 2 * M.n + K.n - 2 > max_size:
                continue
            out.append(canonical_aol(M.lat, K).renamed(f"{M.name}+{K.name}+{M.name}^d"))
    return sorted(out, key=lambda A: A.n)


def family(name, max_size):
    if name == "catalog":
        return [e.algebra for e in catalog.load_catalog() if e.algebra.n <= max_size]
    if name == "hsum":
        return hsum_family(max_size)
    if name == "ordinal":
        return ordinal_family(max_size)
    if name == "all":
        return family("catalog", max_size) + hsum_family(max_size) + ordinal_family(max_size)
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def in_scope(max_size):
    """Catalog plus both generated families."""
    return family("all", max_size)


# ---- exhaustive enumeration of small lattices ----

def _canonical_key(n, rel):
    """Least encoding of the strict order `rel` on range(n) over all relabellings."""
    best = None
    for p in permutations(range(n)):
        key = tuple(sorted((p[a], p[b]) for a, b in rel))
        if best is None or key < best:
            best = key
    return best


def _strict_orders(m):
    """All strict partial orders on range(m), up to isomorphism."""
    pairs = [(a, b) for a in range(m) for b in range(m) if a != b]
    seen = set()
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
            continue
        key = _canonical_key(m, rel)
        if key not in seen:
            seen.add(key)
            yield rel


@lru_cache(maxsize=None)
def small_lattices(n):
    """All lattices with n elements up to isomorphism; 0 is index 0 and 1 is
    index n-1."""
    if n == 1:
        return (from_leq(1, lambda a, b: True),)
    m = n - 2
    out = []
    for rel in _strict_orders(m):
        def le(a, b, rel=rel):
            if a == b or a == 0 or b == n - 1:
                return True
            if b == 0 or a == n - 1:
                return False
            return (a - 1, b - 1) in rel
        try:
            out.append(from_leq(n, le))
        except PbzError:
            continue
    return tuple(out)


def involutions(L):
    """Every order-reversing involution of L."""
    out = []
    n = L.n
    for p in permutations(range(n)):
        if p[L.bot] != L.top:
            continue
        if involution_problem(L, p) is None:
            out.append(tuple(p))
    return out


@lru_cache(maxsize=None)
def small_aols(max_n):
    """Every antiortholattice with at most max_n elements, up to isomorphism:
    each lattice with each antitone involution whose sharp elements are only
    0 and 1, under the trivial Brouwer complement."""
    out = []
    for n in range(1, max_n + 1):
        found = []
        for L in small_lattices(n):
            z = trivial_brouwer(L)
            for inv in involutions(L):
                if any(L.meet[a][inv[a]] == L.bot for a in range(n) if a not in (L.bot, L.top)):
                    continue
                A = BZAlgebra(L, inv, z)
                if "Antiortholattice" not in classify(A):
                    continue
                if any(isomorphic(A, B) is not None for B in found):
                    continue
                found.append(A)
        for k, A in enumerate(found):
            out.append(A.renamed(f"AOL{n}.{k}"))
    return tuple(out)


def chains(max_n):
    return [chain(n) for n in range(1, max_n + 1)]
