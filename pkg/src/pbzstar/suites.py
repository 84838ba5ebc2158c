"""Verification suites: each re-checks one documented result on finite
instances and returns a report with one record per check."""

import json
import random
import time
from dataclasses import asdict, dataclass, field

from . import catalog
from .checks import CHARG_CONDITIONS, charg_conditions, in_oml_hsum_aol
from .congruence import (Partition, brute_force_congruences, congruence_lattice,
                         irreducibility, sum_congruence_horizontal,
                         sum_congruence_ordinal)
from .families import in_scope, small_aols
from .lattice import chain_lattice, direct_product, from_covers
from .structures import classify
from .errors import UnexpectedType
from .subalg import generate, isomorphic, singleton_class, subalgebra
from .sums import boolean_square, canonical_aol, chain, horizontal_sum, mo, ordinal_sum
from .terms import identity, satisfies


@dataclass
class CheckRecord:
    check: str
    passed: bool
    instances: int = 0
    detail: str = ""
    counterexamples: list = field(default_factory=list)


@dataclass
class SuiteReport:
    suite: str
    records: list
    seconds: float = 0.0

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def lines(self):
        out = []
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {self.suite}: {r.check} [{r.instances} instances]"
            if r.detail:
                line += f"  {r.detail}"
            out.append(line)
            for c in r.counterexamples[:5]:
                out.append(f"      counterexample: {c}")
        return out

    def to_json(self):
        return json.dumps({"suite": self.suite, "passed": self.passed,
                           "seconds": round(self.seconds, 3),
                           "records": [asdict(r) for r in self.records]}, sort_keys=True)


class _Check:
    """Accumulates instance results for one record."""

    def __init__(self, name):
        self.name = name
        self.n = 0
        self.bad = []

    def add(self, ok, what=""):
        self.n += 1
        if not ok:
            self.bad.append(what)

    def record(self, detail=""):
        return CheckRecord(self.name, not self.bad, self.n, detail, list(self.bad))


def boolean_lattice(k):
    L = chain_lattice(1)
    for _ in range(k):
        L = direct_product(L, chain_lattice(2))
    return L


def _iso(X, Y):
    return isomorphic(X, Y, "lattice") is not None


# ---- criterion 1 ----

def chain_congruences(max_size=9, seed=0):
    bi = _Check("Con_BI(D_n) ~ D_2^floor(n/2)")
    bz = _Check("Con_BZ(D_n) ~ D_2^(floor(n/2)-1) (+) D_2")
    lat = _Check("Con(D_n) ~ D_2^(n-1)")
    for n in range(2, max_size + 1):
        D = chain(n)
        k = n // 2
        c = congruence_lattice(D, "BI")
        bi.add(_iso(c.as_lattice(), boolean_lattice(k)), f"D{n}: |Con_BI|={len(c)}")
        c = congruence_lattice(D, "BZ")
        target = ordinal_sum(boolean_lattice(k - 1), chain_lattice(2))[0]
        bz.add(_iso(c.as_lattice(), target), f"D{n}: |Con_BZ|={len(c)}")
        c = congruence_lattice(D, "lattice")
        lat.add(_iso(c.as_lattice(), boolean_lattice(n - 1)), f"D{n}: |Con|={len(c)}")
    return [bi.record(), bz.record(), lat.record()]


# ---- criterion 2 ----

def si_chains(max_size=9, seed=0):
    recs = []
    for level, want in (("BI", {1, 2, 3}), ("BZ", {1, 2, 3, 4, 5})):
        got = {n for n in range(1, max_size + 1)
               if irreducibility(chain(n), level).subdirectly_irreducible}
        expect = {n for n in want if n <= max_size}
        recs.append(CheckRecord(
            f"SI chains at {level} level are exactly D{min(expect)}..D{max(expect)}",
            got == expect, max_size, f"SI: {sorted(got)}",
            [] if got == expect else [f"got {sorted(got)}, expected {sorted(expect)}"]))
    return recs


# ---- criterion 3 ----

def _verdict(A, name, expect_holds, witness=None, rhs=None):
    res = satisfies(A, identity(name))
    ok = res.holds == expect_holds
    detail = res.describe(A)
    if ok and witness is not None:
        got = {k: A.label(v) for k, v in res.witness.items()}
        ok = got == witness
    if ok and rhs is not None:
        ok = A.label(res.rhs_value) == rhs
    verb = "satisfies" if expect_holds else "fails"
    label = f"{A.name} {verb} {name}"
    if witness:
        label += " at " + ",".join(f"{k}={v}" for k, v in witness.items())
    return CheckRecord(label, ok, 1, detail, [] if ok else [detail])


def _k_j2_terms(K):
    """At x=u, y=t the right side of J2 in K unfolds to (u^s) v (u^s') = 0."""
    u, t, s, sp = (K.index(x) for x in ("u", "t", "s", "s'"))
    z, m, j = K.brouwer, K.meet, K.join
    tt = m[t][K.inv[t]]
    ok = (tt == t and z[tt] == s and z[z[tt]] == sp
          and m[u][s] == K.bot and m[u][sp] == K.bot and j[K.bot][K.bot] != u)
    detail = (f"t^t'={K.label(tt)}, (t^t')~={K.label(z[tt])}, "
              f"<>(t^t')={K.label(z[z[tt]])}, u^s={K.label(m[u][s])}, u^s'={K.label(m[u][sp])}")
    return CheckRecord("K: J2 right side at (u,t) is (u^s) v (u^s') = 0 != u", ok, 1, detail,
                       [] if ok else [detail])


def exfail12(max_size=None, seed=0):
    M3, K, L, M = (catalog.algebra(x) for x in ("M3", "K", "L7", "M11"))
    return [
        _verdict(M3, "WSDM", False, {"x": "b", "y": "a"}),
        _verdict(K, "S2", True),
        _verdict(K, "S3", True),
        _verdict(K, "J2", False, {"x": "u", "y": "t"}, rhs="0"),
        _k_j2_terms(K),
        _verdict(L, "J1", False, {"x": "u", "y": "t"}),
        _verdict(L, "S2", False),
        _verdict(L, "S3", True),
        _verdict(L, "J2", False),
        _verdict(M, "J1", True),
        _verdict(M, "S1", False, {"x": "z'", "y": "a"}),
        _verdict(M, "J2", False),
        _verdict(M, "S2", False),
        _verdict(M, "S3", False),
    ]


# ---- criterion 4 ----

def m3_lattice():
    return from_covers(5, [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"),
                           ("b", "1"), ("c", "1")], ["0", "a", "b", "c", "1"])


def mainthaol_instances():
    Ms = [("D2", chain_lattice(2)), ("D3", chain_lattice(3)),
          ("D2^2", boolean_square().lat), ("M3", m3_lattice())]
    Ks = [chain(1), chain(2), chain(3), mo(1), mo(2)]
    return [(mn, M, K) for mn, M in Ms for K in Ks]


def _triple(alpha, beta, m1, m2):
    return sum_congruence_ordinal(sum_congruence_ordinal(alpha, beta, m1), alpha, m2)


def mainthaol(max_size=None, seed=0):
    bi = _Check("Con_BI(M+K+M^d) = {a(+)b(+)a'} ~ Con(M) x Con_BI(K)")
    bz = _Check("Con_BZ(M+K+M^d) = {a(+)b(+)a' : a in Con_0(M)} u {nabla} ~ (Con_0(M) x Con_BI(K)) (+) D_2")
    for mn, M, K in mainthaol_instances():
        A, m1, m2 = canonical_aol(M, K, with_maps=True)
        tag = f"M={mn}, K={K.name}"
        conM = congruence_lattice(M, "lattice")
        conK = congruence_lattice(K, "BI")
        conA = congruence_lattice(A, "BI")
        image = {}
        for i, a in enumerate(conM.cons):
            for j, b in enumerate(conK.cons):
                image[(i, j)] = _triple(a, b, m1, m2)
        bij = len(set(image.values())) == len(image) and set(image.values()) == set(conA.cons)
        order = bij and all(
            image[p].refines(image[q]) == (conM.leq[p[0]][q[0]] and conK.leq[p[1]][q[1]])
            for p in image for q in image)
        iso = _iso(conA.as_lattice(),
                   direct_product(conM.as_lattice(), conK.as_lattice()))
        bi.add(bij and order and iso, tag)

        conAz = congruence_lattice(A, "BZ")
        expect = {image[(i, j)] for i in conM.con_0 for j in range(len(conK))}
        expect.add(Partition.nabla(A.n))
        target = ordinal_sum(direct_product(conM.as_lattice(conM.con_0), conK.as_lattice()),
                             chain_lattice(2))[0]
        bz.add(expect == set(conAz.cons) and _iso(conAz.as_lattice(), target), tag)
    return [bi.record(), bz.record()]


# ---- criterion 5 ----

def cghsum(max_size=22, seed=0):
    eq = _Check("Con_BZ(A[+]B) = {a[+]b : a,b in Con_BZ01} u {nabla}")
    iso = _Check("Con_BZ(A[+]B) ~ (Con_BZ01(A) x Con_BZ01(B)) (+) D_2")
    pbz = _Check("A OML, B AOL: Con_BZ(A[+]B) ~ Con_BZ(B)")
    entries = [e.algebra for e in catalog.load_catalog() if e.algebra.n > 2]
    cls = {A.name: classify(A) for A in entries}
    cons = {}

    def con(A):
        if A.name not in cons:
            cons[A.name] = congruence_lattice(A, "BZ")
        return cons[A.name]

    for A in entries:
        for B in entries:
            if A.n + B.n - 2 > max_size:
                continue
            S, smap = horizontal_sum([A, B], "BZ")
            if "BZ" not in classify(S):
                continue
            tag = f"{A.name}[+]{B.name}"
            cA, cB, cS = con(A), con(B), congruence_lattice(S, "BZ")
            expect = {sum_congruence_horizontal([cA.cons[i], cB.cons[j]], smap)
                      for i in cA.con_01 for j in cB.con_01}
            expect.add(Partition.nabla(S.n))
            eq.add(expect == set(cS.cons), tag)
            target = ordinal_sum(direct_product(cA.as_lattice(cA.con_01),
                                                cB.as_lattice(cB.con_01)),
                                 chain_lattice(2))[0]
            iso.add(_iso(cS.as_lattice(), target), tag)
            if "Orthomodular" in cls[A.name] and "Antiortholattice" in cls[B.name]:
                pbz.add(_iso(cS.as_lattice(), cB.as_lattice()), tag)
    return [eq.record(), iso.record(), pbz.record()]


# ---- criterion 6 ----

def charg(max_size=14, seed=0):
    agree = _Check("nine conditions agree")
    members = 0
    for A in in_scope(max_size):
        if A.n < 2 or "PBZStar" not in classify(A):
            continue
        vals = charg_conditions(A)
        ok = len(set(vals)) == 1
        members += vals[0]
        diff = ", ".join(f"{c}={v}" for c, v in zip(CHARG_CONDITIONS, vals))
        agree.add(ok, f"{A.name}: {diff}")
    return [agree.record(f"{members} members of OML[+]AOL")]


# ---- criterion 7 ----

def axhsum(max_size=16, seed=0):
    checks = {k: _Check(f"A[+]B |= {k} iff B |= {k}") for k in ("S1", "S2", "S3", "J1")}
    j2 = _Check("A[+]B |= J2 iff B in OML[+]AOL")
    Bs = [e.algebra for e in catalog.load_catalog()
          if e.algebra.n >= 2 and "PBZStar" in classify(e.algebra)]
    for k in (1, 2, 3):
        A = mo(k)
        for B in Bs:
            if A.n + B.n - 2 > max_size:
                continue
            S = horizontal_sum([A, B], "BZ")[0]
            tag = f"MO{k}[+]{B.name}"
            for name, c in checks.items():
                c.add(satisfies(S, identity(name)).holds == satisfies(B, identity(name)).holds, tag)
            j2.add(satisfies(S, identity("J2")).holds == in_oml_hsum_aol(B), tag)
    return [c.record() for c in checks.values()] + [j2.record()]


# ---- criterion 8 ----

def aol_small(max_size=6, seed=0):
    aols = small_aols(max_size)
    dirirred = _Check("lattice reduct directly irreducible")
    for A in aols:
        dirirred.add(irreducibility(A.lat, "lattice").directly_irreducible, A.name)
    simple_sdm = [A for A in aols if satisfies(A, identity("SDM")).holds
                  and irreducibility(A, "BZ").simple]
    names = []
    for A in simple_sdm:
        hit = [n for n in range(1, 4) if isomorphic(A, chain(n)) is not None]
        names.append(f"D{hit[0]}" if hit else A.name)
    ok = sorted(names) == ["D1", "D2", "D3"]
    sdm0 = _Check("SDM iff 0 meet-irreducible")
    for A in aols:
        meet_red = any(A.meet[x][y] == A.bot for x in range(A.n) for y in range(A.n)
                       if x != A.bot and y != A.bot)
        sdm0.add(satisfies(A, identity("SDM")).holds == (not meet_red), A.name)
    return [
        CheckRecord("antiortholattices enumerated", True, len(aols),
                    ", ".join(f"{A.name}({A.n})" for A in aols)),
        dirirred.record(),
        CheckRecord("simple antiortholattices with SDM are exactly D1, D2, D3", ok,
                    len(aols), f"found {sorted(names)}", [] if ok else [str(names)]),
        sdm0.record(),
    ]


# ---- criterion 9 ----

def sghsum(max_size=14, seed=0):
    c = _Check("<a> is D1, D2, D2^2, D4 or HEX")
    fixed = _Check("every miss is a fixed point of ' generating {0,a,1} ~ D3")
    seen = {}
    for A in in_scope(max_size):
        if A.n < 1 or "PBZStar" not in classify(A) or not in_oml_hsum_aol(A):
            continue
        for a in range(A.n):
            try:
                t = singleton_class(A, a)
                seen[t] = seen.get(t, 0) + 1
                c.add(True)
            except UnexpectedType as e:
                c.add(False, f"{A.name}: {e}")
                sub = subalgebra(A, generate(A, {a}).elements)
                fixed.add(A.inv[a] == a and isomorphic(sub, chain(3)) is not None,
                          f"{A.name}: <{A.label(a)}>")
    return [c.record(", ".join(f"{k}:{v}" for k, v in sorted(seen.items()))),
            fixed.record()]


# ---- criterion 10 ----

def oracle(max_size=6, seed=0):
    c = _Check("join-closure enumeration equals brute-force partition filter")
    for e in catalog.load_catalog():
        A = e.algebra
        if A.n > max_size:
            continue
        for level in ("lattice", "BI", "BZ"):
            got = congruence_lattice(A, level).cons
            want = brute_force_congruences(A, level)
            c.add(got == want, f"{A.name} at {level}: {len(got)} vs {len(want)}")
    return [c.record()]


# ---- criterion 11 ----

IMPLICATIONS = (
    ("SDM", ("WSDM",)),
    ("WSDM", ("S1", "S2", "S3")),
    ("J0", ("J1", "J2", "WSDM")),
)


def implications(max_size=14, seed=0):
    recs = {}

    def chk(name):
        if name not in recs:
            recs[name] = _Check(name)
        return recs[name]

    j2s2 = _Check("directly irreducible with J2, S2, S3 => S u T = L")
    for A in in_scope(max_size):
        c = classify(A) if A.inv is not None and A.brouwer is not None else None
        if c is None or "BZ" not in c:
            continue
        v = {k: satisfies(A, identity(k)).holds
             for k in ("SDM", "WSDM", "S1", "S1'", "S2", "S3", "J0", "J1", "J1'", "J2")}
        for lhs, rhss in IMPLICATIONS:
            for rhs in rhss:
                chk(f"{lhs} => {rhs}").add(not v[lhs] or v[rhs], A.name)
        chk("J1 <=> J1'").add(v["J1"] == v["J1'"], A.name)
        chk("S1 <=> S1'").add(v["S1"] == v["S1'"], A.name)
        if "PBZStar" in c and v["J2"] and v["S2"] and v["S3"] and A.n <= 24:
            if irreducibility(A, "BZ").directly_irreducible:
                j2s2.add(in_oml_hsum_aol(A), A.name)
    return [r.record() for r in recs.values()] + [j2s2.record()]


# ---- seeded random sweep ----

def random_sums(max_size=14, seed=0):
    """Random horizontal sums and canonical antiortholattices from catalog
    parts; checks classification transfer facts on each."""
    rng = random.Random(seed)
    entries = [e.algebra for e in catalog.load_catalog() if e.algebra.n > 2]
    pbz = [A for A in entries if "PBZStar" in classify(A)]
    hk = _Check("A[+]B PBZ* iff one part orthomodular")
    aol = _Check("canonical M+K+M^d is an antiortholattice")
    for _ in range(40):
        A, B = rng.choice(pbz), rng.choice(pbz)
        if A.n + B.n - 2 <= max_size:
            S = horizontal_sum([A, B], "BZ")[0]
            one = "Orthomodular" in classify(A) or "Orthomodular" in classify(B)
            hk.add(("PBZStar" in classify(S)) == one, f"{A.name}[+]{B.name}")
        M = rng.choice(entries)
        K = rng.choice([E for E in entries if "PseudoKleene" in classify(E)] + [chain(1)])
        if 2 * M.n + K.n - 2 <= max_size:
            X = canonical_aol(M.lat, K)
            aol.add("Antiortholattice" in classify(X), X.name)
    return [hk.record(), aol.record()]


SUITES = {
    "chain-congruences": (chain_congruences, 9),
    "si-chains": (si_chains, 9),
    "exfail12": (exfail12, None),
    "mainthaol": (mainthaol, None),
    "cghsum": (cghsum, 22),
    "charg": (charg, 14),
    "axhsum": (axhsum, 16),
    "aol-small": (aol_small, 6),
    "sghsum": (sghsum, 14),
    "oracle": (oracle, 6),
    "implications": (implications, 14),
    "random-sums": (random_sums, 14),
}


def run_suite(name, max_size=None, seed=0):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    fn, default = SUITES[name]
    t0 = time.perf_counter()
    records = fn(max_size if max_size is not None else default, seed)
    return SuiteReport(name, records, time.perf_counter() - t0)
