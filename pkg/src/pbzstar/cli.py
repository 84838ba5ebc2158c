"""Command-line interface: `pbz check|construct|con|verify|search|catalog`.

Exit codes: 0 success or all checks pass, 1 a checked property fails,
2 usage or parse error, 3 size limit exceeded.
"""

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import algfile, catalog
from .checks import in_oml_hsum_aol
from .congruence import congruence_lattice, irreducibility, norm_level
from .errors import ParseError, PbzError, SizeLimit, TermSyntaxError
from .families import FAMILIES, family
from .lattice import chain_lattice, direct_product, is_distributive, is_modular
from .structures import FLAG_ORDER, BZAlgebra, classify, element_sets
from .subalg import isomorphic
from .suites import SUITES, run_suite
from .sums import canonical_aol, chain, horizontal_sum, mo, ordinal_sum, product
from .terms import identity, is_library_name, satisfies

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


class Usage(Exception):
    pass


def _out(args, line=""):
    if not getattr(args, "json", False):
        print(line)


def _labels(A, xs):
    return "{" + ", ".join(A.label(x) for x in sorted(xs)) + "}"


# ---- check ----

def cmd_check(args):
    A = algfile.load(args.file)
    level = norm_level(args.level)
    result = {"algebra": A.name, "size": A.n}
    ok = True
    if A.inv is not None:
        c = classify(A)
        result["classes"] = c.ordered()
        _out(args, f"{A.name or 'algebra'}: {A.n} elements")
        _out(args, "classes: " + (" ".join(c.ordered()) or "(none)"))
        if args.axioms:
            for f in FLAG_ORDER:
                status = "yes" if f in c else "no "
                why = "" if f in c else f"  ({c.reasons.get(f, '')})"
                _out(args, f"  {status} {f}{why}")
    else:
        _out(args, f"{A.name or 'lattice'}: {A.n} elements (lattice only)")
        result["classes"] = []
    verdicts = []
    for spec in args.identity or ():
        ident = identity(spec)
        res = satisfies(A, ident)
        ok &= res.holds
        name = spec.upper() if is_library_name(spec) else spec
        _out(args, f"{'PASS' if res.holds else 'FAIL'} {name}: {res.describe(A)}")
        verdicts.append({"identity": name, "holds": res.holds,
                         "witness": {k: A.label(v) for k, v in (res.witness or {}).items()}})
    result["identities"] = verdicts
    if args.sets:
        es = element_sets(A)
        for key in ("sharp", "dense", "t_set", "central"):
            _out(args, f"{key}: {_labels(A, getattr(es, key))}")
            result[key] = [A.label(x) for x in sorted(getattr(es, key))]
    if args.irreducibility:
        target = A.lat if level == "lattice" else A
        rep = irreducibility(target, level)
        mono = rep.monolith.show(A.label) if rep.monolith else "none"
        _out(args, f"level {level}: simple={rep.simple} SI={rep.subdirectly_irreducible} "
                   f"directly_irreducible={rep.directly_irreducible}")
        _out(args, f"monolith: {mono}")
        result["irreducibility"] = {"level": level, "simple": rep.simple,
                                    "SI": rep.subdirectly_irreducible,
                                    "directly_irreducible": rep.directly_irreducible,
                                    "monolith": mono}
    if args.json:
        print(json.dumps(result, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


# ---- construct ----

def _smap_comments(A, smap, names):
    out = [f"{smap.kind} sum of " + " and ".join(names)]
    for s, name in enumerate(names):
        out.append(f"summand {chr(65 + s)} = {name}")
    for x in range(A.n):
        out.append(f"{A.label(x)} <- {smap.describe(x)}")
    return out


def cmd_construct(args):
    comments = []
    if args.ordinal:
        P, Q = (algfile.load(f) for f in args.ordinal)
        lat, smap = ordinal_sum(P.lat, Q.lat)
        A = BZAlgebra(lat, None, None, f"{P.name}(+){Q.name}")
        comments = _smap_comments(A, smap, [P.name, Q.name])
    elif args.horizontal:
        parts = [algfile.load(f) for f in args.horizontal]
        if len(parts) < 2:
            raise Usage("--horizontal needs at least two algebras")
        lv = "BZ" if all(p.brouwer is not None for p in parts) else (
            "BI" if all(p.inv is not None for p in parts) else "lattice")
        A, smap = horizontal_sum(parts, lv)
        comments = _smap_comments(A, smap, [p.name for p in parts])
    elif args.product:
        P, Q = (algfile.load(f) for f in args.product)
        A = product(P, Q)
        comments = [f"direct product of {P.name} and {Q.name}; pair (i,j) at index i*{Q.n}+j"]
    elif args.mo is not None:
        A = mo(args.mo)
    elif args.chain is not None:
        A = chain(args.chain)
    elif args.canonical_aol:
        M, K = (algfile.load(f) for f in args.canonical_aol)
        A, m1, m2 = canonical_aol(M.lat, K, with_maps=True)
        comments = [f"canonical antiortholattice {M.name} (+) {K.name} (+) {M.name}^d",
                    "summand A = M, B = K; second sum: A = M (+) K, B = M^d"]
        comments += [f"M.{i} -> {A.label(m1.positions[0][i])}, "
                     f"M^d.{i} -> {A.label(m2.positions[1][i])}" for i in range(M.n)]
    else:
        raise Usage("construct needs one of --ordinal, --horizontal, --product, "
                    "--mo, --chain, --canonical-aol")
    text = algfile.dumps(A, comments)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}: {A.n} elements")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---- con ----

def _boolean(k):
    L = chain_lattice(1)
    for _ in range(k):
        L = direct_product(L, chain_lattice(2))
    return L


def shape_tag(L):
    """Short isomorphism-type tag for common congruence lattice shapes."""
    n = L.n
    if n == 1:
        return "D1"
    if all(L.le(a, b) or L.le(b, a) for a in range(n) for b in range(n)):
        return f"D{n}"
    k = n.bit_length() - 1
    if 1 << k == n and isomorphic(L, _boolean(k), "lattice") is not None:
        return f"D2^{k}"
    k = (n - 1).bit_length() - 1
    if 1 << k == n - 1 and isomorphic(
            L, ordinal_sum(_boolean(k), chain_lattice(2))[0], "lattice") is not None:
        return f"D2^{k} (+) D2"
    return ""


def cmd_con(args):
    A = algfile.load(args.file)
    level = norm_level(args.level)
    target = A.lat if level == "lattice" else A
    con = congruence_lattice(target, level)
    lab = A.label
    L = con.as_lattice()
    tag = shape_tag(L)
    rep = irreducibility(target, level, con)
    if args.json:
        print(json.dumps({
            "algebra": A.name, "level": level, "count": len(con),
            "congruences": [p.show(lab) for p in con.cons],
            "covers": con.covers(), "shape": tag,
            "monolith": rep.monolith.show(lab) if rep.monolith else None,
            "con01": [con.cons[i].show(lab) for i in con.con_01]}, sort_keys=True))
        return EXIT_OK
    print(f"|Con_{level}({A.name or 'A'})| = {len(con)}" + (f"  shape {tag}" if tag else ""))
    if args.report == "dot":
        print("digraph Con {")
        print("  rankdir=BT;")
        for i, p in enumerate(con.cons):
            print(f'  c{i} [label="{p.show(lab)}"];')
        for a, b in con.covers():
            print(f"  c{a} -> c{b};")
        print("}")
    else:
        for i, p in enumerate(con.cons):
            ups = [j for a, j in con.covers() if a == i]
            print(f"  c{i}: {p.show(lab)}" + (f"  < {' '.join(f'c{j}' for j in ups)}" if ups else ""))
    print("monolith: " + (rep.monolith.show(lab) if rep.monolith else "none"))
    print("Con_01: " + " ".join(f"c{i}" for i in con.con_01))
    return EXIT_OK


# ---- verify ----

def _run(name, max_size, seed):
    return run_suite(name, max_size, seed)


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in SUITES:
            raise Usage(f"unknown suite {n!r}; available: all, {', '.join(SUITES)}")
    if len(names) > 1 and args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            reports = list(ex.map(_run, names, [args.max_size] * len(names),
                                  [args.seed] * len(names)))
    else:
        reports = [_run(n, args.max_size, args.seed) for n in names]
    for r in reports:
        if args.json:
            print(r.to_json())
        else:
            print("\n".join(r.lines()))
            print(f"{'PASS' if r.passed else 'FAIL'} suite {r.suite} ({r.seconds:.2f}s)")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---- search ----

_FLAG_ALIASES = {
    "bi": "BI", "pseudokleene": "PseudoKleene", "pk": "PseudoKleene",
    "paraorthomodular": "Paraorthomodular", "pom": "Paraorthomodular",
    "ol": "Ortholattice", "ortholattice": "Ortholattice",
    "oml": "Orthomodular", "orthomodular": "Orthomodular",
    "bz": "BZ", "star": "Star", "bzstar": "StarBZ", "starbz": "StarBZ",
    "pbz": "PBZStar", "pbzstar": "PBZStar",
    "aol": "Antiortholattice", "antiortholattice": "Antiortholattice",
}
_PRED_TOKEN = re.compile(r"\s*(?:(\()|(\))|(&|\band\b)|(\||\bor\b)|(!|\bnot\b)|([A-Za-z][A-Za-z0-9_']*))")


def parse_predicate(text):
    """Compile a boolean predicate over identity names, class flags, simple,
    si, di (directly irreducible), omlaol, distributive and modular.
    Operators: ! (not), & (and), | (or), parentheses."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _PRED_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise TermSyntaxError(f"bad predicate near {text[pos:]!r}")
        kind = m.lastindex
        toks.append((kind, m.group(kind)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def atom_fn(name):
        low = name.lower()
        if low in _FLAG_ALIASES:
            flag = _FLAG_ALIASES[low]
            return lambda ctx: flag in ctx.classes
        if low in ("simple", "si", "di"):
            return lambda ctx: ctx.irr(low)
        if low == "omlaol":
            return lambda ctx: ctx.omlaol
        if low == "distributive":
            return lambda ctx: is_distributive(ctx.A.lat)
        if low == "modular":
            return lambda ctx: is_modular(ctx.A.lat)
        if is_library_name(name):
            ident = identity(name)
            return lambda ctx: ctx.sat(ident)
        raise TermSyntaxError(f"unknown predicate atom {name!r}")

    def expr():
        nonlocal i
        f = term()
        while peek() == 4:
            i += 1
            g = term()
            f = (lambda f, g: lambda c: f(c) or g(c))(f, g)
        return f

    def term():
        nonlocal i
        f = factor()
        while peek() == 3:
            i += 1
            g = factor()
            f = (lambda f, g: lambda c: f(c) and g(c))(f, g)
        return f

    def factor():
        nonlocal i
        k = peek()
        if k == 5:
            i += 1
            f = factor()
            return lambda c: not f(c)
        if k == 1:
            i += 1
            f = expr()
            if peek() != 2:
                raise TermSyntaxError("missing ')' in predicate")
            i += 1
            return f
        if k == 6:
            name = toks[i][1]
            i += 1
            return atom_fn(name)
        raise TermSyntaxError("unexpected end of predicate" if k is None else
                              f"unexpected {toks[i][1]!r} in predicate")

    f = expr()
    if i != len(toks):
        raise TermSyntaxError(f"unexpected {toks[i][1]!r} in predicate")
    return f


class _Ctx:
    def __init__(self, A, level):
        self.A = A
        self.level = level
        self.classes = classify(A)
        self._irr = None
        self._omlaol = None

    def sat(self, ident):
        return satisfies(self.A, ident).holds

    def irr(self, what):
        if self._irr is None:
            self._irr = irreducibility(self.A, self.level)
        return {"simple": self._irr.simple, "si": self._irr.subdirectly_irreducible,
                "di": self._irr.directly_irreducible}[what]

    @property
    def omlaol(self):
        if self._omlaol is None:
            self._omlaol = "PBZStar" in self.classes and in_oml_hsum_aol(self.A)
        return self._omlaol


def cmd_search(args):
    pred = parse_predicate(args.predicate)
    level = norm_level(args.level)
    hits = 0
    seen = []
    for A in family(args.family, args.max_size):
        if A.inv is None:
            continue
        if pred(_Ctx(A, level)):
            if not args.all_copies:
                if any(B.n == A.n and isomorphic(A, B) is not None for B in seen):
                    continue
                seen.append(A)
            hits += 1
            if args.json:
                print(json.dumps({"name": A.name, "size": A.n,
                                  "file": algfile.dumps(A)}, sort_keys=True))
            else:
                print(f"MATCH {A.name} ({A.n} elements)")
                if args.files:
                    sys.stdout.write(algfile.dumps(A, [A.name]))
    if not args.json:
        print(f"{hits} match{'es' if hits != 1 else ''}")
    return EXIT_OK


# ---- catalog ----

def cmd_catalog(args):
    if args.name:
        sys.stdout.write(algfile.dumps(catalog.algebra(args.name), [args.name]))
        return EXIT_OK
    for e in catalog.load_catalog():
        A = e.algebra
        print(f"{A.name:12} {A.n:3}  {' '.join(classify(A).ordered())}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="pbz", description="Finite BZ-lattice toolkit.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="classify an algebra and test identities")
    c.add_argument("file", help="path, '-' or catalog:NAME")
    c.add_argument("--identity", nargs="+", metavar="NAME|EXPR")
    c.add_argument("--axioms", action="store_true", help="list every class flag with reasons")
    c.add_argument("--sets", action="store_true", help="print S, D, T and central elements")
    c.add_argument("--irreducibility", action="store_true")
    c.add_argument("--level", default="bz", help="lattice, bi or bz")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_check)

    c = sub.add_parser("construct", help="build sums, products, MO_k and chains")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--ordinal", nargs=2, metavar="FILE")
    g.add_argument("--horizontal", nargs="+", metavar="FILE")
    g.add_argument("--product", nargs=2, metavar="FILE")
    g.add_argument("--mo", type=int, metavar="K")
    g.add_argument("--chain", type=int, metavar="N")
    g.add_argument("--canonical-aol", nargs=2, metavar=("M", "K"))
    c.add_argument("-o", "--output", help="output file (default stdout)")
    c.set_defaults(fn=cmd_construct)

    c = sub.add_parser("con", help="enumerate the congruence lattice")
    c.add_argument("file")
    c.add_argument("--level", default="bz")
    c.add_argument("--report", choices=("table", "dot"), default="table")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_con)

    c = sub.add_parser("verify", help="run a verification suite")
    c.add_argument("--suite", default="all", help="all, " + ", ".join(SUITES))
    c.add_argument("--max-size", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--jobs", type=int, default=1, help="worker processes for --suite all")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_verify)

    c = sub.add_parser("search", help="search generated families with a predicate")
    c.add_argument("--predicate", required=True)
    c.add_argument("--family", choices=FAMILIES, default="all")
    c.add_argument("--max-size", type=int, default=12)
    c.add_argument("--level", default="bz", help="level for simple/si/di")
    c.add_argument("--files", action="store_true", help="also print each match as a file")
    c.add_argument("--all-copies", action="store_true",
                   help="report isomorphic matches separately (default: first of each type)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_search)

    c = sub.add_parser("catalog", help="list catalog algebras or print one")
    c.add_argument("name", nargs="?")
    c.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except SizeLimit as e:
        print(f"size limit: {e}", file=sys.stderr)
        return EXIT_SIZE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (Usage, TermSyntaxError, KeyError, ValueError) as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return EXIT_USAGE
    except PbzError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
