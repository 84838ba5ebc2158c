"""Reader and writer for the `pbz-alg v1` text format.

    pbz-alg v1
    universe 5
    labels: 0 a a' b 1
    covers: 0<a 0<a' 0<b a<1 a'<1 b<1
    involution: 0->1 a->a' a'->a b->b 1->0
    brouwer: 0->1 a->a' a'->a b->0 1->0

`#` starts a comment.  `labels:` is optional (default labels are the
indices).  Elements in the other lines are named by label, or by decimal
index when no label matches.  `involution:` and `brouwer:` may be omitted for
plain lattices; `brouwer: trivial` means 0~ = 1 and x~ = 0 otherwise.  The
writer lists covers in sorted index order and both maps in full, except
that a trivial Brouwer complement is written as `trivial`.
"""

import re

from . import catalog
from .errors import ParseError, PbzError
from .lattice import lattice_from_covers, CoverList
from .structures import BZAlgebra, involution_problem, trivial_brouwer

HEADER = "pbz-alg v1"
_BAD_LABEL = re.compile(r"\s|<|->|#")


def _strip(line):
    i = line.find("#")
    return (line if i < 0 else line[:i]).strip()


def parse(text, name=""):
    lines = text.splitlines()
    body = [(k + 1, _strip(l)) for k, l in enumerate(lines)]
    body = [(k, l) for k, l in body if l]
    if not body or body[0][1] != HEADER:
        raise ParseError(f"expected header '{HEADER}'", body[0][0] if body else 1)
    fields = {}
    for k, line in body[1:]:
        m = re.match(r"(universe)\s+(\S+)$|(labels|covers|involution|brouwer):(.*)$", line)
        if not m:
            raise ParseError(f"unrecognised line {line!r}", k)
        key = m.group(1) or m.group(3)
        val = m.group(2) if m.group(1) else m.group(4).strip()
        if key in fields:
            raise ParseError(f"duplicate '{key}' line", k)
        fields[key] = (k, val)
    if "universe" not in fields:
        raise ParseError("missing 'universe' line", body[-1][0])
    k, val = fields["universe"]
    try:
        n = int(val)
    except ValueError:
        raise ParseError(f"universe size {val!r} is not an integer", k) from None
    if n < 1:
        raise ParseError("universe must be nonempty", k)
    labels = None
    if "labels" in fields:
        k, val = fields["labels"]
        labels = val.split()
        if len(labels) != n:
            raise ParseError(f"{len(labels)} labels for a universe of {n}", k)
        if len(set(labels)) != n:
            raise ParseError("labels are not distinct", k)
    names = labels or [str(i) for i in range(n)]
    lookup = {s: i for i, s in enumerate(names)}

    def elem(tok, k):
        if tok in lookup:
            return lookup[tok]
        if tok.isdigit() and int(tok) < n:
            return int(tok)
        raise ParseError(f"unknown element {tok!r}", k)

    k, val = fields.get("covers", (body[-1][0], ""))
    covers = []
    for tok in val.split():
        if tok.count("<") != 1:
            raise ParseError(f"malformed cover {tok!r}", k)
        a, b = tok.split("<")
        covers.append((elem(a, k), elem(b, k)))
    try:
        lat = lattice_from_covers(CoverList(n, tuple(covers)), labels)
    except PbzError as e:
        raise ParseError(str(e), k) from None

    def mapping(key):
        if key not in fields:
            return None
        k, val = fields[key]
        if key == "brouwer" and val == "trivial":
            return trivial_brouwer(lat)
        out = [None] * n
        for tok in val.split():
            if tok.count("->") != 1:
                raise ParseError(f"malformed map entry {tok!r}", k)
            a, b = tok.split("->")
            a, b = elem(a, k), elem(b, k)
            if out[a] is not None and out[a] != b:
                raise ParseError(f"{names[a]} mapped twice", k)
            out[a] = b
        missing = [names[i] for i in range(n) if out[i] is None]
        if missing:
            raise ParseError(f"{key} is not total: no image for {', '.join(missing)}", k)
        return tuple(out)

    inv = mapping("involution")
    if inv is not None:
        prob = involution_problem(lat, inv)
        if prob:
            raise ParseError(f"not an order-reversing involution: {prob}", fields["involution"][0])
    brouwer = mapping("brouwer")
    if brouwer is not None and inv is None:
        raise ParseError("brouwer given without involution", fields["brouwer"][0])
    return BZAlgebra(lat, inv, brouwer, name)


def dumps(A, comments=()):
    L = A.lat
    out = [HEADER]
    out += [f"# {c}" for c in comments]
    out.append(f"universe {A.n}")
    if L.labels and all(not _BAD_LABEL.search(s) for s in L.labels):
        lab = L.label
        default = [str(i) for i in range(A.n)]
        if list(L.labels) != default:
            out.append("labels: " + " ".join(L.labels))
    else:
        lab = str
    out.append("covers:" + "".join(f" {lab(a)}<{lab(b)}" for a, b in L.covers()))
    if A.inv is not None:
        out.append("involution:" + "".join(f" {lab(a)}->{lab(A.inv[a])}" for a in range(A.n)))
    if A.brouwer is not None:
        if A.brouwer == trivial_brouwer(L):
            out.append("brouwer: trivial")
        else:
            out.append("brouwer:" + "".join(f" {lab(a)}->{lab(A.brouwer[a])}" for a in range(A.n)))
    return "\n".join(out) + "\n"


def normalize(text):
    """Text with comments and blank lines removed, for round-trip comparison."""
    return "\n".join(l for l in (_strip(x) for x in text.splitlines()) if l) + "\n"


def load(spec):
    """Algebra from `catalog:NAME`, a file path, or '-' for stdin."""
    if spec.startswith("catalog:"):
        try:
            return catalog.algebra(spec[len("catalog:"):])
        except KeyError as e:
            raise ParseError(str(e.args[0])) from None
    if spec == "-":
        import sys
        return parse(sys.stdin.read(), "stdin")
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {spec}: {e.strerror}") from None
    name = spec.rsplit("/", 1)[-1]
    if name.endswith(".alg"):
        name = name[:-4]
    return parse(text, name)
