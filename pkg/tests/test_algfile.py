import pytest
from hypothesis import given

from conftest import algebras
from pbzstar import algfile, catalog
from pbzstar.errors import ParseError
from pbzstar.structures import BZAlgebra
from pbzstar.sums import chain

M3_TEXT = """\
pbz-alg v1
# the five-element example
universe 5
labels: 0 a a' b 1
covers: 0<a 0<a' 0<b a<1 a'<1 b<1
involution: 0->1 a->a' a'->a b->b 1->0
brouwer: 0->1 a->a' a'->a b->0 1->0
"""


def same(A, B):
    return A.lat == B.lat and A.inv == B.inv and A.brouwer == B.brouwer


def test_parse_m3():
    A = algfile.parse(M3_TEXT, "m3")
    assert same(A, catalog.algebra("M3"))
    assert A.name == "m3"


@given(algebras)
def test_roundtrip(A):
    text = algfile.dumps(A)
    B = algfile.parse(text)
    assert same(A, B)
    assert algfile.dumps(B) == text


@pytest.mark.parametrize("e", catalog.load_catalog(), ids=lambda e: e.name)
def test_catalog_roundtrip_modulo_comments(e):
    text = algfile.dumps(e.algebra, ["from the catalog", e.name])
    again = algfile.dumps(algfile.parse(text))
    assert algfile.normalize(again) == algfile.normalize(text)


def test_trivial_brouwer_written_compactly():
    text = algfile.dumps(chain(4))
    assert "brouwer: trivial" in text
    assert "labels" not in text


def test_lattice_only_file():
    A = algfile.parse("pbz-alg v1\nuniverse 3\ncovers: 0<1 1<2\n")
    assert A.inv is None and A.brouwer is None and A.n == 3
    assert algfile.dumps(A) == "pbz-alg v1\nuniverse 3\ncovers: 0<1 1<2\n"


def test_labels_take_precedence_over_indices():
    # label "1" names index 2 here, not index 1
    A = algfile.parse("pbz-alg v1\nuniverse 3\nlabels: 0 m 1\ncovers: 0<m m<1\n")
    assert A.lat.top == 2 and A.le(1, 2)


@pytest.mark.parametrize("text, line, msg", [
    ("", 1, "header"),
    ("pbz-alg v2\n", 1, "header"),
    ("pbz-alg v1\ncovers: 0<1\n", 2, "universe"),
    ("pbz-alg v1\nuniverse x\n", 2, "integer"),
    ("pbz-alg v1\nuniverse 2\nlabels: a\n", 3, "labels"),
    ("pbz-alg v1\nuniverse 2\nlabels: a a\n", 3, "distinct"),
    ("pbz-alg v1\nuniverse 2\ncovers: 0<1\nfoo bar\n", 4, "unrecognised"),
    ("pbz-alg v1\nuniverse 2\ncovers: 0<9\n", 3, "unknown element"),
    ("pbz-alg v1\nuniverse 2\ncovers: 0-1\n", 3, "malformed"),
    ("pbz-alg v1\nuniverse 3\ncovers: 0<1 0<2\n", 3, ""),
    ("pbz-alg v1\nuniverse 2\ncovers: 0<1\ninvolution: 0->1\n", 4, "not total"),
    ("pbz-alg v1\nuniverse 2\ncovers: 0<1\ninvolution: 0->0 1->1\n", 4, "involution"),
    ("pbz-alg v1\nuniverse 2\ncovers: 0<1\nbrouwer: trivial\n", 4, "without involution"),
    ("pbz-alg v1\nuniverse 2\nuniverse 2\n", 3, "duplicate"),
])
def test_parse_errors(text, line, msg):
    with pytest.raises(ParseError) as ei:
        algfile.parse(text)
    assert ei.value.line == line
    assert msg in str(ei.value)


def test_load(tmp_path):
    p = tmp_path / "m3.alg"
    p.write_text(M3_TEXT)
    A = algfile.load(str(p))
    assert A.name == "m3" and same(A, catalog.algebra("M3"))
    assert algfile.load("catalog:K").name == "K"
    with pytest.raises(ParseError):
        algfile.load("catalog:none")
    with pytest.raises(ParseError):
        algfile.load(str(tmp_path / "missing.alg"))


def test_awkward_labels_fall_back_to_indices():
    A = catalog.algebra("D2")
    B = BZAlgebra(A.lat.with_labels(["bot tom", "t#p"]), A.inv, A.brouwer)
    text = algfile.dumps(B)
    assert "labels" not in text
    assert same(algfile.parse(text), B)
