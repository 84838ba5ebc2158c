"""BI-, BZ- and PBZ*-lattices: the algebra type, classification, element sets."""

from dataclasses import dataclass, field

from .errors import NotInvolution
from .lattice import FinLattice

FLAG_ORDER = ("BI", "PseudoKleene", "Paraorthomodular", "Ortholattice",
              "Orthomodular", "BZ", "Star", "StarBZ", "PBZStar", "Antiortholattice")


@dataclass(frozen=True, eq=False)
class BZAlgebra:
    """A bounded lattice with optional Kleene complement `inv` and Brouwer
    complement `brouwer`, both given as tuples of indices."""

    lat: FinLattice
    inv: tuple | None = None
    brouwer: tuple | None = None
    name: str = ""

    @property
    def n(self):
        return self.lat.n

    @property
    def bot(self):
        return self.lat.bot

    @property
    def top(self):
        return self.lat.top

    @property
    def meet(self):
        return self.lat.meet

    @property
    def join(self):
        return self.lat.join

    def label(self, a):
        return self.lat.label(a)

    def index(self, name):
        return self.lat.index(name)

    def le(self, a, b):
        return self.lat.le(a, b)

    def __len__(self):
        return self.lat.n

    def __eq__(self, other):
        if not isinstance(other, BZAlgebra):
            return NotImplemented
        return (self.lat, self.inv, self.brouwer) == (other.lat, other.inv, other.brouwer)

    def __hash__(self):
        return hash((self.lat, self.inv, self.brouwer))

    def __repr__(self):
        return f"BZAlgebra({self.name or '?'}, n={self.n})"

    def renamed(self, name):
        return BZAlgebra(self.lat, self.inv, self.brouwer, name)

    def bi_reduct(self):
        return BZAlgebra(self.lat, self.inv, None, self.name)

    def names(self, elems):
        return [self.label(a) for a in sorted(elems)]


def trivial_brouwer(L):
    return tuple(L.top if a == L.bot else L.bot for a in range(L.n))


def is_trivial_brouwer(A):
    return A.brouwer is not None and A.brouwer == trivial_brouwer(A.lat)


def involution_problem(L, inv):
    """None if inv is an order-reversing involution of L, else a reason."""
    if inv is None or len(inv) != L.n:
        return "involution missing or of wrong length"
    for a in range(L.n):
        if not 0 <= inv[a] < L.n:
            return f"image of {L.label(a)} out of range"
        if inv[inv[a]] != a:
            return f"{L.label(a)}'' != {L.label(a)}"
    for a in range(L.n):
        for b in range(L.n):
            if L.le(a, b) and not L.le(inv[b], inv[a]):
                return f"{L.label(a)} <= {L.label(b)} but {L.label(b)}' not <= {L.label(a)}'"
    return None


def box_diamond(A, a):
    """(box a, diamond a) = (a'~, a~~)."""
    z = A.brouwer
    return z[A.inv[a]], z[z[a]]


@dataclass(frozen=True)
class StructureClass:
    flags: frozenset
    reasons: dict = field(default_factory=dict)

    def __contains__(self, flag):
        return flag in self.flags

    def ordered(self):
        return [f for f in FLAG_ORDER if f in self.flags]


def _first(gen):
    for w in gen:
        return w
    return None


def classify(A):
    """Decide every flag by exhaustive sweep.  Raises NotInvolution if the
    Kleene complement is not an order-reversing involution."""
    L = A.lat
    prob = involution_problem(L, A.inv)
    if prob:
        raise NotInvolution(prob)
    n, m, j, inv = L.n, L.meet, L.join, A.inv
    lab = L.label
    R = range(n)
    flags = {"BI"}
    reasons = {}

    w = _first((a, b) for a in R for b in R
               if not L.le(m[a][inv[a]], j[b][inv[b]]))
    pk = w is None
    if pk:
        flags.add("PseudoKleene")
    else:
        reasons["PseudoKleene"] = f"a^a' <= b v b' fails at a={lab(w[0])}, b={lab(w[1])}"

    w = _first((a, b) for a in R for b in R
               if a != b and L.le(a, b) and m[inv[a]][b] == L.bot)
    if w is None:
        flags.add("Paraorthomodular")
    else:
        reasons["Paraorthomodular"] = f"a <= b, a'^b = 0, a != b at a={lab(w[0])}, b={lab(w[1])}"

    w = _first(a for a in R if m[a][inv[a]] != L.bot)
    if w is None:
        flags.add("Ortholattice")
        w = _first((a, b) for a in R for b in R
                   if L.le(a, b) and j[m[b][inv[a]]][a] != b)
        if w is None:
            flags.add("Orthomodular")
        else:
            reasons["Orthomodular"] = f"b = (b^a') v a fails at a={lab(w[0])}, b={lab(w[1])}"
    else:
        reasons["Ortholattice"] = f"{lab(w)} is not sharp"
        reasons["Orthomodular"] = "not an ortholattice"

    z = A.brouwer
    if z is None:
        for f in ("BZ", "Star", "StarBZ", "PBZStar", "Antiortholattice"):
            reasons[f] = "no Brouwer complement"
        return StructureClass(frozenset(flags), reasons)

    w = _first(a for a in R
               if not L.le(z[m[a][inv[a]]], j[z[a]][z[inv[a]]]))
    if w is None:
        flags.add("Star")
    else:
        reasons["Star"] = f"(a^a')~ <= a~ v a'~ fails at a={lab(w)}"

    bz_fail = None
    for a in R:
        if m[a][z[a]] != L.bot:
            bz_fail = f"a^a~ = 0 fails at a={lab(a)}"
        elif not L.le(a, z[z[a]]):
            bz_fail = f"a <= a~~ fails at a={lab(a)}"
        elif inv[z[a]] != z[z[a]]:
            bz_fail = f"a~' = a~~ fails at a={lab(a)}"
        if bz_fail:
            break
    if bz_fail is None:
        w = _first((a, b) for a in R for b in R if L.le(a, b) and not L.le(z[b], z[a]))
        if w is not None:
            bz_fail = f"~ not antitone at a={lab(w[0])}, b={lab(w[1])}"
    if bz_fail is None and not pk:
        bz_fail = "not pseudo-Kleene"
    if bz_fail is None:
        flags.add("BZ")
    else:
        reasons["BZ"] = bz_fail

    if "BZ" in flags and "Star" in flags:
        flags.add("StarBZ")
    else:
        reasons["StarBZ"] = "not BZ" if "BZ" not in flags else "condition (*) fails"
    if "StarBZ" in flags and "Paraorthomodular" in flags:
        flags.add("PBZStar")
    else:
        reasons["PBZStar"] = "not BZ*" if "StarBZ" not in flags else "not paraorthomodular"
    if "PBZStar" in flags:
        w = _first(a for a in R
                   if m[a][inv[a]] == L.bot and a not in (L.bot, L.top))
        if w is None:
            flags.add("Antiortholattice")
        else:
            reasons["Antiortholattice"] = f"{lab(w)} is sharp"
    else:
        reasons["Antiortholattice"] = "not PBZ*"
    return StructureClass(frozenset(flags), reasons)


def paraorthomodular_equational(A):
    """(a~ v (<>a ^ <>b)) ^ <>a <= <>b for all a, b."""
    L, z = A.lat, A.brouwer
    m, j = L.meet, L.join
    for a in range(L.n):
        da = z[z[a]]
        for b in range(L.n):
            db = z[z[b]]
            if not L.le(m[j[z[a]][m[da][db]]][da], db):
                return False
    return True


def sharp_set(A):
    m, inv = A.meet, A.inv
    return frozenset(a for a in range(A.n) if m[a][inv[a]] == A.bot)


def sharp_characterizations(A):
    """The four descriptions of S(L) for a PBZ*-lattice, plus the definition."""
    z, inv, j = A.brouwer, A.inv, A.join
    R = range(A.n)
    return {
        "a^a'=0": sharp_set(A),
        "image of ~": frozenset(z[a] for a in R),
        "a=a~~": frozenset(a for a in R if z[z[a]] == a),
        "a v a~=1": frozenset(a for a in R if j[a][z[a]] == A.top),
        "a~=a'": frozenset(a for a in R if z[a] == inv[a]),
    }


@dataclass(frozen=True)
class ElementSets:
    sharp: frozenset
    dense: frozenset
    t_set: frozenset
    central: frozenset


def is_central(A, a):
    """Elementwise criterion for a to be central."""
    m, j, z, inv = A.meet, A.join, A.brouwer, A.inv
    if m[a][inv[a]] != A.bot:
        return False
    na = inv[a]
    for b in range(A.n):
        if z[m[a][b]] != j[z[a]][z[b]]:
            return False
        if z[m[na][b]] != j[z[na]][z[b]]:
            return False
        if j[m[a][b]][m[na][b]] != b:
            return False
    return True


def element_sets(A):
    z = A.brouwer
    if z is None:
        raise ValueError("element sets need a Brouwer complement")
    dense = frozenset(a for a in range(A.n) if z[a] == A.bot)
    return ElementSets(
        sharp=sharp_set(A),
        dense=dense,
        t_set=dense | {A.bot},
        central=frozenset(a for a in range(A.n) if is_central(A, a)),
    )


def t_set(A):
    z = A.brouwer
    return frozenset(a for a in range(A.n) if z[a] == A.bot or a == A.bot)


def image(A, op, S):
    return frozenset(op[a] for a in S)


def is_closed(A, S, ops=("meet", "join", "inv", "brouwer")):
    S = frozenset(S)
    for op in ops:
        if op in ("meet", "join"):
            t = A.meet if op == "meet" else A.join
            if any(t[a][b] not in S for a in S for b in S):
                return False
        else:
            f = A.inv if op == "inv" else A.brouwer
            if any(f[a] not in S for a in S):
                return False
    return True


def is_subuniverse(A, S):
    S = frozenset(S)
    if A.bot not in S or A.top not in S:
        return False
    ops = ["meet", "join"]
    if A.inv is not None:
        ops.append("inv")
    if A.brouwer is not None:
        ops.append("brouwer")
    return is_closed(A, S, ops)
