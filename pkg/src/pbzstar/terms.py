"""Terms over {^, v, ', ~, 0, 1}, identity checking, and the named identities.

Text syntax (ASCII, with Unicode alternatives in brackets):

    identity := term '==' term | term '<=' term      [≈, ≤]
    term     := meet ('v' meet)*                     [∨]
    meet     := unary ('^' unary)*                   [∧]
    unary    := '<>' unary | '[]' unary | postfix     [◇, □]
    postfix  := atom ("'" | '~')*                    [′]
    atom     := '0' | '1' | VAR | '(' term ')'

VAR is a lowercase letter other than 'v', optionally followed by digits.
'^' binds tighter than 'v'.  <>t abbreviates t~~ and []t abbreviates t'~.
An inequality t <= u is checked as the identity t ^ u == t.
"""

import itertools
import os
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainArity, SizeLimit, TermSyntaxError, UnboundVariable

DEFAULT_BUDGET = 10**8
CHUNK = 1 << 20


def eval_budget():
    raw = os.environ.get("PBZ_MAX_EVALS")
    if not raw:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        return DEFAULT_BUDGET


@dataclass(frozen=True)
class Term:
    op: str  # 'var', 'const', "'", '~', '^', 'v'
    args: tuple = ()
    value: object = None  # variable name or constant 0/1

    def variables(self, acc=None):
        acc = [] if acc is None else acc
        if self.op == "var":
            if self.value not in acc:
                acc.append(self.value)
        for a in self.args:
            a.variables(acc)
        return acc

    def depth(self):
        return 1 + max((a.depth() for a in self.args), default=0)

    def __str__(self):
        return _show(self, 0)


def Var(name):
    return Term("var", (), name)


def Const(v):
    return Term("const", (), v)


def _show(t, prec):
    if t.op == "var":
        return t.value
    if t.op == "const":
        return str(t.value)
    if t.op in ("'", "~"):
        inner = _show(t.args[0], 3)
        return inner + t.op
    p = 2 if t.op == "^" else 1
    s = f"{_show(t.args[0], p)} {t.op} {_show(t.args[1], p)}"
    return f"({s})" if prec > p else s


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    name: str = field(default="", compare=False)
    text: str = field(default="", compare=False)

    def variables(self):
        return self.rhs.variables(self.lhs.variables())

    def __str__(self):
        return self.text or f"{self.lhs} == {self.rhs}"


_TOKEN = re.compile(r"\s*(==|<=|<>|\[\]|≈|≤|◇|□|[\^∧v∨'′~()01]|[a-uw-z][0-9]*)")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} at column {pos + 1}")
        tok = m.group(1)
        tok = {"≈": "==", "≤": "<=", "◇": "<>", "□": "[]", "∧": "^", "∨": "v", "′": "'"}.get(tok, tok)
        out.append(tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want=None):
        t = self.peek()
        if t is None or (want is not None and t != want):
            raise TermSyntaxError(f"expected {want or 'a term'}, got {t or 'end of input'}")
        self.i += 1
        return t

    def term(self):
        t = self.meet()
        while self.peek() == "v":
            self.take()
            t = Term("v", (t, self.meet()))
        return t

    def meet(self):
        t = self.unary()
        while self.peek() == "^":
            self.take()
            t = Term("^", (t, self.unary()))
        return t

    def unary(self):
        tok = self.peek()
        if tok == "<>":
            self.take()
            return Term("~", (Term("~", (self.unary(),)),))
        if tok == "[]":
            self.take()
            return Term("~", (Term("'", (self.unary(),)),))
        return self.postfix()

    def postfix(self):
        t = self.atom()
        while self.peek() in ("'", "~"):
            t = Term(self.take(), (t,))
        return t

    def atom(self):
        tok = self.take()
        if tok == "(":
            t = self.term()
            self.take(")")
            return t
        if tok in ("0", "1"):
            return Const(int(tok))
        if re.fullmatch(r"[a-uw-z][0-9]*", tok):
            return Var(tok)
        raise TermSyntaxError(f"unexpected token {tok!r}")

    def done(self):
        if self.peek() is not None:
            raise TermSyntaxError(f"trailing input at {self.peek()!r}")


def parse_term(text):
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


def parse_identity(text, name=""):
    p = _Parser(text)
    lhs = p.term()
    rel = p.take()
    if rel not in ("==", "<="):
        raise TermSyntaxError(f"expected '==' or '<=', got {rel!r}")
    rhs = p.term()
    p.done()
    if rel == "<=":
        return Identity(lhs, Term("^", (lhs, rhs)), name, text.strip())
    return Identity(lhs, rhs, name, text.strip())


LIBRARY_TEXT = {
    "SDM": "(x ^ y)~ == x~ v y~",
    "WSDM": "(x ^ y~)~ == x~ v <>y",
    "S1": "(x ^ (x ^ y)~)~ == x~ v <>(x ^ y)",
    "S1'": "((x v y) ^ y~)~ == (x v y)~ v <>y",
    "S2": "(x ^ (y ^ y')~)~ == x~ v <>(y ^ y')",
    "S3": "(x ^ <>(y ^ y'))~ == x~ v (y ^ y')~",
    "J0": "x == (x ^ y~) v (x ^ <>y)",
    "J1": "x == (x ^ (x ^ y)~) v (x ^ <>(x ^ y))",
    "J1'": "x v y == ((x v y) ^ y~) v ((x v y) ^ <>y)",
    "J2": "x == (x ^ (y ^ y')~) v (x ^ <>(y ^ y'))",
    "PARAOML": "(x~ v (<>x ^ <>y)) ^ <>x <= <>y",
}

LIBRARY = {k: parse_identity(v, k) for k, v in LIBRARY_TEXT.items()}

_ALIASES = {"S1P": "S1'", "J1P": "J1'", "S1′": "S1'", "J1′": "J1'", "PARA": "PARAOML"}


def identity(spec):
    """Library identity by name, or parse spec as an identity expression."""
    key = spec.strip()
    up = key.upper()
    up = _ALIASES.get(up, up)
    if up in LIBRARY:
        return LIBRARY[up]
    return parse_identity(key)


def is_library_name(spec):
    up = spec.strip().upper()
    return _ALIASES.get(up, up) in LIBRARY


def _tables(A):
    L = A.lat
    t = {"^": L.meet_np, "v": L.join_np}
    if A.inv is not None:
        t["'"] = np.asarray(A.inv, dtype=np.int32)
    if A.brouwer is not None:
        t["~"] = np.asarray(A.brouwer, dtype=np.int32)
    return t


def _eval_np(t, A, env, tabs, shape):
    if t.op == "var":
        if t.value not in env:
            raise UnboundVariable(t.value)
        return env[t.value]
    if t.op == "const":
        v = A.top if t.value == 1 else A.bot
        return np.full(shape, v, dtype=np.int32)
    if t.op not in tabs:
        raise ValueError(f"operation {t.op} is not defined on this algebra")
    if t.op in ("'", "~"):
        return tabs[t.op][_eval_np(t.args[0], A, env, tabs, shape)]
    left = _eval_np(t.args[0], A, env, tabs, shape)
    right = _eval_np(t.args[1], A, env, tabs, shape)
    return tabs[t.op][left, right]


def evaluate(t, A, assignment):
    """Value of term t in A; assignment maps variable names to indices."""
    env = {k: np.array([v], dtype=np.int32) for k, v in assignment.items()}
    return int(_eval_np(t, A, env, _tables(A), (1,))[0])


@dataclass
class SatResult:
    holds: bool
    witness: dict | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None
    checked: int = 0

    def __bool__(self):
        return self.holds

    def describe(self, A):
        if self.holds:
            return "holds"
        w = ", ".join(f"{k}={A.label(v)}" for k, v in self.witness.items())
        return f"fails at {w}: lhs={A.label(self.lhs_value)}, rhs={A.label(self.rhs_value)}"


def satisfies(A, ident, budget=None):
    """Exhaustive check of ident on A; on failure the witness is the least
    failing assignment in lexicographic index order (variables in order of
    first appearance)."""
    domains = [list(range(A.n))] * len(ident.variables())
    return _sweep(A, ident, domains, budget)


def satisfies_restricted(A, ident, domains, budget=None):
    vs = ident.variables()
    if len(domains) != len(vs):
        raise DomainArity(f"{len(vs)} variables but {len(domains)} domains")
    return _sweep(A, ident, [sorted(set(d)) for d in domains], budget)


def _sweep(A, ident, domains, budget):
    vs = ident.variables()
    budget = eval_budget() if budget is None else budget
    total = 1
    for d in domains:
        total *= len(d)
    if total > budget:
        raise SizeLimit(f"{total} assignments exceed the evaluation budget {budget}")
    if total == 0:
        return SatResult(True, checked=0)
    tabs = _tables(A)
    k = len(vs)
    # split on leading variables until each chunk is small enough
    lead = 0
    rest = total
    while lead < k and rest > CHUNK:
        rest //= len(domains[lead])
        lead += 1
    checked = 0
    for prefix in itertools.product(*domains[:lead]):
        tail = domains[lead:]
        if tail:
            grids = np.meshgrid(*[np.asarray(d, dtype=np.int32) for d in tail], indexing="ij")
            flat = [g.ravel() for g in grids]
            size = flat[0].size
        else:
            flat, size = [], 1
        env = {}
        for name, v in zip(vs[:lead], prefix):
            env[name] = np.full(size, v, dtype=np.int32)
        for name, arr in zip(vs[lead:], flat):
            env[name] = arr
        lhs = _eval_np(ident.lhs, A, env, tabs, (size,))
        rhs = _eval_np(ident.rhs, A, env, tabs, (size,))
        bad = lhs != rhs
        checked += size
        if bad.any():
            i = int(np.argmax(bad))
            wit = {name: int(env[name][i]) for name in vs}
            return SatResult(False, wit, int(lhs[i]), int(rhs[i]), checked)
    return SatResult(True, checked=checked)


def holds(A, name):
    return satisfies(A, identity(name)).holds
