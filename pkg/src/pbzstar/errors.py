"""Exception types shared across the package."""


class PbzError(Exception):
    """Base class for all package errors."""


class NotALattice(PbzError):
    def __init__(self, a, b, what="glb"):
        super().__init__(f"elements {a} and {b} have no {what}")
        self.pair = (a, b)


class NoBounds(PbzError):
    pass


class NotInvolution(PbzError):
    pass


class NotPseudoKleene(PbzError):
    pass


class TrivialSummand(PbzError):
    pass


class ImproperInput(PbzError):
    pass


class SizeLimit(PbzError):
    pass


class NotACongruence(PbzError):
    pass


class UnboundVariable(PbzError):
    pass


class DomainArity(PbzError):
    pass


class TermSyntaxError(PbzError):
    pass


class UnexpectedType(PbzError):
    pass


class AssertionFailed(PbzError):
    def __init__(self, name, prop, detail=""):
        msg = f"catalog entry {name}: assertion '{prop}' failed"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.name = name
        self.prop = prop


class ParseError(PbzError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line
