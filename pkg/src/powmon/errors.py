"""Exception types raised by table validation, search, and checkers."""


class PowmonError(Exception):
    """Base class for all library errors."""


class NotAssociative(PowmonError):
    """Cayley table fails associativity; carries a witness triple (a, b, c)."""

    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NoIdentity(PowmonError):
    """Cayley table has no (unique) two-sided identity."""


class NotAUnit(PowmonError):
    """Element has no two-sided inverse."""


class UnknownName(PowmonError):
    """Unrecognized group or monoid spec string."""


class SearchBudgetExceeded(PowmonError):
    """Isomorphism search hit its node limit before finishing.

    Distinguishes "not found within budget" from "proven absent": absence
    may only be claimed after an exhausted search.
    """

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"search budget exceeded after {nodes} nodes")


class SizeLimitExceeded(PowmonError):
    """Power-monoid carrier would exceed the configured size bound."""


class PreconditionViolated(PowmonError):
    """Checker called with inputs outside its stated hypotheses."""


class NotCancellative(PowmonError):
    """Operation requires a cancellative element."""


class NotTorsion(PowmonError):
    """Operation requires a torsion element.

    Unreachable through this library: every element of a finite monoid is
    torsion.  Declared because the minimal-relation contract names it.
    """


class TwoToTwoViolation(PowmonError):
    """A claimed power-monoid isomorphism maps some 2-element set elsewhere.

    Impossible for a genuine isomorphism; signals a corrupted witness.
    """
