"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WeiDualityError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WeiDualityError, ValueError):
    """Malformed or axiom-violating input (CLI exit code 2)."""


class SizeError(InputError):
    """Ground set too large, or a table length that does not match 2**n."""


class CapExceeded(InputError):
    """An exhaustive operation was asked to run above the configured size cap."""


class RViolation(InputError):
    """A rank table breaks monotonicity or the cardinality bound."""

    def __init__(self, table: str, x: int, y: int, detail: str = ""):
        self.table = table
        self.x = x
        self.y = y
        msg = f"axiom (R) fails for table {table!r}: X={x:#b}, Y={y:#b}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DViolation(InputError):
    """The complementation identity linking s and t fails at some subset."""

    def __init__(self, x: int, form: str = "D", detail: str = ""):
        self.x = x
        self.form = form
        msg = f"axiom ({form}) fails at X={x:#b}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class EmptyBases(InputError):
    pass


class MixedCardinality(InputError):
    pass


class ExchangeViolation(InputError):
    pass


class NotPrime(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class BadParameters(InputError):
    pass


class Infeasible(WeiDualityError):
    """Fewer irredundant family members exist than were requested."""


class NotPMD(WeiDualityError):
    """The matroid is not a perfect matroid design."""


class InternalError(WeiDualityError, AssertionError):
    """Two computation routes disagreed; this is a bug, never an input problem."""
