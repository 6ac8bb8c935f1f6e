"""Exception types and the global search-space cap."""

import os

DEFAULT_SEARCH_CAP = 2 ** 24


class QcalcError(Exception):
    """Base class for all library errors."""


class UnknownElement(QcalcError):
    pass


class AntisymmetryViolation(QcalcError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"order has a cycle: {a} <= {b} and {b} <= {a} with {a} != {b}")


class NotALattice(QcalcError):
    def __init__(self, pair, kind, bounds):
        self.pair = pair
        self.kind = kind  # "join" or "meet"
        self.bounds = bounds
        super().__init__(
            f"pair {pair} has no unique {kind}: minimal/maximal bounds {sorted(bounds)}"
        )


class NotComposable(QcalcError):
    pass


class TypeMismatch(QcalcError):
    pass


class DomainMismatch(QcalcError):
    pass


class Mismatch(QcalcError):
    """Distributor boundary mismatch."""


class NotLeftAdjoint(QcalcError):
    pass


class NotMCocomplete(QcalcError):
    pass


class SearchSpaceExceeded(QcalcError):
    def __init__(self, candidates, cap, what=""):
        self.candidates = candidates
        self.cap = cap
        super().__init__(
            f"search space of {candidates} candidates exceeds cap {cap}"
            + (f" ({what})" if what else "")
        )


class ParseError(QcalcError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ValidationError(QcalcError):
    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


def search_cap() -> int:
    """Candidate cap for exhaustive enumerations (env QCALC_SEARCH_CAP overrides)."""
    raw = os.environ.get("QCALC_SEARCH_CAP")
    if raw is None:
        return DEFAULT_SEARCH_CAP
    return int(raw)


def guard_search(candidates: int, what: str = "", cap: int | None = None) -> None:
    cap = search_cap() if cap is None else cap
    if candidates > cap:
        raise SearchSpaceExceeded(candidates, cap, what)
