"""The one-object quantaloid of extended rationals under addition.

Carrier [-inf, inf] with the lattice order reversed against the numeric
order: a <= b in the lattice iff a >= b as numbers.  Joins are numeric
infima, meets numeric suprema, the unit is 0, the lattice bottom is +inf
and the top is -inf.  Composition is addition with the bottom-absorbing
convention x + (+inf) = +inf for every x including -inf; that choice is
forced, since composition must preserve the empty join (the bottom).
Residuals are subtraction with the Galois-derived edge cases.

All arithmetic is exact (fractions); no floats anywhere.

This module never enters the generic enumeration paths: the quantale is
infinite, so the two-point category over it is checked through the
closed-form parametric family mu = (t, t+1) at chosen samples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True, order=False)
class ExtendedRational:
    tag: int  # -1 = -inf, 0 = finite, +1 = +inf
    value: Fraction = Fraction(0)

    @staticmethod
    def finite(v) -> "ExtendedRational":
        return ExtendedRational(0, Fraction(v))

    @staticmethod
    def parse(text: str) -> "ExtendedRational":
        t = text.strip()
        if t in ("inf", "+inf", "oo", "+oo"):
            return POS_INF
        if t in ("-inf", "-oo"):
            return NEG_INF
        return ExtendedRational.finite(Fraction(t))

    @property
    def is_finite(self) -> bool:
        return self.tag == 0

    def numeric_leq(self, other: "ExtendedRational") -> bool:
        if self.tag != other.tag:
            return self.tag < other.tag
        return self.tag != 0 or self.value <= other.value

    def __str__(self):
        if self.tag > 0:
            return "inf"
        if self.tag < 0:
            return "-inf"
        return str(self.value)

    __repr__ = __str__


POS_INF = ExtendedRational(1)
NEG_INF = ExtendedRational(-1)
ZERO = ExtendedRational.finite(0)


def r_leq(a: ExtendedRational, b: ExtendedRational) -> bool:
    """Lattice order: a <= b iff a >= b numerically."""
    return b.numeric_leq(a)


def r_compose(a: ExtendedRational, b: ExtendedRational) -> ExtendedRational:
    """Addition; the bottom +inf absorbs everything, including -inf."""
    if a.tag > 0 or b.tag > 0:
        return POS_INF
    if a.tag < 0 or b.tag < 0:
        return NEG_INF
    return ExtendedRational.finite(a.value + b.value)


def r_imp(h: ExtendedRational, f: ExtendedRational) -> ExtendedRational:
    """The residual h - f: the lattice-largest g with g + f <= h.

    Edge cases are forced by the Galois property against r_compose:
    anything - (+inf) is the top -inf; h - (-inf) is the bottom +inf
    except (-inf) - (-inf) = -inf.
    """
    if f.tag > 0:
        return NEG_INF
    if f.tag < 0:
        return NEG_INF if h.tag < 0 else POS_INF
    if h.tag > 0:
        return POS_INF
    if h.tag < 0:
        return NEG_INF
    return ExtendedRational.finite(h.value - f.value)


def r_join(items) -> ExtendedRational:
    """Lattice join = numeric infimum; empty join is the bottom +inf."""
    out = POS_INF
    for a in items:
        if a.numeric_leq(out):
            out = a
    return out


def r_meet(items) -> ExtendedRational:
    """Lattice meet = numeric supremum; empty meet is the top -inf."""
    out = NEG_INF
    for a in items:
        if out.numeric_leq(a):
            out = a
    return out


class RealQuantale:
    """The fixed one-object structure; top/bottom/unit plus the operations."""

    unit = ZERO
    top = NEG_INF
    bottom = POS_INF
    compose = staticmethod(r_compose)
    imp = staticmethod(r_imp)
    join = staticmethod(r_join)
    meet = staticmethod(r_meet)
    leq = staticmethod(r_leq)


DEFAULT_SAMPLES = (
    ExtendedRational.finite(-3),
    ExtendedRational.finite(Fraction(-5, 2)),
    ExtendedRational.finite(-1),
    ZERO,
    ExtendedRational.finite(Fraction(1, 2)),
    ExtendedRational.finite(2),
    POS_INF,
)

# the two-point category: X(x,y) = -1, X(y,x) = 1, diagonals 0
_OBJ = ("x", "y")
_HOM = {
    ("x", "x"): ZERO,
    ("x", "y"): ExtendedRational.finite(-1),
    ("y", "x"): ExtendedRational.finite(1),
    ("y", "y"): ZERO,
}


@dataclass
class SampleCheck:
    t: ExtendedRational
    mu: dict
    axioms_ok: bool
    y_row: dict
    y_row_ok: bool
    star_row: dict
    star_row_ok: bool
    unit_lhs: ExtendedRational
    unit_rhs: ExtendedRational
    unit_ok: bool

    @property
    def ok(self) -> bool:
        rows = self.axioms_ok and self.y_row_ok and self.star_row_ok
        return rows and (self.unit_ok or not self.t.is_finite)


@dataclass
class Example2Report:
    samples: list[SampleCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.samples)


def _neg(t: ExtendedRational) -> ExtendedRational:
    if t.tag > 0:
        return NEG_INF
    if t.tag < 0:
        return POS_INF
    return ExtendedRational.finite(-t.value)


def example2_verify(samples=None) -> Example2Report:
    """Closed-form checks for the parametric presheaf family mu = (t, t+1).

    Per sample: the presheaf axioms; the evaluation row equal to
    (-t, -1-t); the canonical right-adjoint row equal to (t, 1+t); and the
    unit inequality PX(mu,mu) <= (star o row)(mu,mu) in the lattice order.
    The unit inequality is asserted for finite samples; at the degenerate
    +/-inf presheaves it fails under the bottom-absorbing convention (the
    left side is the top -inf, the right side collapses to the bottom
    +inf), so there it is recorded rather than asserted.
    """
    one = ExtendedRational.finite(1)
    report = Example2Report()
    for t in DEFAULT_SAMPLES if samples is None else samples:
        mu = {"x": t, "y": r_compose(t, one)}
        axioms_ok = all(
            r_leq(r_compose(mu[b], _HOM[(a, b)]), mu[a]) for a in _OBJ for b in _OBJ
        )
        y_row = {a: r_meet(r_imp(_HOM[(b, a)], mu[b]) for b in _OBJ) for a in _OBJ}
        y_expect = {"x": _neg(t), "y": r_compose(_neg(t), ExtendedRational.finite(-1))}
        star_row = {a: r_meet(r_imp(_HOM[(a, z)], y_row[z]) for z in _OBJ) for a in _OBJ}
        star_expect = {"x": t, "y": r_compose(t, one)}
        unit_lhs = r_meet(r_imp(mu[b], mu[b]) for b in _OBJ)
        unit_rhs = r_join(r_compose(star_row[a], y_row[a]) for a in _OBJ)
        report.samples.append(
            SampleCheck(
                t=t,
                mu=mu,
                axioms_ok=axioms_ok,
                y_row=y_row,
                y_row_ok=y_row == y_expect,
                star_row=star_row,
                star_row_ok=star_row == star_expect,
                unit_lhs=unit_lhs,
                unit_rhs=unit_rhs,
                unit_ok=r_leq(unit_lhs, unit_rhs),
            )
        )
    report.notes.append(
        "verification is per-sample over the listed parameters, not a proof "
        "over the infinite presheaf space"
    )
    report.notes.append(
        "expectation on the finite part: the two-point category is m-cocomplete; "
        "cocompleteness is not claimed"
    )
    return report
