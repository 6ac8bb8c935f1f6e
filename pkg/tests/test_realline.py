from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qcalc.realline import (
    DEFAULT_SAMPLES,
    NEG_INF,
    POS_INF,
    ZERO,
    ExtendedRational,
    example2_verify,
    r_compose,
    r_imp,
    r_join,
    r_leq,
    r_meet,
)


def fin(v):
    return ExtendedRational.finite(v)


def test_compose_conventions():
    assert r_compose(ZERO, fin(5)) == fin(5)
    assert r_compose(fin(-1), fin(1)) == ZERO
    assert r_compose(NEG_INF, POS_INF) == POS_INF  # bottom absorbs
    assert r_compose(POS_INF, NEG_INF) == POS_INF
    assert r_compose(NEG_INF, fin(3)) == NEG_INF
    assert r_compose(fin(Fraction(1, 2)), fin(Fraction(1, 3))) == fin(Fraction(5, 6))


def test_imp_conventions():
    assert r_imp(fin(7), fin(7)) == ZERO
    assert r_imp(fin(-1), ZERO) == fin(-1)
    assert r_imp(POS_INF, fin(2)) == POS_INF  # bottom target
    assert r_imp(fin(3), POS_INF) == NEG_INF
    assert r_imp(POS_INF, POS_INF) == NEG_INF
    assert r_imp(NEG_INF, NEG_INF) == NEG_INF
    assert r_imp(POS_INF, NEG_INF) == POS_INF
    assert r_imp(fin(1), NEG_INF) == POS_INF


def test_join_meet_are_numeric_extrema():
    vals = [fin(2), fin(-3), fin(0)]
    assert r_join(vals) == fin(-3)  # lattice join = numeric inf
    assert r_meet(vals) == fin(2)
    assert r_join([]) == POS_INF  # bottom
    assert r_meet([]) == NEG_INF  # top


def test_lattice_order_is_reversed():
    assert r_leq(fin(3), fin(1))
    assert not r_leq(fin(1), fin(3))
    assert r_leq(POS_INF, NEG_INF)  # bottom below top
    assert r_leq(fin(0), fin(0))


extended = st.one_of(
    st.just(POS_INF),
    st.just(NEG_INF),
    st.fractions(min_value=-100, max_value=100).map(ExtendedRational.finite),
)


@settings(max_examples=300, deadline=None)
@given(extended, extended, extended)
def test_galois_law(g, f, h):
    assert r_leq(r_compose(g, f), h) == r_leq(g, r_imp(h, f))
    # commutative, so the same residual serves both implications
    assert r_leq(r_compose(g, f), h) == r_leq(f, r_imp(h, g))


@settings(max_examples=200, deadline=None)
@given(extended, extended)
def test_unit_laws(a, b):
    assert r_compose(ZERO, a) == a
    assert r_compose(a, ZERO) == a
    assert r_compose(a, b) == r_compose(b, a)


def test_example2_default_samples():
    report = example2_verify()
    assert report.ok
    assert len(report.samples) == 7
    finite = [s for s in report.samples if s.t.is_finite]
    assert len(finite) == 6
    for s in finite:
        assert s.axioms_ok and s.y_row_ok and s.star_row_ok
        assert s.unit_lhs == ZERO and s.unit_rhs == ZERO and s.unit_ok


def test_example2_closed_forms_at_minus_five_halves():
    t = fin(Fraction(-5, 2))
    report = example2_verify([t])
    s = report.samples[0]
    assert s.y_row == {"x": fin(Fraction(5, 2)), "y": fin(Fraction(3, 2))}
    assert s.star_row == {"x": t, "y": fin(Fraction(-3, 2))}
    assert s.unit_ok


def test_example2_degenerate_edge():
    report = example2_verify([POS_INF])
    s = report.samples[0]
    assert s.axioms_ok  # absorption keeps the axioms
    assert s.y_row_ok and s.star_row_ok
    assert s.y_row == {"x": NEG_INF, "y": NEG_INF}
    assert s.star_row == {"x": POS_INF, "y": POS_INF}
    # the unit inequality degenerates: top on the left, bottom on the right
    assert s.unit_lhs == NEG_INF and s.unit_rhs == POS_INF
    assert not s.unit_ok
    assert s.ok  # rows and axioms carry the degenerate sample
    report2 = example2_verify([NEG_INF])
    assert report2.samples[0].y_row == {"x": POS_INF, "y": POS_INF}
    assert not report2.samples[0].unit_ok


def test_example2_rejects_wrong_rows():
    # a sanity check of the checker itself: a doctored sample comparison
    report = example2_verify([fin(1)])
    s = report.samples[0]
    assert s.y_row == {"x": fin(-1), "y": fin(-2)}
    assert s.star_row == {"x": fin(1), "y": fin(2)}


def test_no_floats_anywhere():
    report = example2_verify()
    for s in report.samples:
        for v in list(s.y_row.values()) + list(s.star_row.values()):
            assert v.tag != 0 or isinstance(v.value, Fraction)
