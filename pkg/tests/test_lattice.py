import pytest
from hypothesis import given, settings, strategies as st

from qcalc.errors import AntisymmetryViolation, NotALattice, UnknownElement
from qcalc.lattice import build_lattice, join, leq, meet, reverse

from bruteforce import o_join, o_leq, o_meet


def test_frame_f_build(F):
    assert F.top == "k"
    assert F.bottom == "bot"
    assert F.elements == ("bot", "p", "q", "k")


def test_one_point_lattice():
    L = build_lattice(["e"], [])
    assert L.top == L.bottom == "e"
    assert L.join([]) == "e"
    assert L.meet([]) == "e"


def test_not_a_lattice_witness():
    with pytest.raises(NotALattice) as err:
        build_lattice(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    assert err.value.pair in {("a", "b"), ("b", "a")}
    assert err.value.bounds == {"c", "d"}


def test_antisymmetry_violation():
    with pytest.raises(AntisymmetryViolation) as err:
        build_lattice(["a", "b"], [("a", "b"), ("b", "a")])
    assert set(err.value.witness) == {"a", "b"}


def test_undeclared_endpoint():
    with pytest.raises(UnknownElement):
        build_lattice(["a"], [("a", "z")])


def test_join_meet_examples(F):
    assert join(F, {"p", "q"}) == "k"
    assert join(F, set()) == "bot"
    assert join(F, {"p"}) == "p"
    assert meet(F, {"p", "q"}) == "bot"
    assert meet(F, set()) == "k"
    assert meet(F, {"k", "q"}) == "q"


def test_leq_examples(F):
    assert leq(F, "bot", "p")
    assert leq(F, "p", "p")
    assert not leq(F, "p", "q")


def test_unknown_element(F):
    with pytest.raises(UnknownElement):
        F.join(["zz"])
    with pytest.raises(UnknownElement):
        F.leq("p", "zz")


def test_join_meet_against_scan_oracle(F):
    for a in F.elements:
        for b in F.elements:
            assert F.join([a, b]) == o_join(F, [a, b])
            assert F.meet([a, b]) == o_meet(F, [a, b])


def test_transitive_closure_of_input():
    # only covers given; closure must yield bot <= top
    L = build_lattice(["0", "1", "2"], [("0", "1"), ("1", "2")])
    assert L.leq("0", "2")
    assert L.top == "2" and L.bottom == "0"


@st.composite
def small_lattices(draw):
    kind = draw(st.sampled_from(["chain", "frame", "diamondish"]))
    if kind == "chain":
        n = draw(st.integers(2, 6))
        els = [f"c{i}" for i in range(n)]
        return build_lattice(els, [(els[i], els[i + 1]) for i in range(n - 1)])
    if kind == "frame":
        return build_lattice(
            ["bot", "p", "q", "k"],
            [("bot", "p"), ("bot", "q"), ("p", "k"), ("q", "k")],
        )
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


@settings(max_examples=60, deadline=None)
@given(small_lattices(), st.data())
def test_join_is_least_upper_bound(L, data):
    a = data.draw(st.sampled_from(L.elements))
    b = data.draw(st.sampled_from(L.elements))
    j = L.join([a, b])
    ubs = [u for u in L.elements if L.leq(a, u) and L.leq(b, u)]
    assert j in ubs
    assert all(L.leq(j, u) for u in ubs)


@settings(max_examples=60, deadline=None)
@given(small_lattices(), st.data())
def test_absorption(L, data):
    a = data.draw(st.sampled_from(L.elements))
    b = data.draw(st.sampled_from(L.elements))
    assert L.meet([a, L.join([a, b])]) == a
    assert L.join([a, L.meet([a, b])]) == a


@settings(max_examples=40, deadline=None)
@given(small_lattices(), st.data())
def test_join_meet_duality(L, data):
    R = reverse(L)
    a = data.draw(st.sampled_from(L.elements))
    b = data.draw(st.sampled_from(L.elements))
    assert L.join([a, b]) == R.meet([a, b])
    assert L.meet([a, b]) == R.join([a, b])
    assert L.leq(a, b) == R.leq(b, a)
    assert R.top == L.bottom and R.bottom == L.top
