import pytest

from qcalc.errors import Mismatch, SearchSpaceExceeded
from qcalc.fixtures import star_cat
from qcalc.laws import all_functors, enumerate_distributors
from qcalc.presheaf import yoneda
from qcalc.qcat import QFunctor, functors_adjoint, identity_functor, opposite_category
from qcalc.qdist import (
    QDistributor,
    adjoint_pair,
    cograph,
    d_compose,
    d_is_left_adjoint,
    d_is_right_adjoint,
    d_join,
    d_left_imp,
    d_leq,
    d_meet,
    d_op,
    d_right_imp,
    d_star,
    graph,
    identity_dist,
    left_adjoint_candidate,
    search_right_adjoints,
    validate_distributor,
)

from bruteforce import o_d_compose, o_is_distributor, o_search_adjoints


def mu(X, pt, vx, vy):
    return QDistributor(X, pt, {("x", "*"): vx, ("y", "*"): vy})


def lam(X, pt, vx, vy):
    return QDistributor(pt, X, {("*", "x"): vx, ("*", "y"): vy})


def test_identity_is_distributor(X):
    assert validate_distributor(identity_dist(X)).ok


def test_presheaf_validation(X, pt):
    assert validate_distributor(mu(X, pt, "p", "q")).ok
    report = validate_distributor(mu(X, pt, "bot", "p"))
    assert not report.ok
    assert any("action fails" in e for e in report.entries)


def test_identity_laws(X, pt):
    for m in (mu(X, pt, "p", "q"), mu(X, pt, "k", "k"), identity_dist(X)):
        assert d_compose(m, identity_dist(X)) == m
    assert d_compose(identity_dist(X), lam(X, pt, "q", "p")) == lam(X, pt, "q", "p")


def test_compose_two_term_join(X, pt):
    m = mu(X, pt, "k", "k")
    l = lam(X, pt, "q", "p")
    assert d_compose(m, l)(("*"), ("*")) == "k"
    back = d_compose(l, m)
    assert d_leq(back, identity_dist(X))
    for x in X.obj_names:
        for y in X.obj_names:
            assert back(x, y) == X.base.hom[("*", "*")].meet2(l("*", y), m(x, "*"))


def test_compose_against_oracle(X, pt):
    m = mu(X, pt, "p", "k")
    l = lam(X, pt, "k", "p")
    assert d_compose(l, m).matrix == o_d_compose(l, m)
    assert d_compose(m, l).matrix == o_d_compose(m, l)


def test_compose_mismatch(X, pt):
    with pytest.raises(Mismatch):
        d_compose(mu(X, pt, "p", "q"), mu(X, pt, "p", "q"))


def test_left_imp_examples(X, pt):
    ident = identity_dist(X)
    m = mu(X, pt, "k", "k")
    row = d_left_imp(ident, m)
    assert row.matrix == {("*", "x"): "q", ("*", "y"): "p"}
    eta = mu(X, pt, "p", "q")
    assert d_left_imp(eta, identity_dist(X)) == eta
    assert d_right_imp(identity_dist(pt), eta) == eta


def test_d_leq(X, pt):
    assert d_leq(mu(X, pt, "p", "q"), mu(X, pt, "p", "q"))
    assert d_leq(mu(X, pt, "bot", "bot"), mu(X, pt, "k", "k"))
    assert not d_leq(mu(X, pt, "p", "q"), mu(X, pt, "p", "bot"))


def test_graph_cograph(X, pt):
    assert graph(identity_functor(X)) == identity_dist(X)
    Fx = QFunctor("px", pt, X, {"*": "x"})
    assert graph(Fx).matrix == {("*", "x"): "k", ("*", "y"): "p"}
    assert cograph(Fx).matrix == {("x", "*"): "k", ("y", "*"): "q"}
    for F in all_functors(X, X):
        assert adjoint_pair(graph(F), cograph(F))


def test_d_star_examples(X):
    ident = identity_dist(X)
    assert d_star(ident) == ident
    ynat = cograph(yoneda(X))
    ds = d_star(ynat)
    assert ds(("x"), "mu8") == "k" and ds("y", "mu8") == "k"
    assert ds("x", "mu3") == "p" and ds("y", "mu3") == "k"


def test_d_star_of_graph_is_cograph(X, pt):
    for A, B in ((X, X), (X, pt), (pt, X), (pt, pt)):
        for F in all_functors(A, B):
            assert d_star(graph(F)) == cograph(F)


def test_adjoint_predicates(X, pt):
    assert d_is_left_adjoint(identity_dist(X))
    assert d_is_right_adjoint(identity_dist(X))
    assert d_is_left_adjoint(cograph(yoneda(X)))
    assert not d_is_left_adjoint(mu(X, pt, "bot", "bot"))
    assert not d_is_right_adjoint(mu(X, pt, "p", "p"))
    assert d_is_right_adjoint(mu(X, pt, "p", "q"))


def test_adjoint_pair_examples(X, pt):
    ident = identity_dist(X)
    assert adjoint_pair(ident, ident)
    m = mu(X, pt, "p", "q")
    assert adjoint_pair(left_adjoint_candidate(m), m)
    assert not adjoint_pair(m, d_star(m))


def test_left_adjoint_agrees_with_exhaustive_search(X, pt):
    for vals in (("p", "q"), ("k", "k"), ("bot", "bot"), ("p", "k"), ("q", "q")):
        m = mu(X, pt, *vals)
        found = search_right_adjoints(m)
        assert d_is_left_adjoint(m) == bool(found)
        found_oracle = o_search_adjoints(m, right=True)
        assert len(found) == len(found_oracle)
    big = identity_dist(X)
    assert d_is_left_adjoint(big) == bool(search_right_adjoints(big))


def test_right_adjoint_agrees_with_exhaustive_search(X, pt):
    for vals in (("p", "q"), ("k", "k"), ("bot", "bot"), ("p", "p"), ("k", "q")):
        m = mu(X, pt, *vals)
        assert d_is_right_adjoint(m) == bool(o_search_adjoints(m, right=False))


def test_search_cap(X):
    PX_sized = identity_dist(X)
    with pytest.raises(SearchSpaceExceeded):
        search_right_adjoints(PX_sized, cap=3)


def test_d_op(X, pt):
    m = mu(X, pt, "p", "q")
    op = d_op(m)
    assert op.matrix == {("*", "x"): "p", ("*", "y"): "q"}
    opop = d_op(op, dom_op=X, cod_op=pt)
    assert opop.matrix == m.matrix
    ident_op = d_op(identity_dist(X))
    assert ident_op.matrix == identity_dist(opposite_category(X)).matrix


def test_d_op_reverses_composition(X, pt):
    base_op = X.base.opposite()
    Xop = opposite_category(X, base_op)
    ptop = opposite_category(pt, base_op)
    m = mu(X, pt, "p", "k")
    l = lam(X, pt, "k", "p")
    mop = d_op(m, dom_op=Xop, cod_op=ptop)
    lop = d_op(l, dom_op=ptop, cod_op=Xop)
    assert d_op(d_compose(m, l), dom_op=ptop, cod_op=ptop) == d_compose(lop, mop)
    assert d_op(d_compose(l, m), dom_op=Xop, cod_op=Xop) == d_compose(mop, lop)


def test_qdist_quantaloid_laws(X, pt):
    """Associativity, identities and join preservation of composition over
    an exhaustively enumerated pool."""
    pool_xp = enumerate_distributors(X, pt)
    pool_px = enumerate_distributors(pt, X)
    pool_pp = enumerate_distributors(pt, pt)
    for a in pool_xp:
        for b in pool_pp:
            for c in pool_pp:
                assert d_compose(c, d_compose(b, a)) == d_compose(d_compose(c, b), a)
    for a in pool_xp[:6]:
        for b in pool_px[:6]:
            for c in pool_xp[:6]:
                assert d_compose(c, d_compose(b, a)) == d_compose(d_compose(c, b), a)
    for a in pool_xp:
        for b1 in pool_pp:
            for b2 in pool_pp:
                j = d_join([b1, b2])
                assert d_compose(j, a) == d_join([d_compose(b1, a), d_compose(b2, a)])
    # join preservation in the second variable
    for b in pool_pp:
        for a1 in pool_xp:
            for a2 in pool_xp:
                j = d_join([a1, a2])
                assert d_compose(b, j) == d_join([d_compose(b, a1), d_compose(b, a2)])


def test_residuation_galois_distributor_level(X, pt):
    pool_xp = enumerate_distributors(X, pt)
    pool_pp = enumerate_distributors(pt, pt)
    for phi in pool_xp:
        for psi in pool_pp:
            for eta in pool_xp:
                c1 = d_leq(d_compose(psi, phi), eta)
                c2 = d_leq(psi, d_left_imp(eta, phi))
                c3 = d_leq(phi, d_right_imp(psi, eta))
                assert c1 == c2 == c3


def test_ad_f_d_four_way(X, pt):
    for A, B in ((X, X), (X, pt), (pt, X), (pt, pt)):
        for F in all_functors(A, B):
            for G in all_functors(B, A):
                c1 = functors_adjoint(F, G)
                c2 = graph(F) == cograph(G)
                c3 = adjoint_pair(cograph(G), cograph(F))
                c4 = adjoint_pair(graph(G), graph(F))
                assert c1 == c2 == c3 == c4


def test_counit_always_holds_with_canonical_witness(X, pt):
    for m_vals in (("p", "q"), ("k", "k"), ("bot", "bot"), ("q", "q")):
        m = mu(X, pt, *m_vals)
        assert d_leq(d_compose(m, d_star(m)), identity_dist(pt))
        assert d_leq(d_compose(left_adjoint_candidate(m), m), identity_dist(X))


def test_validation_against_oracle(X, pt):
    els = X.base.hom[("*", "*")].elements
    for vx in els:
        for vy in els:
            d = mu(X, pt, vx, vy)
            assert validate_distributor(d).ok == o_is_distributor(X, pt, d.matrix)
