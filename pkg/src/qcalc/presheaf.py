"""Enumerated presheaf and copresheaf categories with Yoneda machinery.

A presheaf on A of type X is a distributor A -|> *_X; a copresheaf is a
distributor *_X -|> A.  Both categories are enumerated exhaustively in a
canonical order (one block per base object, object-major lexicographic in
lattice-element order) behind the global candidate cap, and carry
back-references to their members.

Homs:  PA(mu,mu') = mu' <-/ mu        P+A(lam,lam') = lam' \\-> lam
Yoneda: Y(a) = A(-,a)                 Y+(a) = A(a,-)
Sups:  sup_PA(Phi) = Phi o Y_nat      inf_P+A(Psi) = Y+^nat o Psi
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .errors import NotLeftAdjoint, QcalcError, guard_search
from .qcat import QCategory, QFunctor, functors_adjoint
from .qdist import (
    QDistributor,
    cograph,
    d_compose,
    d_is_left_adjoint,
    d_leq,
    d_star,
    graph,
)
from .quantaloid import Arrow
from .report import Report


class PresheafCategory(QCategory):
    def __init__(self, name, base, objects, hom, base_category, side, members):
        super().__init__(name, base, objects, hom)
        self.base_category = base_category
        self.side = side
        self.members = tuple(members)
        self._by_name = dict(zip(self.obj_names, self.members))
        axis = base_category.obj_names
        if side == "presheaf":
            self._by_matrix = {
                (self.type_of[n], tuple(m(a, "*") for a in axis)): n
                for n, m in zip(self.obj_names, self.members)
            }
        else:
            self._by_matrix = {
                (self.type_of[n], tuple(m("*", a) for a in axis)): n
                for n, m in zip(self.obj_names, self.members)
            }

    def member(self, name) -> QDistributor:
        return self._by_name[name]

    def name_of(self, dist: QDistributor) -> str:
        """Member name of a (co)presheaf given as a distributor."""
        axis = self.base_category.obj_names
        if self.side == "presheaf":
            key = (dist.cod.type_of["*"], tuple(dist(a, "*") for a in axis))
        else:
            key = (dist.dom.type_of["*"], tuple(dist("*", a) for a in axis))
        got = self._by_matrix.get(key)
        if got is None:
            raise QcalcError(f"distributor is not a member of {self.name}")
        return got


def _singleton(A_or_Q, X) -> QCategory:
    from .fixtures import star_cat

    base = A_or_Q.base if isinstance(A_or_Q, QCategory) else A_or_Q
    cache = getattr(A_or_Q, "_derived", None)
    if cache is None:
        return star_cat(base, X)
    key = ("star", X)
    if key not in cache:
        cache[key] = star_cat(base, X)
    return cache[key]


def _enumerate_side(A: QCategory, X: str, side: str, cap=None) -> list[QDistributor]:
    Q = A.base
    target = _singleton(A, X)
    names = A.obj_names
    lattices = [Q.hom[(A.type_of[a], X)] if side == "presheaf" else Q.hom[(X, A.type_of[a])] for a in names]
    total = 1
    for L in lattices:
        total *= len(L.elements)
    guard_search(total, f"{side} enumeration over {A.name} at type {X}", cap)

    n = len(names)
    out: list[QDistributor] = []
    assigned: list[str] = []

    def ok_new(v: str, k: int) -> bool:
        # only constraints among positions <= k need rechecking
        if side == "presheaf":
            # mu(j) o A(i,j) <= mu(i)
            ak = Arrow(A.type_of[names[k]], X, v)
            for i in range(k):
                ai = Arrow(A.type_of[names[i]], X, assigned[i])
                if not Q.leq(Q.compose(ak, A.arrow(names[i], names[k])), ai):
                    return False
                if not Q.leq(Q.compose(ai, A.arrow(names[k], names[i])), ak):
                    return False
            return Q.leq(Q.compose(ak, A.arrow(names[k], names[k])), ak)
        else:
            # A(j,i) o lam(j) <= lam(i)
            ak = Arrow(X, A.type_of[names[k]], v)
            for i in range(k):
                ai = Arrow(X, A.type_of[names[i]], assigned[i])
                if not Q.leq(Q.compose(A.arrow(names[k], names[i]), ak), ai):
                    return False
                if not Q.leq(Q.compose(A.arrow(names[i], names[k]), ai), ak):
                    return False
            return Q.leq(Q.compose(A.arrow(names[k], names[k]), ak), ak)

    def rec(k: int) -> None:
        if k == n:
            if side == "presheaf":
                matrix = {(names[i], "*"): assigned[i] for i in range(n)}
                out.append(QDistributor(A, target, matrix))
            else:
                matrix = {("*", names[i]): assigned[i] for i in range(n)}
                out.append(QDistributor(target, A, matrix))
            return
        for v in lattices[k].elements:
            if ok_new(v, k):
                assigned.append(v)
                rec(k + 1)
                assigned.pop()

    rec(0)
    return out


def enumerate_presheaves(A: QCategory, X: str, cap=None) -> list[QDistributor]:
    """All valid mu: A -|> *_X in object-major lexicographic order."""
    return _enumerate_side(A, X, "presheaf", cap)


def enumerate_copresheaves(A: QCategory, X: str, cap=None) -> list[QDistributor]:
    """All valid lam: *_X -|> A in object-major lexicographic order."""
    return _enumerate_side(A, X, "copresheaf", cap)


def presheaf_category(A: QCategory, cap=None) -> PresheafCategory:
    if "PA" in A._derived:
        return A._derived["PA"]
    Q = A.base
    members, objects = [], []
    for X in Q.objects:
        block = enumerate_presheaves(A, X, cap)
        start = len(members)
        members.extend(block)
        objects.extend((f"mu{start + i}", X) for i in range(len(block)))
    hom = {}
    names = [n for n, _ in objects]
    for i, mi in enumerate(members):
        for j, mj in enumerate(members):
            # PA(mu_i, mu_j) = mu_j <-/ mu_i, a single arrow |mu_i| -> |mu_j|
            L = Q.hom[(objects[i][1], objects[j][1])]
            hom[(names[i], names[j])] = L.meet(
                Q.left_imp(mj.arrow(a, "*"), mi.arrow(a, "*")).value for a in A.obj_names
            )
    PA = PresheafCategory(f"P({A.name})", Q, objects, hom, A, "presheaf", members)
    A._derived["PA"] = PA
    return PA


def copresheaf_category(A: QCategory, cap=None) -> PresheafCategory:
    if "PdA" in A._derived:
        return A._derived["PdA"]
    Q = A.base
    members, objects = [], []
    for X in Q.objects:
        block = enumerate_copresheaves(A, X, cap)
        start = len(members)
        members.extend(block)
        objects.extend((f"lam{start + i}", X) for i in range(len(block)))
    hom = {}
    names = [n for n, _ in objects]
    for i, li in enumerate(members):
        for j, lj in enumerate(members):
            # P+A(lam_i, lam_j) = lam_j \-> lam_i
            L = Q.hom[(objects[i][1], objects[j][1])]
            hom[(names[i], names[j])] = L.meet(
                Q.right_imp(lj.arrow("*", a), li.arrow("*", a)).value for a in A.obj_names
            )
    PdA = PresheafCategory(f"P+({A.name})", Q, objects, hom, A, "copresheaf", members)
    A._derived["PdA"] = PdA
    return PdA


def yoneda(A: QCategory) -> QFunctor:
    """a |-> A(-,a) into the presheaf category."""
    if "yoneda" in A._derived:
        return A._derived["yoneda"]
    PA = presheaf_category(A)
    mapping = {}
    for a in A.obj_names:
        key = (A.type_of[a], tuple(A.hom[(z, a)] for z in A.obj_names))
        mapping[a] = PA._by_matrix[key]
    F = QFunctor(f"Y_{A.name}", A, PA, mapping)
    A._derived["yoneda"] = F
    return F


def co_yoneda(A: QCategory) -> QFunctor:
    """a |-> A(a,-) into the copresheaf category."""
    if "co_yoneda" in A._derived:
        return A._derived["co_yoneda"]
    PdA = copresheaf_category(A)
    mapping = {}
    for a in A.obj_names:
        key = (A.type_of[a], tuple(A.hom[(a, z)] for z in A.obj_names))
        mapping[a] = PdA._by_matrix[key]
    F = QFunctor(f"Y+_{A.name}", A, PdA, mapping)
    A._derived["co_yoneda"] = F
    return F


def check_yoneda_lemma(A: QCategory) -> Report:
    """PA(Y(a), mu) = mu(a) and P+A(lam, Y+(a)) = lam(a), all instances."""
    report = Report(f"Yoneda lemma on {A.name}")
    PA, PdA = presheaf_category(A), copresheaf_category(A)
    Y, Yd = yoneda(A), co_yoneda(A)
    for a in A.obj_names:
        for n in PA.obj_names:
            lhs = PA.hom[(Y(a), n)]
            rhs = PA.member(n)(a, "*")
            if lhs != rhs:
                report.fail(f"PA(Y({a}),{n}) = {lhs} != {n}({a}) = {rhs}")
        for n in PdA.obj_names:
            lhs = PdA.hom[(n, Yd(a))]
            rhs = PdA.member(n)("*", a)
            if lhs != rhs:
                report.fail(f"P+A({n},Y+({a})) = {lhs} != {n}({a}) = {rhs}")
    return report


def sup_in_PA(A: QCategory, Phi: QDistributor) -> QDistributor:
    """sup of a presheaf Phi on PA: Phi o (Y_A)_nat, a presheaf on A."""
    return d_compose(Phi, graph(yoneda(A)))


def inf_in_PdA(A: QCategory, Psi: QDistributor) -> QDistributor:
    """inf of a copresheaf Psi on P+A: (Y+_A)^nat o Psi, a copresheaf on A."""
    return d_compose(cograph(co_yoneda(A)), Psi)


def _sup_row(A: QCategory, mu: QDistributor) -> dict[str, str]:
    """The row PA(mu, Y(-)) = (A <-/ mu)(-), evaluated at every object."""
    Q = A.base
    return {
        b: Q.hom[(mu.cod.type_of["*"], A.type_of[b])].meet(
            Q.left_imp(A.arrow(x, b), mu.arrow(x, "*")).value for x in A.obj_names
        )
        for b in A.obj_names
    }


def find_sup_functor(A: QCategory) -> QFunctor | None:
    """Least-index solutions of A(sup(mu),-) = PA(mu,Y(-)); None when some
    presheaf has no solution.  A found functor is checked to be left
    adjoint to the Yoneda embedding."""
    PA = presheaf_category(A)
    mapping = {}
    for n in PA.obj_names:
        row = _sup_row(A, PA.member(n))
        want_type = PA.type_of[n]
        cand = None
        for a in A.obj_names:
            if A.type_of[a] == want_type and all(A.hom[(a, b)] == row[b] for b in A.obj_names):
                cand = a
                break
        if cand is None:
            return None
        mapping[n] = cand
    F = QFunctor(f"sup_{A.name}", PA, A, mapping)
    if not functors_adjoint(F, yoneda(A)):
        raise QcalcError(f"sup candidate for {A.name} is not left adjoint to Yoneda")
    return F


def find_inf_functor(A: QCategory) -> QFunctor | None:
    """Dual: least-index solutions of A(-,inf(lam)) = (lam \\-> A)(-)."""
    PdA = copresheaf_category(A)
    Q = A.base
    mapping = {}
    for n in PdA.obj_names:
        lam = PdA.member(n)
        row = {
            b: Q.hom[(A.type_of[b], lam.dom.type_of["*"])].meet(
                Q.right_imp(lam.arrow("*", z), A.arrow(b, z)).value for z in A.obj_names
            )
            for b in A.obj_names
        }
        want_type = PdA.type_of[n]
        cand = None
        for a in A.obj_names:
            if A.type_of[a] == want_type and all(A.hom[(b, a)] == row[b] for b in A.obj_names):
                cand = a
                break
        if cand is None:
            return None
        mapping[n] = cand
    F = QFunctor(f"inf_{A.name}", PdA, A, mapping)
    if not functors_adjoint(co_yoneda(A), F):
        raise QcalcError(f"inf candidate for {A.name} is not right adjoint to co-Yoneda")
    return F


def is_cocomplete(A: QCategory) -> bool:
    return find_sup_functor(A) is not None


def is_complete(A: QCategory) -> bool:
    return find_inf_functor(A) is not None


def tensor(A: QCategory, f: Arrow, a: str) -> str | None:
    """f(x)a: the object of type f.tgt with A(f(x)a, -) = A(a,-) <-/ f."""
    Q = A.base
    if f.src != A.type_of[a]:
        raise QcalcError(f"tensor weight must start at |{a}| = {A.type_of[a]}")
    row = {b: Q.left_imp(A.arrow(a, b), f).value for b in A.obj_names}
    for c in A.obj_names:
        if A.type_of[c] == f.tgt and all(A.hom[(c, b)] == row[b] for b in A.obj_names):
            return c
    return None


def cotensor(A: QCategory, g: Arrow, a: str) -> str | None:
    """g |> a: the object of type g.src with A(-, g |> a) = g \\-> A(-,a)."""
    Q = A.base
    if g.tgt != A.type_of[a]:
        raise QcalcError(f"cotensor weight must end at |{a}| = {A.type_of[a]}")
    row = {b: Q.right_imp(g, A.arrow(b, a)).value for b in A.obj_names}
    for c in A.obj_names:
        if A.type_of[c] == g.src and all(A.hom[(b, c)] == row[b] for b in A.obj_names):
            return c
    return None


def is_tensored(A: QCategory) -> bool:
    Q = A.base
    return all(
        tensor(A, Arrow(A.type_of[a], X, v), a) is not None
        for a in A.obj_names
        for X in Q.objects
        for v in Q.hom[(A.type_of[a], X)].elements
    )


def is_cotensored(A: QCategory) -> bool:
    Q = A.base
    return all(
        cotensor(A, Arrow(X, A.type_of[a], v), a) is not None
        for a in A.obj_names
        for X in Q.objects
        for v in Q.hom[(X, A.type_of[a])].elements
    )


class ImageFunctors(NamedTuple):
    fwd: QFunctor        # PA -> PB, mu |-> mu o (cograph / star)
    back: QFunctor       # PB -> PA, lam |-> lam o (graph / zeta)
    coback: QFunctor     # P+B -> P+A
    cofwd: QFunctor      # P+A -> P+B


def _functor_between(name, src_cat, tgt_cat, image) -> QFunctor:
    mapping = {n: tgt_cat.name_of(image(src_cat.member(n))) for n in src_cat.obj_names}
    return QFunctor(name, src_cat, tgt_cat, mapping)


def functor_images(F: QFunctor) -> ImageFunctors:
    """The four (co)presheaf image functors of a functor F: A -> B."""
    A, B = F.dom, F.cod
    PA, PB = presheaf_category(A), presheaf_category(B)
    PdA, PdB = copresheaf_category(A), copresheaf_category(B)
    gF, cgF = graph(F), cograph(F)
    return ImageFunctors(
        fwd=_functor_between(f"{F.name}_fwd", PA, PB, lambda mu: d_compose(mu, cgF)),
        back=_functor_between(f"{F.name}_back", PB, PA, lambda lam: d_compose(lam, gF)),
        coback=_functor_between(f"{F.name}_coback", PdB, PdA, lambda lam: d_compose(cgF, lam)),
        cofwd=_functor_between(f"{F.name}_cofwd", PdA, PdB, lambda mu: d_compose(gF, mu)),
    )


def dist_images(zeta: QDistributor) -> ImageFunctors:
    """The image functors of a left adjoint distributor zeta: A -|> B."""
    if not d_is_left_adjoint(zeta):
        raise NotLeftAdjoint(f"{zeta} is not a left adjoint")
    A, B = zeta.dom, zeta.cod
    PA, PB = presheaf_category(A), presheaf_category(B)
    PdA, PdB = copresheaf_category(A), copresheaf_category(B)
    zs = d_star(zeta)
    return ImageFunctors(
        fwd=_functor_between("zeta_fwd", PA, PB, lambda mu: d_compose(mu, zs)),
        back=_functor_between("zeta_back", PB, PA, lambda lam: d_compose(lam, zeta)),
        coback=_functor_between("zeta_coback", PdB, PdA, lambda lam: d_compose(zs, lam)),
        cofwd=_functor_between("zeta_cofwd", PdA, PdB, lambda mu: d_compose(zeta, mu)),
    )


class MonadComponents(NamedTuple):
    iota: QDistributor    # A -|> PA, graph of Yoneda
    m: QDistributor       # PPA -|> PA, graph of sup_PA
    s: QFunctor           # PPA -> PA
    iota_dag: QDistributor  # A -|> P+A, graph of co-Yoneda
    m_dag: QDistributor     # P+P+A -|> P+A, graph of inf_P+A
    s_dag: QFunctor         # P+P+A -> P+A


def sup_functor_of_presheaves(A: QCategory) -> QFunctor:
    """sup_PA: PPA -> PA by the closed formula Phi |-> Phi o (Y_A)_nat."""
    PA = presheaf_category(A)
    PPA = presheaf_category(PA)
    return _functor_between(f"sup_P({A.name})", PPA, PA, lambda Phi: sup_in_PA(A, Phi))


def inf_functor_of_copresheaves(A: QCategory) -> QFunctor:
    """inf_P+A: P+P+A -> P+A by the closed formula Psi |-> (Y+_A)^nat o Psi."""
    PdA = copresheaf_category(A)
    PdPdA = copresheaf_category(PdA)
    return _functor_between(f"inf_P+({A.name})", PdPdA, PdA, lambda Psi: inf_in_PdA(A, Psi))


def monad_components(A: QCategory) -> MonadComponents:
    s = sup_functor_of_presheaves(A)
    s_dag = inf_functor_of_copresheaves(A)
    return MonadComponents(
        iota=graph(yoneda(A)),
        m=graph(s),
        s=s,
        iota_dag=graph(co_yoneda(A)),
        m_dag=graph(s_dag),
        s_dag=s_dag,
    )


def kz_check(A: QCategory) -> Report:
    """The lax-idempotency adjunctions of both monads on A.

    Verifies sup_PA -| Y_PA at the functor level, the corresponding
    distributor-level adjunction iota_PA -| m_A (and dually m+_A -|
    iota+_P+A), and that the two levels agree as the graph/cograph
    correspondence demands.
    """
    from .qdist import adjoint_pair

    report = Report(f"KZ structure over {A.name}")
    comp = monad_components(A)
    PA = presheaf_category(A)
    PdA = copresheaf_category(A)

    f_adj = functors_adjoint(comp.s, yoneda(PA))
    if not f_adj:
        report.fail("sup_PA is not left adjoint to the Yoneda embedding of PA")
    d_adj = adjoint_pair(graph(yoneda(PA)), comp.m)
    if not d_adj:
        report.fail("iota_PA -| m_A fails at the distributor level")
    if f_adj != d_adj:
        report.fail("functor-level and distributor-level adjunctions disagree")

    fd_adj = functors_adjoint(co_yoneda(PdA), comp.s_dag)
    if not fd_adj:
        report.fail("inf_P+A is not right adjoint to the co-Yoneda embedding of P+A")
    dd_adj = adjoint_pair(comp.m_dag, graph(co_yoneda(PdA)))
    if not dd_adj:
        report.fail("m+_A -| iota+_P+A fails at the distributor level")
    if fd_adj != dd_adj:
        report.fail("dual functor-level and distributor-level adjunctions disagree")
    return report
