"""Completeness up to Morita equivalence and the associated algebra theory.

The central predicates:

  M-cocomplete   the cograph of the Yoneda embedding, PA -|> A, is a left
                 adjoint distributor;
  M-complete     the graph of the co-Yoneda embedding, A -|> P+A, is a
                 right adjoint distributor;
  M-tensored     every cograph (A(a,-))^nat: P|a| -|> A is a left adjoint;
  M-conically cocomplete
                 meets of left adjoint rows (A(a,-))^nat(f,-) stay left
                 adjoint, over all families of objects and weights.

Equivalence-style statements are always evaluated by computing both sides
independently and asserting agreement; a disagreement raises, since it
would falsify a theorem on a finite instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import NotLeftAdjoint, NotMCocomplete, QcalcError, guard_search
from .qcat import QCategory, QFunctor
from .qdist import (
    QDistributor,
    adjoint_pair,
    cograph,
    d_compose,
    d_is_left_adjoint,
    d_is_right_adjoint,
    d_leq,
    d_meet,
    d_star,
    graph,
    identity_dist,
    left_adjoint_candidate,
    top_dist,
    validate_distributor,
)
from .presheaf import (
    _functor_between,
    copresheaf_category,
    co_yoneda,
    dist_images,
    presheaf_category,
    yoneda,
)
from .quantaloid import Arrow
from .report import Report


@dataclass
class MoritaReport:
    subject: str
    property: str
    verdict: bool
    witness: object = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.verdict

    def __str__(self):
        out = f"{self.subject}: {self.property} = {self.verdict}"
        if self.witness is not None:
            out += f"\n  witness: {self.witness}"
        for n in self.notes:
            out += f"\n  note: {n}"
        return out


def is_m_cocomplete(A: QCategory) -> MoritaReport:
    key = "m_cocomplete"
    if key not in A._derived:
        phi = cograph(yoneda(A))
        verdict = d_is_left_adjoint(phi)
        A._derived[key] = MoritaReport(
            A.name, "m-cocomplete", verdict, witness=d_star(phi) if verdict else None
        )
    return A._derived[key]


def is_m_complete(A: QCategory) -> MoritaReport:
    key = "m_complete"
    if key not in A._derived:
        phi = graph(co_yoneda(A))
        verdict = d_is_right_adjoint(phi)
        A._derived[key] = MoritaReport(
            A.name, "m-complete", verdict, witness=left_adjoint_candidate(phi) if verdict else None
        )
    return A._derived[key]


def ub_lb(A: QCategory) -> tuple[QFunctor, QFunctor, Report]:
    """The adjunction ub -| lb between PA and P+A.

    ub(mu) = A <-/ mu and lb(lam) = lam \\-> A; the report also checks the
    evaluation identities (ub mu)(a) = (Y_A)^nat(mu,a) and (lb lam)(a) =
    (Y+_A)_nat(a,lam).
    """
    from .qcat import functors_adjoint
    from .qdist import d_left_imp, d_right_imp

    PA, PdA = presheaf_category(A), copresheaf_category(A)
    one = identity_dist(A)
    ub = _functor_between(f"ub_{A.name}", PA, PdA, lambda mu: d_left_imp(one, mu))
    lb = _functor_between(f"lb_{A.name}", PdA, PA, lambda lam: d_right_imp(lam, one))
    report = Report(f"ub -| lb over {A.name}")
    if not functors_adjoint(ub, lb):
        report.fail("ub is not left adjoint to lb")
    ynat = cograph(yoneda(A))
    ydnat = graph(co_yoneda(A))
    for n in PA.obj_names:
        im = PdA.member(ub(n))
        for a in A.obj_names:
            if im("*", a) != ynat(n, a):
                report.fail(f"(ub {n})({a}) = {im('*', a)} != Y^nat({n},{a}) = {ynat(n, a)}")
    for n in PdA.obj_names:
        im = PA.member(lb(n))
        for a in A.obj_names:
            if im(a, "*") != ydnat(a, n):
                report.fail(f"(lb {n})({a}) = {im(a, '*')} != Y+_nat({a},{n}) = {ydnat(a, n)}")
    return ub, lb, report


def _tensor_row(A: QCategory, a: str, f: Arrow) -> QDistributor:
    """(A(a,-))^nat(f,-): *_X -|> A with entries A(a,z) <-/ f."""
    from .presheaf import _singleton

    Q = A.base
    src = _singleton(A, f.tgt)
    matrix = {("*", z): Q.left_imp(A.arrow(a, z), f).value for z in A.obj_names}
    return QDistributor(src, A, matrix)


def _cotensor_row(A: QCategory, a: str, g: Arrow) -> QDistributor:
    """(A(-,a))_nat(-,g): A -|> *_X with entries g \\-> A(z,a)."""
    from .presheaf import _singleton

    Q = A.base
    tgt = _singleton(A, g.src)
    matrix = {(z, "*"): Q.right_imp(g, A.arrow(z, a)).value for z in A.obj_names}
    return QDistributor(A, tgt, matrix)


def is_m_tensored(A: QCategory) -> MoritaReport:
    """Every cograph (A(a,-))^nat: P|a| -|> A must be a left adjoint.

    Left-adjointness of a distributor is row-wise, so the check runs over
    the rows (A(a,-))^nat(f,-) for every weight f.
    """
    Q = A.base
    for a in A.obj_names:
        for X in Q.objects:
            for v in Q.hom[(A.type_of[a], X)].elements:
                row = _tensor_row(A, a, Arrow(A.type_of[a], X, v))
                if not d_is_left_adjoint(row):
                    return MoritaReport(
                        A.name, "m-tensored", False, witness=(a, v, X),
                        notes=[f"row (A({a},-))^nat({v},-) at type {X} is not a left adjoint"],
                    )
    return MoritaReport(A.name, "m-tensored", True)


def is_m_cotensored(A: QCategory) -> MoritaReport:
    Q = A.base
    for a in A.obj_names:
        for X in Q.objects:
            for v in Q.hom[(X, A.type_of[a])].elements:
                row = _cotensor_row(A, a, Arrow(X, A.type_of[a], v))
                if not d_is_right_adjoint(row):
                    return MoritaReport(
                        A.name, "m-cotensored", False, witness=(a, v, X),
                        notes=[f"column (A(-,{a}))_nat(-,{v}) at type {X} is not a right adjoint"],
                    )
    return MoritaReport(A.name, "m-cotensored", True)


def _meet_closure(rows: list[QDistributor], seed_top: QDistributor | None) -> list[QDistributor]:
    """All meets of nonempty subsets (plus the empty meet when seeded).

    Families are deduplicated by the induced matrix, so the closure is
    bounded by the matrix space rather than the family count.
    """
    seen = {}
    for r in rows:
        seen[tuple(sorted(r.matrix.items()))] = r
    if seed_top is not None:
        seen.setdefault(tuple(sorted(seed_top.matrix.items())), seed_top)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for r in frontier:
            for s in rows:
                m = d_meet([r, s])
                key = tuple(sorted(m.matrix.items()))
                if key not in seen:
                    seen[key] = m
                    nxt.append(m)
        frontier = nxt
    return list(seen.values())


def is_m_conically_cocomplete(A: QCategory, include_empty: bool = True) -> MoritaReport:
    """Meets of families of left adjoint rows stay left adjoint.

    ``include_empty`` reads "any subsets" inclusively: the empty family
    contributes the top distributor *_X -|> A.
    """
    from .presheaf import _singleton

    Q = A.base
    for X in Q.objects:
        rows = [
            _tensor_row(A, a, Arrow(A.type_of[a], X, v))
            for a in A.obj_names
            for v in Q.hom[(A.type_of[a], X)].elements
        ]
        adjoint_rows = [r for r in rows if d_is_left_adjoint(r)]
        top = top_dist(_singleton(A, X), A) if include_empty else None
        if not adjoint_rows and top is None:
            continue
        for m in _meet_closure(adjoint_rows, top):
            if not d_is_left_adjoint(m):
                return MoritaReport(
                    A.name, "m-conically-cocomplete", False, witness=m.matrix,
                    notes=[f"a meet of left adjoint rows at type {X} is not a left adjoint"],
                )
    report = MoritaReport(A.name, "m-conically-cocomplete", True)
    report.notes.append(f"empty family included: {include_empty}")
    return report


def is_m_conically_complete(A: QCategory, include_empty: bool = True) -> MoritaReport:
    from .presheaf import _singleton

    Q = A.base
    for X in Q.objects:
        rows = [
            _cotensor_row(A, a, Arrow(X, A.type_of[a], v))
            for a in A.obj_names
            for v in Q.hom[(X, A.type_of[a])].elements
        ]
        adjoint_rows = [r for r in rows if d_is_right_adjoint(r)]
        top = top_dist(A, _singleton(A, X)) if include_empty else None
        if not adjoint_rows and top is None:
            continue
        for m in _meet_closure(adjoint_rows, top):
            if not d_is_right_adjoint(m):
                return MoritaReport(
                    A.name, "m-conically-complete", False, witness=m.matrix,
                    notes=[f"a meet of right adjoint columns at type {X} is not a right adjoint"],
                )
    report = MoritaReport(A.name, "m-conically-complete", True)
    report.notes.append(f"empty family included: {include_empty}")
    return report


def _require_algebras(zeta: QDistributor, prop: str) -> None:
    if not d_is_left_adjoint(zeta):
        raise NotLeftAdjoint(f"{prop}: {zeta} is not a left adjoint")
    for side, cat in (("domain", zeta.dom), ("codomain", zeta.cod)):
        if not is_m_cocomplete(cat).verdict:
            raise NotMCocomplete(f"{prop}: {side} {cat.name} is not m-cocomplete")


def is_m_cocontinuous(zeta: QDistributor) -> MoritaReport:
    """A left adjoint between M-cocomplete categories that is also a right adjoint."""
    _require_algebras(zeta, "m-cocontinuous")
    return MoritaReport(
        f"{zeta.dom.name} -|> {zeta.cod.name}", "m-cocontinuous", d_is_right_adjoint(zeta)
    )


def is_m_continuous(zeta: QDistributor) -> MoritaReport:
    """A left adjoint whose canonical right adjoint is itself a left adjoint."""
    _require_algebras(zeta, "m-continuous")
    return MoritaReport(
        f"{zeta.dom.name} -|> {zeta.cod.name}", "m-continuous", d_is_left_adjoint(d_star(zeta))
    )


def is_phat_algebra_hom(zeta: QDistributor) -> MoritaReport:
    """Presheaf-monad algebra homomorphism, by two independent routes.

    Route 1 is the algebra square (Y_B)^nat o (zeta_fwd)_nat = zeta o
    (Y_A)^nat; route 2 is right-adjointness of zeta.  The routes must
    agree and the common value is the verdict.
    """
    _require_algebras(zeta, "phat-hom")
    A, B = zeta.dom, zeta.cod
    fwd = dist_images(zeta).fwd
    lhs = d_compose(cograph(yoneda(B)), graph(fwd))
    rhs = d_compose(zeta, cograph(yoneda(A)))
    square = lhs == rhs
    adjoint = d_is_right_adjoint(zeta)
    if square != adjoint:
        raise QcalcError(
            f"phat-hom routes disagree on {zeta}: square={square}, right-adjoint={adjoint}"
        )
    return MoritaReport(
        f"{A.name} -|> {B.name}", "phat-algebra-hom", square,
        notes=[f"algebra square: {square}", f"right adjoint: {adjoint}"],
    )


def _pdag_structure(A: QCategory) -> QDistributor:
    """The copresheaf-monad algebra structure P+A -|> A: the left adjoint
    of the graph of the co-Yoneda embedding."""
    return left_adjoint_candidate(graph(co_yoneda(A)))


def is_pdag_algebra_hom(zeta: QDistributor) -> MoritaReport:
    """Copresheaf-monad algebra homomorphism, by three independent routes:
    the algebra square, the closed implication formula for zeta o phi, and
    left-adjointness of zeta*."""
    if not d_is_left_adjoint(zeta):
        raise NotLeftAdjoint(f"pdag-hom: {zeta} is not a left adjoint")
    A, B = zeta.dom, zeta.cod
    for side, cat in (("domain", A), ("codomain", B)):
        if not is_m_complete(cat).verdict:
            raise NotMCocomplete(f"pdag-hom: {side} {cat.name} is not m-complete")
    phi_a = _pdag_structure(A)
    psi_b = _pdag_structure(B)
    cofwd = dist_images(zeta).cofwd
    square = d_compose(psi_b, graph(cofwd)) == d_compose(zeta, phi_a)

    zs = d_star(zeta)
    PdA = copresheaf_category(A)
    hom_rows = QDistributor(
        B,
        PdA,
        {
            (y, n): PdA.hom[(PdA.name_of(_row_of(zs, y)), n)]
            for y in B.obj_names
            for n in PdA.obj_names
        },
    )
    from .qdist import d_left_imp

    lemma = d_compose(zeta, phi_a) == d_left_imp(identity_dist(B), hom_rows)
    star_adjoint = d_is_left_adjoint(zs)
    if not (square == lemma == star_adjoint):
        raise QcalcError(
            f"pdag-hom routes disagree on {zeta}: square={square}, lemma={lemma}, "
            f"star-left-adjoint={star_adjoint}"
        )
    return MoritaReport(
        f"{A.name} -|> {B.name}", "pdag-algebra-hom", square,
        notes=[f"algebra square: {square}", f"implication formula: {lemma}",
               f"zeta* left adjoint: {star_adjoint}"],
    )


def _row_of(phi: QDistributor, y: str) -> QDistributor:
    """Row phi(y,-) of phi: B -|> A, as a copresheaf *_{|y|} -|> A."""
    from .presheaf import _singleton

    src = _singleton(phi.cod, phi.dom.type_of[y])
    return QDistributor(src, phi.cod, {("*", z): phi(y, z) for z in phi.cod.obj_names})


def _col_of(phi: QDistributor, y: str) -> QDistributor:
    """Column phi(-,y) of phi: A -|> B, as a presheaf A -|> *_{|y|}."""
    from .presheaf import _singleton

    tgt = _singleton(phi.dom, phi.cod.type_of[y])
    return QDistributor(phi.dom, tgt, {(x, "*"): phi(x, y) for x in phi.dom.obj_names})


def check_lemma_Th(zeta: QDistributor) -> Report:
    """The two evaluation identities that characterize the adjointness of a
    left adjoint zeta and of its right adjoint zeta*.

    (zeta o (Y_A)^nat)(mu,y) = PA(mu, zeta(-,y))  iff  zeta is a right adjoint;
    ((Y+_A)_nat o zeta*)(y,lam) = P+A(zeta*(y,-), lam)  iff  zeta* is a left adjoint.
    """
    if not d_is_left_adjoint(zeta):
        raise NotLeftAdjoint(f"{zeta} is not a left adjoint")
    A, B = zeta.dom, zeta.cod
    report = Report(f"evaluation identities for {A.name} -|> {B.name}")
    PA = presheaf_category(A)
    lhs1 = d_compose(zeta, cograph(yoneda(A)))
    rhs1 = QDistributor(
        PA,
        B,
        {
            (n, y): PA.hom[(n, PA.name_of(_col_of(zeta, y)))]
            for n in PA.obj_names
            for y in B.obj_names
        },
    )
    eq1 = lhs1 == rhs1
    ra = d_is_right_adjoint(zeta)
    if eq1 != ra:
        report.fail(f"first identity ({eq1}) disagrees with right-adjointness ({ra})")
    report.note(f"first identity: {eq1}; zeta right adjoint: {ra}")

    zs = d_star(zeta)
    PdA = copresheaf_category(A)
    lhs2 = d_compose(graph(co_yoneda(A)), zs)
    rhs2 = QDistributor(
        B,
        PdA,
        {
            (y, n): PdA.hom[(PdA.name_of(_row_of(zs, y)), n)]
            for y in B.obj_names
            for n in PdA.obj_names
        },
    )
    eq2 = lhs2 == rhs2
    la = d_is_left_adjoint(zs)
    if eq2 != la:
        report.fail(f"second identity ({eq2}) disagrees with left-adjointness of zeta* ({la})")
    report.note(f"second identity: {eq2}; zeta* left adjoint: {la}")
    return report


def free_extension(
    zeta: QDistributor, uniqueness: bool = False, cap: int | None = None
) -> tuple[QDistributor, MoritaReport]:
    """The canonical factorization of zeta: A -|> B through PA.

    eta = (Y_B)^nat o (zeta_fwd)_nat satisfies eta o (Y_A)_nat = zeta, is
    a left adjoint, and is m-cocontinuous.  With ``uniqueness=True`` every
    matrix PA -|> B is enumerated (cap-guarded) and exactly one
    m-cocontinuous left adjoint factoring zeta must exist.
    """
    if not d_is_left_adjoint(zeta):
        raise NotLeftAdjoint(f"{zeta} is not a left adjoint")
    A, B = zeta.dom, zeta.cod
    if not is_m_cocomplete(B).verdict:
        raise NotMCocomplete(f"free extension needs an m-cocomplete codomain; {B.name} is not")
    fwd = dist_images(zeta).fwd
    eta = d_compose(cograph(yoneda(B)), graph(fwd))
    PA = presheaf_category(A)

    notes = []
    factors = d_compose(eta, graph(yoneda(A))) == zeta
    notes.append(f"factorization eta o (Y_A)_nat = zeta: {factors}")
    left = d_is_left_adjoint(eta)
    notes.append(f"eta left adjoint: {left}")
    pa_cocomplete = is_m_cocomplete(PA).verdict
    cocont = pa_cocomplete and d_is_right_adjoint(eta)
    notes.append(f"eta m-cocontinuous: {cocont} (PA m-cocomplete: {pa_cocomplete})")
    verdict = factors and left and cocont

    if uniqueness:
        Q = A.base
        cells = [(n, y) for n in PA.obj_names for y in B.obj_names]
        lattices = [Q.hom[(PA.type_of[n], B.type_of[y])] for (n, y) in cells]
        total = 1
        for L in lattices:
            total *= len(L.elements)
        guard_search(total, "free-extension uniqueness sweep", cap)
        hits = []
        for values in product(*(L.elements for L in lattices)):
            cand = QDistributor(PA, B, dict(zip(cells, values)))
            if not validate_distributor(cand).ok:
                continue
            if d_compose(cand, graph(yoneda(A))) != zeta:
                continue
            if not (d_is_left_adjoint(cand) and d_is_right_adjoint(cand)):
                continue
            hits.append(cand)
        unique = len(hits) == 1 and hits[0] == eta
        notes.append(f"uniqueness sweep: {len(hits)} candidate(s), matches eta: {unique}")
        verdict = verdict and unique

    return eta, MoritaReport(
        f"{A.name} -|> {B.name}", "free-extension", verdict, notes=notes
    )
