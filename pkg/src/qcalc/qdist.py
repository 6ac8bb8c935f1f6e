"""The quantaloid of distributors between categories over a fixed base.

A distributor phi: A -|> B is a matrix of base arrows phi(x,y) in
hom(|x|,|y|) compatible with both category actions.  Composition is
join-of-composites, implications are pointwise meets of residuals:

    (psi o phi)(x,z)   = \\/_y  psi(y,z) o phi(x,y)
    (eta <-/ phi)(y,z) = /\\_x  eta(x,z) <-/ phi(x,y)
    (psi \\-> eta)(x,y) = /\\_z  psi(y,z) \\-> eta(x,z)

Adjointness is decided through the canonical witnesses: a left adjoint's
right adjoint must be phi* = phi \\-> B, a right adjoint's left adjoint
must be A <-/ phi, so one inequality decides each predicate (the other
triangle holds by residuation).
"""

from __future__ import annotations

from itertools import product

from .errors import Mismatch, guard_search
from .qcat import QCategory, QFunctor
from .report import Report


class QDistributor:
    __slots__ = ("dom", "cod", "matrix")

    def __init__(self, dom: QCategory, cod: QCategory, matrix):
        self.dom = dom
        self.cod = cod
        self.matrix = dict(matrix)

    def __call__(self, x, y) -> str:
        return self.matrix[(x, y)]

    def __repr__(self):
        return f"QDistributor({self.dom.name} -|> {self.cod.name})"

    def __eq__(self, other):
        return (
            isinstance(other, QDistributor)
            and self.dom.objects == other.dom.objects
            and self.cod.objects == other.cod.objects
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.dom.objects, self.cod.objects, tuple(sorted(self.matrix.items()))))

    def arrow(self, x, y):
        from .quantaloid import Arrow

        return Arrow(self.dom.type_of[x], self.cod.type_of[y], self.matrix[(x, y)])

    def row(self, x) -> tuple:
        return tuple(self.matrix[(x, y)] for y in self.cod.obj_names)

    def col(self, y) -> tuple:
        return tuple(self.matrix[(x, y)] for x in self.dom.obj_names)


def identity_dist(A: QCategory) -> QDistributor:
    return QDistributor(A, A, dict(A.hom))


def validate_distributor(phi: QDistributor) -> Report:
    report = Report(f"distributor {phi.dom.name} -|> {phi.cod.name}")
    A, B, Q = phi.dom, phi.cod, phi.dom.base
    if A.base is not B.base:
        report.fail("domain and codomain live over different base quantaloids")
        return report
    for x in A.obj_names:
        for y in B.obj_names:
            if (x, y) not in phi.matrix:
                report.fail(f"missing entry ({x},{y})")
                return report
            Q.hom[(A.type_of[x], B.type_of[y])].require(phi.matrix[(x, y)])
    for x in A.obj_names:
        for y in B.obj_names:
            for y2 in B.obj_names:
                lhs = Q.compose(B.arrow(y2, y), phi.arrow(x, y2))
                if not Q.leq(lhs, phi.arrow(x, y)):
                    report.fail(
                        f"codomain action fails: B({y2},{y}) o phi({x},{y2}) = {lhs.value} "
                        f"not below phi({x},{y}) = {phi(x, y)}"
                    )
            for x2 in A.obj_names:
                lhs = Q.compose(phi.arrow(x2, y), A.arrow(x, x2))
                if not Q.leq(lhs, phi.arrow(x, y)):
                    report.fail(
                        f"domain action fails: phi({x2},{y}) o A({x},{x2}) = {lhs.value} "
                        f"not below phi({x},{y}) = {phi(x, y)}"
                    )
    return report


def d_compose(psi: QDistributor, phi: QDistributor) -> QDistributor:
    """psi o phi for phi: A -|> B, psi: B -|> C."""
    if psi.dom is not phi.cod and psi.dom.objects != phi.cod.objects:
        raise Mismatch(f"cannot compose {psi} after {phi}")
    A, B, C, Q = phi.dom, phi.cod, psi.cod, phi.dom.base
    matrix = {}
    for x in A.obj_names:
        tx = A.type_of[x]
        for z in C.obj_names:
            L = Q.hom[(tx, C.type_of[z])]
            matrix[(x, z)] = L.join(
                Q.compose(psi.arrow(y, z), phi.arrow(x, y)).value for y in B.obj_names
            )
    return QDistributor(A, C, matrix)


def d_left_imp(eta: QDistributor, phi: QDistributor) -> QDistributor:
    """eta <-/ phi: B -|> C for phi: A -|> B, eta: A -|> C."""
    if eta.dom is not phi.dom and eta.dom.objects != phi.dom.objects:
        raise Mismatch("left implication needs a common domain")
    A, B, C, Q = phi.dom, phi.cod, eta.cod, phi.dom.base
    matrix = {}
    for y in B.obj_names:
        for z in C.obj_names:
            L = Q.hom[(B.type_of[y], C.type_of[z])]
            matrix[(y, z)] = L.meet(
                Q.left_imp(eta.arrow(x, z), phi.arrow(x, y)).value for x in A.obj_names
            )
    return QDistributor(B, C, matrix)


def d_right_imp(psi: QDistributor, eta: QDistributor) -> QDistributor:
    """psi \\-> eta: A -|> B for psi: B -|> C, eta: A -|> C."""
    if psi.cod is not eta.cod and psi.cod.objects != eta.cod.objects:
        raise Mismatch("right implication needs a common codomain")
    A, B, C, Q = eta.dom, psi.dom, psi.cod, eta.dom.base
    matrix = {}
    for x in A.obj_names:
        for y in B.obj_names:
            L = Q.hom[(A.type_of[x], B.type_of[y])]
            matrix[(x, y)] = L.meet(
                Q.right_imp(psi.arrow(y, z), eta.arrow(x, z)).value for z in C.obj_names
            )
    return QDistributor(A, B, matrix)


def d_leq(phi: QDistributor, psi: QDistributor) -> bool:
    """Local (pointwise) order."""
    if phi.dom.objects != psi.dom.objects or phi.cod.objects != psi.cod.objects:
        raise Mismatch("cannot compare distributors with different boundaries")
    Q = phi.dom.base
    return all(
        Q.hom[(phi.dom.type_of[x], phi.cod.type_of[y])].leq(phi(x, y), psi(x, y))
        for x in phi.dom.obj_names
        for y in phi.cod.obj_names
    )


def d_meet(phis) -> QDistributor:
    """Pointwise meet; meets of distributors are distributors."""
    phis = list(phis)
    first = phis[0]
    A, B, Q = first.dom, first.cod, first.dom.base
    matrix = {
        (x, y): Q.hom[(A.type_of[x], B.type_of[y])].meet(p(x, y) for p in phis)
        for x in A.obj_names
        for y in B.obj_names
    }
    return QDistributor(A, B, matrix)


def top_dist(A: QCategory, B: QCategory) -> QDistributor:
    Q = A.base
    matrix = {
        (x, y): Q.hom[(A.type_of[x], B.type_of[y])].top
        for x in A.obj_names
        for y in B.obj_names
    }
    return QDistributor(A, B, matrix)


def d_join(phis) -> QDistributor:
    phis = list(phis)
    first = phis[0]
    A, B, Q = first.dom, first.cod, first.dom.base
    matrix = {
        (x, y): Q.hom[(A.type_of[x], B.type_of[y])].join(p(x, y) for p in phis)
        for x in A.obj_names
        for y in B.obj_names
    }
    return QDistributor(A, B, matrix)


def graph(F: QFunctor) -> QDistributor:
    """F_nat: A -|> B with F_nat(x,y) = B(F(x),y)."""
    A, B = F.dom, F.cod
    return QDistributor(
        A, B, {(x, y): B.hom[(F(x), y)] for x in A.obj_names for y in B.obj_names}
    )


def cograph(F: QFunctor) -> QDistributor:
    """F^nat: B -|> A with F^nat(y,x) = B(y,F(x))."""
    A, B = F.dom, F.cod
    return QDistributor(
        B, A, {(y, x): B.hom[(y, F(x))] for y in B.obj_names for x in A.obj_names}
    )


def d_star(phi: QDistributor) -> QDistributor:
    """phi* = phi \\-> B: the canonical right-adjoint candidate, cod -|> dom."""
    return d_right_imp(phi, identity_dist(phi.cod))


def left_adjoint_candidate(phi: QDistributor) -> QDistributor:
    """A <-/ phi: the canonical left-adjoint candidate of phi: A -|> B."""
    return d_left_imp(identity_dist(phi.dom), phi)


def d_is_left_adjoint(phi: QDistributor) -> bool:
    """phi -| phi*, decided by A <= phi* o phi; the counit holds by residuation."""
    return d_leq(identity_dist(phi.dom), d_compose(d_star(phi), phi))


def d_is_right_adjoint(phi: QDistributor) -> bool:
    """(A <-/ phi) -| phi, decided by B <= phi o (A <-/ phi)."""
    return d_leq(identity_dist(phi.cod), d_compose(phi, left_adjoint_candidate(phi)))


def adjoint_pair(phi: QDistributor, psi: QDistributor) -> bool:
    """phi -| psi: A <= psi o phi and phi o psi <= B."""
    return d_leq(identity_dist(phi.dom), d_compose(psi, phi)) and d_leq(
        d_compose(phi, psi), identity_dist(phi.cod)
    )


def d_op(phi: QDistributor, dom_op: QCategory | None = None, cod_op: QCategory | None = None) -> QDistributor:
    """phi^op: B^op -|> A^op over the opposite base, phi^op(y,x) = phi(x,y)."""
    from .qcat import opposite_category

    base_op = dom_op.base if dom_op is not None else phi.dom.base.opposite()
    A_op = dom_op or opposite_category(phi.dom, base_op)
    B_op = cod_op or opposite_category(phi.cod, base_op)
    matrix = {(y, x): phi(x, y) for x in phi.dom.obj_names for y in phi.cod.obj_names}
    return QDistributor(B_op, A_op, matrix)


def search_right_adjoints(phi: QDistributor, cap: int | None = None) -> list[QDistributor]:
    """Exhaustive oracle: every psi with phi -| psi.

    Enumerates the full matrix space of cod -|> dom, so it is guarded by
    the candidate cap; intended for tests only.
    """
    A, B, Q = phi.dom, phi.cod, phi.dom.base
    cells = [(y, x) for y in B.obj_names for x in A.obj_names]
    lattices = [Q.hom[(B.type_of[y], A.type_of[x])] for (y, x) in cells]
    total = 1
    for L in lattices:
        total *= len(L.elements)
    guard_search(total, "right-adjoint search", cap)
    found = []
    for values in product(*(L.elements for L in lattices)):
        psi = QDistributor(B, A, dict(zip(cells, values)))
        if validate_distributor(psi).ok and adjoint_pair(phi, psi):
            found.append(psi)
    return found
