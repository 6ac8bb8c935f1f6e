"""Adjoint presheaves, Cauchy completion, convergence, Morita equivalence.

A presheaf mu: A -|> *_X is a completion point when it carries an adjoint
pair lam -| mu with lam a copresheaf; by uniqueness of adjoints the only
candidate is lam = A <-/ mu, so membership is one inequality.  The
completion is the full subcategory of PA on these members.  Cauchy
completeness is decided by representability: every completion point must
be isomorphic in PA to a Yoneda image.  That criterion is equivalent to
convergence of all left adjoint distributors into A, which are determined
row-wise by their completion-point rows; reports carry the note
"criterion: representability" to make the decision visible.
"""

from __future__ import annotations

from .errors import NotLeftAdjoint
from .qcat import QCategory, QFunctor, skeleton
from .qdist import (
    QDistributor,
    d_is_left_adjoint,
    d_is_right_adjoint,
    graph,
)
from .presheaf import PresheafCategory, presheaf_category, yoneda

REPRESENTABILITY_NOTE = "criterion: representability"


def left_adjoint_presheaves(A: QCategory) -> list[QDistributor]:
    """The completion points: presheaves admitting a left adjoint copresheaf."""
    PA = presheaf_category(A)
    return [mu for mu in PA.members if d_is_right_adjoint(mu)]


def cauchy_completion(A: QCategory) -> QCategory:
    """Full subcategory of PA on the completion points."""
    if "cc" in A._derived:
        return A._derived["cc"]
    PA = presheaf_category(A)
    keep = [PA.name_of(mu) for mu in left_adjoint_presheaves(A)]
    cat = QCategory(
        f"{A.name}_cc",
        A.base,
        [(n, PA.type_of[n]) for n in keep],
        {(m, n): PA.hom[(m, n)] for m in keep for n in keep},
    )
    cat._derived["cc_of"] = A
    A._derived["cc"] = cat
    return cat


def converges(phi: QDistributor) -> QFunctor | None:
    """The functor F with graph(F) = phi, when one exists.

    Only left adjoint distributors can converge; others are rejected.
    Ties are broken by least object index, and the result is verified.
    """
    if not d_is_left_adjoint(phi):
        raise NotLeftAdjoint("only a left adjoint distributor can converge")
    A, B = phi.dom, phi.cod
    mapping = {}
    for x in A.obj_names:
        target = None
        for b in B.obj_names:
            if B.type_of[b] == A.type_of[x] and all(
                B.hom[(b, y)] == phi(x, y) for y in B.obj_names
            ):
                target = b
                break
        if target is None:
            return None
        mapping[x] = target
    F = QFunctor(f"lim_{A.name}_{B.name}", A, B, mapping)
    assert graph(F) == phi
    return F


def _iso_in(P: PresheafCategory, m: str, n: str) -> bool:
    Q = P.base
    if P.type_of[m] != P.type_of[n]:
        return False
    u = Q.units[P.type_of[m]]
    L = Q.hom[(P.type_of[m], P.type_of[m])]
    return L.leq(u, P.hom[(m, n)]) and L.leq(u, P.hom[(n, m)])


def is_cauchy_complete(A: QCategory) -> bool:
    """Every completion point is isomorphic in PA to a Yoneda image."""
    PA = presheaf_category(A)
    Y = yoneda(A)
    images = [Y(a) for a in A.obj_names]
    for mu in left_adjoint_presheaves(A):
        n = PA.name_of(mu)
        if not any(_iso_in(PA, n, m) for m in images):
            return False
    return True


def _invariant(C: QCategory, x: str):
    row = sorted(C.hom[(x, y)] for y in C.obj_names)
    col = sorted(C.hom[(y, x)] for y in C.obj_names)
    return (C.type_of[x], tuple(row), tuple(col))


def category_isomorphism(C: QCategory, D: QCategory) -> dict[str, str] | None:
    """Lexicographically least type- and hom-preserving bijection, or None.

    Objects are pre-partitioned by type and hom-value multisets before the
    backtracking search.
    """
    if len(C.obj_names) != len(D.obj_names):
        return None
    inv_c = {x: _invariant(C, x) for x in C.obj_names}
    inv_d = {y: _invariant(D, y) for y in D.obj_names}
    if sorted(inv_c.values()) != sorted(inv_d.values()):
        return None

    order = list(C.obj_names)
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in D.obj_names:
            if y in used or inv_c[x] != inv_d[y]:
                continue
            ok = all(
                D.hom[(assignment[z], y)] == C.hom[(z, x)]
                and D.hom[(y, assignment[z])] == C.hom[(x, z)]
                for z in assignment
            ) and D.hom[(y, y)] == C.hom[(x, x)]
            if not ok:
                continue
            assignment[x] = y
            used.add(y)
            if rec(k + 1):
                return True
            del assignment[x]
            used.discard(y)
        return False

    return dict(assignment) if rec(0) else None


def morita_equivalent(A: QCategory, B: QCategory) -> tuple[bool, dict[str, str] | None]:
    """Isomorphism search between the skeletons of the two completions."""
    CA, _ = skeleton(cauchy_completion(A))
    CB, _ = skeleton(cauchy_completion(B))
    witness = category_isomorphism(CA, CB)
    return witness is not None, witness
