"""Categories and functors enriched in a quantaloid.

A category is a typed object list with a hom matrix valued in the base's
arrows, subject to 1 <= A(x,x) and A(y,z) o A(x,y) <= A(x,z).  Functors
are type-preserving object maps that laxly preserve homs.  Objects carry
declared names; isomorphic objects are kept unless a skeleton is taken.
"""

from __future__ import annotations

from .errors import DomainMismatch, TypeMismatch
from .quantaloid import Arrow, Quantaloid
from .report import Report


class QCategory:
    def __init__(self, name, base: Quantaloid, objects, hom):
        """objects: sequence of (name, type) pairs; hom: (x,y) -> element."""
        self.name = name
        self.base = base
        self.objects = tuple(objects)
        self.obj_names = tuple(n for n, _ in self.objects)
        self.type_of = dict(self.objects)
        self.hom = dict(hom)
        self._derived: dict = {}

    def __repr__(self):
        return f"QCategory({self.name!r}, {len(self.objects)} objects)"

    def arrow(self, x, y) -> Arrow:
        return Arrow(self.type_of[x], self.type_of[y], self.hom[(x, y)])

    def hom_lattice(self, x, y):
        return self.base.hom[(self.type_of[x], self.type_of[y])]


class QFunctor:
    def __init__(self, name, dom: QCategory, cod: QCategory, mapping):
        self.name = name
        self.dom = dom
        self.cod = cod
        self.mapping = dict(mapping)

    def __call__(self, x):
        return self.mapping[x]

    def __repr__(self):
        return f"QFunctor({self.name!r}: {self.dom.name} -> {self.cod.name})"


def identity_functor(A: QCategory) -> QFunctor:
    return QFunctor(f"id_{A.name}", A, A, {x: x for x in A.obj_names})


def compose_functors(G: QFunctor, F: QFunctor) -> QFunctor:
    if G.dom is not F.cod:
        raise DomainMismatch(f"cannot compose {G} after {F}")
    return QFunctor(f"{G.name}.{F.name}", F.dom, G.cod, {x: G(F(x)) for x in F.dom.obj_names})


def validate_category(A: QCategory) -> Report:
    report = Report(f"category {A.name}")
    base = A.base
    for x, tx in A.objects:
        if tx not in base.objects:
            report.fail(f"object {x} has unknown type {tx}")
            return report
    for x in A.obj_names:
        for y in A.obj_names:
            if (x, y) not in A.hom:
                report.fail(f"missing hom entry ({x},{y})")
                return report
            A.hom_lattice(x, y).require(A.hom[(x, y)])
    for x in A.obj_names:
        if not base.leq(base.unit(A.type_of[x]), A.arrow(x, x)):
            report.fail(f"unit axiom fails at {x}: 1 <= A({x},{x}) = {A.hom[(x, x)]} is false")
    for x in A.obj_names:
        for y in A.obj_names:
            for z in A.obj_names:
                comp = base.compose(A.arrow(y, z), A.arrow(x, y))
                if not base.leq(comp, A.arrow(x, z)):
                    report.fail(
                        f"composition axiom fails: A({y},{z}) o A({x},{y}) = {comp.value} "
                        f"is not below A({x},{z}) = {A.hom[(x, z)]}"
                    )
    return report


def underlying_preorder(A: QCategory) -> set[tuple[str, str]]:
    """x <= y iff the types agree and 1 <= A(x,y)."""
    rel = set()
    for x in A.obj_names:
        for y in A.obj_names:
            if A.type_of[x] == A.type_of[y] and A.base.leq(
                A.base.unit(A.type_of[x]), A.arrow(x, y)
            ):
                rel.add((x, y))
    return rel

def obj_leq(A: QCategory, x, y) -> bool:
    return A.type_of[x] == A.type_of[y] and A.base.leq(
        A.base.unit(A.type_of[x]), A.arrow(x, y)
    )


def is_skeletal(A: QCategory) -> bool:
    pre = underlying_preorder(A)
    return not any((x, y) in pre and (y, x) in pre and x != y for x in A.obj_names for y in A.obj_names)


def skeleton(A: QCategory) -> tuple[QCategory, dict[str, str]]:
    """One representative per isomorphism class (least declared index)."""
    pre = underlying_preorder(A)
    rep: dict[str, str] = {}
    for x in A.obj_names:
        cls = [y for y in A.obj_names if (x, y) in pre and (y, x) in pre]
        rep[x] = cls[0] if cls else x
    keep = [n for n in A.obj_names if rep[n] == n]
    hom = {(x, y): A.hom[(x, y)] for x in keep for y in keep}
    cat = QCategory(f"{A.name}_sk", A.base, [(n, A.type_of[n]) for n in keep], hom)
    return cat, rep


def validate_functor(F: QFunctor) -> Report:
    report = Report(f"functor {F.name}")
    for x in F.dom.obj_names:
        if x not in F.mapping:
            report.fail(f"no image for object {x}")
            return report
        if F(x) not in F.cod.type_of:
            report.fail(f"image {F(x)} of {x} is not an object of {F.cod.name}")
            return report
    for x in F.dom.obj_names:
        if F.dom.type_of[x] != F.cod.type_of[F(x)]:
            report.fail(
                f"type not preserved at {x}: |{x}| = {F.dom.type_of[x]} but "
                f"|{F(x)}| = {F.cod.type_of[F(x)]}"
            )
    if not report.ok:
        return report
    for x in F.dom.obj_names:
        for y in F.dom.obj_names:
            if not F.dom.base.leq(F.dom.arrow(x, y), F.cod.arrow(F(x), F(y))):
                report.fail(
                    f"hom inequality fails: A({x},{y}) = {F.dom.hom[(x, y)]} is not below "
                    f"B({F(x)},{F(y)}) = {F.cod.hom[(F(x), F(y))]}"
                )
    return report


def functor_leq(F: QFunctor, G: QFunctor) -> bool:
    """Pointwise order: F <= G iff F(x) <= G(x) in the codomain for all x."""
    if F.dom is not G.dom or F.cod is not G.cod:
        raise DomainMismatch("functors must be parallel")
    return all(obj_leq(F.cod, F(x), G(x)) for x in F.dom.obj_names)


def functors_adjoint(F: QFunctor, G: QFunctor) -> bool:
    """F -| G: 1_A <= G o F and F o G <= 1_B in the pointwise order."""
    if F.dom is not G.cod or F.cod is not G.dom:
        raise DomainMismatch(f"{F} and {G} are not opposed")
    A, B = F.dom, F.cod
    unit = all(obj_leq(A, x, G(F(x))) for x in A.obj_names)
    counit = all(obj_leq(B, F(G(y)), y) for y in B.obj_names)
    return unit and counit


def opposite_category(A: QCategory, base_op: Quantaloid | None = None) -> QCategory:
    """Same objects over the opposite base, hom entries transposed."""
    base_op = base_op or A.base.opposite()
    hom = {(x, y): A.hom[(y, x)] for x in A.obj_names for y in A.obj_names}
    return QCategory(f"{A.name}_op", base_op, A.objects, hom)
