"""Finite complete lattices with precomputed pairwise join/meet tables.

A lattice is built from a generating relation; the reflexive-transitive
closure is taken before any validation, so covers (Hasse-diagram input)
are enough.  Elements are identified by their declared names and keep the
declared order, which downstream enumerations treat as canonical.
"""

from __future__ import annotations

from .errors import AntisymmetryViolation, NotALattice, QcalcError, UnknownElement


class FiniteLattice:
    __slots__ = ("name", "elements", "top", "bottom", "_index", "_leq", "_join2", "_meet2")

    def __init__(self, name, elements, leq_pairs, join2, meet2, top, bottom):
        self.name = name
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._leq = leq_pairs
        self._join2 = join2
        self._meet2 = meet2
        self.top = top
        self.bottom = bottom

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {len(self.elements)} elements)"

    def __len__(self):
        return len(self.elements)

    def require(self, a):
        if a not in self._index:
            raise UnknownElement(f"{a!r} is not an element of lattice {self.name}")

    def leq(self, a, b) -> bool:
        self.require(a)
        self.require(b)
        return (a, b) in self._leq

    def join(self, items) -> str:
        out = self.bottom
        for a in items:
            self.require(a)
            out = self._join2[(out, a)]
        return out

    def meet(self, items) -> str:
        out = self.top
        for a in items:
            self.require(a)
            out = self._meet2[(out, a)]
        return out

    def join2(self, a, b) -> str:
        return self._join2[(a, b)]

    def meet2(self, a, b) -> str:
        return self._meet2[(a, b)]


def _closure(elements, pairs):
    leq = {(e, e) for e in elements}
    leq.update(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(leq):
            for (c, d) in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    return leq


def build_lattice(elements, order_pairs, name: str = "L") -> FiniteLattice:
    """Validate and build a lattice from elements and a generating relation.

    Raises AntisymmetryViolation on a cycle, NotALattice when some pair has
    no unique least upper bound / greatest lower bound, UnknownElement when
    a pair endpoint was not declared.
    """
    elements = tuple(elements)
    if not elements:
        raise NotALattice((), "join", set())
    declared = set(elements)
    if len(declared) != len(elements):
        dupes = sorted({e for e in elements if elements.count(e) > 1})
        raise QcalcError(f"duplicate lattice elements: {dupes}")
    for (a, b) in order_pairs:
        if a not in declared:
            raise UnknownElement(f"{a!r} in order pair is not a declared element")
        if b not in declared:
            raise UnknownElement(f"{b!r} in order pair is not a declared element")

    leq = _closure(elements, set(order_pairs))
    for a in elements:
        for b in elements:
            if a != b and (a, b) in leq and (b, a) in leq:
                raise AntisymmetryViolation(a, b)

    def scan(a, b, kind):
        if kind == "join":
            bounds = [u for u in elements if (a, u) in leq and (b, u) in leq]
            extreme = [u for u in bounds if all((u, v) in leq for v in bounds)]
        else:
            bounds = [u for u in elements if (u, a) in leq and (u, b) in leq]
            extreme = [u for u in bounds if all((v, u) in leq for v in bounds)]
        if len(extreme) != 1:
            minimal = (
                [u for u in bounds if not any(v != u and (v, u) in leq for v in bounds)]
                if kind == "join"
                else [u for u in bounds if not any(v != u and (u, v) in leq for v in bounds)]
            )
            raise NotALattice((a, b), kind, set(minimal))
        return extreme[0]

    join2, meet2 = {}, {}
    for a in elements:
        for b in elements:
            join2[(a, b)] = scan(a, b, "join")
            meet2[(a, b)] = scan(a, b, "meet")

    # top/bottom exist once all pairs have bounds
    top = elements[0]
    bottom = elements[0]
    for e in elements[1:]:
        top = join2[(top, e)]
        bottom = meet2[(bottom, e)]
    return FiniteLattice(name, elements, leq, join2, meet2, top, bottom)


def join(L: FiniteLattice, items) -> str:
    return L.join(items)


def meet(L: FiniteLattice, items) -> str:
    return L.meet(items)


def leq(L: FiniteLattice, a, b) -> bool:
    return L.leq(a, b)


def reverse(L: FiniteLattice, name: str | None = None) -> FiniteLattice:
    """Order dual: joins and meets swap, top and bottom swap."""
    rleq = {(b, a) for (a, b) in L._leq}
    return FiniteLattice(
        name or f"{L.name}_rev",
        L.elements,
        rleq,
        dict(L._meet2),
        dict(L._join2),
        L.bottom,
        L.top,
    )
