"""Finite quantaloids: hom-lattices, composition tables, derived implications.

Composition must preserve arbitrary joins in each variable; implications
(residuals) are therefore total and are computed by brute-force join over
the relevant hom-lattice, memoized per value pair.

Arrow-level adjunction theory: ``star`` gives the canonical right-adjoint
candidate f* = f\\1, ``is_map`` tests 1 <= f* o f (the counit f o f* <= 1
holds automatically), and right adjoints are tested dually.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import NamedTuple

from .errors import NotComposable, TypeMismatch, UnknownElement
from .lattice import FiniteLattice, reverse
from .report import Report


class Arrow(NamedTuple):
    src: str
    tgt: str
    value: str

    def __repr__(self):
        return f"{self.value}:{self.src}->{self.tgt}"


class Quantaloid:
    def __init__(self, name, objects, hom, comp, units):
        """hom: (src,tgt) -> FiniteLattice; comp: (X,Y,Z) -> {(g,f): h};
        units: X -> element of hom(X,X)."""
        self.name = name
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.comp_table = comp
        self.units = dict(units)
        self._limp_cache: dict = {}
        self._rimp_cache: dict = {}

    def __repr__(self):
        return f"Quantaloid({self.name!r}, objects={list(self.objects)})"

    def unit(self, X) -> Arrow:
        return Arrow(X, X, self.units[X])

    def arrow(self, src, tgt, value) -> Arrow:
        L = self.hom[(src, tgt)]
        L.require(value)
        return Arrow(src, tgt, value)

    def leq(self, f: Arrow, g: Arrow) -> bool:
        if (f.src, f.tgt) != (g.src, g.tgt):
            raise TypeMismatch(f"cannot compare {f} with {g}")
        return self.hom[(f.src, f.tgt)].leq(f.value, g.value)

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise NotComposable(f"{g} o {f}: {f}.tgt != {g}.src")
        value = self.comp_table[(f.src, f.tgt, g.tgt)][(g.value, f.value)]
        return Arrow(f.src, g.tgt, value)

    def compose_values(self, triple, gv, fv) -> str:
        return self.comp_table[triple][(gv, fv)]

    def left_imp(self, h: Arrow, f: Arrow) -> Arrow:
        """h <-/ f: the largest g with g o f <= h, for h: X->Z, f: X->Y."""
        if h.src != f.src:
            raise TypeMismatch(f"{h} <-/ {f}: sources differ")
        X, Y, Z = f.src, f.tgt, h.tgt
        key = (X, Y, Z, h.value, f.value)
        got = self._limp_cache.get(key)
        if got is None:
            LYZ = self.hom[(Y, Z)]
            LXZ = self.hom[(X, Z)]
            table = self.comp_table[(X, Y, Z)]
            got = LYZ.join(
                g for g in LYZ.elements if LXZ.leq(table[(g, f.value)], h.value)
            )
            self._limp_cache[key] = got
        return Arrow(Y, Z, got)

    def right_imp(self, g: Arrow, h: Arrow) -> Arrow:
        """g \\-> h: the largest f with g o f <= h, for g: Y->Z, h: X->Z."""
        if h.tgt != g.tgt:
            raise TypeMismatch(f"{g} \\-> {h}: targets differ")
        X, Y, Z = h.src, g.src, g.tgt
        key = (X, Y, Z, g.value, h.value)
        got = self._rimp_cache.get(key)
        if got is None:
            LXY = self.hom[(X, Y)]
            LXZ = self.hom[(X, Z)]
            table = self.comp_table[(X, Y, Z)]
            got = LXY.join(
                f for f in LXY.elements if LXZ.leq(table[(g.value, f)], h.value)
            )
            self._rimp_cache[key] = got
        return Arrow(X, Y, got)

    def star(self, f: Arrow) -> Arrow:
        """f* = f \\-> 1: the canonical right-adjoint candidate, f*: tgt -> src."""
        return self.right_imp(f, self.unit(f.tgt))

    def is_map(self, f: Arrow) -> bool:
        """f -| f*, decided by the unit inequality 1 <= f* o f alone."""
        return self.leq(self.unit(f.src), self.compose(self.star(f), f))

    def is_right_adjoint_arrow(self, f: Arrow) -> bool:
        """f has a left adjoint, decided by 1 <= f o (1 <-/ f)."""
        cand = self.left_imp(self.unit(f.src), f)
        return self.leq(self.unit(f.tgt), self.compose(f, cand))

    def opposite(self, name: str | None = None) -> "Quantaloid":
        hom = {(X, Y): self.hom[(Y, X)] for X in self.objects for Y in self.objects}
        comp = {}
        for X in self.objects:
            for Y in self.objects:
                for Z in self.objects:
                    orig = self.comp_table[(Z, Y, X)]
                    comp[(X, Y, Z)] = {
                        (g, f): orig[(f, g)]
                        for g in self.hom[(Z, Y)].elements
                        for f in self.hom[(Y, X)].elements
                    }
        return Quantaloid(name or f"{self.name}_op", self.objects, hom, comp, self.units)


def one_object(L: FiniteLattice, composition: str = "meet", name: str | None = None) -> Quantaloid:
    """One-object quantaloid over L.

    ``meet``: composition is binary meet, unit is the top (frame case).
    ``join``: composition is binary join, unit the bottom; the hom-lattice
    is replaced by the order dual of L so that composition preserves its
    joins (coframe case).
    """
    obj = "*"
    if composition == "meet":
        table = {(g, f): L.meet2(g, f) for g in L.elements for f in L.elements}
        unit = L.top
        hom = L
    elif composition == "join":
        hom = reverse(L)
        table = {(g, f): L.join2(g, f) for g in L.elements for f in L.elements}
        unit = L.bottom
    else:
        raise UnknownElement(f"unknown builtin composition {composition!r}")
    return Quantaloid(
        name or f"Q({L.name})", (obj,), {(obj, obj): hom}, {(obj, obj, obj): table}, {obj: unit}
    )


def _subsets(seq):
    return chain.from_iterable(combinations(seq, r) for r in range(len(seq) + 1))


def validate_quantaloid(Q: Quantaloid, join_check: str = "all") -> Report:
    """Check category laws plus join preservation in each variable.

    ``join_check='all'`` ranges over every subset of each hom-lattice;
    ``'pairs'`` checks binary joins plus the empty join, which is
    equivalent for finite lattices (binary + empty generate all finite
    joins); the report records which mode ran.
    """
    report = Report(f"quantaloid {Q.name}")
    objs = Q.objects
    for X in objs:
        if X not in Q.units:
            report.fail(f"missing unit for object {X}")
            return report
        Q.hom[(X, X)].require(Q.units[X])
        for Y in objs:
            if (X, Y) not in Q.hom:
                report.fail(f"missing hom-lattice for ({X},{Y})")
                return report

    for X in objs:
        for Y in objs:
            for Z in objs:
                table = Q.comp_table.get((X, Y, Z))
                if table is None:
                    report.fail(f"missing composition table for ({X},{Y},{Z})")
                    return report
                LXZ = Q.hom[(X, Z)]
                for g in Q.hom[(Y, Z)].elements:
                    for f in Q.hom[(X, Y)].elements:
                        if (g, f) not in table:
                            report.fail(f"composition undefined at ({g},{f}) in ({X},{Y},{Z})")
                            return report
                        LXZ.require(table[(g, f)])

    # unit laws
    for X in objs:
        for Y in objs:
            for f in Q.hom[(X, Y)].elements:
                fa = Arrow(X, Y, f)
                left = Q.compose(Q.unit(Y), fa)
                right = Q.compose(fa, Q.unit(X))
                if left.value != f:
                    report.fail(f"unit law fails: 1_{Y} o {f} = {left.value} != {f}")
                if right.value != f:
                    report.fail(f"unit law fails: {f} o 1_{X} = {right.value} != {f}")

    # associativity
    for W in objs:
        for X in objs:
            for Y in objs:
                for Z in objs:
                    for h in Q.hom[(Y, Z)].elements:
                        for g in Q.hom[(X, Y)].elements:
                            for f in Q.hom[(W, X)].elements:
                                gf = Q.comp_table[(W, X, Y)][(g, f)]
                                hg = Q.comp_table[(X, Y, Z)][(h, g)]
                                lhs = Q.comp_table[(W, Y, Z)][(h, gf)]
                                rhs = Q.comp_table[(W, X, Z)][(hg, f)]
                                if lhs != rhs:
                                    report.fail(
                                        f"associativity fails at h={h}, g={g}, f={f}: "
                                        f"{lhs} != {rhs}"
                                    )

    # join preservation in each variable
    for X in objs:
        for Y in objs:
            for Z in objs:
                table = Q.comp_table[(X, Y, Z)]
                LXY, LYZ, LXZ = Q.hom[(X, Y)], Q.hom[(Y, Z)], Q.hom[(X, Z)]
                fsubs = (
                    _subsets(LXY.elements)
                    if join_check == "all"
                    else [()] + [(a, b) for a in LXY.elements for b in LXY.elements]
                )
                for g in LYZ.elements:
                    for sub in fsubs:
                        lhs = table[(g, LXY.join(sub))]
                        rhs = LXZ.join(table[(g, f)] for f in sub)
                        if lhs != rhs:
                            report.fail(
                                f"join preservation fails in 2nd variable: "
                                f"{g} o join{list(sub)} = {lhs} != {rhs}"
                            )
                gsubs = (
                    _subsets(LYZ.elements)
                    if join_check == "all"
                    else [()] + [(a, b) for a in LYZ.elements for b in LYZ.elements]
                )
                for f in LXY.elements:
                    for sub in gsubs:
                        lhs = table[(LYZ.join(sub), f)]
                        rhs = LXZ.join(table[(g, f)] for g in sub)
                        if lhs != rhs:
                            report.fail(
                                f"join preservation fails in 1st variable: "
                                f"join{list(sub)} o {f} = {lhs} != {rhs}"
                            )
    if join_check != "all":
        report.note(
            "join preservation checked on pairs plus the empty join; "
            "finite joins are generated by these, so the check is equivalent"
        )
    return report


def compose(Q: Quantaloid, g: Arrow, f: Arrow) -> Arrow:
    return Q.compose(g, f)


def left_imp(Q: Quantaloid, h: Arrow, f: Arrow) -> Arrow:
    return Q.left_imp(h, f)


def right_imp(Q: Quantaloid, g: Arrow, h: Arrow) -> Arrow:
    return Q.right_imp(g, h)


def star(Q: Quantaloid, f: Arrow) -> Arrow:
    return Q.star(f)


def is_map(Q: Quantaloid, f: Arrow) -> bool:
    return Q.is_map(f)


def is_right_adjoint_arrow(Q: Quantaloid, f: Arrow) -> bool:
    return Q.is_right_adjoint_arrow(f)


def opposite(Q: Quantaloid) -> Quantaloid:
    return Q.opposite()
