"""Seeded random corpus of small categories over small quantaloids.

Generation is a pure function of the spec: the same seed always yields the
same instances.  Quantaloid families:

  chains         n-element chains with meet composition;
  frames         downset lattices of small random posets, meet composition;
  random-tables  randomly perturbed tables validated with rejection, with
                 known-valid chain families (Lukasiewicz, drastic,
                 nilpotent minimum) as fallback, plus occasional two-object
                 quantaloids with meet composition on a shared chain;
  mixed          deterministic rotation of the three.

Categories are sampled by filling homs at random and repairing: diagonals
are joined with the unit and entries are closed under composition until a
fixpoint, which always lands on a valid category.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fixtures import chain
from .lattice import FiniteLattice, build_lattice
from .qcat import QCategory
from .quantaloid import Quantaloid, one_object, validate_quantaloid

FAMILIES = ("frames", "chains", "random-tables")


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 42
    count: int = 200
    max_objects: int = 3
    family: str = "mixed"


def _downset_lattice(rng: random.Random, tag: int) -> FiniteLattice:
    for _ in range(8):
        m = rng.randint(1, 3)
        rel = [(i, j) for i in range(m) for j in range(m) if i < j and rng.random() < 0.5]
        order = {(i, i) for i in range(m)} | set(rel)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(order):
                for (c, d) in list(order):
                    if b == c and (a, d) not in order:
                        order.add((a, d))
                        changed = True
        downsets = sorted(
            {frozenset(x for x in range(m) if any((x, y) in order for y in s))
             for s in _subsets(range(m))},
            key=lambda s: (len(s), sorted(s)),
        )
        if len(downsets) > 6:
            continue
        names = [f"d{i}" for i in range(len(downsets))]
        idx = {s: names[i] for i, s in enumerate(downsets)}
        pairs = [
            (idx[s], idx[t]) for s in downsets for t in downsets if s != t and s <= t
        ]
        return build_lattice(names, pairs, name=f"Dn{tag}")
    return chain(rng.randint(2, 4), name=f"Dn{tag}")


def _subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield {items[i] for i in range(len(items)) if mask >> i & 1}


def _chain_table(L: FiniteLattice, kind: str) -> dict:
    n = len(L.elements)
    idx = {e: i for i, e in enumerate(L.elements)}

    def op(i, j):
        if kind == "lukasiewicz":
            return max(0, i + j - (n - 1))
        if kind == "drastic":
            if i == n - 1:
                return j
            if j == n - 1:
                return i
            return 0
        if kind == "nilpotent-min":
            return min(i, j) if i + j > n - 1 else 0
        return min(i, j)

    return {
        (g, f): L.elements[op(idx[g], idx[f])] for g in L.elements for f in L.elements
    }


def _random_table_quantaloid(rng: random.Random, tag: int) -> Quantaloid:
    if rng.random() < 0.3:
        # two objects sharing one chain, meet composition on every triple
        L = chain(rng.randint(2, 4), name=f"Ct{tag}")
        objs = ("o0", "o1")
        hom = {(a, b): L for a in objs for b in objs}
        table = {(g, f): L.meet2(g, f) for g in L.elements for f in L.elements}
        comp = {(a, b, c): dict(table) for a in objs for b in objs for c in objs}
        units = {a: L.top for a in objs}
        return Quantaloid(f"Q2_{tag}", objs, hom, comp, units)
    L = chain(rng.randint(2, 6), name=f"Ct{tag}")
    base = _chain_table(L, rng.choice(["lukasiewicz", "drastic", "nilpotent-min", "meet"]))
    for _ in range(3):
        # perturb a random non-unit cell downward, then filter by validation
        table = dict(base)
        g = rng.choice(L.elements)
        f = rng.choice(L.elements)
        if L.top in (g, f):
            continue
        below = [e for e in L.elements if L.leq(e, table[(g, f)])]
        table[(g, f)] = rng.choice(below)
        cand = Quantaloid(
            f"Qr{tag}", ("*",), {("*", "*"): L}, {("*", "*", "*"): table}, {"*": L.top}
        )
        if validate_quantaloid(cand, join_check="pairs").ok:
            return cand
    return Quantaloid(
        f"Qt{tag}", ("*",), {("*", "*"): L}, {("*", "*", "*"): base}, {"*": L.top}
    )


def _quantaloid(rng: random.Random, family: str, tag: int) -> Quantaloid:
    if family == "chains":
        return one_object(chain(rng.randint(2, 6), name=f"Ch{tag}"), "meet", name=f"Qc{tag}")
    if family == "frames":
        return one_object(_downset_lattice(rng, tag), "meet", name=f"Qf{tag}")
    return _random_table_quantaloid(rng, tag)


def _category(rng: random.Random, Q: Quantaloid, max_objects: int, tag: int) -> QCategory:
    n = rng.randint(1, max_objects)
    names = [f"a{i}" for i in range(n)]
    types = [rng.choice(Q.objects) for _ in range(n)]
    objs = list(zip(names, types))
    tmap = dict(objs)
    hom = {
        (x, y): rng.choice(Q.hom[(tmap[x], tmap[y])].elements)
        for x in names
        for y in names
    }
    for x in names:
        L = Q.hom[(tmap[x], tmap[x])]
        hom[(x, x)] = L.join2(hom[(x, x)], Q.units[tmap[x]])
    changed = True
    while changed:
        changed = False
        for x in names:
            for y in names:
                for z in names:
                    L = Q.hom[(tmap[x], tmap[z])]
                    comp = Q.comp_table[(tmap[x], tmap[y], tmap[z])][(hom[(y, z)], hom[(x, y)])]
                    new = L.join2(hom[(x, z)], comp)
                    if new != hom[(x, z)]:
                        hom[(x, z)] = new
                        changed = True
    return QCategory(f"G{tag}", Q, objs, hom)


def generate(spec: CorpusSpec) -> list[QCategory]:
    rng = random.Random(spec.seed)
    out = []
    for i in range(spec.count):
        family = spec.family
        if family == "mixed":
            family = FAMILIES[i % len(FAMILIES)]
        Q = _quantaloid(rng, family, i)
        out.append(_category(rng, Q, spec.max_objects, i))
    return out
