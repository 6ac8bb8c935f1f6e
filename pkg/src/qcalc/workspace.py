"""Line-oriented workspace files: lattices, quantaloids, categories, distributors.

Grammar (``#`` starts a comment, blank lines ignored)::

    lattice NAME
    elements a b c
    leq a b            # generating pairs; closure is taken
    end

    quantaloid NAME
    objects O1 O2
    hom O1 O2 LATTICE
    unit O1 e
    compose O1 O2 O3 builtin meet|join
    compose O1 O2 O3   # followed by explicit rows
    triple g f h       # h = g o f
    end

    category NAME over QUANTALOID
    object x : O1
    hom x y e
    end

    distributor NAME : CAT1 -> CAT2
    at x y e
    end

Every entity is validated on load; failures raise ValidationError carrying
the module report.  ``builtin join`` is the coframe case: it requires a
one-object quantaloid and installs the order dual of the named lattice as
the hom so that composition preserves its joins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .lattice import FiniteLattice, build_lattice, reverse
from .qcat import QCategory, validate_category
from .qdist import QDistributor, validate_distributor
from .quantaloid import Quantaloid, validate_quantaloid


@dataclass
class Workspace:
    lattices: dict[str, FiniteLattice] = field(default_factory=dict)
    quantaloids: dict[str, Quantaloid] = field(default_factory=dict)
    categories: dict[str, QCategory] = field(default_factory=dict)
    distributors: dict[str, QDistributor] = field(default_factory=dict)
    source_lines: dict[str, int] = field(default_factory=dict)
    # declaration metadata for faithful serialization
    lattice_decl: dict[str, list[tuple[str, str]]] = field(default_factory=dict)
    hom_decl: dict[str, dict[tuple[str, str], str]] = field(default_factory=dict)
    comp_decl: dict[str, dict[tuple[str, str, str], str]] = field(default_factory=dict)
    cat_base: dict[str, str] = field(default_factory=dict)
    dist_ends: dict[str, tuple[str, str]] = field(default_factory=dict)

    def _register(self, kind, name, line_no):
        for pool in (self.lattices, self.quantaloids, self.categories, self.distributors):
            if name in pool:
                raise ParseError(line_no, f"duplicate name {name!r}")
        self.source_lines[name] = line_no


def _tokens(line: str) -> list[str]:
    return line.split("#", 1)[0].split()


def parse_workspace(text: str) -> Workspace:
    ws = Workspace()
    lines = text.splitlines()
    i = 0
    n = len(lines)

    def next_block_line(j):
        while j < n and not _tokens(lines[j]):
            j += 1
        return j

    while True:
        i = next_block_line(i)
        if i >= n:
            break
        toks = _tokens(lines[i])
        head, line_no = toks[0], i + 1
        if head == "lattice":
            if len(toks) != 2:
                raise ParseError(line_no, "expected: lattice NAME")
            name = toks[1]
            ws._register("lattice", name, line_no)
            elements: list[str] = []
            pairs: list[tuple[str, str]] = []
            i += 1
            while True:
                i = next_block_line(i)
                if i >= n:
                    raise ParseError(line_no, f"lattice {name} not closed with 'end'")
                t = _tokens(lines[i])
                if t[0] == "end":
                    i += 1
                    break
                if t[0] == "elements":
                    elements.extend(t[1:])
                elif t[0] == "leq" and len(t) == 3:
                    pairs.append((t[1], t[2]))
                else:
                    raise ParseError(i + 1, f"unexpected line in lattice block: {lines[i].strip()!r}")
                i += 1
            try:
                ws.lattices[name] = build_lattice(elements, pairs, name=name)
            except Exception as exc:
                raise ValidationError(f"lattice {name}: {exc}") from exc
            ws.lattice_decl[name] = pairs
        elif head == "quantaloid":
            if len(toks) != 2:
                raise ParseError(line_no, "expected: quantaloid NAME")
            name = toks[1]
            ws._register("quantaloid", name, line_no)
            objects: list[str] = []
            hom_names: dict[tuple[str, str], str] = {}
            units: dict[str, str] = {}
            comp_kind: dict[tuple[str, str, str], str] = {}
            triples: dict[tuple[str, str, str], dict] = {}
            current: tuple[str, str, str] | None = None
            i += 1
            while True:
                i = next_block_line(i)
                if i >= n:
                    raise ParseError(line_no, f"quantaloid {name} not closed with 'end'")
                t = _tokens(lines[i])
                if t[0] == "end":
                    i += 1
                    break
                if t[0] == "objects":
                    objects.extend(t[1:])
                elif t[0] == "hom" and len(t) == 4:
                    hom_names[(t[1], t[2])] = t[3]
                elif t[0] == "unit" and len(t) == 3:
                    units[t[1]] = t[2]
                elif t[0] == "compose" and len(t) == 6 and t[4] == "builtin":
                    comp_kind[(t[1], t[2], t[3])] = t[5]
                    current = None
                elif t[0] == "compose" and len(t) == 4:
                    current = (t[1], t[2], t[3])
                    comp_kind[current] = "explicit"
                    triples[current] = {}
                elif t[0] == "triple" and len(t) == 4:
                    if current is None:
                        raise ParseError(i + 1, "'triple' outside an explicit compose block")
                    triples[current][(t[1], t[2])] = t[3]
                else:
                    raise ParseError(i + 1, f"unexpected line in quantaloid block: {lines[i].strip()!r}")
                i += 1
            ws.quantaloids[name] = _build_quantaloid(
                ws, name, objects, hom_names, units, comp_kind, triples, line_no
            )
            ws.hom_decl[name] = hom_names
            ws.comp_decl[name] = comp_kind
        elif head == "category":
            if len(toks) != 4 or toks[2] != "over":
                raise ParseError(line_no, "expected: category NAME over QUANTALOID")
            name, qname = toks[1], toks[3]
            ws._register("category", name, line_no)
            if qname not in ws.quantaloids:
                raise ParseError(line_no, f"unknown quantaloid {qname!r}")
            Q = ws.quantaloids[qname]
            objs: list[tuple[str, str]] = []
            hom: dict[tuple[str, str], str] = {}
            i += 1
            while True:
                i = next_block_line(i)
                if i >= n:
                    raise ParseError(line_no, f"category {name} not closed with 'end'")
                t = _tokens(lines[i])
                if t[0] == "end":
                    i += 1
                    break
                if t[0] == "object" and len(t) == 4 and t[2] == ":":
                    objs.append((t[1], t[3]))
                elif t[0] == "hom" and len(t) == 4:
                    hom[(t[1], t[2])] = t[3]
                else:
                    raise ParseError(i + 1, f"unexpected line in category block: {lines[i].strip()!r}")
                i += 1
            cat = QCategory(name, Q, objs, hom)
            report = validate_category(cat)
            if not report.ok:
                raise ValidationError(report)
            ws.categories[name] = cat
            ws.cat_base[name] = qname
        elif head == "distributor":
            if len(toks) != 6 or toks[2] != ":" or toks[4] != "->":
                raise ParseError(line_no, "expected: distributor NAME : CAT1 -> CAT2")
            name, c1, c2 = toks[1], toks[3], toks[5]
            ws._register("distributor", name, line_no)
            for c in (c1, c2):
                if c not in ws.categories:
                    raise ParseError(line_no, f"unknown category {c!r}")
            matrix: dict[tuple[str, str], str] = {}
            i += 1
            while True:
                i = next_block_line(i)
                if i >= n:
                    raise ParseError(line_no, f"distributor {name} not closed with 'end'")
                t = _tokens(lines[i])
                if t[0] == "end":
                    i += 1
                    break
                if t[0] == "at" and len(t) == 4:
                    matrix[(t[1], t[2])] = t[3]
                else:
                    raise ParseError(i + 1, f"unexpected line in distributor block: {lines[i].strip()!r}")
                i += 1
            dist = QDistributor(ws.categories[c1], ws.categories[c2], matrix)
            report = validate_distributor(dist)
            if not report.ok:
                raise ValidationError(report)
            ws.distributors[name] = dist
            ws.dist_ends[name] = (c1, c2)
        else:
            raise ParseError(line_no, f"unknown block head {head!r}")
    return ws


def _build_quantaloid(ws, name, objects, hom_names, units, comp_kind, triples, line_no):
    hom = {}
    for pair, lname in hom_names.items():
        if lname not in ws.lattices:
            raise ParseError(line_no, f"unknown lattice {lname!r} in quantaloid {name}")
        hom[pair] = ws.lattices[lname]
    if any(kind == "join" for kind in comp_kind.values()):
        if len(objects) != 1:
            raise ValidationError(f"quantaloid {name}: builtin join needs one object")
        hom = {pair: reverse(L, name=L.name) for pair, L in hom.items()}
    comp = {}
    for triple_key, kind in comp_kind.items():
        X, Y, Z = triple_key
        if kind == "meet":
            for pair in ((X, Y), (Y, Z), (X, Z)):
                if pair not in hom:
                    raise ValidationError(f"quantaloid {name}: missing hom for {pair}")
            if not (hom[(X, Y)].name == hom[(Y, Z)].name == hom[(X, Z)].name):
                raise ValidationError(
                    f"quantaloid {name}: builtin meet needs equal hom-lattices on {triple_key}"
                )
            L = hom[(X, Y)]
            comp[triple_key] = {(g, f): L.meet2(g, f) for g in L.elements for f in L.elements}
        elif kind == "join":
            L = hom[(X, Y)]
            comp[triple_key] = {(g, f): L.meet2(g, f) for g in L.elements for f in L.elements}
        else:
            comp[triple_key] = dict(triples[triple_key])
    Q = Quantaloid(name, objects, hom, comp, units)
    report = validate_quantaloid(Q)
    if not report.ok:
        raise ValidationError(report)
    return Q


def serialize_workspace(ws: Workspace) -> str:
    out: list[str] = []
    for name, L in ws.lattices.items():
        out.append(f"lattice {name}")
        out.append("elements " + " ".join(L.elements))
        for a, b in ws.lattice_decl.get(name, []):
            out.append(f"leq {a} {b}")
        out.append("end")
        out.append("")
    for name, Q in ws.quantaloids.items():
        out.append(f"quantaloid {name}")
        out.append("objects " + " ".join(Q.objects))
        for (a, b), lname in ws.hom_decl[name].items():
            out.append(f"hom {a} {b} {lname}")
        for obj, e in Q.units.items():
            out.append(f"unit {obj} {e}")
        for triple_key, kind in ws.comp_decl[name].items():
            X, Y, Z = triple_key
            if kind in ("meet", "join"):
                out.append(f"compose {X} {Y} {Z} builtin {kind}")
            else:
                out.append(f"compose {X} {Y} {Z}")
                for (g, f), h in sorted(Q.comp_table[triple_key].items()):
                    out.append(f"triple {g} {f} {h}")
        out.append("end")
        out.append("")
    for name, cat in ws.categories.items():
        out.append(f"category {name} over {ws.cat_base[name]}")
        for obj, typ in cat.objects:
            out.append(f"object {obj} : {typ}")
        for x in cat.obj_names:
            for y in cat.obj_names:
                out.append(f"hom {x} {y} {cat.hom[(x, y)]}")
        out.append("end")
        out.append("")
    for name, dist in ws.distributors.items():
        c1, c2 = ws.dist_ends[name]
        out.append(f"distributor {name} : {c1} -> {c2}")
        for x in dist.dom.obj_names:
            for y in dist.cod.obj_names:
                out.append(f"at {x} {y} {dist(x, y)}")
        out.append("end")
        out.append("")
    return "\n".join(out)
