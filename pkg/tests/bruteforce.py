"""Independent brute-force oracles for the tests.

Everything here recomputes from first principles with bound scans and raw
product enumeration: no pairwise tables, no backtracking, no canonical
witnesses.  Implementations only read structural data (element lists,
order pairs, composition tables, matrices) from library objects.
"""

from itertools import product


def o_leq(L, a, b):
    return (a, b) in L._leq


def o_join(L, items):
    items = list(items)
    ubs = [u for u in L.elements if all(o_leq(L, s, u) for s in items)]
    least = [u for u in ubs if all(o_leq(L, u, v) for v in ubs)]
    assert len(least) == 1
    return least[0]


def o_meet(L, items):
    items = list(items)
    lbs = [u for u in L.elements if all(o_leq(L, u, s) for s in items)]
    greatest = [u for u in lbs if all(o_leq(L, v, u) for v in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def o_comp(Q, triple, g, f):
    return Q.comp_table[triple][(g, f)]


def o_left_imp(Q, X, Y, Z, h, f):
    """Largest g in hom(Y,Z) with g o f <= h, by scan."""
    L = Q.hom[(Y, Z)]
    LXZ = Q.hom[(X, Z)]
    return o_join(L, [g for g in L.elements if o_leq(LXZ, o_comp(Q, (X, Y, Z), g, f), h)])


def o_right_imp(Q, X, Y, Z, g, h):
    """Largest f in hom(X,Y) with g o f <= h, by scan."""
    L = Q.hom[(X, Y)]
    LXZ = Q.hom[(X, Z)]
    return o_join(L, [f for f in L.elements if o_leq(LXZ, o_comp(Q, (X, Y, Z), g, f), h)])


def o_presheaves(A, X):
    """All valid presheaves A -|> *_X by raw product filtering."""
    Q = A.base
    names = A.obj_names
    spaces = [Q.hom[(A.type_of[a], X)].elements for a in names]
    out = []
    for values in product(*spaces):
        mu = dict(zip(names, values))
        ok = True
        for a in names:
            for b in names:
                t = (A.type_of[a], A.type_of[b], X)
                comp = o_comp(Q, t, mu[b], A.hom[(a, b)])
                if not o_leq(Q.hom[(A.type_of[a], X)], comp, mu[a]):
                    ok = False
        if ok:
            out.append(mu)
    return out


def o_copresheaves(A, X):
    Q = A.base
    names = A.obj_names
    spaces = [Q.hom[(X, A.type_of[a])].elements for a in names]
    out = []
    for values in product(*spaces):
        lam = dict(zip(names, values))
        ok = True
        for a in names:
            for b in names:
                t = (X, A.type_of[b], A.type_of[a])
                comp = o_comp(Q, t, A.hom[(b, a)], lam[b])
                if not o_leq(Q.hom[(X, A.type_of[a])], comp, lam[a]):
                    ok = False
        if ok:
            out.append(lam)
    return out


def o_d_compose(psi, phi):
    """Distributor composite as a plain matrix dict."""
    A, B, C = phi.dom, phi.cod, psi.cod
    Q = A.base
    out = {}
    for x in A.obj_names:
        for z in C.obj_names:
            L = Q.hom[(A.type_of[x], C.type_of[z])]
            terms = [
                o_comp(
                    Q,
                    (A.type_of[x], B.type_of[y], C.type_of[z]),
                    psi.matrix[(y, z)],
                    phi.matrix[(x, y)],
                )
                for y in B.obj_names
            ]
            out[(x, z)] = o_join(L, terms)
    return out


def o_d_leq(A, B, m1, m2):
    Q = A.base
    return all(
        o_leq(Q.hom[(A.type_of[x], B.type_of[y])], m1[(x, y)], m2[(x, y)])
        for x in A.obj_names
        for y in B.obj_names
    )


def o_is_distributor(A, B, matrix):
    Q = A.base
    for x in A.obj_names:
        for y in B.obj_names:
            L = Q.hom[(A.type_of[x], B.type_of[y])]
            for y2 in B.obj_names:
                c = o_comp(Q, (A.type_of[x], B.type_of[y2], B.type_of[y]), B.hom[(y2, y)], matrix[(x, y2)])
                if not o_leq(L, c, matrix[(x, y)]):
                    return False
            for x2 in A.obj_names:
                c = o_comp(Q, (A.type_of[x], A.type_of[x2], B.type_of[y]), matrix[(x2, y)], A.hom[(x, x2)])
                if not o_leq(L, c, matrix[(x, y)]):
                    return False
    return True


def o_search_adjoints(phi, right=True):
    """All psi with phi -| psi (right=True) or psi -| phi (right=False),
    by raw enumeration of the opposite matrix space."""
    A, B = phi.dom, phi.cod
    Q = A.base
    cells = [(y, x) for y in B.obj_names for x in A.obj_names]
    spaces = [Q.hom[(B.type_of[y], A.type_of[x])].elements for (y, x) in cells]
    found = []
    ident_a = {(x, y): A.hom[(x, y)] for x in A.obj_names for y in A.obj_names}
    ident_b = {(x, y): B.hom[(x, y)] for x in B.obj_names for y in B.obj_names}

    class _M:  # minimal duck-typed matrix wrapper for o_d_compose
        def __init__(self, dom, cod, matrix):
            self.dom, self.cod, self.matrix = dom, cod, matrix

    for values in product(*spaces):
        m = dict(zip(cells, values))
        if not o_is_distributor(B, A, m):
            continue
        psi = _M(B, A, m)
        if right:
            unit = o_d_compose(psi, _M(A, B, phi.matrix))
            counit = o_d_compose(_M(A, B, phi.matrix), psi)
            if o_d_leq(A, A, ident_a, unit) and o_d_leq(B, B, counit, ident_b):
                found.append(m)
        else:
            unit = o_d_compose(_M(A, B, phi.matrix), psi)
            counit = o_d_compose(psi, _M(A, B, phi.matrix))
            if o_d_leq(B, B, ident_b, unit) and o_d_leq(A, A, counit, ident_a):
                found.append(m)
    return found
