"""Executable law suites: every propositional statement as a finite check.

Each suite returns a list of LawResult records; ``passed`` is None when a
check was skipped because its enumeration exceeds the candidate cap (the
details say so).  Equivalence-style statements always compute both sides
independently; nothing substitutes one side for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .corpus import CorpusSpec, generate
from .errors import SearchSpaceExceeded, guard_search
from .fixtures import q_f, star_cat, x_f
from .mcomplete import (
    _tensor_row,
    is_m_cocomplete,
    is_m_complete,
    is_m_conically_cocomplete,
    is_m_cotensored,
    is_m_tensored,
    ub_lb,
)
from .morita import (
    cauchy_completion,
    category_isomorphism,
    converges,
    is_cauchy_complete,
    left_adjoint_presheaves,
    morita_equivalent,
)
from .presheaf import (
    _functor_between,
    check_yoneda_lemma,
    co_yoneda,
    copresheaf_category,
    find_inf_functor,
    find_sup_functor,
    functor_images,
    inf_functor_of_copresheaves,
    is_cocomplete,
    is_complete,
    is_cotensored,
    is_tensored,
    kz_check,
    monad_components,
    presheaf_category,
    sup_functor_of_presheaves,
    sup_in_PA,
    yoneda,
)
from .qcat import QCategory, QFunctor, functors_adjoint, opposite_category, validate_functor
from .qdist import (
    QDistributor,
    adjoint_pair,
    cograph,
    d_compose,
    d_left_imp,
    d_leq,
    d_meet,
    d_right_imp,
    d_star,
    graph,
    identity_dist,
    validate_distributor,
)
from .quantaloid import Arrow
from .report import Report

SUITES = ("residuation", "yoneda", "monad", "kz", "theorem4", "morita")


@dataclass
class LawResult:
    suite: str
    name: str
    passed: bool | None  # None = skipped by the candidate cap
    details: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else ("SKIP" if self.passed is None else "FAIL")
        return f"[{mark}] {self.suite}: {self.name}" + (f" ({self.details})" if self.details else "")


def builtin_fixtures() -> list[QCategory]:
    Q = q_f()
    X = x_f(Q)
    pt = star_cat(Q, "*", "pt")
    return [X, pt, cauchy_completion(X)]


def _bases(cats):
    seen = []
    for c in cats:
        if all(c.base is not q for q in seen):
            seen.append(c.base)
    return seen


def enumerate_distributors(A: QCategory, B: QCategory, cap=None) -> list[QDistributor]:
    """Every valid distributor A -|> B (oracle helper, cap-guarded)."""
    Q = A.base
    cells = [(x, y) for x in A.obj_names for y in B.obj_names]
    lattices = [Q.hom[(A.type_of[x], B.type_of[y])] for (x, y) in cells]
    total = 1
    for L in lattices:
        total *= len(L.elements)
    guard_search(total, "distributor enumeration", cap)
    out = []
    for values in product(*(L.elements for L in lattices)):
        cand = QDistributor(A, B, dict(zip(cells, values)))
        if validate_distributor(cand).ok:
            out.append(cand)
    return out


def all_functors(A: QCategory, B: QCategory) -> list[QFunctor]:
    """Every valid functor A -> B (small object sets only)."""
    choices = [
        [b for b in B.obj_names if B.type_of[b] == A.type_of[a]] for a in A.obj_names
    ]
    out = []
    for combo in product(*choices):
        F = QFunctor("F", A, B, dict(zip(A.obj_names, combo)))
        if validate_functor(F).ok:
            out.append(F)
    return out


# --- residuation -----------------------------------------------------------

def _galois_law(Q) -> LawResult:
    for X in Q.objects:
        for Y in Q.objects:
            for Z in Q.objects:
                for f in Q.hom[(X, Y)].elements:
                    fa = Arrow(X, Y, f)
                    for g in Q.hom[(Y, Z)].elements:
                        ga = Arrow(Y, Z, g)
                        for h in Q.hom[(X, Z)].elements:
                            ha = Arrow(X, Z, h)
                            c1 = Q.leq(Q.compose(ga, fa), ha)
                            c2 = Q.leq(ga, Q.left_imp(ha, fa))
                            c3 = Q.leq(fa, Q.right_imp(ga, ha))
                            if not (c1 == c2 == c3):
                                return LawResult(
                                    "residuation",
                                    f"galois law on {Q.name}",
                                    False,
                                    f"fails at g={g}, f={f}, h={h}",
                                )
    return LawResult("residuation", f"galois law on {Q.name}", True)


def _adjoint_uniqueness(Q) -> LawResult:
    for X in Q.objects:
        for Y in Q.objects:
            for f in Q.hom[(X, Y)].elements:
                fa = Arrow(X, Y, f)
                for g in Q.hom[(Y, X)].elements:
                    ga = Arrow(Y, X, g)
                    adj = Q.leq(Q.unit(X), Q.compose(ga, fa)) and Q.leq(
                        Q.compose(fa, ga), Q.unit(Y)
                    )
                    if adj and (
                        ga.value != Q.star(fa).value
                        or fa.value != Q.left_imp(Q.unit(Y), ga).value
                    ):
                        return LawResult(
                            "residuation",
                            f"adjoint uniqueness on {Q.name}",
                            False,
                            f"fails at {f} -| {g}",
                        )
    return LawResult("residuation", f"adjoint uniqueness on {Q.name}", True)


def _adjoint_shift_identities(Q) -> LawResult:
    """For every map f with g = f*: h o f = h <-/ g, g o h = f \\-> h,
    (h \\-> h') o f = h \\-> (h' o f), g o (h' <-/ h) = (g o h') <-/ h."""
    for X in Q.objects:
        for Y in Q.objects:
            for f in Q.hom[(X, Y)].elements:
                fa = Arrow(X, Y, f)
                if not Q.is_map(fa):
                    continue
                ga = Q.star(fa)
                for W in Q.objects:
                    for h in Q.hom[(Y, W)].elements:
                        ha = Arrow(Y, W, h)
                        if Q.compose(ha, fa).value != Q.left_imp(ha, ga).value:
                            return LawResult(
                                "residuation",
                                f"adjoint shift identities on {Q.name}",
                                False,
                                f"h o f = h <-/ f* fails at f={f}, h={h}",
                            )
                    for h in Q.hom[(W, Y)].elements:
                        ha = Arrow(W, Y, h)
                        if Q.compose(ga, ha).value != Q.right_imp(fa, ha).value:
                            return LawResult(
                                "residuation",
                                f"adjoint shift identities on {Q.name}",
                                False,
                                f"f* o h = f \\-> h fails at f={f}, h={h}",
                            )
                    for U in Q.objects:
                        for h in Q.hom[(U, W)].elements:
                            ha = Arrow(U, W, h)
                            for h2 in Q.hom[(Y, W)].elements:
                                h2a = Arrow(Y, W, h2)
                                lhs = Q.compose(Q.right_imp(ha, h2a), fa)
                                rhs = Q.right_imp(ha, Q.compose(h2a, fa))
                                if lhs.value != rhs.value:
                                    return LawResult(
                                        "residuation",
                                        f"adjoint shift identities on {Q.name}",
                                        False,
                                        f"(h \\-> h') o f fails at f={f}, h={h}, h'={h2}",
                                    )
                            for h2 in Q.hom[(U, Y)].elements:
                                h2a = Arrow(U, Y, h2)
                                lhs = Q.compose(ga, Q.left_imp(h2a, ha))
                                rhs = Q.left_imp(Q.compose(ga, h2a), ha)
                                if lhs.value != rhs.value:
                                    return LawResult(
                                        "residuation",
                                        f"adjoint shift identities on {Q.name}",
                                        False,
                                        f"f* o (h' <-/ h) fails at f={f}, h={h}, h'={h2}",
                                    )
    return LawResult("residuation", f"adjoint shift identities on {Q.name}", True)


def suite_residuation(cats) -> list[LawResult]:
    out = []
    for Q in _bases(cats):
        out.append(_galois_law(Q))
        out.append(_adjoint_uniqueness(Q))
        out.append(_adjoint_shift_identities(Q))

    for A in cats:
        for B in cats:
            if A.base is not B.base:
                continue
            try:
                dAB = enumerate_distributors(A, B, cap=2 ** 12)
                dBB = enumerate_distributors(B, B, cap=2 ** 12)
            except SearchSpaceExceeded:
                out.append(
                    LawResult(
                        "residuation",
                        f"distributor galois law {A.name},{B.name}",
                        None,
                        "skipped by candidate cap",
                    )
                )
                continue
            pool_phi, pool_psi, pool_eta = dAB[:24], dBB[:24], dAB[:24]
            sliced = len(dAB) > 24 or len(dBB) > 24
            ok, details = True, "first 24 of each pool in canonical order" if sliced else "exhaustive"
            for phi in pool_phi:
                for psi in pool_psi:
                    for eta in pool_eta:
                        c1 = d_leq(d_compose(psi, phi), eta)
                        c2 = d_leq(psi, d_left_imp(eta, phi))
                        c3 = d_leq(phi, d_right_imp(psi, eta))
                        if not (c1 == c2 == c3):
                            ok, details = False, "distributor galois fails"
            out.append(LawResult("residuation", f"distributor galois law {A.name},{B.name}", ok, details))

    for A in cats:
        for B in cats:
            if A.base is not B.base or len(A.obj_names) * len(B.obj_names) > 100:
                continue
            ok, details = True, ""
            for F in all_functors(A, B):
                for G in all_functors(B, A):
                    c1 = functors_adjoint(F, G)
                    c2 = graph(F) == cograph(G)
                    c3 = adjoint_pair(cograph(G), cograph(F))
                    c4 = adjoint_pair(graph(G), graph(F))
                    if not (c1 == c2 == c3 == c4):
                        ok, details = False, f"four-way equivalence fails {F.mapping}/{G.mapping}"
            out.append(
                LawResult(
                    "residuation",
                    f"graph/cograph adjunction equivalences {A.name},{B.name}",
                    ok,
                    details,
                )
            )
    return out


# --- yoneda ----------------------------------------------------------------

def suite_yoneda(cats) -> list[LawResult]:
    out = []
    for A in cats:
        rep = check_yoneda_lemma(A)
        out.append(LawResult("yoneda", f"yoneda lemma on {A.name}", rep.ok, "; ".join(rep.entries)))

        PA = presheaf_category(A)
        PPA = presheaf_category(PA)
        fwd = functor_images(yoneda(A)).fwd
        ok = all(
            sup_in_PA(A, PPA.member(fwd(n))) == PA.member(n) for n in PA.obj_names
        )
        out.append(LawResult("yoneda", f"every presheaf is the sup of its image on {A.name}", ok))

        ok = validate_functor(yoneda(A)).ok and validate_functor(co_yoneda(A)).ok
        out.append(LawResult("yoneda", f"yoneda embeddings are functors on {A.name}", ok))

        PdA = copresheaf_category(A)
        P_of_op = presheaf_category(opposite_category(A))
        iso = category_isomorphism(opposite_category(P_of_op, A.base), PdA)
        out.append(
            LawResult("yoneda", f"copresheaves are opposite presheaves on {A.name}", iso is not None)
        )
    return out


# --- monad -----------------------------------------------------------------

def suite_monad(cats) -> list[LawResult]:
    out = []
    for A in cats:
        comp = monad_components(A)
        PA = presheaf_category(A)
        PdA = copresheaf_category(A)

        law1 = d_compose(comp.m, graph(yoneda(PA))) == identity_dist(PA)
        out.append(LawResult("monad", f"m o iota_PA = id on {A.name}", law1))

        phat_iota = _functor_between(
            "phat_iota", PA, presheaf_category(PA), lambda mu: d_compose(mu, cograph(yoneda(A)))
        )
        law2 = d_compose(comp.m, graph(phat_iota)) == identity_dist(PA)
        out.append(LawResult("monad", f"m o phat(iota) = id on {A.name}", law2))

        law1d = d_compose(comp.m_dag, graph(co_yoneda(PdA))) == identity_dist(PdA)
        out.append(LawResult("monad", f"m+ o iota+_P+A = id on {A.name}", law1d))

        pdag_iota = _functor_between(
            "pdag_iota", PdA, copresheaf_category(PdA), lambda lam: d_compose(graph(co_yoneda(A)), lam)
        )
        law2d = d_compose(comp.m_dag, graph(pdag_iota)) == identity_dist(PdA)
        out.append(LawResult("monad", f"m+ o pdag(iota+) = id on {A.name}", law2d))

        try:
            PPA = presheaf_category(PA)
            m_pa = graph(sup_functor_of_presheaves(PA))
            phat_m = _functor_between(
                "phat_m",
                presheaf_category(PPA),
                PPA,
                lambda Phi: d_compose(Phi, cograph(comp.s)),
            )
            assoc = d_compose(comp.m, m_pa) == d_compose(comp.m, graph(phat_m))
            out.append(LawResult("monad", f"associativity of m on {A.name}", assoc))
        except SearchSpaceExceeded as exc:
            out.append(LawResult("monad", f"associativity of m on {A.name}", None, str(exc)))
        try:
            PdPdA = copresheaf_category(PdA)
            md_pa = graph(inf_functor_of_copresheaves(PdA))
            pdag_m = _functor_between(
                "pdag_m",
                copresheaf_category(PdPdA),
                PdPdA,
                lambda Psi: d_compose(graph(comp.s_dag), Psi),
            )
            assoc_d = d_compose(comp.m_dag, md_pa) == d_compose(comp.m_dag, graph(pdag_m))
            out.append(LawResult("monad", f"associativity of m+ on {A.name}", assoc_d))
        except SearchSpaceExceeded as exc:
            out.append(LawResult("monad", f"associativity of m+ on {A.name}", None, str(exc)))
    return out


# --- kz --------------------------------------------------------------------

def suite_kz(cats) -> list[LawResult]:
    out = []
    for A in cats:
        rep = kz_check(A)
        out.append(LawResult("kz", f"kz adjunctions on {A.name}", rep.ok, "; ".join(rep.entries)))

        comp = monad_components(A)
        PA = presheaf_category(A)
        PdA = copresheaf_category(A)
        phat_iota = _functor_between(
            "phat_iota", PA, presheaf_category(PA), lambda mu: d_compose(mu, cograph(yoneda(A)))
        )
        out.append(
            LawResult("kz", f"m -| phat(iota) on {A.name}", adjoint_pair(comp.m, graph(phat_iota)))
        )
        pdag_iota = _functor_between(
            "pdag_iota", PdA, copresheaf_category(PdA), lambda lam: d_compose(graph(co_yoneda(A)), lam)
        )
        out.append(
            LawResult(
                "kz", f"pdag(iota+) -| m+ on {A.name}", adjoint_pair(graph(pdag_iota), comp.m_dag)
            )
        )

        s_found = find_sup_functor(PA)
        out.append(
            LawResult(
                "kz",
                f"sup functor agrees with closed formula on {A.name}",
                s_found is not None and s_found.mapping == comp.s.mapping,
            )
        )
        i_found = find_inf_functor(PdA)
        out.append(
            LawResult(
                "kz",
                f"inf functor agrees with closed formula on {A.name}",
                i_found is not None and i_found.mapping == comp.s_dag.mapping,
            )
        )
    return out


# --- theorem4 --------------------------------------------------------------

def suite_theorem4(cats, include_empty: bool = True) -> list[LawResult]:
    out = []
    for A in cats:
        name = A.name
        r_cc = is_m_cocomplete(A)
        r_c = is_m_complete(A)
        out.append(
            LawResult(
                "theorem4",
                f"m-cocomplete iff m-complete on {name}",
                r_cc.verdict == r_c.verdict,
                f"cocomplete={r_cc.verdict}, complete={r_c.verdict}",
            )
        )

        _, lb, _ = ub_lb(A)
        psi = d_compose(cograph(yoneda(A)), graph(lb))
        ident = d_star(psi) == graph(co_yoneda(A))
        adj = (not r_cc.verdict) or adjoint_pair(psi, graph(co_yoneda(A)))
        out.append(
            LawResult(
                "theorem4",
                f"canonical witness psi on {name}",
                ident and adj,
                f"psi* = (Y+)_nat: {ident}; psi -| (Y+)_nat when m-cocomplete: {adj}",
            )
        )

        t = is_m_tensored(A)
        c = is_m_conically_cocomplete(A, include_empty)
        out.append(
            LawResult(
                "theorem4",
                f"m-cocomplete iff m-tensored and m-conically cocomplete on {name}",
                r_cc.verdict == (t.verdict and c.verdict),
                f"cocomplete={r_cc.verdict}, tensored={t.verdict}, conical={c.verdict}",
            )
        )

        if is_cauchy_complete(A):
            coc = is_cocomplete(A)
            com = is_complete(A)
            ten = is_tensored(A)
            cot = is_cotensored(A)
            ok = (
                r_cc.verdict == coc
                and r_c.verdict == com
                and t.verdict == ten
                and is_m_cotensored(A).verdict == cot
            )
            out.append(
                LawResult(
                    "theorem4",
                    f"cauchy-complete coincidences on {name}",
                    ok,
                    f"cocomplete={coc}, complete={com}, tensored={ten}, cotensored={cot}",
                )
            )

        PA = presheaf_category(A)
        ynat = cograph(yoneda(A))
        ok = True
        for n in PA.obj_names:
            mu = PA.member(n)
            rows = [
                _tensor_row(A, a, Arrow(A.type_of[a], PA.type_of[n], mu(a, "*")))
                for a in A.obj_names
            ]
            if rows:
                meet_row = d_meet(rows)
                if any(meet_row("*", z) != ynat(n, z) for z in A.obj_names):
                    ok = False
        out.append(LawResult("theorem4", f"conical decomposition of Y^nat rows on {name}", ok))

        Q = A.base
        ok = True
        for a in A.obj_names:
            for X in Q.objects:
                for v in Q.hom[(A.type_of[a], X)].elements:
                    f = Arrow(A.type_of[a], X, v)
                    row = _tensor_row(A, a, f)
                    shifted = QDistributor(
                        A, row.dom, {(z, "*"): Q.compose(f, A.arrow(z, a)).value for z in A.obj_names}
                    )
                    target = PA.name_of(shifted)
                    if any(row("*", z) != ynat(target, z) for z in A.obj_names):
                        ok = False
        out.append(LawResult("theorem4", f"tensor rows are Y^nat rows on {name}", ok))

        out.append(
            LawResult(
                "theorem4",
                f"m-complete iff opposite m-cocomplete on {name}",
                r_c.verdict == is_m_cocomplete(opposite_category(A)).verdict,
            )
        )
    return out


# --- morita ----------------------------------------------------------------

def suite_morita(cats) -> list[LawResult]:
    out = []
    for A in cats:
        PA = presheaf_category(A)
        Y = yoneda(A)
        points = {PA.name_of(mu) for mu in left_adjoint_presheaves(A)}
        ok = all(Y(a) in points for a in A.obj_names)
        out.append(LawResult("morita", f"representables are completion points on {A.name}", ok))

        cc = cauchy_completion(A)
        out.append(
            LawResult("morita", f"completion is cauchy complete on {A.name}", is_cauchy_complete(cc))
        )
        eq, _ = morita_equivalent(A, cc)
        out.append(LawResult("morita", f"equivalent to own completion on {A.name}", eq))
        eq2, _ = morita_equivalent(cc, cauchy_completion(cc))
        out.append(LawResult("morita", f"completion is idempotent on {A.name}", eq2))

    bad = []
    for A in cats:
        for B in cats:
            if A.base is not B.base:
                continue
            for F in all_functors(A, B)[:8]:
                got = converges(graph(F))
                if got is None or graph(got) != graph(F):
                    bad.append((A.name, B.name, F.mapping))
    out.append(
        LawResult("morita", "graphs of functors converge", not bad, str(bad) if bad else "")
    )

    eqs = {}
    for A in cats:
        for B in cats:
            if A.base is B.base:
                eqs[(A.name, B.name)] = morita_equivalent(A, B)[0]
    refl = all(eqs[(a, b)] for (a, b) in eqs if a == b)
    sym = all(eqs[(a, b)] == eqs[(b, a)] for (a, b) in eqs if (b, a) in eqs)
    trans = all(
        not (eqs[(a, b)] and eqs.get((b, c), False)) or eqs.get((a, c), True)
        for (a, b) in eqs
        for (b2, c) in eqs
        if b == b2
    )
    out.append(LawResult("morita", "equivalence relation laws", refl and sym and trans))

    for A in cats:
        for B in cats:
            if A.base is not B.base or A.name >= B.name:
                continue
            eq, witness = morita_equivalent(A, B)
            if not eq:
                continue
            out.append(
                LawResult(
                    "morita",
                    f"witness induces distributor isomorphism {A.name},{B.name}",
                    _morita_dist_iso(A, B, witness),
                )
            )
    return out


def _equivalence_pair(A: QCategory):
    """The canonical distributors u: A -|> A_cc and v: A_cc -|> A."""
    PA = presheaf_category(A)
    cc = cauchy_completion(A)
    ynat = cograph(yoneda(A))
    u = QDistributor(
        A, cc, {(a, n): PA.member(n)(a, "*") for a in A.obj_names for n in cc.obj_names}
    )
    v = QDistributor(
        cc, A, {(n, a): ynat(n, a) for n in cc.obj_names for a in A.obj_names}
    )
    return u, v


def _morita_dist_iso(A: QCategory, B: QCategory, witness: dict) -> bool:
    """Transport the completion isomorphism to an isomorphism in the
    distributor quantaloid and verify both composites are identities."""
    from .qcat import skeleton

    ccA, repA = skeleton(cauchy_completion(A))
    ccB, repB = skeleton(cauchy_completion(B))
    uA, vA = _equivalence_pair(A)
    uB, vB = _equivalence_pair(B)
    # completions of enumerated presheaf categories are already skeletal,
    # so the skeleton maps are identities and the witness applies directly
    J = QFunctor("J", cauchy_completion(A), cauchy_completion(B), witness)
    Jinv = QFunctor("Jinv", cauchy_completion(B), cauchy_completion(A), {v: k for k, v in witness.items()})
    alpha = d_compose(vB, d_compose(graph(J), uA))
    beta = d_compose(vA, d_compose(graph(Jinv), uB))
    return d_compose(beta, alpha) == identity_dist(A) and d_compose(alpha, beta) == identity_dist(B)


def run_suite(
    suite: str,
    cats=None,
    corpus: CorpusSpec | None = None,
    include_empty: bool = True,
) -> list[LawResult]:
    cats = list(cats) if cats is not None else builtin_fixtures()
    results: list[LawResult] = []
    wanted = SUITES if suite == "all" else (suite,)
    for s in wanted:
        if s == "residuation":
            results.extend(suite_residuation(cats))
        elif s == "yoneda":
            results.extend(suite_yoneda(cats))
        elif s == "monad":
            results.extend(suite_monad(cats))
        elif s == "kz":
            results.extend(suite_kz(cats))
        elif s == "theorem4":
            pool = list(cats)
            if corpus is not None:
                pool.extend(generate(corpus))
            results.extend(suite_theorem4(pool, include_empty))
        elif s == "morita":
            results.extend(suite_morita(cats))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return results
