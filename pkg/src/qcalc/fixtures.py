"""Built-in fixtures: the four-element frame, its two-point category, chains."""

from __future__ import annotations

from .lattice import FiniteLattice, build_lattice
from .qcat import QCategory
from .quantaloid import Quantaloid, one_object


def frame_f() -> FiniteLattice:
    """bot < p,q < k with p,q incomparable."""
    return build_lattice(
        ["bot", "p", "q", "k"],
        [("bot", "p"), ("bot", "q"), ("p", "k"), ("q", "k")],
        name="F",
    )


def q_f() -> Quantaloid:
    return one_object(frame_f(), "meet", name="QF")


def x_f(Q: Quantaloid | None = None) -> QCategory:
    """Two objects with X(x,y) = p, X(y,x) = q; diagonals forced to the unit k."""
    Q = Q or q_f()
    hom = {("x", "x"): "k", ("x", "y"): "p", ("y", "x"): "q", ("y", "y"): "k"}
    return QCategory("X", Q, [("x", "*"), ("y", "*")], hom)


def star_cat(Q: Quantaloid, X: str, name: str | None = None) -> QCategory:
    """The one-object category *_X with hom the unit arrow."""
    return QCategory(name or f"*_{X}", Q, [("*", X)], {("*", "*"): Q.units[X]})


def chain(n: int, name: str | None = None) -> FiniteLattice:
    els = [f"c{i}" for i in range(n)]
    return build_lattice(els, [(els[i], els[i + 1]) for i in range(n - 1)], name=name or f"C{n}")


def chain_quantaloid(n: int) -> Quantaloid:
    return one_object(chain(n), "meet", name=f"QC{n}")


def discrete_two(Q: Quantaloid, X: str | None = None, name: str = "D2") -> QCategory:
    """Two objects of equal type with bottom off-diagonal homs."""
    X = X or Q.objects[0]
    L = Q.hom[(X, X)]
    hom = {
        ("x", "x"): Q.units[X],
        ("y", "y"): Q.units[X],
        ("x", "y"): L.bottom,
        ("y", "x"): L.bottom,
    }
    return QCategory(name, Q, [("x", X), ("y", X)], hom)


FRAME_F_QWS = """\
# Four-element frame, its one-object quantaloid, and the two-point category.
lattice F
elements bot p q k
leq bot p
leq bot q
leq p k
leq q k
end

quantaloid QF
objects star
hom star star F
unit star k
compose star star star builtin meet
end

category X over QF
object x : star
object y : star
hom x x k
hom x y p
hom y x q
hom y y k
end

category pt over QF
object s : star
hom s s k
end

# The adjoint presheaf (k,k) of X, written as a distributor into pt.
distributor mu_kk : X -> pt
at x s k
at y s k
end

# Graph of the functor pt -> X picking x.
distributor zeta_x : pt -> X
at s x k
at s y p
end
"""
