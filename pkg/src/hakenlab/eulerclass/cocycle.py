"""The bounded Euler cocycle on PSL_2(K) and Euler numbers of surface-group representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import RelationViolated
from ..exactfield import INF, Mat2, ProjPoint, psi

__all__ = [
    "CocycleContext",
    "RelationStatus",
    "SurfaceTuple",
    "commutator",
    "ell",
    "euler_cocycle_sum",
    "euler_number",
    "maximal_euler",
]


@dataclass(frozen=True)
class CocycleContext:
    basepoint: ProjPoint = INF


DEFAULT_CONTEXT = CocycleContext()


class RelationStatus(str, Enum):
    EXACT_SL = "ExactSL"
    EXACT_PSL = "ExactPSL"
    NONE = "None"


def commutator(x: Mat2, y: Mat2) -> Mat2:
    return x * y * x.inverse() * y.inverse()


def ell(g1: Mat2, g2: Mat2, ctx: CocycleContext = DEFAULT_CONTEXT) -> int:
    """Inhomogeneous orientation cocycle ``psi(p, g1 p, g1 g2 p)``.

    Depends only on the projective classes of ``g1`` and ``g2``.
    """
    p = ctx.basepoint
    q = g1.apply(p)
    return psi(p, q, g1.apply(g2.apply(p)))


def _status(product: Mat2) -> RelationStatus:
    if product.is_identity():
        return RelationStatus.EXACT_SL
    if product.is_minus_identity():
        return RelationStatus.EXACT_PSL
    return RelationStatus.NONE


@dataclass(frozen=True)
class SurfaceTuple:
    """Images ``(x_i, y_i)`` of the standard generators of a genus-g surface group.

    ``relation`` is always recomputed from the matrices.
    """

    pairs: tuple[tuple[Mat2, Mat2], ...]
    relation: RelationStatus = field(init=False, compare=False)

    def __post_init__(self):
        pairs = tuple((x, y) for x, y in self.pairs)
        if not pairs:
            raise ValueError("genus must be at least 1")
        for x, y in pairs:
            if not (x.is_sl and y.is_sl):
                raise ValueError("surface generators must have determinant 1")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "relation", _status(self.partial_products()[-1]))

    @property
    def genus(self) -> int:
        return len(self.pairs)

    def partial_products(self) -> list[Mat2]:
        """``[I_0, I_1, ..., I_g]`` with ``I_j = [x_1,y_1]...[x_j,y_j]``."""
        out = [Mat2.identity()]
        for x, y in self.pairs:
            out.append(out[-1] * commutator(x, y))
        return out

    def generators(self) -> list[Mat2]:
        return [m for pair in self.pairs for m in pair]

    def conjugate(self, c: Mat2) -> "SurfaceTuple":
        ci = c.inverse()
        return SurfaceTuple(tuple((c * x * ci, c * y * ci) for x, y in self.pairs))


def euler_cocycle_sum(t: SurfaceTuple, ctx: CocycleContext = DEFAULT_CONTEXT) -> int:
    """Evaluate ``ell`` on the standard fundamental 2-cycle of the surface.

    The cycle is ``sum_j (I_{j-1}|x_j) + (I_{j-1}x_j|y_j) - (I_{j-1}x_j y_j x_j^-1|x_j) - (I_j|y_j)``.
    Points are pushed through the partial words once and reused by the four terms.
    """
    if t.relation is RelationStatus.NONE:
        raise RelationViolated(
            "product of commutators is not +-I", residual=t.partial_products()[-1]
        )
    p = ctx.basepoint
    total = 0
    prefix = Mat2.identity()
    for x, y in t.pairs:
        m1 = prefix * x
        m2 = m1 * y
        m3 = m2 * x.inverse()
        nxt = m3 * y.inverse()
        q0 = prefix.apply(p)
        q1 = m1.apply(p)
        q2 = m2.apply(p)
        q3 = m3.apply(p)
        q4 = nxt.apply(p)
        total += psi(p, q0, q1) + psi(p, q1, q2) - psi(p, q3, q2) - psi(p, q4, q3)
        prefix = nxt
    return total


def euler_number(t: SurfaceTuple, ctx: CocycleContext = DEFAULT_CONTEXT) -> int:
    """Euler number of the PSL_2 representation, normalised so ``|e| <= 2g - 2``.

    The orientation cocycle represents twice the Euler class, so the cycle sum
    is halved; it is always even.
    """
    s = euler_cocycle_sum(t, ctx)
    if s % 2:
        raise ArithmeticError(f"odd orientation-cocycle sum {s}; the cycle is not closed")
    return s // 2


def maximal_euler(genus: int) -> int:
    """Milnor-Wood maximum for a closed surface of the given genus."""
    return 2 * genus - 2
