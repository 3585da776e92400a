"""Doubling of n generator pairs to a genus-2n surface tuple, and the free-discreteness certificate.

Given pairs ``(a_i, b_i)`` whose commutator product ``h`` is hyperbolic, let
``r`` be the involution with eigenvalues +1, -1 on the eigenvectors of ``h``.
The pairs ``(r b_{n+1-i} r^-1, r a_{n+1-i} r^-1)`` close the surface relation
because ``r`` commutes with ``h``.  When the resulting Euler number reaches the
Milnor-Wood maximum, Goldman's theorem makes the original generators a free
discrete group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from ..errors import NotHyperbolic
from ..exactfield import Mat2, ProjPoint, classify, fixed_points
from .cocycle import (
    DEFAULT_CONTEXT,
    CocycleContext,
    SurfaceTuple,
    commutator,
    euler_number,
    maximal_euler,
)

__all__ = [
    "PairSystem",
    "Verdict",
    "Certificate",
    "reflection_commuting",
    "double_tuple",
    "f_invariant",
    "certify_free_discrete",
]


class Verdict(str, Enum):
    CERTIFIED = "CertifiedFreeDiscrete"
    UNKNOWN = "Unknown"

    @property
    def short(self) -> str:
        return "certified" if self is Verdict.CERTIFIED else "unknown"


def _vector(p: ProjPoint) -> tuple:
    return p.a, p.b


def reflection_commuting(g: Mat2, extend: bool = True) -> Mat2:
    """The involution ``r`` (det -1) commuting with hyperbolic ``g``: +1 on the
    attracting eigenline, -1 on the repelling one."""
    if classify(g) != "hyperbolic":
        raise NotHyperbolic(f"trace {g.trace()} does not exceed 2 in absolute value")
    plus, minus = fixed_points(g, extend=extend)
    (p0, p1), (m0, m1) = _vector(plus), _vector(minus)
    basis = Mat2(p0, m0, p1, m1)
    return basis * Mat2.diag(1, -1) * basis.inverse()


@dataclass(frozen=True)
class PairSystem:
    pairs: tuple[tuple[Mat2, Mat2], ...]
    extend: bool = field(default=True, compare=False)

    def __post_init__(self):
        pairs = tuple((a, b) for a, b in self.pairs)
        if not pairs:
            raise ValueError("need at least one pair")
        for a, b in pairs:
            if not (a.is_sl and b.is_sl):
                raise ValueError("pair matrices must have determinant 1")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)

    @cached_property
    def h(self) -> Mat2:
        out = Mat2.identity()
        for a, b in self.pairs:
            out = out * commutator(a, b)
        return out

    @cached_property
    def r(self) -> Mat2:
        return reflection_commuting(self.h, extend=self.extend)

    def generators(self) -> list[Mat2]:
        return [m for pair in self.pairs for m in pair]


def double_tuple(ps: PairSystem) -> SurfaceTuple:
    r = ps.r
    ri = r.inverse()
    tail = tuple((r * b * ri, r * a * ri) for a, b in reversed(ps.pairs))
    return SurfaceTuple(ps.pairs + tail)


def f_invariant(ps: PairSystem, ctx: CocycleContext = DEFAULT_CONTEXT) -> int:
    return euler_number(double_tuple(ps), ctx)


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    euler: int
    maximal: int
    genus: int

    def __post_init__(self):
        if self.verdict is Verdict.CERTIFIED and abs(self.euler) != self.maximal:
            raise ValueError("a certificate needs a maximal Euler number")


def certify_free_discrete(ps: PairSystem, ctx: CocycleContext = DEFAULT_CONTEXT) -> Certificate:
    """One-sided test: CERTIFIED means free and discrete; UNKNOWN asserts nothing."""
    genus = 2 * ps.n
    e = f_invariant(ps, ctx)
    top = maximal_euler(genus)
    verdict = Verdict.CERTIFIED if abs(e) == top else Verdict.UNKNOWN
    return Certificate(verdict, e, top, genus)
