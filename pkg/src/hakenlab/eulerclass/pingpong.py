"""Schottky ping-pong search: an independent certificate that hyperbolic generators
generate a free discrete group.

Each generator ``g`` gets two closed arcs of P^1, ``U(g-)`` around its repelling
and ``U(g+)`` around its attracting fixed point.  If all arcs are pairwise
disjoint and ``g`` maps the closure of the complement of ``U(g-)`` into
``U(g+)``, the ping-pong lemma gives freeness, and the open complement of the
arcs is a wandering set, which gives discreteness.  All endpoint checks are
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import HakenlabError
from ..exactfield import Mat2, ProjPoint, classify, fixed_points, psi
from .doubling import PairSystem, Verdict

__all__ = ["Arc", "pingpong_oracle", "pingpong_arcs", "DYADIC_SIZES"]

# candidate half-widths 2^-16 .. 2^-1, smallest first
DYADIC_SIZES = tuple(Fraction(1, 2**k) for k in range(16, 0, -1))


@dataclass(frozen=True)
class Arc:
    """Closed arc of P^1 traversed positively from ``start`` to ``end``."""

    start: ProjPoint
    end: ProjPoint

    def __contains__(self, x: ProjPoint) -> bool:
        return x == self.start or x == self.end or psi(self.start, x, self.end) == 1

    def _before(self, x: ProjPoint, y: ProjPoint) -> bool:
        # x, y in the arc; is x reached no later than y starting from `start`?
        if x == y or x == self.start:
            return True
        if y == self.start:
            return False
        return psi(self.start, x, y) == 1

    def contains_arc(self, other: "Arc") -> bool:
        return (
            other.start in self
            and other.end in self
            and self._before(other.start, other.end)
        )

    def meets(self, other: "Arc") -> bool:
        return (
            other.start in self
            or other.end in self
            or self.start in other
            or self.end in other
        )

    def image(self, g: Mat2) -> "Arc":
        return Arc(g.apply(self.start), g.apply(self.end))


def _chart(plus: ProjPoint, minus: ProjPoint) -> Mat2:
    # w=inf -> plus, w=0 -> minus, orientation preserving
    c = Mat2(plus.a, minus.a, plus.b, minus.b)
    if c.det.sign() < 0:
        c = Mat2(-plus.a, minus.a, -plus.b, minus.b)
    return c


def _arcs_for(g: Mat2) -> tuple[Arc, Arc] | None:
    plus, minus = fixed_points(g, extend=True)
    chart = _chart(plus, minus)
    for eps in DYADIC_SIZES:
        around_minus = Arc(chart.apply(ProjPoint(-eps)), chart.apply(ProjPoint(eps)))
        around_plus = Arc(chart.apply(ProjPoint(1 / eps)), chart.apply(ProjPoint(-1 / eps)))
        outside = Arc(around_minus.end, around_minus.start)
        if around_plus.contains_arc(outside.image(g)):
            return around_minus, around_plus
    return None


def pingpong_arcs(gens: list[Mat2]) -> list[tuple[Arc, Arc]] | None:
    """Arcs ``(U(g-), U(g+))`` per generator, or None when the search fails.

    Fixed points in two different quadratic fields end the search (None).
    """
    if any(not g.is_sl or classify(g) != "hyperbolic" for g in gens):
        return None
    try:
        arcs = []
        for g in gens:
            found = _arcs_for(g)
            if found is None:
                return None
            arcs.append(found)
        flat = [arc for pair in arcs for arc in pair]
        for i, u in enumerate(flat):
            for v in flat[i + 1 :]:
                if u.meets(v):
                    return None
    except HakenlabError:
        return None
    return arcs


def pingpong_oracle(ps: PairSystem) -> Verdict:
    arcs = pingpong_arcs(ps.generators())
    return Verdict.CERTIFIED if arcs is not None else Verdict.UNKNOWN
