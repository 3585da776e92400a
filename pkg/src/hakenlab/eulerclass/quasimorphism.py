"""Numerical probe of the translation-number quasimorphism on the universal cover of SL_2(R).

SL_2(R) acts on the circle of directions; the real line is its universal
cover, measured in turns (one full turn of a vector equals 1).  An element of
the universal cover is stored as ``(A, k)``: the canonical lift of ``A`` (the
one moving the direction of ``e_1`` by less than half a turn in absolute
value), followed by ``k`` whole turns.  Rotation by ``theta`` in
``[-pi, pi)`` then has translation number ``theta / 2 pi`` and hyperbolic
matrices with positive trace have translation number 0.

The translation number of one lift is read off in closed form (a fixed
direction for real spectrum, the rotation angle otherwise);
:func:`iterated_translation_number` is the slow orbit average kept as an
independent cross-check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from gmpy2 import mpq

__all__ = [
    "Lift",
    "translation_number",
    "iterated_translation_number",
    "rotation_quasimorphism_probe",
    "ProbeReport",
    "lifted_commutator_translation",
    "DEFECT_BOUND",
]

# defect of the translation number on the universal cover, in turns: at most
# one, plus float slack
DEFECT_BOUND = 1 + 1e-6

Matrix = tuple[tuple[mpq, mpq], tuple[mpq, mpq]]


def _mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _exact(x) -> Matrix:
    # entries are kept as exact rationals: a float matrix cannot represent
    # high powers of a hyperbolic element, which are numerically rank one
    return tuple(tuple(mpq(v) for v in row) for row in x)  # type: ignore[return-value]


def _unit(m: Matrix) -> tuple[float, float, float, float]:
    # positive rescaling does not change the action on directions
    s = max(abs(v) for row in m for v in row)
    (a, b), (c, d) = m
    return float(a / s), float(b / s), float(c / s), float(d / s)


def _turns(vx: float, vy: float) -> float:
    """Direction angle in turns, in [-1/2, 1/2)."""
    t = math.atan2(vy, vx) / (2 * math.pi)
    return -0.5 if t >= 0.5 else t


def _canonical(m: Matrix, x: float) -> float:
    """Canonical lift of ``m`` applied to ``x`` (in turns)."""
    a, b, c, d = _unit(m)
    base = math.floor(x)
    theta = 2 * math.pi * (x - base)
    phi0 = _turns(a, c)
    phi = _turns(a * math.cos(theta) + b * math.sin(theta), c * math.cos(theta) + d * math.sin(theta))
    gap = (phi - phi0) % 1.0
    # orientation: x in the first half turn moves less than half a turn past
    # the image of e_1, x in the second half more; this settles images that
    # float noise puts on the wrong side of phi0
    frac = x - base
    if frac < 0.5 and gap > 0.75:
        gap = 0.0
    elif frac > 0.5 and gap < 0.25:
        gap = 1.0
    return base + phi0 + gap


@dataclass(frozen=True)
class Lift:
    matrix: Matrix
    turns: int = 0

    def __post_init__(self):
        object.__setattr__(self, "matrix", _exact(self.matrix))

    def __call__(self, x: float) -> float:
        return _canonical(self.matrix, x) + self.turns

    def __mul__(self, other: "Lift") -> "Lift":
        prod = _mul(self.matrix, other.matrix)
        # the composite differs from the canonical lift of the product by whole turns
        shift = round(_canonical(self.matrix, _canonical(other.matrix, 0.0)) - _canonical(prod, 0.0))
        return Lift(prod, self.turns + other.turns + shift)

    def inverse(self) -> "Lift":
        (a, b), (c, d) = self.matrix
        inv = Lift(((d, -b), (-c, a)))
        # self * inv covers the identity, but possibly shifted by whole turns
        return Lift(inv.matrix, -self.turns - (Lift(self.matrix) * inv).turns)

    def power(self, n: int) -> "Lift":
        out, base = Lift(_exact(((1, 0), (0, 1)))), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


def _eigendirection(m: Matrix, lam: float) -> tuple[float, float]:
    a, b, c, d = m
    u = (b, lam - a)
    v = (lam - d, c)
    return u if math.hypot(*u) >= math.hypot(*v) else v


def translation_number(f: Lift) -> float:
    """Translation number of a lift, in turns."""
    (a, b), (c, d) = f.matrix
    scale = max(abs(v) for v in (a, b, c, d))
    det = (a * d - b * c) / (scale * scale)
    tr = (a + d) / scale
    disc = float(tr * tr - 4 * det)
    if disc >= 0:
        unit = _unit(f.matrix)
        lam = (float(tr) + math.copysign(math.sqrt(disc), float(tr))) / 2
        vx, vy = _eigendirection(unit, lam)
        x = _turns(vx, vy)
        # a fixed direction moves by a whole turn, or half a turn for negative spectrum
        return round(2 * (f(x) - x)) / 2
    cosine = float(tr) / (2 * math.sqrt(float(det)))
    alpha = math.copysign(math.acos(max(-1.0, min(1.0, cosine))), float(c))
    tau0 = alpha / (2 * math.pi)
    return tau0 + round(f(0.0) - tau0)


def iterated_translation_number(f: Lift, iterations: int = 4096) -> float:
    """Orbit average ``f^N(0) / N``; error at most ``1 / N``."""
    x = 0.0
    for _ in range(iterations):
        x = f(x)
    return x / iterations


@dataclass
class ProbeReport:
    values: list[float]
    max_defect: float
    max_homogeneity_error: float
    samples: int


def rotation_quasimorphism_probe(
    mats: list, samples: int, max_power: int = 32, rng: random.Random | None = None
) -> ProbeReport:
    """Estimate translation numbers of canonical lifts and the quasimorphism constants.

    ``max_defect`` is ``max |tau(xy) - tau(x) - tau(y)|`` over ``samples``
    random pairs (product taken in the universal cover).
    ``max_homogeneity_error`` is ``max |tau(x^n) - n tau(x)| / n`` for
    ``n <= max_power``.
    """
    rng = rng or random.Random(0)
    lifts = [Lift(_exact(_as_matrix(m))) for m in mats]
    tau = [translation_number(x) for x in lifts]
    defect = 0.0
    for _ in range(samples):
        i, j = rng.randrange(len(lifts)), rng.randrange(len(lifts))
        defect = max(defect, abs(translation_number(lifts[i] * lifts[j]) - tau[i] - tau[j]))
    homog = 0.0
    for x, t in zip(lifts, tau):
        xn = x
        for n in range(2, max_power + 1):
            xn = xn * x
            homog = max(homog, abs(translation_number(xn) - n * t) / n)
    return ProbeReport(values=tau, max_defect=defect, max_homogeneity_error=homog, samples=samples)


def _as_matrix(m) -> Matrix:
    # rational matrices stay exact, so central products are exactly +-I
    if hasattr(m, "field") and m.field() == 0:
        return tuple(tuple(mpq(x.a) for x in row) for row in m.rows())  # type: ignore[return-value]
    if hasattr(m, "to_float"):
        m = m.to_float()
    (a, b), (c, d) = m
    return ((float(a), float(b)), (float(c), float(d)))


def lifted_commutator_translation(pairs) -> float:
    """Translation number of ``prod [a~_i, b~_i]`` for any lifts ``a~_i, b~_i`` (independent of the choice)."""
    out = Lift(((1, 0), (0, 1)))
    for a, b in pairs:
        x, y = Lift(_as_matrix(a)), Lift(_as_matrix(b))
        out = out * x * y * x.inverse() * y.inverse()
    return translation_number(out)
