"""Goldman twists along the separating curve ``gamma = [x_1,y_1]...[x_kappa,y_kappa]``.

The discrete twist conjugates every pair after position ``kappa`` by the
involution commuting with ``gamma``; the continuous flow conjugates them by
``exp(tA)`` where ``exp(A) = +-gamma``.  The flow is the only floating-point
computation in the package and runs in mpmath with at least 50 significant
digits, more when the entries of the flowed tuple grow large.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import mpmath

from ..errors import NotHyperbolic
from ..exactfield import Mat2, classify, fixed_points
from .cocycle import RelationStatus, SurfaceTuple
from .doubling import reflection_commuting

__all__ = ["goldman_discrete_twist", "twist_flow_numeric", "TwistFlowReport"]

FLOW_DPS = 50


def _working_dps(t: SurfaceTuple, gamma: Mat2, time: float) -> int:
    """Digits that keep the absolute residuals tiny: the tail is conjugated by
    ``exp(tA)`` with ``|exp(A)| ~ |tr gamma|`` and then multiplied out."""
    entries = [abs(float(x)) for m in t.generators() for row in m.rows() for x in row]
    mag = math.log10(max(entries + [1.0]))
    lam = math.log10(abs(float(gamma.trace())) + 2)
    return FLOW_DPS + math.ceil(4 * (mag + 2 * abs(time) * lam))


def _separating_element(t: SurfaceTuple, kappa: int) -> Mat2:
    if not 1 <= kappa < t.genus:
        raise ValueError(f"kappa must satisfy 1 <= kappa < {t.genus}")
    gamma = t.partial_products()[kappa]
    if classify(gamma) != "hyperbolic":
        raise NotHyperbolic(f"I_{kappa} has trace {gamma.trace()}")
    return gamma


def goldman_discrete_twist(t: SurfaceTuple, kappa: int) -> SurfaceTuple:
    gamma = _separating_element(t, kappa)
    r = reflection_commuting(gamma)
    ri = r.inverse()
    head = t.pairs[:kappa]
    tail = tuple((ri * x * r, ri * y * r) for x, y in t.pairs[kappa:])
    return SurfaceTuple(head + tail)


@dataclass
class TwistFlowReport:
    pairs: list[tuple[mpmath.matrix, mpmath.matrix]]
    relation_residual: float
    gamma_trace_drift: float
    generator_trace_drift: float
    time: float


def _mp(m: Mat2) -> mpmath.matrix:
    return mpmath.matrix([[m.a.to_mpf(), m.b.to_mpf()], [m.c.to_mpf(), m.d.to_mpf()]])


def _comm(x, y):
    return x * y * mpmath.inverse(x) * mpmath.inverse(y)


def _sup(m) -> mpmath.mpf:
    return max(abs(m[i, j]) for i in range(m.rows) for j in range(m.cols))


def twist_flow_numeric(t: SurfaceTuple, kappa: int, time: float) -> TwistFlowReport:
    """Flow of the trace function of ``gamma`` for the given time, with residuals.

    Residuals are measured against the unperturbed tuple: the surface relation
    ``prod [x_i^t, y_i^t] = +-I``, the trace of ``gamma`` (recomputed from the
    flowed generators) and the traces of all generators.
    """
    gamma = _separating_element(t, kappa)
    plus, minus = fixed_points(gamma, extend=True)
    with mpmath.workdps(_working_dps(t, gamma, time)):
        basis = mpmath.matrix(
            [[plus.a.to_mpf(), minus.a.to_mpf()], [plus.b.to_mpf(), minus.b.to_mpf()]]
        )
        g = _mp(gamma)
        binv = mpmath.inverse(basis)
        eig = binv * g * basis
        logs = [mpmath.log(abs(eig[0, 0])), mpmath.log(abs(eig[1, 1]))]
        tt = mpmath.mpf(time)
        flow = basis * mpmath.diag([mpmath.exp(tt * v) for v in logs]) * binv
        flow_inv = basis * mpmath.diag([mpmath.exp(-tt * v) for v in logs]) * binv

        orig = [(_mp(x), _mp(y)) for x, y in t.pairs]
        moved = orig[:kappa] + [(flow_inv * x * flow, flow_inv * y * flow) for x, y in orig[kappa:]]

        sign = -1 if t.relation is RelationStatus.EXACT_PSL else 1
        prod = mpmath.eye(2)
        head = None
        for i, (x, y) in enumerate(moved):
            prod = prod * _comm(x, y)
            if i + 1 == kappa:
                head = prod
        residual = _sup(prod - sign * mpmath.eye(2))
        tail = mpmath.inverse(head) * prod
        gamma_drift = max(
            abs(_trace(head) - _trace(g)),
            abs(_trace(tail) - _trace(mpmath.inverse(g)) * sign),
        )
        gen_drift = max(
            abs(_trace(m1) - _trace(m0))
            for p0, p1 in zip(orig, moved)
            for m0, m1 in zip(p0, p1)
        )
        return TwistFlowReport(
            pairs=moved,
            relation_residual=float(residual),
            gamma_trace_drift=float(gamma_drift),
            generator_trace_drift=float(gen_drift),
            time=float(time),
        )


def _trace(m) -> mpmath.mpf:
    return m[0, 0] + m[1, 1]
