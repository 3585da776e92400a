from __future__ import annotations

import random

import pytest

from hakenlab.errors import NotHyperbolic
from hakenlab.eulerclass import (
    PairSystem,
    RelationStatus,
    SurfaceTuple,
    double_tuple,
    euler_number,
    goldman_discrete_twist,
    twist_flow_numeric,
)
from hakenlab.eulerclass.sampling import random_pair_system

from conftest import rep


def test_twist_is_an_involution(rng):
    for i in range(40):
        t = double_tuple(random_pair_system(rng, 1 + i % 2))
        for kappa in range(1, t.genus):
            try:
                once = goldman_discrete_twist(t, kappa)
            except NotHyperbolic:
                continue
            assert goldman_discrete_twist(once, kappa) == t


def test_twist_keeps_the_relation_and_the_head():
    t = double_tuple(PairSystem(rep("two-pairs-maximal")))
    for kappa in (1, 2, 3):
        s = goldman_discrete_twist(t, kappa)
        assert s.relation is RelationStatus.EXACT_SL
        assert s.pairs[:kappa] == t.pairs[:kappa]


def test_twist_can_change_euler_number():
    # the involution reverses orientation on the twisted half
    t = SurfaceTuple(rep("calibration-doubled"))
    assert euler_number(t) == -2
    assert euler_number(goldman_discrete_twist(t, 1)) == 0


def test_kappa_range():
    t = SurfaceTuple(rep("calibration-doubled"))
    with pytest.raises(ValueError):
        goldman_discrete_twist(t, 0)
    with pytest.raises(ValueError):
        goldman_discrete_twist(t, 2)


def test_twist_needs_hyperbolic_separating_curve():
    with pytest.raises(NotHyperbolic):
        goldman_discrete_twist(SurfaceTuple(rep("trivial-genus2")), 1)


@pytest.mark.parametrize("kappa", [1, 2, 3])
@pytest.mark.parametrize("time", [-1.0, -0.3, 0.0, 0.5, 1.0])
def test_flow_preserves_relation_and_traces(time, kappa):
    # the separating curve at kappa = 2 has trace about -1.8e8; the flowed
    # entries reach 1e16 at |t| = 1
    t = double_tuple(PairSystem(rep("two-pairs-maximal")))
    report = twist_flow_numeric(t, kappa, time)
    assert report.relation_residual < 1e-9
    assert report.gamma_trace_drift < 1e-9
    assert report.generator_trace_drift < 1e-9


def test_flow_at_time_zero_is_identity():
    t = SurfaceTuple(rep("calibration-doubled"))
    report = twist_flow_numeric(t, 1, 0.0)
    for (x, y), (x0, y0) in zip(report.pairs, t.pairs):
        for m, m0 in ((x, x0), (y, y0)):
            for i, row in enumerate(m0.to_float()):
                for j, f in enumerate(row):
                    assert abs(float(m[i, j]) - f) <= 1e-12 * max(1.0, abs(f))


def test_flow_moves_the_tail():
    t = double_tuple(random_pair_system(random.Random(3), 1))
    report = twist_flow_numeric(t, 1, 0.7)
    x, _ = report.pairs[1]
    x0 = t.pairs[1][0].to_float()
    assert max(abs(float(x[i, j]) - x0[i][j]) for i in range(2) for j in range(2)) > 1e-6
