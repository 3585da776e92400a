from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hakenlab.eulerclass.quasimorphism import (
    DEFECT_BOUND,
    Lift,
    iterated_translation_number,
    lifted_commutator_translation,
    rotation_quasimorphism_probe,
    translation_number,
)
from hakenlab.eulerclass.sampling import random_sl2q
from hakenlab.exactfield import Mat2

from conftest import sl2q


def rotation(theta: float):
    c, s = math.cos(theta), math.sin(theta)
    return ((c, -s), (s, c))


@pytest.mark.parametrize("theta", [0.0, 0.3, 1.0, -1.0, 2.5, -3.0])
def test_rotation_translation_number(theta):
    assert translation_number(Lift(rotation(theta))) == pytest.approx(theta / (2 * math.pi), abs=1e-12)


def test_whole_turns_add():
    f = Lift(rotation(0.4), turns=3)
    assert translation_number(f) == pytest.approx(3 + 0.4 / (2 * math.pi), abs=1e-12)


def test_hyperbolic_values():
    assert translation_number(Lift(((4, 0), (0, 0.25)))) == 0
    assert abs(translation_number(Lift(((-4, 0), (0, -0.25))))) == 0.5


@given(sl2q())
def test_closed_form_matches_orbit_average(g):
    f = Lift(g.to_float())
    assert abs(translation_number(f) - iterated_translation_number(f, 2048)) <= 2 / 2048


@given(sl2q(), st.integers(2, 12))
def test_homogeneous_on_powers(g, n):
    f = Lift(g.to_float())
    assert translation_number(f.power(n)) == pytest.approx(n * translation_number(f), abs=1e-9)


@given(sl2q(), sl2q())
def test_defect_bound(g, h):
    f, k = Lift(g.to_float()), Lift(h.to_float())
    assert abs(translation_number(f * k) - translation_number(f) - translation_number(k)) <= DEFECT_BOUND


@given(sl2q())
def test_inverse_lift(g):
    f = Lift(g.to_float())
    assert translation_number(f * f.inverse()) == 0
    assert translation_number(f.inverse()) == pytest.approx(-translation_number(f), abs=1e-9)


def test_probe(rng):
    mats = [random_sl2q(rng) for _ in range(60)] + [rotation(rng.uniform(-3, 3)) for _ in range(20)]
    report = rotation_quasimorphism_probe(mats, samples=300, rng=random.Random(1))
    assert report.max_homogeneity_error < 1e-3
    assert report.max_defect <= DEFECT_BOUND
    assert report.samples == 300
    assert len(report.values) == len(mats)


def test_single_commutator_bound(rng):
    # a lifted commutator moves points by less than one turn
    for _ in range(200):
        a, b = random_sl2q(rng), random_sl2q(rng)
        assert abs(lifted_commutator_translation([(a, b)])) <= 0.5


def test_commutator_translation_is_lift_independent():
    a, b = Mat2(2, 1, 1, 1), Mat2(1, 3, 0, 1)
    x, y = Lift(a.to_float(), turns=2), Lift(b.to_float(), turns=-5)
    shifted = x * y * x.inverse() * y.inverse()
    assert translation_number(shifted) == pytest.approx(lifted_commutator_translation([(a, b)]), abs=1e-9)
