from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hakenlab.errors import IrrationalSpectrum, MixedRadicals, ParseError
from hakenlab.exactfield import (
    INF,
    Mat2,
    ProjPoint,
    Scalar,
    classify,
    det_pair,
    fixed_points,
    parse_point,
    parse_scalar,
    psi,
    squarefree_decompose,
)

from conftest import sl2q, small_fractions

surds = st.builds(lambda a, b: Scalar(a, b, 5), small_fractions, small_fractions)


def test_squarefree_decompose():
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(49) == (7, 1)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_large_cofactor_uses_factorisation():
    p = 1_000_003  # prime beyond the trial-division limit
    assert squarefree_decompose(p * p * 3) == (p, 3)


@given(st.integers(1, 10**6))
def test_squarefree_product(n):
    s, d = squarefree_decompose(n)
    assert s * s * d == n
    assert all(d % (k * k) for k in range(2, math.isqrt(d) + 1))


def test_surd_arithmetic():
    r = Scalar(0, 1, 2)
    assert r * r == 2
    assert (1 + r) * (1 - r) == -1
    assert (1 / (1 + r)) == r - 1
    assert Scalar(1, 1, 8) == Scalar(1, 2, 2)


def test_mixed_radicals_rejected():
    with pytest.raises(MixedRadicals):
        Scalar(0, 1, 2) + Scalar(0, 1, 3)


@given(surds, surds)
def test_field_axioms_in_q_sqrt5(x, y):
    assert x + y == y + x
    assert x * y == y * x
    if y:
        assert (x / y) * y == x


@given(surds)
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    assert (x.sign() == 0) == (not x)


@given(surds, surds)
def test_order_is_total_and_compatible(x, y):
    assert (x < y) + (y < x) + (x == y) == 1
    if x < y:
        assert x + 1 < y + 1


def test_sqrt():
    assert Scalar(Fraction(9, 4)).sqrt() == Fraction(3, 2)
    assert Scalar(3, 2, 2).sqrt() == Scalar(1, 1, 2)  # (1 + sqrt 2)^2
    with pytest.raises(IrrationalSpectrum):
        Scalar(2).sqrt()
    assert Scalar(12).sqrt(extend=True) == Scalar(0, 2, 3)


def test_psi_normalisation_and_symmetry():
    zero, one = ProjPoint(0), ProjPoint(1)
    assert psi(zero, one, INF) == 1
    assert psi(one, zero, INF) == -1
    assert psi(one, INF, zero) == 1
    assert psi(zero, zero, INF) == 0


@given(small_fractions, small_fractions, small_fractions)
def test_psi_on_finite_points(x, y, z):
    expected = (x - y) * (y - z) * (z - x)
    sign = (expected > 0) - (expected < 0)
    assert psi(ProjPoint(x), ProjPoint(y), ProjPoint(z)) == sign


@given(sl2q(), small_fractions, small_fractions, small_fractions)
def test_psi_invariant_under_sl2(g, x, y, z):
    pts = [ProjPoint(v) for v in (x, y, z)]
    assert psi(*(g.apply(p) for p in pts)) == psi(*pts)


def test_det_pair():
    assert det_pair(ProjPoint(0), INF) == -1
    assert det_pair(INF, ProjPoint(0)) == 1


def test_moebius_and_classify():
    g = Mat2(2, 1, 1, 1)
    assert g.apply(INF) == ProjPoint(2)
    assert g.apply(ProjPoint(-1)) == INF
    assert classify(g) == "hyperbolic"
    assert classify(Mat2(1, 1, 0, 1)) == "parabolic"
    assert classify(Mat2(0, -1, 1, 0)) == "elliptic"


def test_fixed_points_attracting_first():
    g = Mat2.diag(3, Fraction(1, 3))
    assert fixed_points(g) == (INF, ProjPoint(0))
    plus, minus = fixed_points(Mat2(2, 1, 1, 1), extend=True)
    assert plus == ProjPoint(Scalar(Fraction(1, 2), Fraction(1, 2), 5))
    assert minus == ProjPoint(Scalar(Fraction(1, 2), Fraction(-1, 2), 5))
    with pytest.raises(IrrationalSpectrum):
        fixed_points(Mat2(2, 1, 1, 1))


@given(sl2q())
def test_fixed_points_are_fixed(g):
    if g.is_scalar() or classify(g) == "elliptic":
        return
    for p in fixed_points(g, extend=True):
        assert g.apply(p) == p


def test_parse_scalar():
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    assert parse_scalar("1/2-sqrt(20)", sqrt=5) == Scalar(Fraction(1, 2), -2, 5)
    assert parse_scalar("sqrt(9)") == 3
    assert parse_point("inf") == INF


@pytest.mark.parametrize("text", ["1//2", "", "1/0", "abc", "2**3", "sqrt(-2)"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text, sqrt=2)


def test_surd_needs_declared_field():
    with pytest.raises(ParseError):
        parse_scalar("sqrt(2)")
    with pytest.raises(ParseError):
        parse_scalar("sqrt(2)", sqrt=3)


@given(st.lists(small_fractions, min_size=3, max_size=8, unique=True), small_fractions)
def test_pinned_cyclic_order_is_linear(values, pin):
    # x < y  iff  psi(pin, x, y) = +1 is a strict total order on finite sets
    p = ProjPoint(pin)
    pts = [ProjPoint(v) for v in values if v != pin]

    def less(x, y):
        return psi(p, x, y) == 1

    for x in pts:
        assert not less(x, x)
        for y in pts:
            if x != y:
                assert less(x, y) != less(y, x)
            for z in pts:
                if less(x, y) and less(y, z):
                    assert less(x, z)
