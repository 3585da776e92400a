from __future__ import annotations

import cmath
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hakenlab.coverhomology.alexander import (
    SeifertMatrix,
    alexander_poly,
    bareiss_det,
    fox_order,
    is_prime,
    resultant,
)
from hakenlab.errors import NotAKnot

TREFOIL = SeifertMatrix(((-1, 1), (0, -1)))
FIGURE8 = SeifertMatrix(((1, 1), (0, -1)))


def block_sum(*vs: SeifertMatrix) -> SeifertMatrix:
    n = sum(v.size for v in vs)
    out = [[0] * n for _ in range(n)]
    k = 0
    for v in vs:
        for i, row in enumerate(v.rows()):
            out[k + i][k : k + v.size] = row
        k += v.size
    return SeifertMatrix(tuple(map(tuple, out)))


@st.composite
def seifert_matrices(draw):
    """Symmetric part plus the standard intersection form; det(V - V^T) = 1."""
    g = draw(st.integers(1, 2))
    n = 2 * g
    V = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            V[i][j] = V[j][i] = draw(st.integers(-3, 3))
    for i in range(g):
        V[2 * i][2 * i + 1] += 1
    return SeifertMatrix(tuple(map(tuple, V)))


def sympy_alexander(V: SeifertMatrix):
    t = sympy.symbols("t")
    M = sympy.Matrix(V.rows()) - t * sympy.Matrix(V.transpose())
    return sympy.Poly(M.det(), t), t


def test_bareiss():
    assert bareiss_det([[2, 1], [1, 1]]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([]) == 1


def test_known_polynomials():
    assert alexander_poly(TREFOIL) == [1, -1, 1]
    assert alexander_poly(FIGURE8) == [1, -3, 1]
    assert alexander_poly(SeifertMatrix(())) == [1]
    assert alexander_poly(block_sum(TREFOIL, TREFOIL)) == [1, -2, 3, -2, 1]


def test_not_a_knot():
    with pytest.raises(NotAKnot):
        SeifertMatrix(((1, 0), (0, 1)))
    with pytest.raises(NotAKnot):
        SeifertMatrix(((1,),))
    with pytest.raises(ValueError):
        SeifertMatrix(((1, 0),))


@settings(max_examples=40)
@given(seifert_matrices())
def test_alexander_matches_sympy(V):
    poly, t = sympy_alexander(V)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    assert alexander_poly(V) == coeffs


@settings(max_examples=40)
@given(seifert_matrices(), st.sampled_from([2, 3, 5, 7]))
def test_resultant_matches_sympy(V, p):
    poly, t = sympy_alexander(V)
    expected = abs(int(sympy.resultant(poly.as_expr(), sum(t**k for k in range(p)), t)))
    assert fox_order(V, p) == expected


@given(seifert_matrices(), st.sampled_from([2, 3, 5]))
def test_fox_product_formula(V, p):
    # |H_1| = prod_k |Delta(zeta^k)| evaluated numerically
    delta = alexander_poly(V)
    prod = 1.0
    for k in range(1, p):
        z = cmath.exp(2j * math.pi * k / p)
        prod *= abs(sum(c * z**i for i, c in enumerate(delta)))
    assert fox_order(V, p) == round(prod)


def test_resultant_edge_cases():
    assert resultant([3], [1, 1]) == 3
    assert resultant([1, 1], [1, 1]) == 0
    assert resultant([], [1, 1]) == 0


def test_fox_orders():
    assert [fox_order(TREFOIL, p) for p in (2, 3, 5, 7)] == [3, 4, 1, 1]
    assert [fox_order(FIGURE8, p) for p in (2, 3, 5, 7)] == [5, 16, 121, 841]
    with pytest.raises(ValueError):
        fox_order(TREFOIL, 4)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
