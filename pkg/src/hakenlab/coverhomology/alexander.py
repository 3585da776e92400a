"""Seifert matrices, Alexander polynomials and Fox's resultant formula for cover orders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAKnot

__all__ = [
    "SeifertMatrix",
    "bareiss_det",
    "alexander_poly",
    "resultant",
    "cyclotomic",
    "fox_order",
    "is_prime",
]


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer Seifert matrix of a knot (size 2g)."""

    V: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.V)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Seifert matrix must be square")
        if n % 2:
            raise NotAKnot(f"odd size {n}")
        object.__setattr__(self, "V", rows)
        d = bareiss_det([[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)])
        if d != 1:
            raise NotAKnot(f"det(V - V^T) = {d}, expected 1")

    @property
    def size(self) -> int:
        return len(self.V)

    @property
    def genus(self) -> int:
        return self.size // 2

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.V]

    def transpose(self) -> list[list[int]]:
        return [list(c) for c in zip(*self.V)] if self.V else []


def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    # Lagrange through integer nodes; coefficients come out integral
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("non-integral interpolation")
    return [int(c) for c in coeffs]


def _strip(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly = poly[:-1]
    return poly


def alexander_poly(V: SeifertMatrix) -> list[int]:
    """Coefficients (constant term first) of ``det(V - t V^T)``.

    Normalised up to units: powers of ``t`` are divided out and the leading
    coefficient is positive.
    """
    n = V.size
    if n == 0:
        return [1]
    vt = V.transpose()
    rows = V.rows()
    xs = list(range(n + 1))
    ys = [
        bareiss_det([[rows[i][j] - x * vt[i][j] for j in range(n)] for i in range(n)]) for x in xs
    ]
    poly = _strip(_interpolate(xs, ys))
    while poly and poly[0] == 0:
        poly = poly[1:]
    if poly[-1] < 0:
        poly = [-c for c in poly]
    return poly


def cyclotomic(p: int) -> list[int]:
    """``1 + t + ... + t^(p-1)``, the p-th cyclotomic polynomial for prime p."""
    return [1] * p


def resultant(f: list[int], g: list[int]) -> int:
    """Resultant via the Sylvester determinant (coefficients constant term first)."""
    f, g = _strip(list(f)), _strip(list(g))
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    fd, gd = f[::-1], g[::-1]  # highest degree first
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return bareiss_det(rows)


def fox_order(V: SeifertMatrix, p: int) -> int:
    """``|H_1|`` of the p-fold cyclic branched cover as ``|Res(Delta, Phi_p)|``; 0 means infinite."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return abs(resultant(alexander_poly(V), cyclotomic(p)))
