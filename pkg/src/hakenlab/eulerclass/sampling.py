"""Pseudo-random SL_2(Q) elements and pair systems for property tests and corpus runs."""

from __future__ import annotations

import os
import random
from fractions import Fraction
from functools import lru_cache

from ..exactfield import Mat2, classify
from .cocycle import commutator
from .doubling import PairSystem

__all__ = ["seeded_rng", "random_sl2q", "random_pair_system"]

SEED_ENV = "HAKENLAB_SEED"


def seeded_rng(default: int = 0) -> random.Random:
    """RNG seeded from ``HAKENLAB_SEED`` when set, else from ``default``."""
    return random.Random(int(os.environ.get(SEED_ENV, default)))


@lru_cache(maxsize=None)
def _shear(k: int, upper: bool) -> Mat2:
    return Mat2(1, k, 0, 1) if upper else Mat2(1, 0, k, 1)


def _elementary(rng: random.Random, bound: int) -> Mat2:
    k = rng.randint(-bound, bound)
    return _shear(k, rng.random() < 0.5)


def random_sl2q(rng: random.Random, length: int = 3, bound: int = 3) -> Mat2:
    """Word in elementary matrices and small rational diagonals; determinant exactly 1."""
    g = Mat2.identity()
    for _ in range(length):
        if rng.random() < 0.25:
            q = Fraction(rng.randint(1, 3), rng.randint(1, 3)) * rng.choice((1, -1))
            g = g * Mat2.diag(q, 1 / q)
        else:
            g = g * _elementary(rng, bound)
    return g


def random_pair_system(rng: random.Random, n: int, length: int = 2, bound: int = 2) -> PairSystem:
    """Random pairs, resampled until the commutator product is hyperbolic."""
    while True:
        pairs = tuple(
            (random_sl2q(rng, length, bound), random_sl2q(rng, length, bound)) for _ in range(n)
        )
        h = Mat2.identity()
        for a, b in pairs:
            h = h * commutator(a, b)
        if classify(h) == "hyperbolic":
            return PairSystem(pairs)
