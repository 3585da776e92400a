"""Threshold arithmetic for virtual Hakenness of ramified covers, and the isotropic rank bound.

The threshold for a p-fold cover ramified along a link, with ``F_1`` a Seifert
surface of ``K_1`` meeting the other components ``P`` times, is

    T = 4 - p (chi(F_1) - 2) + (p - 1) P,

which is two more than the generator count of the preimage surface:
``2 - chi p + (p-1) P + p`` generators for the connected p-fold piece, glued
to the spun graph along ``p`` circles (``r_1 + r_2 + (p - 1)`` generators for
a union along ``p`` components).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from gmpy2 import mpq

from .coverhomology.alexander import is_prime
from .coverhomology.cover import cover_module
from .coverhomology.records import LinkRecord
from .errors import DimensionMismatch

__all__ = [
    "BranchProfile",
    "HakenVerdict",
    "CERTIFIED",
    "INCONCLUSIVE",
    "haken_threshold",
    "q_generator_bound",
    "generator_bound",
    "amalgam_bound",
    "domination_threshold",
    "linking_hypothesis",
    "dim_h1_mod_q",
    "profile_from_record",
    "SymplecticMap",
    "LagrangianReport",
    "lagrangian_rank_check",
    "symplectic_form",
    "random_isotropic_map",
]

CERTIFIED = "CertifiedVirtuallyHaken"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class BranchProfile:
    p: int
    q: int
    chiF: int
    P: int
    dimH1q: int
    source: str = "manual"
    # does some K_i (i >= 2) link K_1 non-trivially mod p?  None when unknown
    linking_ok: bool | None = None

    def __post_init__(self):
        if not (is_prime(self.p) and is_prime(self.q)):
            raise ValueError("p and q must be prime")
        if self.p == self.q:
            raise ValueError("p and q must differ")
        if self.chiF > 1:
            raise ValueError("a Seifert surface has Euler characteristic at most 1")
        if self.P < 0 or self.dimH1q < 0:
            raise ValueError("P and the homology dimension are non-negative")
        if self.source not in ("manual", "computed"):
            raise ValueError("source is 'manual' or 'computed'")


@dataclass(frozen=True)
class HakenVerdict:
    threshold: int
    dim: int
    verdict: str
    source: str
    linking_ok: bool | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "dim": self.dim,
            "verdict": self.verdict,
            "source": self.source,
            "linking_hypothesis": self.linking_ok,
        }


def amalgam_bound(r1: int, r2: int, p: int) -> int:
    """Generators of a union of two connected pieces glued along ``p`` components."""
    if r1 < 0 or r2 < 0 or p < 1:
        raise ValueError("need r1, r2 >= 0 and p >= 1")
    return r1 + r2 + p - 1


def q_generator_bound(p: int, chiF: int, P: int) -> int:
    """Generators of the connected p-fold piece: ``2 - chi p + (p-1) P + p``."""
    return 2 - chiF * p + (p - 1) * P + p


def generator_bound(p: int, chiF: int, P: int) -> int:
    """Generators of the whole preimage surface: ``2 - chi p + (p-1) P + 2p``."""
    return 2 - chiF * p + (p - 1) * P + 2 * p


def _threshold(p: int, chiF: int, P: int) -> int:
    return 4 - p * (chiF - 2) + (p - 1) * P


def haken_threshold(bp: BranchProfile) -> HakenVerdict:
    """Compare ``dim H_1(N; F_q)`` with the threshold.

    A profile known to violate the linking hypothesis is never certified.
    """
    t = _threshold(bp.p, bp.chiF, bp.P)
    ok = bp.dimH1q >= t and bp.linking_ok is not False
    return HakenVerdict(t, bp.dimH1q, CERTIFIED if ok else INCONCLUSIVE, bp.source, bp.linking_ok)


def domination_threshold(g: int, b1q: int) -> bool:
    """``b_1(M; F_q) >= g + 2``: enough homology for a genus-g p-cycle not to dominate."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return b1q >= g + 2


def linking_hypothesis(rec: LinkRecord, p: int) -> bool:
    return any(rec.lk(i, 0) % p for i in range(1, rec.components))


def dim_h1_mod_q(rec: LinkRecord, p: int, q: int) -> int:
    """``dim H_1(N; F_q)`` of the p-fold cyclic branched cover, from its invariant factors."""
    return cover_module(rec, p).group.dim_mod(q)


def profile_from_record(rec: LinkRecord, p: int, q: int, dim: int | None = None) -> BranchProfile:
    if rec.chiF is None or rec.P is None:
        raise ValueError(f"{rec.name}: chiF and P are required")
    source = "manual" if dim is not None else "computed"
    value = dim if dim is not None else dim_h1_mod_q(rec, p, q)
    return BranchProfile(p, q, rec.chiF, rec.P, value, source, linking_hypothesis(rec, p))


# isotropic images -------------------------------------------------------


def symplectic_form(g: int) -> list[list[int]]:
    """``[[0, I], [-I, 0]]`` of size 2g."""
    n = 2 * g
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return J


@dataclass(frozen=True)
class SymplecticMap:
    """Columns of ``B`` are images of a basis in a 2g-dimensional symplectic space."""

    B: tuple[tuple[mpq, ...], ...]
    genus: int

    def __post_init__(self):
        B = tuple(tuple(mpq(x) for x in row) for row in self.B)
        if len(B) != 2 * self.genus:
            raise DimensionMismatch(f"B has {len(B)} rows, expected {2 * self.genus}")
        if len({len(r) for r in B}) > 1:
            raise DimensionMismatch("B rows have different lengths")
        object.__setattr__(self, "B", B)

    @property
    def columns(self) -> int:
        return len(self.B[0]) if self.B else 0

    def gram(self) -> list[list[mpq]]:
        """``B^T J B``."""
        g, B, r = self.genus, self.B, self.columns

        def omega(i, j):
            return sum(B[k][i] * B[g + k][j] - B[g + k][i] * B[k][j] for k in range(g))

        return [[omega(i, j) for j in range(r)] for i in range(r)]


def _rank(rows: list[list[mpq]]) -> int:
    m = [list(r) for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class LagrangianReport:
    verdict: str  # Consistent or Witness
    rank: int | None
    genus: int
    witness: tuple[int, int] | None = None


def lagrangian_rank_check(m: SymplecticMap) -> LagrangianReport:
    """Isotropic image has rank at most g; otherwise return a pair of columns pairing non-trivially."""
    G = m.gram()
    for i, row in enumerate(G):
        for j, v in enumerate(row):
            if v:
                return LagrangianReport("Witness", None, m.genus, (i, j))
    rank = _rank([list(r) for r in m.B]) if m.columns else 0
    if rank > m.genus:
        raise ArithmeticError(f"isotropic image of rank {rank} > {m.genus}")
    return LagrangianReport("Consistent", rank, m.genus)


def random_isotropic_map(rng: random.Random, g: int, columns: int, steps: int = 6) -> SymplecticMap:
    """Random combinations of a Lagrangian basis moved by random symplectic transvections."""
    n = 2 * g
    basis = [[mpq(int(i == j)) for i in range(n)] for j in range(g)]  # e_1 .. e_g
    J = symplectic_form(g)
    for _ in range(steps):
        v = [rng.randint(-1, 1) for _ in range(n)]
        c = mpq(rng.choice((-1, 1)), rng.randint(1, 2))
        Jv = [sum(J[i][k] * v[k] for k in range(n)) for i in range(n)]

        def move(x):
            w = sum(a * b for a, b in zip(x, Jv))  # omega(x, v) up to sign
            return [a + c * w * b for a, b in zip(x, v)]

        basis = [move(x) for x in basis]
    cols = []
    for _ in range(columns):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        cols.append([sum(k * b[i] for k, b in zip(coeffs, basis)) for i in range(n)])
    return SymplecticMap(tuple(tuple(cols[c][i] for c in range(columns)) for i in range(n)), g)
