"""First homology of cyclic branched covers as modules over the deck group C_p.

A module is a presentation matrix ``M`` (``H_1 = Z^k / M Z^m``) together with
an integer matrix ``Z`` for the deck transformation.  Every subgroup used by
the cohomology computation is handled as a lattice between ``M Z^m`` and
``Z^k``, so orders and quotients come out of Smith forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import InfiniteModule, MissingData, PresentationMismatch, WrongComponentCount
from .alexander import SeifertMatrix, fox_order, is_prime
from .records import LinkRecord
from .smith import (
    AbelianGroupInv,
    SmithForm,
    hstack,
    identity,
    in_column_space,
    integer_kernel,
    lattice_index,
    matmul,
    smith,
    smith_normal_form,
)

__all__ = [
    "GaloisModule",
    "MAX_PRIME",
    "cyclic_cover_presentation",
    "cyclic_cover_homology",
    "goeritz_module",
    "cover_module",
    "double_cover_homology",
    "cp_cohomology_dims",
    "StructureReport",
    "structure_check",
    "RedeiReport",
    "redei_check",
]

Matrix = list[list[int]]

# block presentations grow as p * 2g; beyond this the Smith forms stop being cheap
MAX_PRIME = 13


def _sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _cols(a: Matrix) -> list[list[int]]:
    return [list(c) for c in zip(*a)] if a and a[0] else []


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _log_exact(n: int, p: int) -> int:
    v = _valuation(n, p)
    if p**v != n:
        raise ArithmeticError(f"{n} is not a power of {p}")
    return v


@dataclass(frozen=True, eq=False)
class GaloisModule:
    """``coker(M)`` with deck action ``Z``, prime ``p`` and ``kappa`` branch components."""

    M: Matrix
    Z: Matrix
    p: int
    kappa: int = 1
    generators: int = field(default=-1)

    def __post_init__(self):
        k = len(self.M) if self.M else len(self.Z)
        if self.generators < 0:
            object.__setattr__(self, "generators", k)
        if len(self.Z) != self.generators or any(len(r) != self.generators for r in self.Z):
            raise ValueError("action matrix must be square of the generator count")

    @cached_property
    def smith(self) -> SmithForm:
        return smith_normal_form(self.M, self.generators)

    @cached_property
    def group(self) -> AbelianGroupInv:
        return smith(self.M, rows=self.generators)

    @property
    def rank(self) -> int:
        return self.generators

    def kills(self, F: Matrix) -> bool:
        """Does the endomorphism with matrix ``F`` vanish on the cokernel?"""
        if self.generators == 0:
            return True
        return all(in_column_space(self.smith, c) for c in _cols(F))

    def zeta_power(self, n: int) -> Matrix:
        out = identity(self.generators)
        for _ in range(n):
            out = matmul(self.Z, out)
        return out

    def norm_matrix(self) -> Matrix:
        k = self.generators
        out = [[0] * k for _ in range(k)]
        power = identity(k)
        for _ in range(self.p):
            out = [[x + y for x, y in zip(r, s)] for r, s in zip(out, power)]
            power = matmul(self.Z, power)
        return out

    def descends(self) -> bool:
        """Is the column space of ``M`` invariant under ``Z``?"""
        if self.generators == 0 or not self.M or not self.M[0]:
            return True
        return self.kills(matmul(self.Z, self.M))

    def order_divides_p(self) -> bool:
        return self.kills(_sub(self.zeta_power(self.p), identity(self.generators)))

    def norm_is_zero(self) -> bool:
        return self.kills(self.norm_matrix())

    # lattices between M Z^m and Z^k -------------------------------------
    def _with_relations(self, F: Matrix) -> Matrix:
        if not self.M or not self.M[0]:
            return [list(r) for r in F]
        return hstack(F, self.M)

    def _preimage(self, F: Matrix) -> Matrix:
        # {x : F x in im M} is the projection of ker [F | M]
        kernel = integer_kernel(self._with_relations(F))
        return [list(r) for r in kernel[: self.generators]]

    def _quotient_order(self, big: Matrix, small: Matrix) -> int:
        k = self.generators
        sf = smith_normal_form(big)
        if not all(in_column_space(sf, c) for c in _cols(small)):
            raise ArithmeticError("expected lattice containment fails")
        return lattice_index(small, k) // lattice_index(big, k)

    def subquotient_order(self, kernel_of: Matrix, image_of: Matrix) -> int:
        """Order of ``ker(kernel_of) / im(image_of)`` on the cokernel."""
        return self._quotient_order(self._preimage(kernel_of), self._with_relations(image_of))

    def kernel_order(self, F: Matrix) -> int:
        zero = [[0] * self.generators for _ in range(self.generators)]
        return self.subquotient_order(F, zero)


def cyclic_cover_presentation(V: SeifertMatrix, p: int) -> tuple[Matrix, Matrix]:
    """Block presentation of ``H_1`` of the p-fold cyclic branched cover and its deck action.

    Diagonal blocks ``V``, blocks ``-V^T`` one step below the diagonal
    (cyclically); the deck transformation shifts blocks down by one.
    """
    n = V.size
    vt = V.transpose()
    rows = V.rows()
    k = p * n
    M = [[0] * k for _ in range(k)]
    Z = [[0] * k for _ in range(k)]
    for b in range(p):
        nb = (b + 1) % p
        for i in range(n):
            Z[nb * n + i][b * n + i] = 1
            for j in range(n):
                M[b * n + i][b * n + j] += rows[i][j]
                M[nb * n + i][b * n + j] -= vt[i][j]
    return M, Z


def cyclic_cover_homology(V: SeifertMatrix, p: int, kappa: int = 1) -> GaloisModule:
    """H_1 of the p-fold cyclic branched cover of a knot, cross-checked against Fox's formula."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"p = {p} exceeds the supported range (p <= {MAX_PRIME})")
    M, Z = cyclic_cover_presentation(V, p)
    module = GaloisModule(M, Z, p, kappa, generators=p * V.size)
    expected = fox_order(V, p)
    if module.group.order != expected:
        raise PresentationMismatch(
            f"block presentation gives {module.group} but the resultant gives order {expected}"
        )
    return module


def goeritz_module(rec: LinkRecord) -> GaloisModule:
    """Double branched cover presented by the Goeritz matrix; the involution acts by -1."""
    if rec.goeritz is None:
        raise MissingData(f"{rec.name}: no Goeritz matrix")
    G = [list(r) for r in rec.goeritz]
    k = len(G)
    minus = [[-x for x in r] for r in identity(k)]
    return GaloisModule(G, minus, 2, rec.kappa, generators=k)


def cover_module(rec: LinkRecord, p: int) -> GaloisModule:
    if rec.seifert is not None:
        return cyclic_cover_homology(rec.seifert, p, rec.kappa)
    if p == 2 and rec.goeritz is not None:
        return goeritz_module(rec)
    raise MissingData(f"{rec.name}: no presentation for the {p}-fold cover")


def double_cover_homology(rec: LinkRecord) -> AbelianGroupInv:
    """``coker(V + V^T)`` for knots, ``coker(G)`` for Goeritz data."""
    if rec.seifert is not None:
        V, vt = rec.seifert.rows(), rec.seifert.transpose()
        n = rec.seifert.size
        return smith([[V[i][j] + vt[i][j] for j in range(n)] for i in range(n)], rows=n)
    if rec.goeritz is not None:
        return smith([list(r) for r in rec.goeritz], rows=len(rec.goeritz))
    raise MissingData(f"{rec.name}: no Seifert or Goeritz matrix")


def cp_cohomology_dims(W: GaloisModule) -> tuple[int, int, int]:
    """``(h0, h1, h2)`` for the C_p-module ``W``.

    ``h1 = log_p |ker N / im(1 - zeta)|`` and ``h2 = log_p |ker(1 - zeta) / im N|``
    are computed as separate lattice quotients, each checked to be a p-group.
    ``h0`` is the p-adic valuation of the order of the fixed submodule.
    """
    if not W.group.is_finite:
        raise InfiniteModule(f"H_1 = {W.group} is infinite")
    k = W.generators
    if k == 0:
        return 0, 0, 0
    one_minus = _sub(identity(k), W.Z)
    norm = W.norm_matrix()
    h1 = _log_exact(W.subquotient_order(norm, one_minus), W.p)
    h2 = _log_exact(W.subquotient_order(one_minus, norm), W.p)
    h0 = _valuation(W.kernel_order(one_minus), W.p)
    return h0, h1, h2


@dataclass
class StructureReport:
    name: str
    p: int
    kappa: int
    group: AbelianGroupInv
    status: str  # PASS, FAIL or SKIP
    h: tuple[int, int, int] | None = None
    norm_zero: bool | None = None
    p_torsion: tuple[int, ...] = ()
    reasons: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "kappa": self.kappa,
            "group": str(self.group),
            "invariants": self.group.to_json(),
            "status": self.status,
            "h0": self.h[0] if self.h else None,
            "h1": self.h[1] if self.h else None,
            "h2": self.h[2] if self.h else None,
            "norm_zero": self.norm_zero,
            "p_torsion": list(self.p_torsion),
            "reasons": list(self.reasons),
        }


def structure_check(rec: LinkRecord, p: int) -> StructureReport:
    """Galois-module checks for one record and prime.

    PASS needs: ``Z`` descends with ``Z^p = 1``, the norm vanishes, and
    ``h0 = h1 = h2 = kappa - 1``; for knots also no p-torsion.  Modules with
    infinite ``H_1`` have no finite cohomology to compare and report SKIP.
    """
    W = cover_module(rec, p)
    group = W.group
    torsion = group.primary_part(p)
    reasons = []
    if not W.descends():
        reasons.append("deck action does not preserve the relations")
    elif not W.order_divides_p():
        reasons.append(f"deck action has order not dividing {p}")
    norm_zero = W.norm_is_zero() if not reasons else None
    if norm_zero is False:
        reasons.append("norm element acts non-trivially")
    if not group.is_finite:
        status = "FAIL" if reasons else "SKIP"
        if not reasons:
            reasons.append(f"H_1 = {group} is infinite")
        return StructureReport(rec.name, p, rec.kappa, group, status, None, norm_zero, torsion, reasons)
    h = cp_cohomology_dims(W) if not reasons else None
    target = rec.kappa - 1
    if h is not None:
        if h[1] != h[2]:
            reasons.append(f"h1 = {h[1]} differs from h2 = {h[2]}")
        if h[1] != target:
            reasons.append(f"h1 = {h[1]}, expected kappa - 1 = {target}")
        if h[0] != target:
            reasons.append(f"h0 = {h[0]}, expected kappa - 1 = {target}")
    if rec.is_knot and torsion:
        reasons.append(f"knot cover has {p}-torsion {torsion}")
    status = "FAIL" if reasons else "PASS"
    return StructureReport(rec.name, p, rec.kappa, group, status, h, norm_zero, torsion, reasons)


@dataclass
class RedeiReport:
    name: str
    linking_parity: int
    group: AbelianGroupInv
    verdict: str  # ConsistentA, ConsistentB or VIOLATION
    two_part: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "d": self.linking_parity,
            "group": str(self.group),
            "invariants": self.group.to_json(),
            "two_part": list(self.two_part),
            "verdict": self.verdict,
        }


def redei_check(rec: LinkRecord) -> RedeiReport:
    """Classify the double branched cover of a two-component link by linking parity.

    Odd linking: ``b_1 = 0`` and 2-part ``Z/2``.  Even linking: ``b_1 > 0`` or
    the 2-part is cyclic of order at least 4.
    """
    if rec.components != 2:
        raise WrongComponentCount(f"{rec.name} has {rec.components} components, need 2")
    group = double_cover_homology(rec)
    d = rec.lk(0, 1) % 2
    two = group.primary_part(2)
    if d == 1:
        ok = group.free_rank == 0 and two == (2,)
        verdict = "ConsistentA" if ok else "VIOLATION"
    else:
        ok = group.free_rank > 0 or (len(two) == 1 and two[0] >= 4)
        verdict = "ConsistentB" if ok else "VIOLATION"
    return RedeiReport(rec.name, d, group, verdict, two)
