"""Smith normal form over the integers, with unimodular transforms.

Matrices are lists of rows of Python ints.  ``smith_normal_form(A)`` returns
``(D, P, Q)`` with ``P A Q = D`` diagonal, ``P`` and ``Q`` unimodular and
``D[i][i]`` dividing ``D[i+1][i+1]``.  Everything else in the package that
needs lattices (cokernels, kernels, column-space membership, indices) goes
through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = [
    "AbelianGroupInv",
    "SmithForm",
    "smith_normal_form",
    "smith",
    "in_column_space",
    "integer_kernel",
    "lattice_index",
    "identity",
    "matmul",
    "transpose",
    "hstack",
]

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = list(zip(*b)) if b else []
    if not cols:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def transpose(a: Matrix, rows: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*a)]


def hstack(*blocks: Matrix) -> Matrix:
    rows = len(blocks[0])
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]  # non-zero diagonal entries, positive, divisibility chain
    P: Matrix
    Q: Matrix
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(a: Matrix, cols: int | None = None) -> SmithForm:
    """Diagonalise ``a`` by unimodular row and column operations.

    ``cols`` is needed only when ``a`` has no rows.
    """
    m = len(a)
    n = len(a[0]) if m else (cols or 0)
    A = [list(map(int, row)) for row in a]
    P = identity(m)
    Q = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
            P[dst] = [x + k * y for x, y in zip(P[dst], P[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in Q:
                row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest non-zero entry of the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            piv = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // piv))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // piv))
                    if A[t][j]:
                        done = False
            if not done:
                # a remainder is smaller than the pivot: move it into place
                _, i, j = min(
                    [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                    + [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                )
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # divisibility: the pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
        t += 1
    return SmithForm(tuple(A[i][i] for i in range(t)), P, Q, m, n)


@dataclass(frozen=True)
class AbelianGroupInv:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``, all ``d_i >= 2``."""

    free_rank: int = 0
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.factors)
        if self.free_rank < 0 or any(d < 2 for d in f):
            raise ValueError("invalid invariant factors")
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "factors", f)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        """Order of the group; 0 encodes infinite."""
        if self.free_rank:
            return 0
        out = 1
        for d in self.factors:
            out *= d
        return out

    def torsion_order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    def primary_part(self, p: int) -> tuple[int, ...]:
        """Orders of the cyclic summands of the p-primary torsion, ascending."""
        out = []
        for d in self.factors:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            if q > 1:
                out.append(q)
        return tuple(out)

    def dim_mod(self, q: int) -> int:
        """``dim_{F_q}`` of the group tensored with ``F_q``."""
        return self.free_rank + sum(1 for d in self.factors if d % q == 0)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "factors": list(self.factors)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.factors]
        return " ⊕ ".join(parts) if parts else "0"


def smith(a: Matrix, rows: int | None = None) -> AbelianGroupInv:
    """Cokernel of ``a`` (``rows`` generators; needed only when ``a`` has no columns)."""
    m = len(a) if a else (rows or 0)
    n = len(a[0]) if a else 0
    if n == 0:
        return AbelianGroupInv(m, ())
    sf = smith_normal_form(a)
    return AbelianGroupInv(m - sf.rank, tuple(d for d in sf.diagonal if d != 1))


def in_column_space(sf: SmithForm, v: list[int]) -> bool:
    """Is ``v`` an integer combination of the columns of the factored matrix?"""
    w = [sum(x * y for x, y in zip(row, v)) for row in sf.P]
    for i, x in enumerate(w):
        if i < sf.rank:
            if x % sf.diagonal[i]:
                return False
        elif x:
            return False
    return True


def integer_kernel(a: Matrix, cols: int | None = None) -> Matrix:
    """Basis of ``{x in Z^n : a x = 0}``, as columns of the returned ``n x k`` matrix."""
    sf = smith_normal_form(a, cols)
    keep = range(sf.rank, sf.cols)
    return [[row[j] for j in keep] for row in sf.Q]


def lattice_index(gens: Matrix, dim: int) -> int:
    """Index in ``Z^dim`` of the lattice spanned by the columns of ``gens``; 0 if infinite."""
    if dim == 0:
        return 1
    if not gens or not gens[0]:
        return 0
    sf = smith_normal_form(gens)
    if sf.rank < dim:
        return 0
    out = 1
    for d in sf.diagonal:
        out *= d
    return out
