"""Exact ordered-field arithmetic: Q and Q(sqrt d), the projective line, Moebius maps.

Every value here is immutable and every operation is exact.  A scalar is
``a + b*sqrt(d)`` with rational ``a, b`` and a square-free ``d > 1``; purely
rational scalars carry ``d == 0`` and mix freely with any quadratic field.
Combining two different radicals raises :class:`MixedRadicals`.

The cyclic order on P^1(K) is encoded by :func:`psi`, normalised so that
``psi(0, 1, inf) == +1`` (the induced order on K is the usual one).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from gmpy2 import mpq, mpz
from functools import total_ordering

from .errors import IrrationalSpectrum, MixedRadicals, ParseError

__all__ = [
    "Scalar",
    "ProjPoint",
    "Mat2",
    "INF",
    "det_pair",
    "psi",
    "moebius_apply",
    "fixed_points",
    "classify",
    "parse_scalar",
    "parse_point",
    "squarefree_decompose",
]

_TRIAL_LIMIT = 1 << 16


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` square-free (``n > 0``)."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d = 1, 1
    m = n
    p = 2
    while p * p <= m and p < _TRIAL_LIMIT:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if m > 1:
        r = math.isqrt(m)
        if r * r == m:
            s *= r
        elif p * p <= m:
            # cofactor too large for trial division
            from sympy import factorint

            for q, e in factorint(m).items():
                s *= q ** (e // 2)
                if e % 2:
                    d *= q
        else:
            d *= m
    return s, d


def _rational_sqrt(q: Rational) -> Rational | None:
    if q < 0:
        return None
    n, m = q.numerator, q.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return mpq(rn, rm)
    return None


def _join(d1: int, d2: int) -> int:
    if d1 == d2 or d2 == 0:
        return d1
    if d1 == 0:
        return d2
    raise MixedRadicals(f"cannot combine sqrt({d1}) with sqrt({d2})")


def _mk(a: Rational, b: Rational, d: int) -> "Scalar":
    s = object.__new__(Scalar)
    if b == 0:
        s.a, s.b, s.d = a, b, 0
    else:
        s.a, s.b, s.d = a, b, d
    return s


_ZERO_F = mpq(0)
# gmpy2 rationals: same hashing and comparisons as Fraction, roughly 9x faster
Rational = type(_ZERO_F)
_RATIONAL_TYPES = (int, Fraction, Rational, type(mpz(0)))


@total_ordering
class Scalar:
    """Element ``a + b*sqrt(d)`` of an ordered quadratic field (``d == 0``: rational)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = mpq(a)
        b = mpq(b)
        if b != 0:
            if d <= 1:
                raise ValueError("radicand must be > 1 when the surd part is non-zero")
            s, d0 = squarefree_decompose(d)
            if d0 == 1:
                a, b, d = a + b * s, _ZERO_F, 0
            else:
                b, d = b * s, d0
        else:
            d = 0
        self.a, self.b, self.d = a, b, d

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, _RATIONAL_TYPES):
            return _mk(mpq(x), _ZERO_F, 0)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = other if isinstance(other, Scalar) else Scalar.coerce(other)
        return _mk(self.a + o.a, self.b + o.b, _join(self.d, o.d))

    __radd__ = __add__

    def __neg__(self):
        return _mk(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = other if isinstance(other, Scalar) else Scalar.coerce(other)
        return _mk(self.a - o.a, self.b - o.b, _join(self.d, o.d))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        o = other if isinstance(other, Scalar) else Scalar.coerce(other)
        if self.b == 0:
            return _mk(self.a * o.a, self.a * o.b, o.d)
        if o.b == 0:
            return _mk(self.a * o.a, self.b * o.a, self.d)
        d = _join(self.d, o.d)
        return _mk(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return _mk(1 / self.a, _ZERO_F, 0)
        n = self.a * self.a - self.b * self.b * self.d
        return _mk(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = other if isinstance(other, Scalar) else Scalar.coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Scalar(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return _mk(self.a, -self.b, self.d)

    # order ----------------------------------------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sa == 0:
            return sb
        # opposite signs: compare a^2 against d*b^2
        t = a * a - b * b * self.d
        return sa if t > 0 else sb

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)
        if isinstance(other, _RATIONAL_TYPES):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_mpf(self):
        import mpmath

        return mpmath.mpf(self.a.numerator) / self.a.denominator + (
            mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d) if self.b else 0
        )

    def sqrt(self, extend: bool = False) -> "Scalar":
        """Exact non-negative square root.

        Looks inside the scalar's own field first.  A rational with no rational
        root gets a fresh quadratic extension only when ``extend`` is set;
        otherwise :class:`IrrationalSpectrum` is raised.
        """
        if self.sign() < 0:
            raise ValueError("square root of a negative scalar")
        root = _field_sqrt(self)
        if root is not None:
            return root
        if extend and self.b == 0:
            n, m = self.a.numerator, self.a.denominator
            s, d = squarefree_decompose(n * m)
            return _mk(_ZERO_F, mpq(s, m), d)
        raise IrrationalSpectrum(f"sqrt({self}) is not in the active field")

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.b == 0:
            return _fmt(self.a)
        surd = f"{_fmt(abs(self.b))}*sqrt({self.d})"
        if self.a == 0:
            return surd if self.b > 0 else "-" + surd
        sign = "-" if self.b < 0 else "+"
        return f"{_fmt(self.a)}{sign}{surd}"


def _fmt(q: Rational) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _field_sqrt(x: Scalar) -> Scalar | None:
    a, b, d = x.a, x.b, x.d
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return _mk(r, _ZERO_F, 0)
        if d == 0:
            return None
    # solve (X + Y sqrt d)^2 = a + b sqrt d
    if b == 0:
        y = _rational_sqrt(a / d)
        return None if y is None else _mk(_ZERO_F, y, d)
    s = _rational_sqrt(a * a - b * b * d)
    if s is None:
        return None
    for x2 in ((a + s) / 2, (a - s) / 2):
        xr = _rational_sqrt(x2)
        if xr:
            root = _mk(xr, b / (2 * xr), d)
            return -root if root.sign() < 0 else root
    return None


def _rational_sqrt_in(q: Rational, d: int) -> Scalar | None:
    r = _rational_sqrt(q)
    if r is not None:
        return _mk(r, _ZERO_F, 0)
    y = _rational_sqrt(q / d)
    return None if y is None else _mk(_ZERO_F, y, d)


ZERO = Scalar(0)
ONE = Scalar(1)


class ProjPoint:
    """A point of P^1(K) in chart form: ``(x : 1)`` or ``(1 : 0)`` for infinity."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=1):
        a, b = Scalar.coerce(a), Scalar.coerce(b)
        if not b:
            if not a:
                raise ValueError("(0 : 0) is not a projective point")
            self.a, self.b = ONE, ZERO
        elif b == 1:
            self.a, self.b = a, ONE
        else:
            self.a, self.b = a / b, ONE

    @property
    def is_inf(self) -> bool:
        return not self.b

    def value(self) -> Scalar:
        if self.is_inf:
            raise ValueError("the point at infinity has no affine value")
        return self.a

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"ProjPoint({self})"

    def __str__(self):
        return "inf" if self.is_inf else str(self.a)


INF = ProjPoint(1, 0)


def det_pair(p: ProjPoint, q: ProjPoint) -> Scalar:
    """Determinant of the canonical homogeneous representatives ``[p q]``."""
    return p.a * q.b - p.b * q.a


def psi(x: ProjPoint, y: ProjPoint, z: ProjPoint) -> int:
    """Cyclic orientation of three points of P^1(K), in {-1, 0, +1}."""
    s = det_pair(x, y).sign()
    if not s:
        return 0
    s *= det_pair(y, z).sign()
    if not s:
        return 0
    return s * det_pair(z, x).sign()


class Mat2:
    """2x2 matrix over a quadratic field, non-singular."""

    __slots__ = ("a", "b", "c", "d", "det")

    def __init__(self, a, b, c, d):
        self.a, self.b = Scalar.coerce(a), Scalar.coerce(b)
        self.c, self.d = Scalar.coerce(c), Scalar.coerce(d)
        self.det = self.a * self.d - self.b * self.c
        if not self.det:
            raise ValueError("singular matrix")

    @classmethod
    def _raw(cls, a, b, c, d, det=None) -> "Mat2":
        m = object.__new__(cls)
        m.a, m.b, m.c, m.d = a, b, c, d
        m.det = a * d - b * c if det is None else det
        return m

    @classmethod
    def identity(cls) -> "Mat2":
        return cls._raw(ONE, ZERO, ZERO, ONE, ONE)

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def diag(cls, x, y) -> "Mat2":
        return cls(x, 0, 0, y)

    def rows(self) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def is_sl(self) -> bool:
        return self.det == 1

    def trace(self) -> Scalar:
        return self.a + self.d

    def __mul__(self, o: "Mat2") -> "Mat2":
        if not isinstance(o, Mat2):
            s = Scalar.coerce(o)
            return Mat2._raw(self.a * s, self.b * s, self.c * s, self.d * s)
        if not (self.a.d or self.b.d or self.c.d or self.d.d or o.a.d or o.b.d or o.c.d or o.d.d):
            # rational fast path: plain mpq arithmetic
            a, b, c, d = self.a.a, self.b.a, self.c.a, self.d.a
            e, f, g, h = o.a.a, o.b.a, o.c.a, o.d.a
            return Mat2._raw(
                _mk(a * e + b * g, _ZERO_F, 0),
                _mk(a * f + b * h, _ZERO_F, 0),
                _mk(c * e + d * g, _ZERO_F, 0),
                _mk(c * f + d * h, _ZERO_F, 0),
                self.det * o.det,
            )
        return Mat2._raw(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.det * o.det,
        )

    def __neg__(self) -> "Mat2":
        return Mat2._raw(-self.a, -self.b, -self.c, -self.d, self.det)

    def inverse(self) -> "Mat2":
        if self.det == 1:
            return Mat2._raw(self.d, -self.b, -self.c, self.a, self.det)
        k = self.det.inverse()
        return Mat2._raw(self.d * k, -self.b * k, -self.c * k, self.a * k, k)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.c == other.c and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def proj_equal(self, other: "Mat2") -> bool:
        """True when ``self == lambda * other`` for a non-zero scalar lambda."""
        return (
            self.a * other.b == self.b * other.a
            and self.a * other.c == self.c * other.a
            and self.a * other.d == self.d * other.a
            and self.b * other.c == self.c * other.b
            and self.b * other.d == self.d * other.b
            and self.c * other.d == self.d * other.c
        )

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == 1 and self.d == 1

    def is_minus_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == -1 and self.d == -1

    def is_scalar(self) -> bool:
        return not self.b and not self.c and self.a == self.d

    def field(self) -> int:
        d = 0
        for x in (self.a, self.b, self.c, self.d):
            d = _join(d, x.d)
        return d

    def apply(self, p: ProjPoint) -> ProjPoint:
        return moebius_apply(self, p)

    def to_float(self) -> list[list[float]]:
        return [[float(self.a), float(self.b)], [float(self.c), float(self.d)]]

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def moebius_apply(g: Mat2, x: ProjPoint) -> ProjPoint:
    p = object.__new__(ProjPoint)
    if not (g.a.d or g.b.d or g.c.d or g.d.d or x.a.d):
        # rational fast path; x.b is 0 or 1
        xa = x.a.a
        if x.b.a:
            u, v = g.a.a * xa + g.b.a, g.c.a * xa + g.d.a
        else:
            u, v = g.a.a * xa, g.c.a * xa
        if v:
            p.a, p.b = _mk(u / v, _ZERO_F, 0), ONE
        else:
            p.a, p.b = ONE, ZERO
        return p
    u = g.a * x.a + g.b * x.b
    v = g.c * x.a + g.d * x.b
    if not v:
        p.a, p.b = ONE, ZERO
    else:
        p.a, p.b = u / v, ONE
    return p


def classify(g: Mat2) -> str:
    """'hyperbolic', 'parabolic' or 'elliptic' from ``tr^2`` against ``4 det``."""
    t = g.trace()
    s = (t * t - 4 * g.det).sign()
    return {1: "hyperbolic", 0: "parabolic", -1: "elliptic"}[s]


def _eigenvalue_at(g: Mat2, x: ProjPoint) -> Scalar:
    return g.a if x.is_inf else g.c * x.a + g.d


def fixed_points(g: Mat2, extend: bool = False) -> tuple[ProjPoint, ...]:
    """Fixed points of ``g`` on P^1.

    Hyperbolic matrices return ``(attracting, repelling)``.  When the
    discriminant has no root in the field of ``g`` a new quadratic extension is
    opened only if ``extend`` is true and ``g`` is rational.
    """
    if g.is_scalar():
        raise ValueError("scalar matrices fix every point")
    a, b, c, d = g.a, g.b, g.c, g.d
    disc = (a - d) * (a - d) + 4 * b * c
    sd = disc.sign()
    if sd < 0:
        return ()
    if not c:
        pts = [INF]
        if a != d:
            pts.append(ProjPoint(b / (d - a)))
    elif sd == 0:
        return (ProjPoint((a - d) / (2 * c)),)
    else:
        if g.field() and disc.is_rational:
            # one radical per context: look for the root inside Q(sqrt d) only
            root = _rational_sqrt_in(disc.a, g.field())
            if root is None:
                raise IrrationalSpectrum(f"sqrt({disc}) lies outside Q(sqrt {g.field()})")
        else:
            root = disc.sqrt(extend=extend and g.field() == 0)
        two_c = 2 * c
        pts = [ProjPoint((a - d + root) / two_c), ProjPoint((a - d - root) / two_c)]
    if len(pts) == 2:
        l0 = _eigenvalue_at(g, pts[0])
        if (l0 * l0 - g.det).sign() < 0:
            pts.reverse()
    return tuple(pts)


# text format -----------------------------------------------------------------

_RAT_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*$")
_SURD_RE = re.compile(
    r"^\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*(?=[+-]))?(?P<sgn>[+-]?)\s*(?P<b>\d+(?:/\d+)?)?"
    r"\s*\*?\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*$"
)


def _frac(text: str) -> Rational:
    if "/" in text:
        n, m = text.split("/")
        if int(m) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return mpq(int(n), int(m))
    return mpq(int(text))


def parse_scalar(text: str, sqrt: int | None = None) -> Scalar:
    """Parse ``"p/q"``, ``"p"`` or ``"p/q+r/s*sqrt(d)"``.

    ``sqrt`` is the radicand declared for the surrounding context; a surd with
    a different radicand is rejected.
    """
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Scalar(text)
        raise ParseError(f"expected a scalar string, got {text!r}")
    m = _RAT_RE.match(text)
    if m:
        return Scalar(_frac(m.group(1)))
    m = _SURD_RE.match(text)
    if not m:
        raise ParseError(f"malformed scalar {text!r}")
    a = _frac(m.group("a")) if m.group("a") else mpq(0)
    b = _frac(m.group("b")) if m.group("b") else mpq(1)
    if m.group("sgn") == "-":
        b = -b
    d = int(m.group("d"))
    if d == 0:
        return Scalar(a)
    s, d0 = squarefree_decompose(d)
    if d0 == 1:
        return Scalar(a + b * s)
    if sqrt is None:
        raise ParseError(f"surd {text!r} needs a declared field sqrt")
    if squarefree_decompose(sqrt)[1] != d0:
        raise ParseError(f"surd {text!r} does not live in Q(sqrt {sqrt})")
    return Scalar(a, b * s, d0)


def parse_point(text: str, sqrt: int | None = None) -> ProjPoint:
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    return ProjPoint(parse_scalar(text, sqrt))
