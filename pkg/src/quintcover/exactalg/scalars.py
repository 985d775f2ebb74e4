"""Exact scalars: rationals (``fractions.Fraction``) and elements of one quadratic field.

Rationals are plain :class:`fractions.Fraction` values; ints are accepted anywhere
a rational is.  :class:`QuadExtScalar` represents ``p + q*sqrt(d)`` with ``d`` a
squarefree integer that is not a square.  Arithmetic results whose irrational part
vanishes collapse back to ``Fraction`` so that rational values never carry a stale
field context.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from ..errors import InvalidInputError, MixedExtensionError

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise InvalidInputError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            den_i = int(den)
            if den_i == 0:
                raise InvalidInputError(f"zero denominator in {text!r}")
            return Fraction(int(num), den_i)
        return Fraction(int(s))
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse rational {text!r}") from exc


def rational_str(x) -> str:
    """Canonical serial form: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(x) -> Fraction | None:
    """Nonnegative rational square root, or None if ``x`` is not a rational square."""
    x = as_rational(x)
    if x < 0:
        return None
    n = integer_sqrt_exact(x.numerator)
    if n is None:
        return None
    d = integer_sqrt_exact(x.denominator)
    if d is None:
        return None
    return Fraction(n, d)


@lru_cache(maxsize=4096)
def _squarefree_int(n: int) -> tuple[int, int]:
    # n = s^2 * d with d squarefree, sign carried by d
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    from sympy import factorint

    s, d = 1, sign
    for p, e in factorint(abs(n)).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def squarefree_part(x) -> tuple[Fraction, int]:
    """Write a nonzero rational as ``s**2 * d`` with ``d`` a squarefree integer.

    Returns ``(s, d)`` with ``s > 0``.
    """
    x = as_rational(x)
    if x == 0:
        raise InvalidInputError("squarefree part of zero")
    # n/m = n*m / m^2
    s, d = _squarefree_int(x.numerator * x.denominator)
    return Fraction(s, x.denominator), d


class QuadExtScalar:
    """The element ``p + q*sqrt(d)`` of ``Q(sqrt(d))``.

    ``d`` is normalized to its squarefree integer part at construction, so two
    elements live in the same field exactly when their ``d`` agree.  Mixing
    different fields raises :class:`MixedExtensionError`.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q, d):
        p, q, d = as_rational(p), as_rational(q), as_rational(d)
        s, dd = squarefree_part(d)
        if dd == 1:
            raise InvalidInputError(f"{d} is a rational square; no extension needed")
        self.p = p
        self.q = q * s
        self.d = dd

    @classmethod
    def _raw(cls, p: Fraction, q: Fraction, d: int):
        obj = object.__new__(cls)
        obj.p, obj.q, obj.d = p, q, d
        return obj

    @classmethod
    def sqrt(cls, x):
        """``sqrt(x)`` as a rational when possible, else as an extension element."""
        r = rational_sqrt(x)
        if r is not None:
            return r
        return cls(0, 1, x)

    @staticmethod
    def _make(p, q, d):
        if q == 0:
            return p
        return QuadExtScalar._raw(p, q, d)

    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other.d != self.d:
                raise MixedExtensionError(
                    f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other.p, other.q
        if isinstance(other, (int, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.p + c[0], self.q + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar._raw(-self.p, -self.q, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.p - c[0], self.q - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(c[0] - self.p, c[1] - self.q, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        op, oq = c
        if oq == 0:
            return self._make(self.p * op, self.q * op, self.d)
        return self._make(
            self.p * op + self.q * oq * self.d, self.p * oq + self.q * op, self.d
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.q * self.q * self.d)

    def trace(self) -> Fraction:
        return Fraction(2 * self.p)

    def conjugate(self) -> QuadExtScalar:
        return QuadExtScalar._raw(self.p, -self.q, self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExtScalar._raw(Fraction(self.p) / n, Fraction(-self.q) / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadExtScalar):
            self._coerce(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._make(Fraction(self.p) / other, Fraction(self.q) / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Fraction(1), self
        while e:
            if e & 1:
                result = base * result
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return self.d == other.d and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __repr__(self):
        return f"QuadExtScalar({rational_str(self.p)}, {rational_str(self.q)}, {self.d})"

    def __str__(self):
        return f"{rational_str(self.p)} + {rational_str(self.q)}*sqrt({self.d})"

    def to_json(self) -> dict:
        return {"p": rational_str(self.p), "q": rational_str(self.q), "d": rational_str(self.d)}

    def to_complex(self, ctx=None):
        """Numeric value with the principal branch of ``sqrt(d)`` (mpmath)."""
        import mpmath

        ctx = ctx or mpmath.mp
        p = ctx.mpf(self.p.numerator) / self.p.denominator
        q = ctx.mpf(self.q.numerator) / self.q.denominator
        return p + q * ctx.sqrt(ctx.mpf(self.d))


def conjugate(x):
    """Galois conjugate; the identity on rationals."""
    if isinstance(x, QuadExtScalar):
        return x.conjugate()
    return x


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExtScalar))


def scalar_json(x):
    if isinstance(x, QuadExtScalar):
        return x.to_json()
    return rational_str(x)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return QuadExtScalar(obj["p"], obj["q"], obj["d"])
    return as_rational(obj)


def to_mp(x, ctx=None):
    """Numeric (mpmath) value of an exact scalar."""
    import mpmath

    ctx = ctx or mpmath.mp
    if isinstance(x, QuadExtScalar):
        return x.to_complex(ctx)
    x = as_rational(x)
    return ctx.mpf(x.numerator) / x.denominator
