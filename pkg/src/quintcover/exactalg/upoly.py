"""Dense univariate polynomials over an exact field, as ascending coefficient tuples.

Coefficients may be any exact field scalars (Fraction or QuadExtScalar); the
helpers never assume a particular type beyond the field operations.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

Coeffs = tuple


def _field(c):
    """Promote a bare int so that division stays exact."""
    return Fraction(c) if isinstance(c, int) else c


def trim(p: Sequence) -> Coeffs:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> Coeffs:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Sequence) -> Coeffs:
    return tuple(-c for c in p)


def sub(p: Sequence, q: Sequence) -> Coeffs:
    return add(p, neg(q))


def scale(p: Sequence, c) -> Coeffs:
    return trim(c * x for x in p)


def mul(p: Sequence, q: Sequence) -> Coeffs:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(p: Sequence, e: int) -> Coeffs:
    out: Coeffs = (1,)
    for _ in range(e):
        out = mul(out, p)
    return out


def divmod_(p: Sequence, q: Sequence) -> tuple[Coeffs, Coeffs]:
    p, q = list(trim(p)), trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    dq, lc = len(q) - 1, _field(q[-1])
    if len(p) - 1 < dq:
        return (), tuple(p)
    quo = [0] * (len(p) - dq)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = p[k + dq] / lc
        quo[k] = c
        if c != 0:
            for i in range(dq + 1):
                p[k + i] = p[k + i] - c * q[i]
    return trim(quo), trim(p[:dq])


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(tuple(p)):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> Coeffs:
    return trim(i * p[i] for i in range(1, len(p)))


def monic(p: Sequence) -> Coeffs:
    p = trim(p)
    lc = _field(p[-1]) if p else 1
    return tuple(c / lc for c in p)


def gcd(p: Sequence, q: Sequence) -> Coeffs:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def is_squarefree(p: Sequence) -> bool:
    return degree(gcd(p, derivative(p))) == 0


def resultant(p: Sequence, q: Sequence):
    """Res(p, q) by the Euclidean algorithm over the coefficient field."""
    p, q = trim(p), trim(q)
    if not p or not q:
        return 0
    res = 1
    while True:
        m, n = len(p) - 1, len(q) - 1
        if n == 0:
            return res * q[0] ** m
        r = divmod_(p, q)[1]
        if not r:
            return 0
        k = len(r) - 1
        if (m * n) % 2:
            res = -res
        res = res * q[-1] ** (m - k)
        p, q = q, r


def discriminant(p: Sequence):
    """(-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    p = trim(p)
    n = len(p) - 1
    d = resultant(p, derivative(p)) / _field(p[-1])
    return -d if (n * (n - 1) // 2) % 2 else d


def mobius_transform(f: Sequence, n: int, m: Sequence) -> Coeffs:
    """Binary-form substitution f(x) -> (r x + s)^n f((p x + q)/(r x + s)) with m = (p, q, r, s).

    ``f`` is read as a form of degree ``n`` (missing top coefficients are zeros).
    """
    p_, q_, r_, s_ = m
    num, den = (q_, p_), (s_, r_)
    out: Coeffs = ()
    for k in range(n + 1):
        c = f[k] if k < len(f) else 0
        if c == 0:
            continue
        out = add(out, scale(mul(power(num, k), power(den, n - k)), c))
    return out


def binomial_shift(f: Sequence, t) -> Coeffs:
    """f(x + t)."""
    out = [0] * len(f)
    for k, c in enumerate(f):
        for i in range(k + 1):
            out[i] = out[i] + c * comb(k, i) * t ** (k - i)
    return trim(out)
