"""Resultants, discriminants, gcds and square roots over Q[vars].

Polynomials are viewed as univariate in a chosen variable with coefficients in
the polynomial ring of the remaining variables.  All eliminations are
fraction-free: pseudo-remainders plus exact divisions (subresultant PRS), or
Bareiss elimination on the Sylvester matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import DegenerateQuadraticError, InvalidInputError
from .poly import MultiPoly, _layout, _norm, lift, qdiv
from .scalars import QuadExtScalar, as_rational, rational_sqrt

Coeffs = list  # ascending list of MultiPoly


def _trim(A: Coeffs) -> Coeffs:
    while A and not A[-1]:
        A.pop()
    return A


def _as_list(p: MultiPoly, var: str) -> Coeffs:
    return _trim(p.coeff_list(var))


def _from_list(A: Coeffs, var: str) -> MultiPoly:
    return MultiPoly.from_coeff_map({i: c for i, c in enumerate(A) if c}, var)


def prem_list(A: Coeffs, B: Coeffs) -> Coeffs:
    """Pseudo-remainder ``lc(B)**(deg A - deg B + 1) * A mod B``."""
    n = len(B) - 1
    if n < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    R = list(A)
    e = len(R) - 1 - n + 1
    if e <= 0:
        return R
    lcB = B[-1]
    while R and len(R) - 1 >= n:
        d = len(R) - 1 - n
        lr = R[-1]
        R = [r * lcB for r in R]
        for i in range(n + 1):
            R[i + d] = R[i + d] - lr * B[i]
        R.pop()
        _trim(R)
        e -= 1
    if e:
        f = lcB**e
        R = [r * f for r in R]
    return R


def prem(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    return _from_list(prem_list(_as_list(p, var), _as_list(q, var)), var)


def reduce_mod(p: MultiPoly, modulus: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """Remainder of ``p`` modulo ``modulus`` in ``var``.

    Returns ``(r, m)`` with ``m*p = r (mod modulus)`` and ``deg_var r < deg_var modulus``.
    ``m`` is 1 when the leading coefficient of the modulus is a constant; otherwise
    a power of that leading coefficient (pseudo-division).
    """
    A, B = _as_list(p, var), _as_list(modulus, var)
    if not B:
        raise ZeroDivisionError("reduction modulo zero")
    lcB = B[-1]
    if lcB.is_constant():
        c = lcB.constant_value()
        Bm = [b / c for b in B]
        R = list(A)
        n = len(Bm) - 1
        while R and len(R) - 1 >= n:
            d = len(R) - 1 - n
            lr = R[-1]
            for i in range(n + 1):
                R[i + d] = R[i + d] - lr * Bm[i]
            R.pop()
            _trim(R)
        return _from_list(R, var), MultiPoly.one()
    e = max(len(A) - len(B) + 1, 0)
    return _from_list(prem_list(A, B), var), lcB**e


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    A, B = _as_list(p, var), _as_list(q, var)
    m, n = len(A) - 1, len(B) - 1
    size = m + n
    zero = MultiPoly.zero()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(A)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(B)):
            row[i + j] = c
        rows.append(row)
    return rows


def bareiss_det(M: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant (Bareiss) with exact divisions."""
    M = [list(map(lift, row)) for row in M]
    N = len(M)
    if N == 0:
        return MultiPoly.one()
    sign = 1
    prev = MultiPoly.one()
    for k in range(N - 1):
        if not M[k][k]:
            for i in range(k + 1, N):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero()
        pivot = M[k][k]
        for i in range(k + 1, N):
            mik = M[i][k]
            for j in range(k + 1, N):
                val = M[i][j] * pivot - mik * M[k][j]
                M[i][j] = val if k == 0 else val.exact_div(prev)
            M[i][k] = MultiPoly.zero()
        prev = pivot
    return M[N - 1][N - 1].scale(sign)


def resultant(p: MultiPoly, q: MultiPoly, var: str, method: str = "subresultant") -> MultiPoly:
    """Resultant eliminating ``var``, Sylvester convention ``Res(p, q) = det Syl(p, q)``.

    ``method`` is ``"subresultant"`` (PRS with exact divisions) or ``"sylvester"``
    (Bareiss on the Sylvester matrix).  Both give identical results.
    """
    p, q = lift(p), lift(q)
    if not p and not q:
        raise InvalidInputError("resultant of two zero polynomials")
    if not p or not q:
        return MultiPoly.zero()
    A, B = _as_list(p, var), _as_list(q, var)
    a, b = len(A) - 1, len(B) - 1
    if a == 0:
        return A[0] ** b
    if b == 0:
        return B[0] ** a
    if method == "sylvester":
        return bareiss_det(sylvester_matrix(p, q, var))
    if method != "subresultant":
        raise InvalidInputError(f"unknown resultant method {method!r}")
    return _subresultant(A, B)


def _subresultant(A: Coeffs, B: Coeffs) -> MultiPoly:
    a, b = len(A) - 1, len(B) - 1
    s = 1
    if a < b:
        A, B, a, b = B, A, b, a
        if a % 2 and b % 2:
            s = -1
    g = h = MultiPoly.one()
    while True:
        delta = a - b
        if a % 2 and b % 2:
            s = -s
        R = prem_list(A, B)
        if not R:
            return MultiPoly.zero()
        divisor = g * h**delta
        A = B
        B = [r.exact_div(divisor) for r in R]
        a, b = b, len(B) - 1
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))
        if b == 0:
            break
    result = B[0] ** a
    if a > 1:
        result = result.exact_div(h ** (a - 1))
    return result.scale(s)


def discriminant(p: MultiPoly, var: str, method: str = "subresultant") -> MultiPoly:
    """``(-1)**(n(n-1)/2) * Res(p, p') / lc(p)``."""
    p = lift(p)
    n = p.degree(var)
    if n < 2:
        raise InvalidInputError(f"discriminant needs degree >= 2 in {var}, got {n}")
    r = resultant(p, p.diff(var), var, method=method)
    r = r.exact_div(p.lc_in(var))
    return -r if (n * (n - 1) // 2) % 2 else r


# -- gcd ---------------------------------------------------------------------
def content_in(p: MultiPoly, var: str) -> MultiPoly:
    """Gcd of the coefficients of ``p`` viewed as a polynomial in ``var``."""
    g = MultiPoly.zero()
    for c in sorted(p.coeffs_in(var).values(), key=lambda c: c.nterms()):
        g = poly_gcd(g, c)
        if g.is_constant():
            return MultiPoly.one()
    return g


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Gcd over Q, normalized integer-primitive with positive grlex leading coefficient."""
    p, q = lift(p), lift(q)
    if not p:
        return q.primitive()
    if not q:
        return p.primitive()
    if p.is_constant() or q.is_constant():
        return MultiPoly.one()
    vp, vq = set(p.used_gens()), set(q.used_gens())
    common = vp & vq
    if not common:
        return MultiPoly.one()
    for x in sorted(vp - common):
        p = content_in(p, x)
        if p.is_constant():
            return MultiPoly.one()
    for x in sorted(vq - common):
        q = content_in(q, x)
        if q.is_constant():
            return MultiPoly.one()
    if p.nterms() > q.nterms():
        p, q = q, p
    if p.divides(q):
        return p.primitive()
    x = min(common, key=lambda v: max(p.degree(v), q.degree(v)))
    cp, cq = content_in(p, x), content_in(q, x)
    c = poly_gcd(cp, cq)
    pp = p.exact_div(cp)
    qq = q.exact_div(cq)
    g = _prs_gcd(_as_list(pp, x), _as_list(qq, x))
    if g is None:
        return c.primitive()
    gp = _from_list(g, x)
    gp = gp.exact_div(content_in(gp, x))
    return (c * gp).primitive()


def _prs_gcd(A: Coeffs, B: Coeffs) -> Coeffs | None:
    if len(A) < len(B):
        A, B = B, A
    g = h = MultiPoly.one()
    while True:
        if len(B) == 1:
            return None
        delta = len(A) - len(B)
        R = prem_list(A, B)
        if not R:
            return B
        if len(R) == 1:
            return None
        divisor = g * h**delta
        A = B
        B = [r.exact_div(divisor) for r in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))


def poly_lcm(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return (p * q).exact_div(poly_gcd(p, q))


# -- square roots ------------------------------------------------------------
def poly_sqrt(p: MultiPoly, var: str | None = None) -> MultiPoly | None:
    """Square root with positive leading coefficient, or None if ``p`` is not a square.

    For a polynomial that is monic of degree 4 in ``var`` the closed-form square
    criterion is used; otherwise a grlex leading-term extraction.
    """
    p = lift(p)
    if var is not None and p.degree(var) == 4 and p.lc_in(var) == 1:
        return quartic_square_root(p, var)
    return sqrt_by_leading_terms(p)


def quartic_square_root(p: MultiPoly, var: str) -> MultiPoly | None:
    """Monic quartic ``X^4 + al X^3 + be X^2 + ga X + de`` is a square iff
    ``8 ga = al (4 be - al^2)`` and ``64 de = (4 be - al^2)^2``; then the root is
    ``X^2 + al/2 X + (4 be - al^2)/8``."""
    c = p.coeff_list(var)
    if len(c) != 5 or c[4] != 1:
        raise InvalidInputError("quartic criterion needs a monic degree-4 polynomial")
    de, ga, be, al = c[0], c[1], c[2], c[3]
    k = be * 4 - al * al
    if ga * 8 != al * k or de * 64 != k * k:
        return None
    x = MultiPoly.var(var)
    return x * x + al * x / 2 + k / 8


def sqrt_by_leading_terms(p: MultiPoly) -> MultiPoly | None:
    if not p:
        return p
    gens = p.gens
    n = len(gens)
    shifts, degshift, _, _ = _layout(n)
    low_bits = sum(1 << s for s in shifts) | (1 << degshift)
    lk = max(p.terms)
    if lk & low_bits:
        return None
    r = rational_sqrt(p.terms[lk])
    if r is None:
        return None
    r = _norm(r)
    sk = lk >> 1
    s = {sk: r}
    rem = dict(p.terms)
    # rem -= s^2
    _sub_product(rem, {sk: r}, {sk: r})
    last = sk
    two_r = 2 * r
    guard = _layout(n)[2]
    while rem:
        k = max(rem)
        if ((k | guard) - sk) & guard != guard:
            return None
        tk = k - sk
        if tk >= last:
            return None
        tc = qdiv(rem[k], two_r)
        t = {tk: tc}
        cross = {kk: 2 * c for kk, c in s.items()}
        cross[tk] = cross.get(tk, 0) + tc
        _sub_product(rem, cross, t)
        s[tk] = tc
        last = tk
    return MultiPoly._raw(gens, s)


def _sub_product(acc: dict, a: dict, b: dict) -> None:
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = acc.get(k, 0) - ca * cb
            if v:
                acc[k] = _norm(v)
            else:
                acc.pop(k, None)


# -- roots of quadratics -------------------------------------------------------
def quadratic_roots(p: MultiPoly, var: str, point: Mapping[str, object] | None = None):
    """Both roots of a quadratic in ``var`` after substituting ``point``.

    Rational pair when the discriminant is a rational square, otherwise the
    conjugate pair in ``Q(sqrt(d))`` with ``d`` the squarefree part of the
    discriminant.  The ``+sqrt`` root comes first.
    """
    p = lift(p)
    if point:
        p = p.subs(dict(point))
    if p.degree(var) > 2:
        raise InvalidInputError(f"not quadratic in {var}")
    c = p.rational_coeffs(var) if p else []
    c = c + [0] * (3 - len(c))
    C, B, A = (as_rational(x) for x in c[:3])
    if A == 0:
        raise DegenerateQuadraticError(f"leading coefficient of the quadratic in {var} vanishes")
    D = B * B - 4 * A * C
    r = rational_sqrt(D)
    if r is not None:
        return ((-B + r) / (2 * A), (-B - r) / (2 * A))
    sq = QuadExtScalar.sqrt(D)
    return ((sq - B) / (2 * A), (-sq - B) / (2 * A))

