"""Igusa invariants of binary sextics, absolute invariants, and a numeric automorphism oracle.

Convention.  Binary forms are coefficient tuples ``c`` with ``c[k]`` the
coefficient of x^k y^(n-k).  Clebsch's invariants A, B, C, D come from
transvectants

    (f, g)_k = (m-k)!(n-k)!/(m! n!) * sum_i (-1)^i C(k, i) d^k f/dx^(k-i) dy^i * d^k g/dx^i dy^(k-i),

with i = (f,f)_4, Delta = (i,i)_2, y1 = (f,i)_4, y2 = (i,y1)_2, y3 = (i,y2)_2 and
A = (f,f)_6, B = (i,i)_4, C = (i,Delta)_4, D = (y3,y1)_2.  Igusa-Clebsch
invariants are

    I2 = -120 A,  I4 = -720 A^2 + 6750 B,  I6 = 8640 A^3 - 108000 A B + 202500 C,
    I10 = -62208 A^5 + 972000 A^3 B + 1620000 A^2 C - 3037500 A B^2 - 6075000 B C - 4556250 D,

The weight-2k coordinates fed into the absolute invariants i1 = 144 J4/J2^2,
i2 = -1728 (J2 J4 - 3 J6)/J2^3, i3 = 486 J10/J2^5 are these Igusa-Clebsch values
(J_{2k} := I_{2k}); with that choice the closed-form invariants of the case I and
case II families are reproduced exactly.  Igusa's classical J's (J2 = I2/8,
J4 = (4 J2^2 - I4)/96, ...) are available separately.  Under f -> r f the
invariant I_d (homogeneous of degree d in the coefficients) scales by r^d.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from math import comb, factorial

import mpmath

from .curve import Genus2Curve
from .errors import InvalidInputError, J2ZeroError, PrecisionError
from .exactalg import scalar_json

# -- binary forms ----------------------------------------------------------------
Form = tuple  # (degree, coeffs)


def _form(coeffs, n: int) -> Form:
    c = list(coeffs) + [0] * (n + 1 - len(coeffs))
    return n, tuple(c[: n + 1])


def _dx(f: Form) -> Form:
    n, c = f
    return n - 1, tuple(k * c[k] for k in range(1, n + 1))


def _dy(f: Form) -> Form:
    n, c = f
    return n - 1, tuple((n - k) * c[k] for k in range(n))


def _mul(f: Form, g: Form) -> Form:
    (m, a), (n, b) = f, g
    out = [0] * (m + n + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return m + n, tuple(out)


def _add(f: Form, g: Form) -> Form:
    return f[0], tuple(x + y for x, y in zip(f[1], g[1]))


def _scale(f: Form, s) -> Form:
    return f[0], tuple(s * x for x in f[1])


def _partial(f: Form, nx: int, ny: int) -> Form:
    for _ in range(nx):
        f = _dx(f)
    for _ in range(ny):
        f = _dy(f)
    return f


def transvectant(f: Form, g: Form, k: int) -> Form:
    m, n = f[0], g[0]
    if k > min(m, n):
        raise InvalidInputError("transvectant order exceeds a degree")
    acc: Form = (m + n - 2 * k, (0,) * (m + n - 2 * k + 1))
    for i in range(k + 1):
        term = _mul(_partial(f, k - i, i), _partial(g, i, k - i))
        sign = -1 if i % 2 else 1
        acc = _add(acc, _scale(term, sign * comb(k, i)))
    norm = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return _scale(acc, norm)


def clebsch_invariants(sextic) -> tuple:
    f = _form(sextic, 6)
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(f, f, 6)[1][0]
    B = transvectant(i, i, 4)[1][0]
    C = transvectant(i, delta, 4)[1][0]
    D = transvectant(y3, y1, 2)[1][0]
    return A, B, C, D


def igusa_clebsch(sextic) -> tuple:
    A, B, C, D = clebsch_invariants(sextic)
    I2 = -120 * A
    I4 = -720 * A**2 + 6750 * B
    I6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    I10 = (
        -62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C
        - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D
    )
    return I2, I4, I6, I10


# -- Igusa and absolute invariants -----------------------------------------------------
@dataclass(frozen=True)
class IgusaInvariants:
    J2: object
    J4: object
    J6: object
    J10: object

    def as_tuple(self) -> tuple:
        return self.J2, self.J4, self.J6, self.J10

    def to_json(self) -> dict:
        return {k: scalar_json(getattr(self, k)) for k in ("J2", "J4", "J6", "J10")}


@dataclass(frozen=True)
class AbsoluteInvariants:
    i1: object
    i2: object
    i3: object

    def as_tuple(self) -> tuple:
        return self.i1, self.i2, self.i3

    def to_json(self) -> dict:
        return {k: scalar_json(getattr(self, k)) for k in ("i1", "i2", "i3")}


def igusa_from_sextic(sextic) -> IgusaInvariants:
    """Moduli invariants in the normalization that feeds the absolute invariants.

    The four values are the Igusa-Clebsch invariants I2, I4, I6, I10; they are
    the weights-2, 4, 6, 10 coordinates whose ratios give i1, i2, i3 below.
    """
    if all(c == 0 for c in sextic):
        raise InvalidInputError("zero polynomial has no invariants")
    return IgusaInvariants(*igusa_clebsch(sextic))


def igusa_j_from_sextic(sextic) -> IgusaInvariants:
    """Igusa's classical J2, J4, J6, J10 (derived from the Igusa-Clebsch values)."""
    I2, I4, I6, I10 = igusa_from_sextic(sextic).as_tuple()
    J2 = I2 / 8
    J4 = (4 * J2**2 - I4) / 96
    J6 = (8 * J2**3 - 160 * J2 * J4 - I6) / 576
    J10 = I10 / 4096
    return IgusaInvariants(J2, J4, J6, J10)


def _fractionize(x):
    return Fraction(x) if isinstance(x, int) else x


def igusa_from_curve(c: Genus2Curve) -> IgusaInvariants:
    return igusa_from_sextic(tuple(_fractionize(x) for x in c.sextic()))


def absolute(inv: IgusaInvariants) -> AbsoluteInvariants:
    J2 = inv.J2
    if J2 == 0:
        raise J2ZeroError("absolute invariants need J2 != 0")
    i1 = 144 * inv.J4 / J2**2
    i2 = -1728 * (J2 * inv.J4 - 3 * inv.J6) / J2**3
    i3 = 486 * inv.J10 / J2**5
    return AbsoluteInvariants(i1, i2, i3)


def absolute_invariants(c: Genus2Curve) -> AbsoluteInvariants:
    return absolute(igusa_from_curve(c))


def same_point(c1: Genus2Curve, c2: Genus2Curve) -> bool:
    return absolute_invariants(c1).as_tuple() == absolute_invariants(c2).as_tuple()


# -- numeric automorphism oracle --------------------------------------------------
GROUP_LABELS = {1: "Z2", 2: "V4"}


@dataclass(frozen=True)
class AutReport:
    order: int
    label: str
    maps: tuple

    def to_json(self) -> dict:
        return {"order": self.order, "label": self.label}


def branch_points(c, precision_bits: int = 128) -> list:
    """Roots of f as mpmath complex numbers; a quintic adds the point at infinity (None).

    ``c`` is a Genus2Curve or an ascending sequence of numerical coefficients.
    """
    if isinstance(c, Genus2Curve):
        coeffs, degree = list(c.f_coeffs), c.degree
    else:
        coeffs = list(c)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        degree = len(coeffs) - 1
        if degree not in (5, 6):
            raise InvalidInputError("a genus-2 model has degree 5 or 6")
    with mpmath.workprec(precision_bits):
        mp = [mpmath.mpc(*_to_complex_parts(x)) for x in reversed(coeffs)]
        try:
            roots = mpmath.polyroots(mp, maxsteps=400, extraprec=precision_bits)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise PrecisionError("root finding did not converge; raise the precision") from exc
        pts = list(roots)
    if degree == 5:
        pts.append(None)
    return pts


def _to_complex_parts(x):
    from .exactalg import QuadExtScalar

    if isinstance(x, QuadExtScalar):
        z = x.to_complex()
        return z.real, z.imag
    if isinstance(x, mpmath.mpc):
        return x.real, x.imag
    return mpmath.mpf(x.numerator) / x.denominator if hasattr(x, "numerator") else mpmath.mpf(x), 0


def _mobius_apply(m, p):
    a, b, c, d = m
    if p is None:
        return None if c == 0 else a / c
    den = c * p + d
    if abs(den) == 0:
        return None
    return (a * p + b) / den


def _mobius_to_std(p, q, r):
    """The map sending p, q, r to 0, 1, infinity (points may be None for infinity)."""
    if p is None:
        return (0, q - r, 1, -r)
    if q is None:
        return (1, -p, 1, -r)
    if r is None:
        return (1, -p, 0, q - p)
    return (q - r, -p * (q - r), q - p, -r * (q - p))


def _compose(m1, m2):
    a, b, c, d = m1
    e, f, g, h = m2
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _invert(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def _close(p, q, tol) -> bool:
    if p is None or q is None:
        return p is None and q is None
    scale = max(1, abs(p), abs(q))
    return abs(p - q) <= tol * scale


def _near_infinity(p, tol) -> bool:
    return p is not None and abs(p) > 1 / tol


def reduced_aut_group_numeric(c, precision_bits: int = 128, tol=None) -> AutReport:
    """Moebius maps permuting the six branch points, within ``tol``.

    A map is fixed by where it sends three branch points; every ordered triple of
    images is tried and the maps that preserve the whole set are kept.  The
    identity is always among them, so the order is at least 1.
    """
    if tol is None:
        tol = mpmath.mpf(10) ** -20
    with mpmath.workprec(precision_bits):
        tol = mpmath.mpf(tol)
        pts = branch_points(c, precision_bits)
        p0, q0, r0 = pts[0], pts[1], pts[2]
        to_std = _mobius_to_std(p0, q0, r0)
        found = []
        for trip in itertools.permutations(range(6), 3):
            P, Q, R = (pts[i] for i in trip)
            m = _compose(_invert(_mobius_to_std(P, Q, R)), to_std)
            if _preserves(m, pts, tol):
                found.append(_normalize(m))
    order = len(found)
    label = GROUP_LABELS.get(order, f"order-{order}: manual review")
    return AutReport(order, label, tuple(found))


def _normalize(m):
    a, b, c, d = m
    det = a * d - b * c
    s = mpmath.sqrt(det)
    m = tuple(x / s for x in m)
    lead = next(x for x in m if abs(x) > 1e-30)
    if lead.real < 0 or (lead.real == 0 and lead.imag < 0):
        m = tuple(-x for x in m)
    return m


def _preserves(m, pts, tol) -> bool:
    used = set()
    for p in pts:
        img = _mobius_apply(m, p)
        if img is not None and _near_infinity(img, tol):
            img = None
        hit = None
        for k, q in enumerate(pts):
            if k not in used and _close(img, q, tol):
                hit = k
                break
        if hit is None:
            return False
        used.add(hit)
    return True


def maps_form_group(maps, tol=1e-15) -> bool:
    """Closure of a set of normalized 2x2 matrices under composition, up to sign."""
    def member(m):
        for n in maps:
            for s in (1, -1):
                if all(abs(x - s * y) <= tol * max(1, abs(y)) for x, y in zip(m, n)):
                    return True
        return False

    return all(member(_normalize(_compose(m1, m2))) for m1 in maps for m2 in maps)
