"""Genus-2 curves y^2 = x(x - 1) g3(x) attached to the cover, and their elliptic subcovers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import transcriptions as tr
from .cover import F1_SYM, F2_SYM, F4_SYM, CoverParams, phi_at
from .errors import (
    ConstructionFailureError,
    DegenerateSubcoverError,
    ExcludedParameterError,
    InvalidInputError,
    InvalidRootError,
    SingularModelError,
)
from .exactalg import (
    MultiPoly,
    QuadExtScalar,
    as_rational,
    discriminant,
    parse_poly,
    poly_gcd,
    quadratic_roots,
    reduce_mod,
    scalar_json,
    upoly,
)
from .exactalg.scalars import is_exact_scalar

X, Z = MultiPoly.var("X"), MultiPoly.var("z")


# -- curves ----------------------------------------------------------------------
@dataclass(frozen=True)
class Genus2Curve:
    """y^2 = f(x), f given by ascending coefficients (degree 5 or 6, squarefree)."""

    f_coeffs: tuple

    def __post_init__(self):
        f = upoly.trim(self.f_coeffs)
        if not f:
            raise InvalidInputError("zero polynomial does not define a curve")
        if len(f) - 1 not in (5, 6):
            raise InvalidInputError(f"genus-2 model needs degree 5 or 6, got {len(f) - 1}")
        object.__setattr__(self, "f_coeffs", f)
        if not upoly.is_squarefree(f):
            raise SingularModelError("f is not squarefree")

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def field_d(self) -> int | None:
        """The d of Q(sqrt d) the coefficients live in, or None for Q."""
        ds = {c.d for c in self.f_coeffs if isinstance(c, QuadExtScalar)}
        if len(ds) > 1:
            raise InvalidInputError("coefficients from different quadratic fields")
        return ds.pop() if ds else None

    def sextic(self) -> tuple:
        """Coefficients of the binary sextic (a zero leading term for quintics)."""
        return tuple(self.f_coeffs) + (0,) * (7 - len(self.f_coeffs))

    def rescaled(self, r) -> Genus2Curve:
        return Genus2Curve(upoly.scale(self.f_coeffs, r))

    def transformed(self, m) -> Genus2Curve:
        """Model after x -> (p x + q)/(r x + s), using the degree-6 form convention."""
        return Genus2Curve(upoly.mobius_transform(self.sextic(), 6, m))

    def to_json(self) -> dict:
        d = self.field_d
        return {
            "degree": self.degree,
            "coeffs": [scalar_json(c) for c in self.f_coeffs],
            "field": "Q" if d is None else {"quad_ext_d": str(d)},
        }


def j_from_lambda(lam):
    """Legendre j(lambda) = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)."""
    if lam == 0 or lam == 1:
        raise DegenerateSubcoverError(f"lambda = {lam} gives a singular Legendre curve")
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


@dataclass(frozen=True)
class EllipticSubcover:
    """s^2 = t (t - 1)(t - lambda)."""

    lam: object
    j: object

    @classmethod
    def from_lambda(cls, lam) -> EllipticSubcover:
        return cls(lam, j_from_lambda(lam))

    def to_json(self) -> dict:
        return {"lambda": scalar_json(self.lam), "j": scalar_json(self.j)}


# -- g3 ------------------------------------------------------------------------
@lru_cache(maxsize=1)
def g3_symbolic() -> tuple[MultiPoly, ...]:
    """Coefficients (ascending in x) of g3 over Q[a, b, z], each of degree <= 1 in z.

    G(X, z) = X F1(X)^2 F2(z)^2 - z F1(z)^2 F2(X)^2 is divided by X - z, the
    remainder of a second division is checked to vanish modulo F4(z), and the
    quotient is reduced modulo F4(z) and stripped of its content in Q[a, b].
    The result is the integer-primitive associate with positive leading coefficient.
    """
    F4z = F4_SYM.subs({"X": Z})
    G = g_numerator_symbolic()
    H = G.exact_div(X - Z)
    Q, R = H.divmod(X - Z)
    if R.degree("X") > 0 or reduce_mod(R, F4z, "z")[0]:
        raise ConstructionFailureError("G(X, z) is not divisible by (X - z)^2 modulo F4(z)")
    q, _ = reduce_mod(Q, F4z, "z")
    parts = [c for coeff in q.coeff_list("X") for c in coeff.coeffs_in("z").values()]
    content = parts[0]
    for p in parts[1:]:
        content = poly_gcd(content, p)
    q = q.exact_div(content).primitive()
    return tuple(q.coeff_list("X"))


def g_numerator_symbolic() -> MultiPoly:
    F1z, F2z = F1_SYM.subs({"X": Z}), F2_SYM.subs({"X": Z})
    return X * F1_SYM**2 * F2z**2 - Z * F1z**2 * F2_SYM**2


def _point(a, b, z) -> dict:
    return {"a": as_rational(a), "b": as_rational(b), "z": z if is_exact_scalar(z) else as_rational(z)}


def _check_root(a, b, z):
    CoverParams(a, b)
    pt = _point(a, b, z)
    if F4_SYM.evaluate({"X": pt["z"], **pt}) != 0:
        raise InvalidRootError(f"z = {z} is not a root of F4 at (a, b) = ({a}, {b})")
    if pt["z"] == 1:
        raise InvalidRootError("z = 1 lies over t = 1; the other root of F4 is required")
    return pt


def _numeric_quotient(a, b, z) -> tuple:
    """G(X, z0) / (X - z0)^2 at a point, with both remainders checked to vanish."""
    pt = _point(a, b, z)
    F1 = [c.evaluate(pt) for c in F1_SYM.coeff_list("X")]
    F2 = [c.evaluate(pt) for c in F2_SYM.coeff_list("X")]
    z0 = pt["z"]
    f1z, f2z = upoly.evaluate(F1, z0), upoly.evaluate(F2, z0)
    G = upoly.sub(
        upoly.scale(upoly.mul((0, 1), upoly.mul(F1, F1)), f2z * f2z),
        upoly.scale(upoly.mul(F2, F2), z0 * f1z * f1z),
    )
    lin = (-z0, 1)
    q, r = upoly.divmod_(G, lin)
    q, r2 = upoly.divmod_(q, lin)
    if r or r2:
        raise ConstructionFailureError("G(X, z) is not exactly divisible by (X - z)^2")
    return q


def g3_oracle(a, b, z) -> tuple:
    """Ascending coefficients of g3 at a root z != 1 of F4.

    The point value of the symbolic construction is returned after checking it is
    proportional to the exact quotient G(X, z)/(X - z)^2 computed at the point.
    """
    pt = _check_root(a, b, z)
    numeric = _numeric_quotient(a, b, z)
    canon = upoly.trim(c.evaluate(pt) for c in g3_symbolic())
    if len(numeric) != 4 or len(canon) != 4:
        raise ConstructionFailureError("g3 is not a cubic at this point")
    ratio = numeric[3] / canon[3]
    if any(numeric[i] != ratio * canon[i] for i in range(4)):
        raise ConstructionFailureError("point quotient disagrees with the symbolic g3")
    return canon


def g3_division_check(a, b, z) -> dict:
    """Exact division G = (X - z)^2 q(X) at a point; returns q and its scale against g3."""
    _check_root(a, b, z)
    numeric = _numeric_quotient(a, b, z)
    canon = g3_oracle(a, b, z)
    return {"quotient": numeric, "scale": numeric[3] / canon[3]}


def g3_transcribed_symbolic() -> tuple[MultiPoly, ...]:
    return tuple(tr.poly(f"g3.a{i}") for i in range(4))


def g3_transcribed(a, b, z) -> tuple:
    """The transcribed coefficient table evaluated at a root z of F4 (ascending)."""
    pt = _check_root(a, b, z)
    return tuple(c.evaluate(pt) for c in g3_transcribed_symbolic())


def g3_transcription_delta() -> dict:
    """Per-coefficient comparison of the transcribed table with the symbolic g3.

    The scale is fixed from the x^3 coefficient.  For each coefficient the
    residual oracle/scale - transcribed is reduced modulo F4(z) and reported.
    """
    F4z = F4_SYM.subs({"X": Z})
    ours, theirs = g3_symbolic(), g3_transcribed_symbolic()
    scale = Fraction(ours[3].leading_coeff()) / theirs[3].leading_coeff()
    out = {"scale": scale, "coefficients": {}}
    for i in range(4):
        r, _ = reduce_mod(ours[i] / scale - theirs[i], F4z, "z")
        out["coefficients"][f"a{i}"] = {"agrees": r.is_zero(), "delta": r}
    return out


# -- curve and subcover ----------------------------------------------------------
def curve_from_cover(a, b, z) -> Genus2Curve:
    g3 = g3_oracle(a, b, z)
    f = upoly.mul((0, -1, 1), g3)
    try:
        return Genus2Curve(f)
    except SingularModelError as exc:
        raise SingularModelError(f"x(x - 1) g3(x) is not squarefree at (a, b) = ({a}, {b})") from exc


def subcover(a, b, z) -> EllipticSubcover:
    """lambda = phi(z) and its Legendre j."""
    _check_root(a, b, z)
    params = CoverParams(a, b)
    try:
        lam = phi_at(params, z)
    except ZeroDivisionError as exc:
        raise DegenerateSubcoverError("phi(z) is infinite") from exc
    return EllipticSubcover.from_lambda(lam)


def other_root(a, b, z):
    """The second root of F4 (sum of roots is -coefficient/leading)."""
    a, b = as_rational(a), as_rational(b)
    s = -(2 * b - 2 * b * a - 2 * a - a * a) / (2 * a + 1)
    return s - z


# -- degenerate cases ------------------------------------------------------------
def _require_nonzero(factors: tuple[str, ...], a) -> None:
    for f in factors:
        if parse_poly(f).evaluate({"a": a}) == 0:
            raise ExcludedParameterError(f"a = {a} is excluded: {f} = 0", f)


CASE1_FACTORS = ("a", "a + 2", "2a + 1", "a - 2", "a^2 + 2a + 2", "a^2 + 4a + 8", "a + 8")
CASE2_FACTORS = ("a", "9a - 8", "a + 8", "2a + 1", "3a - 1", "a - 1", "a - 2")
CASE3_FACTORS = (
    "a", "a^2 - 4", "2a + 1", "3a^3 - 12a - 1", "a - 4",
    "96a^5 - 400a^4 - 128a^3 + 800a^2 - 72a - 225",
)


def case1_point(a) -> tuple[Fraction, Fraction, Fraction]:
    a = as_rational(a)
    _require_nonzero(CASE1_FACTORS, a)
    return a, a * a / 4, tr.ratfunc("case1.z").evaluate({"a": a})


def case1_curve(a) -> tuple[Genus2Curve, EllipticSubcover]:
    """4b = a^2, z = a(a + 8)/(4(2a + 1))."""
    a, b, z = case1_point(a)
    return curve_from_cover(a, b, z), subcover(a, b, z)


def case2_point(a) -> tuple[Fraction, Fraction, Fraction]:
    a = as_rational(a)
    _require_nonzero(CASE2_FACTORS, a)
    return a, a - 1, tr.ratfunc("case2.z").evaluate({"a": a})


def case2_curve(a) -> tuple[Genus2Curve, EllipticSubcover]:
    """b = a - 1: the closed-form model with b0..b3 and the closed-form lambda."""
    a = as_rational(a)
    _require_nonzero(CASE2_FACTORS, a)
    g = tuple(tr.poly(f"case2.b{i}").evaluate({"a": a}) for i in range(4))
    lam = tr.ratfunc("case2.lambda").evaluate({"a": a})
    return Genus2Curve(upoly.mul((0, -1, 1), g)), EllipticSubcover.from_lambda(lam)


def case3_b_values(a) -> tuple:
    """The two b with (a, b) on the case III locus (rational or conjugate pair)."""
    a = as_rational(a)
    locus = tr.poly("case3.locus")
    if a == 4:
        raise ExcludedParameterError("the case III locus has one finite b over a = 4", "a - 4")
    return quadratic_roots(locus, "b", {"a": a})


def case3_point(a, b=None, branch: int = 0):
    a = as_rational(a)
    _require_nonzero(CASE3_FACTORS, a)
    if b is None:
        b = case3_b_values(a)[branch]
    elif tr.poly("case3.locus").evaluate({"a": a, "b": b}) != 0:
        raise InvalidInputError(f"(a, b) = ({a}, {b}) is not on the case III locus")
    z = tr.ratfunc("case3.r").evaluate({"a": a, "b": b})
    return a, b, z


def case3_curve(a, b=None, branch: int = 0) -> tuple[Genus2Curve, EllipticSubcover]:
    """The closed-form case III model; b defaults to one root of the locus over a.

    lambda = phi(z) needs the field of b, so it is computed here by substitution.
    """
    a, b, z = case3_point(a, b, branch)
    s = tr.ratfunc("case3.s").evaluate({"a": a})
    cubic = upoly.mul((-z, 1), (-s, -1, 1))
    f = upoly.mul((0, -1, 1), cubic)
    lam = _phi_general(a, b, z)
    return Genus2Curve(f), EllipticSubcover.from_lambda(lam)


def _phi_general(a, b, x):
    pt = {"a": a, "b": b, "X": x}
    den = F2_SYM.evaluate(pt)
    if den == 0:
        raise DegenerateSubcoverError("phi(z) is infinite")
    f1 = F1_SYM.evaluate(pt)
    return x * f1 * f1 / (den * den)


def case3_oracle_curve(a, b=None, branch: int = 0) -> Genus2Curve:
    """The curve built from the generic construction at a case III point."""
    a, b, z = case3_point(a, b, branch)
    return curve_from_cover_general(a, b, z)


def curve_from_cover_general(a, b, z) -> Genus2Curve:
    """As curve_from_cover, allowing a and b themselves in a quadratic field."""
    pt = {"a": a, "b": b, "z": z}
    if F4_SYM.evaluate({"X": z, **pt}) != 0:
        raise InvalidRootError("z is not a root of F4")
    g3 = upoly.trim(c.evaluate(pt) for c in g3_symbolic())
    return Genus2Curve(upoly.mul((0, -1, 1), g3))


# -- the case III curve Ybar3 ------------------------------------------------------
def y3bar_radicand() -> list:
    """Ascending coefficients in a of the discriminant in b of the locus polynomial."""
    d = discriminant(tr.poly("case3.locus"), "b")
    return [as_rational(c.constant_value()) for c in d.coeff_list("a")]


def quartic_invariants(c: list) -> tuple[Fraction, Fraction]:
    """I, J of the binary quartic c4 x^4 + ... + c0 (missing top terms count as zero)."""
    c = list(c) + [0] * (5 - len(c))
    e, d, cc, b, a = c[0], c[1], c[2], c[3], c[4]
    I = 12 * a * e - 3 * b * d + cc * cc
    J = 72 * a * cc * e + 9 * b * cc * d - 27 * a * d * d - 27 * e * b * b - 2 * cc**3
    return Fraction(I), Fraction(J)


def j_from_quartic(c: list) -> Fraction:
    """j of w^2 = quartic, 6912 I^3 / (4 I^3 - J^2)."""
    I, J = quartic_invariants(c)
    den = 4 * I**3 - J**2
    if den == 0:
        raise SingularModelError("quartic has a repeated root")
    return 6912 * I**3 / den


def j_from_cubic_weierstrass(c: list) -> Fraction:
    """j of w^2 = c3 x^3 + c2 x^2 + c1 x + c0 via reduction to y^2 = X^3 + p X + q."""
    c0, c1, c2, c3 = (Fraction(v) for v in list(c) + [0] * (4 - len(c)))
    if c3 == 0:
        raise InvalidInputError("not a cubic")
    # (c3 w)^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2 with X = c3 x
    A2, A4, A6 = c2, c1 * c3, c0 * c3 * c3
    p = A4 - A2 * A2 / 3
    q = 2 * A2**3 / 27 - A2 * A4 / 3 + A6
    den = 4 * p**3 + 27 * q * q
    if den == 0:
        raise SingularModelError("cubic has a repeated root")
    return 1728 * 4 * p**3 / den


def rational_roots(c: list) -> list[Fraction]:
    """Rational roots of an integer-coefficient-up-to-scale polynomial (ascending)."""
    from math import lcm

    c = [Fraction(v) for v in c]
    den = lcm(*(v.denominator for v in c))
    ints = [int(v * den) for v in c]
    while ints and ints[0] == 0:
        ints = ints[1:]
    roots = [Fraction(0)] if len(ints) < len(c) else []
    lead, const = abs(ints[-1]), abs(ints[0])
    divs = lambda n: [d for d in range(1, n + 1) if n % d == 0]
    for p in divs(const):
        for q in divs(lead):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in roots and upoly.evaluate(ints, r) == 0:
                    roots.append(r)
    return sorted(roots)


def j_from_legendre_roots(c: list) -> Fraction | None:
    """j through the cross-ratio of three rational roots, when they exist."""
    roots = rational_roots(c)
    if len(roots) != 3:
        return None
    e1, e2, e3 = roots
    return j_from_lambda((e3 - e1) / (e2 - e1))


def y3bar_j() -> Fraction:
    """j of the genus-1 case III locus, computed twice and cross-checked."""
    rad = y3bar_radicand()
    j1 = j_from_quartic(rad)
    j2 = j_from_cubic_weierstrass(rad)
    if j1 != j2:
        raise ConstructionFailureError(f"quartic-invariant j {j1} differs from Weierstrass j {j2}")
    j3 = j_from_legendre_roots(rad)
    if j3 is not None and j3 != j1:
        raise ConstructionFailureError(f"Legendre j {j3} differs from {j1}")
    return j1
