"""The normalized degree-5 map phi(X) = X F1(X)^2 / F2(X)^2 and its parameter space.

Every object here is built once over Q[a, b] and specialized by substitution, so the
symbolic and numeric paths share the same formulas.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import ExcludedParameterError, IdentityViolationError, InvalidInputError
from .exactalg import (
    MultiPoly,
    RatFunc,
    as_rational,
    discriminant,
    parse_poly,
    quadratic_roots,
)
from .report import CheckReport

X, A, B = (MultiPoly.var(n) for n in ("X", "a", "b"))

F1_SYM = parse_poly("X^2 + (2a + 2b + a^2)X + 2ab + b^2")
F2_SYM = parse_poly("(2a + 1)X^2 + (a^2 + 2ab + 2b)X + b^2")
F3_SYM = parse_poly("X^2 - (a^2 - 2b)X + b^2")
F4_SYM = parse_poly("(2a + 1)X^2 + (2b - 2ba - 2a - a^2)X + b^2 + 2ab")

# the nine factors of Delta(a, b), in display order
DELTA_FACTORS: tuple[tuple[str, MultiPoly], ...] = tuple(
    (s, parse_poly(s))
    for s in (
        "a + b + 1",
        "b",
        "2a + 1",
        "a - b - 1",
        "a^2 - 4b",
        "4b + 4 + 4a + a^2",
        "4b^2 + 4b + 4ba + a^2",
        "a^3 - 2b - 2ba - 2b^2",
        "2a + b",
    )
)

CASE_I_CONDITION = parse_poly("a^2 - 4b")
CASE_II_CONDITION = parse_poly("b - a + 1")
CASE_III_CONDITION = parse_poly("a^3 + 4ba^2 + 4a^2 - 12ba + 4ab^2 + 4a - 16b - 16b^2")


class RamificationCase(str, enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    I = "I"
    II = "II"
    III = "III"

    @property
    def structure(self) -> str:
        return RAMIFICATION_STRUCTURES[self]


RAMIFICATION_STRUCTURES = {
    RamificationCase.NON_DEGENERATE: "((2)^2, (2)^2, (2)^2, (2), (2))",
    RamificationCase.I: "((2)^2, (2)^2, (4), (2))",
    RamificationCase.II: "((2)^2, (2)^2, (2)(3), (2))",
    RamificationCase.III: "((2)^2, (2)^2, (2)^2, (3))",
}


@dataclass(frozen=True)
class CoverParams:
    """Admissible parameters: a, b, a+b+1 and 2a+1 all nonzero."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        a, b = self.a, self.b
        for name, value in (("a", a), ("b", b), ("a + b + 1", a + b + 1), ("2a + 1", 2 * a + 1)):
            if value == 0:
                raise ExcludedParameterError(f"excluded parameters (a, b) = ({a}, {b}): {name} = 0", name)

    def point(self) -> dict[str, Fraction]:
        return {"a": self.a, "b": self.b}

    def to_json(self) -> dict:
        from .exactalg import rational_str

        return {"a": rational_str(self.a), "b": rational_str(self.b)}


def _specialize(p: MultiPoly, params: CoverParams | None) -> MultiPoly:
    return p if params is None else p.subs(params.point())


@dataclass(frozen=True)
class CoverData:
    params: CoverParams | None
    F1: MultiPoly
    F2: MultiPoly
    F3: MultiPoly
    F4: MultiPoly
    phi: RatFunc
    case: RamificationCase | None = None

    @property
    def symbolic(self) -> bool:
        return self.params is None

    def to_json(self) -> dict:
        from .exactalg import rational_str

        gens = ["X"] if self.params is not None else ["X", "a", "b"]
        out = {
            "vars": gens,
            "F1": self.F1.to_json(gens),
            "F2": self.F2.to_json(gens),
            "F3": self.F3.to_json(gens),
            "F4": self.F4.to_json(gens),
            "phi_num": self.phi.num.to_json(gens),
            "phi_den": self.phi.den.to_json(gens),
            "case": self.case.value if self.case is not None else None,
        }
        if self.params is not None:
            out["a"] = rational_str(self.params.a)
            out["b"] = rational_str(self.params.b)
        else:
            out["a"] = out["b"] = None
        return out


def build_cover(params: CoverParams | None = None, *, classify: bool = True) -> CoverData:
    """F1..F4 and phi, specialized at ``params`` (symbolic over Q[a, b] when None)."""
    F1, F2, F3, F4 = (_specialize(F, params) for F in (F1_SYM, F2_SYM, F3_SYM, F4_SYM))
    phi = RatFunc(X * F1**2, F2**2, reduce=params is not None)
    case = classify_case(params) if (classify and params is not None) else None
    return CoverData(params, F1, F2, F3, F4, phi, case)


@lru_cache(maxsize=1)
def symbolic_cover() -> CoverData:
    return build_cover(None)


def phi_symbolic() -> RatFunc:
    """phi as an element of Q(a, b)(X), unreduced (F1 and F2 are coprime generically)."""
    return RatFunc(X * F1_SYM**2, F2_SYM**2, reduce=False)


# -- identities ---------------------------------------------------------------
def square_identity_residual(c: CoverData) -> MultiPoly:
    return X * c.F1**2 - (X - 1) * c.F3**2 - c.F2**2


def verify_square_identity(c: CoverData) -> CheckReport:
    """X F1^2 - (X - 1) F3^2 = F2^2, i.e. phi(X) - 1 = (X - 1)(F3/F2)^2."""
    residual = square_identity_residual(c)
    if residual:
        raise IdentityViolationError("X F1^2 - (X-1) F3^2 - F2^2 is not zero", residual)
    return CheckReport("square-identity", True, residual, {})


def derivative_factorization(c: CoverData) -> CheckReport:
    """phi' = const * F1 F3 F4 / F2^3; the constant is recorded.

    With phi = X F1^2 / F2^2 the quotient rule gives
    phi' = F1 ((F1 + 2 X F1') F2 - 2 X F1 F2') / F2^3, so it suffices to compare the
    bracket with F3 F4.
    """
    x = "X"
    bracket = (c.F1 + 2 * X * c.F1.diff(x)) * c.F2 - 2 * X * c.F1 * c.F2.diff(x)
    target = c.F3 * c.F4
    if not target:
        raise IdentityViolationError("F3 F4 vanishes identically", target)
    const = Fraction(bracket.leading_coeff()) / target.leading_coeff()
    residual = bracket - target * const
    if residual:
        raise IdentityViolationError("phi' numerator is not a constant times F1 F3 F4", residual)
    return CheckReport("derivative-factorization", True, residual, {"constant": const})


# -- case classification --------------------------------------------------------
def delta(params: CoverParams | tuple) -> Fraction:
    """Value of the product Delta(a, b) of the nine factors."""
    point = _point(params)
    value = Fraction(1)
    for _, f in DELTA_FACTORS:
        value *= f.evaluate(point)
    return value


def vanishing_delta_factors(params) -> list[str]:
    point = _point(params)
    return [name for name, f in DELTA_FACTORS if f.evaluate(point) == 0]


def _point(params) -> dict:
    if isinstance(params, CoverParams):
        return params.point()
    a, b = params
    return {"a": as_rational(a), "b": as_rational(b)}


def case_conditions(params: CoverParams) -> list[RamificationCase]:
    """All of I, II, III whose defining condition holds, in that order."""
    point = params.point()
    out = []
    if CASE_I_CONDITION.evaluate(point) == 0:
        out.append(RamificationCase.I)
    if CASE_II_CONDITION.evaluate(point) == 0:
        out.append(RamificationCase.II)
    if CASE_III_CONDITION.evaluate(point) == 0:
        out.append(RamificationCase.III)
    return out


# case-specific nonvanishing products; an admissible point on two case loci always hits one
CASE_II_NONVANISHING = parse_poly("a(9a - 8)(a + 8)(2a + 1)(3a - 1)(a - 1)(a - 2)")
CASE_I_NONVANISHING = parse_poly("a(a + 2)(2a + 1)(a - 2)(a^2 + 2a + 2)(a^2 + 4a + 8)(a + 8)")


def classify_case(params: CoverParams) -> RamificationCase:
    """Ramification type, testing I, then II, then III, else requiring Delta != 0.

    A point with Delta = 0 that satisfies none of the three conditions is a
    degenerate cover whose exceptional fibre is not over t = 1; it violates the
    normalization and is rejected.
    """
    satisfied = case_conditions(params)
    if len(satisfied) > 1:
        a = params.a
        excluded = (
            CASE_I_NONVANISHING.evaluate({"a": a}) == 0
            or CASE_II_NONVANISHING.evaluate({"a": a}) == 0
        )
        if not excluded:
            raise AssertionError(f"case overlap {satisfied} at admissible parameters {params}")
    if satisfied:
        return satisfied[0]
    zeros = vanishing_delta_factors(params)
    if zeros:
        raise ExcludedParameterError(
            f"Delta({params.a}, {params.b}) = 0 via {zeros[0]} but no normalized degenerate "
            f"case applies; an S3 image of these parameters is normalized",
            zeros[0],
        )
    return RamificationCase.NON_DEGENERATE


# -- the S3 action ---------------------------------------------------------------
S3_WORDS = ("", "s", "t", "st", "ts", "sts")


def _sigma(a, b):
    return a / b, 1 / b


def _tau(a, b):
    return a, -a - b - 1


def _check_word(word: str):
    if any(ch not in "st" for ch in word):
        raise InvalidInputError(f"S3 word must use the letters 's' and 't': {word!r}")


def s3_on_params(params: CoverParams, word: str) -> CoverParams:
    """Apply a word in the generators s: (a,b) -> (a/b, 1/b) and t: (a,b) -> (a, -a-b-1).

    Letters act left to right.  Both generators are involutions and st has order 3.
    """
    _check_word(word)
    a, b = params.a, params.b
    for ch in word:
        a, b = _sigma(a, b) if ch == "s" else _tau(a, b)
    return CoverParams(a, b)


def s3_on_triple(a, b, z, word: str):
    """The action extended to a root z of F4: s sends z to 1/z, t sends z to 1 - z."""
    _check_word(word)
    a, b = as_rational(a), as_rational(b)
    for ch in word:
        if ch == "s":
            if b == 0 or z == 0:
                raise ExcludedParameterError("s undefined at b = 0 or z = 0", "b")
            a, b, z = a / b, 1 / b, 1 / z
        else:
            a, b, z = a, -a - b - 1, 1 - z
    CoverParams(a, b)
    return a, b, z


SIGMA_SUBS = {"a": RatFunc(A, B), "b": RatFunc(1, B)}
TAU_SUBS = {"a": A, "b": -A - B - 1}


def s3_orbit(params: CoverParams) -> dict[str, CoverParams]:
    out = {}
    for w in S3_WORDS:
        try:
            out[w] = s3_on_params(params, w)
        except ExcludedParameterError:
            continue
    return out


# -- invariants u, v -------------------------------------------------------------
U_SYM = RatFunc(parse_poly("2a(ab + b^2 + b + a + 1)"), parse_poly("b(a + b + 1)"))
V_SYM = RatFunc(parse_poly("a^3"), parse_poly("b(a + b + 1)"))


def uv_invariants(params) -> tuple[Fraction, Fraction]:
    point = _point(params)
    den = point["b"] * (point["a"] + point["b"] + 1)
    if den == 0:
        raise ExcludedParameterError("u, v undefined when b(a + b + 1) = 0", "b(a + b + 1)")
    return U_SYM.evaluate(point), V_SYM.evaluate(point)


# -- roots of F4 -----------------------------------------------------------------
class F4Root(NamedTuple):
    value: object
    is_one: bool


def f4_roots(params: CoverParams) -> tuple[F4Root, F4Root]:
    """Both roots of F4 (rational or conjugate quadratic-extension pair)."""
    if 2 * params.a + 1 == 0:
        raise ExcludedParameterError("F4 degenerates when 2a + 1 = 0", "2a + 1")
    r1, r2 = quadratic_roots(F4_SYM, "X", params.point())
    return F4Root(r1, r1 == 1), F4Root(r2, r2 == 1)


def branch_roots(params: CoverParams) -> list:
    """Roots z of F4 with phi(z) outside {0, 1, infinity}: the ramified points of the
    two simple branch points (the root not over t = 1 in cases I and II)."""
    c = build_cover(params, classify=False)
    out = []
    for root in f4_roots(params):
        z = root.value
        if root.is_one or z == 0:
            continue
        pt = {"X": z}
        if c.F1.evaluate(pt) == 0 or c.F2.evaluate(pt) == 0 or c.F3.evaluate(pt) == 0:
            continue
        if any(z == other for other in out):
            continue
        out.append(z)
    return out


def f4_discriminant() -> MultiPoly:
    return discriminant(F4_SYM, "X")


def phi_at(params: CoverParams | None, x):
    """phi(x) for numeric parameters and an exact scalar x."""
    c = build_cover(params, classify=False) if params is not None else symbolic_cover()
    pt = {"X": x}
    den = c.F2.evaluate(pt)
    if den == 0:
        raise ZeroDivisionError("phi has a pole at this point")
    f1 = c.F1.evaluate(pt)
    return x * f1 * f1 / (den * den)
