"""T-parametrizations of the case I and case II loci and parameter recovery.

Along each locus the absolute invariants are rational functions of one
parameter T.  The closed forms are transcribed; this module evaluates them,
maps cover parameters a to T and back, and recovers T from an invariant triple
by a gcd of cleared-denominator polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .. import transcriptions as tr
from ..cover import RamificationCase
from ..errors import AmbiguityError, ExcludedParameterError, InvalidInputError, J2ZeroError, NotOnLocusError
from ..exactalg import MultiPoly, QuadExtScalar, as_rational, rational_sqrt, scalar_json, upoly

CASES = (RamificationCase.I, RamificationCase.II)


def _case(case) -> RamificationCase:
    c = RamificationCase(case) if not isinstance(case, RamificationCase) else case
    if c not in CASES:
        raise InvalidInputError(f"T-parametrization exists for cases I and II, not {c.value}")
    return c


@dataclass(frozen=True)
class TParam:
    T: Fraction
    case: RamificationCase

    def to_json(self) -> dict:
        return {"T": scalar_json(self.T), "case": self.case.value}


def t_of_a(a, case) -> TParam:
    """Case I: T = ((a - 2)/(5(a + 2)))^2.  Case II: T = (a/(a - 2))^2."""
    case, a = _case(case), as_rational(a)
    if case is RamificationCase.I:
        if a == -2:
            raise ExcludedParameterError("T is undefined at a = -2", "a + 2")
        r = (a - 2) / (5 * (a + 2))
    else:
        if a == 2:
            raise ExcludedParameterError("T is undefined at a = 2", "a - 2")
        r = a / (a - 2)
    return TParam(r * r, case)


def a_of_t(T, case) -> tuple:
    """The two cover parameters a over T (rational or a conjugate pair in Q(sqrt T))."""
    case, T = _case(case), as_rational(T)
    r = rational_sqrt(T)
    s = r if r is not None else QuadExtScalar.sqrt(T)
    roots = []
    for sign in (1, -1):
        if case is RamificationCase.I:
            u = 5 * s * sign
            if u == 1:
                raise ExcludedParameterError("T = 1/25 has a preimage at infinity", "25T - 1")
            roots.append(2 * (1 + u) / (1 - u))
        else:
            u = s * sign
            if u == 1:
                raise ExcludedParameterError("T = 1 has a preimage at infinity", "T - 1")
            roots.append(2 * u / (u - 1))
    return tuple(roots)


# -- the transcribed invariant formulas ----------------------------------------------
@dataclass(frozen=True)
class LocusFormulas:
    """Numerators and denominators of i1, i2, i3, j as polynomials in T."""

    nums: tuple[MultiPoly, ...]
    dens: tuple[MultiPoly, ...]
    J2: MultiPoly


@lru_cache(maxsize=None)
def locus_formulas(case) -> LocusFormulas:
    case = _case(case)
    key = "case1" if case is RamificationCase.I else "case2"
    J2 = tr.poly(f"{key}.J2")
    consts = (1, 1, 1)
    if case is RamificationCase.II:
        consts = (1, int(tr.DISPLAYS["case2.i2.den_const"]), int(tr.DISPLAYS["case2.i3.den_const"]))
    nums = tuple(tr.poly(f"{key}.i{k}.num") for k in (1, 2, 3)) + (tr.poly(f"{key}.j.num"),)
    dens = tuple(J2**e * c for e, c in zip((2, 3, 5), consts)) + (tr.poly(f"{key}.j.den"),)
    return LocusFormulas(nums, dens, J2)


def _evaluate(case, T) -> tuple:
    f = locus_formulas(case)
    T = as_rational(T)
    pt = {"T": T}
    if f.J2.evaluate(pt) == 0:
        raise J2ZeroError(f"J2(T) vanishes at T = {T}")
    out = []
    for num, den in zip(f.nums, f.dens):
        d = den.evaluate(pt)
        if d == 0:
            raise ExcludedParameterError(f"a denominator of the j formula vanishes at T = {T}", "j denominator")
        out.append(Fraction(num.evaluate(pt)) / d)
    return tuple(out)


def y1_formulas(T) -> tuple:
    """(i1, i2, i3, j) along the case I locus."""
    return _evaluate(RamificationCase.I, T)


def y2_formulas(T) -> tuple:
    """(i1, i2, i3, j) along the case II locus."""
    return _evaluate(RamificationCase.II, T)


def formulas(T, case) -> tuple:
    return _evaluate(case, T)


# -- recovery ------------------------------------------------------------------------
def _univariate(p: MultiPoly) -> tuple:
    return upoly.trim(Fraction(c) for c in p.rational_coeffs("T")) if p else ()


def recover_parameter(i1, i2, i3, case) -> TParam:
    """The unique T whose displayed invariants are (i1, i2, i3).

    Each equation i_k den_k(T) - num_k(T) = 0 is a polynomial in T; their gcd
    has the common roots.
    """
    case = _case(case)
    f = locus_formulas(case)
    g: tuple | None = None
    for value, num, den in zip((i1, i2, i3), f.nums, f.dens):
        value = as_rational(value)
        eq = upoly.sub(upoly.scale(_univariate(den), value), _univariate(num))
        if not eq:
            continue
        g = eq if g is None else upoly.gcd(g, eq)
    if g is None:
        raise AmbiguityError("every equation vanishes identically", candidates=None)
    g = upoly.monic(g)
    if upoly.degree(g) <= 0:
        raise NotOnLocusError(f"no T gives these invariants on the case {case.value} locus")
    if upoly.degree(g) == 1:
        T = -g[0]
    else:
        raise AmbiguityError(f"{upoly.degree(g)} common roots in T; the gcd is recorded", candidates=g)
    if f.J2.evaluate({"T": T}) == 0:
        raise NotOnLocusError("the common root lies on J2 = 0")
    return TParam(T, case)
