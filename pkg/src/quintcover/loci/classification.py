"""Parameter values with an extra involution (automorphism group V4).

The transcribed products are split into their displayed factors so that degrees
can be counted with and without multiplicity.  Numerical corroboration builds
the curve at a complex root and asks the branch-point stabilizer oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .. import transcriptions as tr
from ..cover import RamificationCase
from ..curve import g3_symbolic
from ..errors import InvalidInputError
from ..exactalg import MultiPoly, as_rational, parse_poly
from ..igusa import AutReport, reduced_aut_group_numeric
from .formulas import TParam

_KEYS = {RamificationCase.I: "case1.v4", RamificationCase.II: "case2.v4", RamificationCase.III: "case3.v4"}
_VAR = {RamificationCase.I: "T", RamificationCase.II: "T", RamificationCase.III: "a"}


def _case(case) -> RamificationCase:
    c = case if isinstance(case, RamificationCase) else RamificationCase(case)
    if c not in _KEYS:
        raise InvalidInputError("classification polynomials exist for cases I, II, III")
    return c


def split_factors(text: str) -> list[tuple[str, int]]:
    """Top-level parenthesized factors of a product display, with exponents."""
    out, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                m = re.match(r"\^(\d+)", text[i + 1:])
                out.append((text[start + 1: i], int(m.group(1)) if m else 1))
    return out


@dataclass(frozen=True)
class ClassificationPoly:
    case: RamificationCase
    var: str
    factors: tuple[tuple[MultiPoly, int], ...]

    @property
    def product(self) -> MultiPoly:
        out = MultiPoly.one()
        for f, m in self.factors:
            out = out * f**m
        return out

    @property
    def degree(self) -> int:
        """Degree with multiplicity."""
        return sum(f.degree(self.var) * m for f, m in self.factors)

    @property
    def radical_degree(self) -> int:
        return sum(f.degree(self.var) for f, _ in self.factors)

    def lowest_factors(self) -> list[MultiPoly]:
        return sorted((f for f, _ in self.factors), key=lambda f: f.degree(self.var))


@lru_cache(maxsize=None)
def classification(case) -> ClassificationPoly:
    case = _case(case)
    parts = split_factors(tr.DISPLAYS[_KEYS[case]])
    return ClassificationPoly(case, _VAR[case], tuple((parse_poly(t), m) for t, m in parts))


def classification_poly(case) -> MultiPoly:
    return classification(case).product


def is_v4_point(param, case=None) -> bool:
    """Whether T (cases I, II) or a (case III) is a root of the classification product."""
    if isinstance(param, TParam):
        case, param = param.case, param.T
    cls = classification(case)
    x = as_rational(param)
    return any(f.evaluate({cls.var: x}) == 0 for f, _ in cls.factors)


# -- numerical corroboration -------------------------------------------------------
def numeric_roots(p: MultiPoly, var: str, precision_bits: int = 128) -> list:
    coeffs = [as_rational(c) for c in p.rational_coeffs(var)]
    with mpmath.workprec(precision_bits):
        mp = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(coeffs)]
        return list(mpmath.polyroots(mp, maxsteps=500, extraprec=2 * precision_bits))


def case_point_numeric(T, case, precision_bits: int = 128) -> tuple:
    """(a, b, z) as mpmath numbers for a T on the case I or II locus."""
    case = _case(case)
    with mpmath.workprec(precision_bits):
        s = mpmath.sqrt(mpmath.mpc(T))
        if case is RamificationCase.I:
            a = 2 * (1 + 5 * s) / (1 - 5 * s)
            b = a * a / 4
            z = a * (8 + a) / (4 * (2 * a + 1))
        elif case is RamificationCase.II:
            a = 2 * s / (s - 1)
            b = a - 1
            z = (3 * a - 1) * (a - 1) / (2 * a + 1)
        else:
            raise InvalidInputError("numeric case points need a T-parametrized case")
    return a, b, z


def curve_coeffs_numeric(a, b, z, precision_bits: int = 128) -> list:
    """Ascending coefficients of x(x - 1) g3(x) at numerical parameters."""
    with mpmath.workprec(precision_bits):
        g = [c.evaluate({"a": a, "b": b, "z": z}) for c in g3_symbolic()]
        f = [mpmath.mpc(0)] * 6
        for k, c in enumerate(g):
            f[k + 2] += c
            f[k + 1] -= c
        return f


def v4_numeric_check(case, count: int = 3, precision_bits: int = 128, tol=None) -> list[tuple]:
    """Stabilizer orders at numerical roots of the lowest-degree factors.

    Returns (factor, root, AutReport) for ``count`` roots taken from the factors
    in increasing degree.
    """
    cls = classification(case)
    if cls.case is RamificationCase.III:
        raise InvalidInputError("the numeric check is wired for the T-parametrized cases")
    out: list[tuple] = []
    for f in cls.lowest_factors():
        for root in numeric_roots(f, cls.var, precision_bits):
            if len(out) == count:
                return out
            a, b, z = case_point_numeric(root, cls.case, precision_bits)
            coeffs = curve_coeffs_numeric(a, b, z, precision_bits)
            report: AutReport = reduced_aut_group_numeric(coeffs, precision_bits, tol)
            out.append((str(f), root, report))
    return out
