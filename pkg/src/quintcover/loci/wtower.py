"""The degree-2 tower C(u, v, w) over C(u, v) and the case III conditions.

w(z) = (z^2 - z + 1)^3 / (z^2 (z - 1)^2) is the classical j-type function
invariant under z -> 1/z and z -> 1 - z.  Evaluated at the two roots of F4 it
gives the two roots of c2 w^2 + c1 w + c0 with coefficients in Q[u, v].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .. import transcriptions as tr
from ..cover import CASE_III_CONDITION, CoverParams, f4_roots, uv_invariants
from ..errors import InvalidInputError, InvalidRootError
from ..exactalg import MultiPoly, RatFunc, as_rational, parse_poly, poly_sqrt
from ..report import CheckReport

W_NUM = parse_poly("(z^2 - z + 1)^3")
W_DEN = parse_poly("z^2(z - 1)^2")


def w_symbolic() -> RatFunc:
    return RatFunc(W_NUM, W_DEN, reduce=False)


def w_of_z(z):
    """(z^2 - z + 1)^3 / (z^2 (z - 1)^2) for an exact scalar z not in {0, 1}."""
    if z == 0 or z == 1:
        raise InvalidInputError("w is undefined at z = 0 and z = 1")
    q = z * z - z + 1
    return q * q * q / (z * z * (z - 1) * (z - 1))


@dataclass(frozen=True)
class WRelation:
    c0: MultiPoly
    c1: MultiPoly
    c2: MultiPoly

    def at(self, u, v) -> tuple:
        pt = {"u": u, "v": v}
        return self.c0.evaluate(pt), self.c1.evaluate(pt), self.c2.evaluate(pt)

    def discriminant(self) -> MultiPoly:
        return self.c1 * self.c1 - 4 * self.c0 * self.c2


@lru_cache(maxsize=1)
def w_relation() -> WRelation:
    return WRelation(tr.poly("w.c0"), tr.poly("w.c1"), tr.poly("w.c2"))


def verify_w_relation(a, b) -> CheckReport:
    """c2 w^2 + c1 w + c0 = 0 at w = w(z) for both roots z of F4, plus the Vieta pair."""
    params = CoverParams(a, b)
    u, v = uv_invariants(params)
    c0, c1, c2 = w_relation().at(u, v)
    roots = [r.value for r in f4_roots(params)]
    if any(z == 1 or z == 0 for z in roots):
        raise InvalidRootError(f"F4 has a root in {{0, 1}} at (a, b) = ({a}, {b})")
    ws = [w_of_z(z) for z in roots]
    residuals = [c2 * w * w + c1 * w + c0 for w in ws]
    ok = all(r == 0 for r in residuals)
    consts = {"u": u, "v": v, "w_plus": ws[0], "w_minus": ws[1]}
    if c2 != 0:
        vieta = (ws[0] + ws[1] == -c1 / c2) and (ws[0] * ws[1] == c0 / c2)
    else:
        vieta = False
    consts["vieta"] = vieta
    residual = residuals[0] if residuals[0] != 0 else residuals[1]
    detail = "" if ok and vieta else ("Vieta pair check failed" if ok else "w(z) is not a root")
    return CheckReport("w-relation", ok and vieta, residual, consts, detail)


def delta_w_check() -> CheckReport:
    """c1^2 - 4 c0 c2 is the displayed Delta_w times a rational square.

    Records the quotient as constant * S^2 with S primitive.
    """
    rel = w_relation()
    disc = rel.discriminant()
    delta = tr.poly("w.delta")
    quo, rem = disc.divmod(delta)
    if rem:
        return CheckReport("deltaw", False, rem, {}, "Delta_w does not divide c1^2 - 4 c0 c2")
    prim = quo.primitive()
    root = poly_sqrt(prim) or poly_sqrt(-prim)
    const = Fraction(quo.leading_coeff()) / (root * root).leading_coeff() if root is not None else None
    ok = root is not None and quo == root * root * const
    consts = {"constant": const, "square_root": root if root is not None else "none"}
    on_line = disc.subs({"v": parse_poly("16 - 2u")})
    consts["vanishes_on_2u+v=16"] = on_line.is_zero()
    return CheckReport("deltaw", ok and on_line.is_zero(), MultiPoly.zero() if ok else quo, consts)


def y3_membership(a, b) -> bool:
    """Zero test of the case III locus polynomial (no admissibility check)."""
    return CASE_III_CONDITION.evaluate({"a": a, "b": b}) == 0


def y3_uv_constraint(u, v) -> bool:
    return as_rational(2 * Fraction(u) + Fraction(v) - 16) == 0
