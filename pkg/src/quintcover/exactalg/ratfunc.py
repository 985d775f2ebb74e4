"""Rational functions num/den over Q, kept in lowest terms.

Normal form: gcd(num, den) is constant and den has grlex leading coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..errors import InvalidInputError
from .elim import poly_gcd
from .poly import MultiPoly, canonical_gens, lift


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, reduce: bool = True):
        num, den = lift(num), lift(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and not num:
            num, den = MultiPoly.zero(), MultiPoly.one()
        elif reduce:
            if not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading_coeff()
            if lc != 1:
                num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def of(cls, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return RatFunc(self.den**-e, self.num**-e)
        return RatFunc(self.num**e, self.den**e, reduce=False)

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def diff(self, var: str) -> RatFunc:
        return RatFunc(self.num.diff(var) * self.den - self.num * self.den.diff(var), self.den**2)

    def subs(self, mapping: Mapping[str, object]) -> RatFunc:
        """Substitute rationals, polynomials or rational functions for variables."""
        scal = {k: v for k, v in mapping.items() if isinstance(v, (int, Fraction))}
        rat = {k: RatFunc.of(v) for k, v in mapping.items() if k not in scal}
        num, den = self.num, self.den
        if scal:
            num, den = num.subs(scal), den.subs(scal)
        if rat:
            n1, d1 = compose(num, rat)
            n2, d2 = compose(den, rat)
            num, den = n1 * d2, d1 * n2
        if not den:
            raise ZeroDivisionError("denominator vanishes under substitution")
        return RatFunc(num, den)

    def evaluate(self, assignment: Mapping[str, object]):
        d = self.den.evaluate(assignment)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(assignment) / d

    def to_json(self) -> dict:
        gens = canonical_gens(self.num.used_gens() + self.den.used_gens())
        return {
            "vars": list(gens),
            "num": self.num.to_json(gens),
            "den": self.den.to_json(gens),
        }


def _coerce(x) -> RatFunc | None:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (MultiPoly, int, Fraction)):
        return RatFunc(x)
    return None


def compose(p: MultiPoly, mapping: Mapping[str, RatFunc]) -> tuple[MultiPoly, MultiPoly]:
    """Simultaneously substitute rational functions into a polynomial.

    Each variable ``x`` of degree ``e`` in ``p`` is replaced by ``n/d`` and the result
    is homogenized by ``d**e``; returns the unreduced (numerator, denominator).
    """
    items = [(v, RatFunc.of(f)) for v, f in mapping.items() if p.degree(v) > 0]
    if not items:
        return p, MultiPoly.one()
    names = [v for v, _ in items]
    degs = [p.degree(v) for v in names]
    npow, dpow = [], []
    for (_, f), e in zip(items, degs):
        npw, dpw = [MultiPoly.one()], [MultiPoly.one()]
        for _ in range(e):
            npw.append(npw[-1] * f.num)
            dpw.append(dpw[-1] * f.den)
        npow.append(npw)
        dpow.append(dpw)
    groups: dict[tuple[int, ...], MultiPoly] = {}
    for exps, c in p.items():
        sub = tuple(exps[p.gens.index(v)] for v in names)
        rest = {g: e for g, e in zip(p.gens, exps) if g not in names and e}
        mono = MultiPoly.const(c)
        for g, e in rest.items():
            mono = mono * MultiPoly.var(g) ** e
        groups[sub] = groups.get(sub, MultiPoly.zero()) + mono
    num = MultiPoly.zero()
    for sub, rest in groups.items():
        term = rest
        for i, k in enumerate(sub):
            term = term * npow[i][k] * dpow[i][degs[i] - k]
        num = num + term
    den = MultiPoly.one()
    for i in range(len(items)):
        den = den * dpow[i][degs[i]]
    return num, den


def ratfunc(text_num, text_den=1) -> RatFunc:
    if isinstance(text_num, str):
        text_num = lift(text_num)
    if isinstance(text_den, str):
        text_den = lift(text_den)
    return RatFunc(text_num, text_den)


def as_ratfunc(x) -> RatFunc:
    o = _coerce(x)
    if o is None:
        raise InvalidInputError(f"cannot interpret {x!r} as a rational function")
    return o
