from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy.polys.subresultants_qq_zz import sylvester

from conftest import nonzero_rationals, small_rationals
from quintcover.errors import DegenerateQuadraticError, InvalidInputError, MixedExtensionError
from quintcover.exactalg import (
    MultiPoly,
    QuadExtScalar,
    RatFunc,
    conjugate,
    discriminant,
    parse_poly,
    parse_rational,
    poly_gcd,
    poly_sqrt,
    quadratic_roots,
    rational_sqrt,
    rational_str,
    reduce_mod,
    resultant,
    scalar_from_json,
    scalar_json,
    squarefree_part,
    upoly,
)

GENS = ("x", "a", "b")
SYM = dict(zip(GENS, sp.symbols(GENS)))


def polys(max_deg: int = 3, max_terms: int = 5):
    exps = st.tuples(*(st.integers(0, max_deg) for _ in GENS))
    coeffs = st.integers(-9, 9).filter(bool)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: MultiPoly(d, GENS))


def to_sympy(p: MultiPoly) -> sp.Expr:
    out = sp.Integer(0)
    for exps, c in p.items():
        term = sp.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sp.Integer(c)
        for g, e in zip(p.gens, exps):
            term *= SYM[g] ** e
        out += term
    return out


def same(p: MultiPoly, expr) -> bool:
    return sp.expand(to_sympy(p) - expr) == 0


# -- MultiPoly ------------------------------------------------------------------------
@given(polys(), polys())
def test_ring_operations_agree_with_sympy(p, q):
    P, Q = to_sympy(p), to_sympy(q)
    assert same(p + q, P + Q)
    assert same(p - q, P - Q)
    assert same(p * q, P * Q)
    assert same(p**2, P**2)


@given(polys(), polys())
def test_exact_division_recovers_factor(p, q):
    assume(q)
    assert (p * q).exact_div(q) == p


@given(polys())
def test_string_form_parses_back(p):
    assert parse_poly(str(p)) == p


def test_parser_reads_implicit_products_and_powers():
    p = parse_poly("2ab^2(a + 1)^2 - 3/4b")
    a, b = sp.symbols("a b")
    assert same(p, 2 * a * b**2 * (a + 1) ** 2 - sp.Rational(3, 4) * b)


@given(polys(), st.dictionaries(st.sampled_from(GENS), small_rationals(), min_size=3, max_size=3))
def test_evaluation_agrees_with_sympy(p, point):
    expected = to_sympy(p).subs({SYM[k]: sp.Rational(v.numerator, v.denominator) for k, v in point.items()})
    assert p.evaluate(point) == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))


@given(polys(2, 4), polys(2, 4))
def test_resultant_agrees_with_sympy(p, q):
    assume(p.degree("x") >= 1 and q.degree("x") >= 1)
    ours = resultant(p, q, "x")
    x = SYM["x"]
    # sympy's resultant() flips the sign for some degree pairs; the Sylvester determinant is the definition
    assert same(ours, sylvester(to_sympy(p), to_sympy(q), x).det(method="berkowitz"))


@given(polys(3, 4))
def test_discriminant_agrees_with_sympy(p):
    assume(p.degree("x") >= 2)
    x = SYM["x"]
    assert same(discriminant(p, "x"), sp.discriminant(to_sympy(p), x))


@given(polys(2, 3), polys(2, 3), polys(1, 3))
def test_gcd_matches_sympy_up_to_a_constant(p, q, r):
    assume(p and q and r)
    g = poly_gcd(p * r, q * r)
    expected = sp.gcd(to_sympy(p * r), to_sympy(q * r))
    ratio = sp.cancel(to_sympy(g) / expected)
    assert ratio.is_number and ratio != 0


@given(polys(2, 4))
def test_square_root_of_a_square(p):
    assume(p)
    root = poly_sqrt(p * p)
    assert root is not None and (root == p or root == -p)


def test_square_root_rejects_non_squares():
    assert poly_sqrt(parse_poly("a^2 + b")) is None
    assert poly_sqrt(parse_poly("x^4 + 2x^3 + x^2 + 1"), "x") is None


def test_reduce_mod_is_a_remainder():
    p = parse_poly("x^5 + a x^2 + b")
    m = parse_poly("(2a + 1)x^2 + b x + a")
    r, mult = reduce_mod(p, m, "x")
    assert r.degree("x") < 2
    x = SYM["x"]
    rem = sp.rem(to_sympy(mult * p), to_sympy(m), x)
    assert sp.cancel(to_sympy(r) - rem) == 0


def test_constructor_rejects_mismatched_exponents():
    with pytest.raises(InvalidInputError):
        MultiPoly({(1, 2): 1}, ("x",))


# -- RatFunc --------------------------------------------------------------------------
def test_rational_functions_normalize():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    left = RatFunc(a, b) + RatFunc(1, a)
    right = RatFunc(a * a + b, a * b)
    assert left == right
    assert RatFunc(a * a - b * b, a - b) == RatFunc(a + b)


# -- scalars -----------------------------------------------------------------------------
def quad(d: int):
    return st.builds(lambda p, q: QuadExtScalar(p, q, d) if q else p, small_rationals(), small_rationals())


@given(quad(7), quad(7), quad(7))
def test_quadratic_extension_is_a_field(x, y, w):
    assert (x + y) + w == x + (y + w)
    assert x * (y + w) == x * y + x * w
    if y != 0:
        assert (x / y) * y == x


@given(quad(-3))
def test_conjugation_gives_rational_norm_and_trace(x):
    assert isinstance(x * conjugate(x), (int, Fraction))
    assert isinstance(x + conjugate(x), (int, Fraction))


def test_mixed_extensions_are_rejected():
    with pytest.raises(MixedExtensionError):
        QuadExtScalar(0, 1, 2) + QuadExtScalar(0, 1, 3)


def test_square_roots_stay_rational_when_possible():
    assert QuadExtScalar.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    r = QuadExtScalar.sqrt(Fraction(12))
    assert r * r == 12 and r.d == 3
    assert rational_sqrt(Fraction(2)) is None
    assert squarefree_part(Fraction(18, 5)) == (Fraction(3, 5), 10)


@given(quad(5))
def test_scalar_json_round_trip(x):
    assert scalar_from_json(scalar_json(x)) == x


def test_rational_strings():
    assert rational_str(Fraction(-6, 4)) == "-3/2"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    with pytest.raises((ValueError, ZeroDivisionError, InvalidInputError)):
        parse_rational("1/0")


def test_quadratic_roots_rational_and_conjugate():
    r1, r2 = quadratic_roots(parse_poly("7x^2 - 23x + 16"), "x")
    assert {r1, r2} == {Fraction(16, 7), Fraction(1)}
    s1, s2 = quadratic_roots(parse_poly("x^2 - 2"), "x")
    assert s1 * s1 == 2 and s2 == conjugate(s1)
    with pytest.raises(DegenerateQuadraticError):
        quadratic_roots(parse_poly("x + 1"), "x")


# -- dense univariate ---------------------------------------------------------------
upolys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(upoly.trim)


@given(upolys, upolys.filter(bool))
def test_univariate_division_identity(p, q):
    quo, rem = upoly.divmod_(p, q)
    assert upoly.add(upoly.mul(quo, q), rem) == upoly.trim(p)
    assert upoly.degree(rem) < upoly.degree(q)


@given(upolys, upolys)
def test_univariate_resultant_agrees_with_sympy(p, q):
    assume(upoly.degree(p) >= 1 and upoly.degree(q) >= 1)
    x = sp.Symbol("x")
    P, Q = (sp.Poly(list(reversed(c)), x).as_expr() for c in (p, q))
    assert upoly.resultant(p, q) == sylvester(P, Q, x).det()


@given(upolys)
def test_univariate_discriminant_agrees_with_sympy(p):
    assume(upoly.degree(p) >= 2)
    x = sp.Symbol("x")
    assert upoly.discriminant(p) == sp.discriminant(sp.Poly(list(reversed(p)), x))


def test_univariate_gcd_and_squarefree():
    p = upoly.mul((1, 1), (-2, 1))
    assert upoly.monic(upoly.gcd(upoly.mul(p, (3, 1)), upoly.mul(p, (5, 1)))) == upoly.monic(p)
    assert not upoly.is_squarefree(upoly.mul(p, (1, 1)))
    assert upoly.is_squarefree(p)


def test_univariate_over_an_extension_stays_exact():
    s = QuadExtScalar.sqrt(7)
    p = (s, 3, 2)
    q, r = upoly.divmod_(p, (1, 2))
    assert upoly.add(upoly.mul(q, (1, 2)), r) == p
    assert all(not isinstance(c, float) for c in q + r)


def test_resultant_sign_follows_the_sylvester_definition():
    # Res(x + 2, x^3) = (-2)^3; swapping the arguments multiplies by (-1)^(1 * 3)
    assert upoly.resultant((2, 1), (0, 0, 0, 1)) == -8
    assert upoly.resultant((0, 0, 0, 1), (2, 1)) == 8
    assert resultant(parse_poly("x + 2"), parse_poly("x^3"), "x") == MultiPoly.const(-8)
