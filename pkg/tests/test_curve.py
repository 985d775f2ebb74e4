from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given

from conftest import small_rationals
from quintcover import transcriptions as tr
from quintcover.cover import CoverParams, f4_roots, s3_on_triple
from quintcover.curve import (
    Genus2Curve,
    case1_curve,
    case2_curve,
    case2_point,
    case3_b_values,
    case3_curve,
    case3_oracle_curve,
    case3_point,
    curve_from_cover,
    curve_from_cover_general,
    g3_oracle,
    g3_symbolic,
    g3_transcribed,
    g3_transcription_delta,
    j_from_cubic_weierstrass,
    j_from_lambda,
    j_from_legendre_roots,
    j_from_quartic,
    other_root,
    subcover,
    y3bar_j,
    y3bar_radicand,
)
from quintcover.errors import (
    DegenerateSubcoverError,
    ExcludedParameterError,
    InvalidInputError,
    InvalidRootError,
    SingularModelError,
)
from quintcover.exactalg import conjugate, parse_poly, upoly
from quintcover.igusa import absolute_invariants, same_point
from quintcover.verify import admissible_pairs

RATIONAL_POINTS = admissible_pairs(11, 6, rational_roots=True)
QUADRATIC_POINTS = admissible_pairs(12, 4, rational_roots=False)


def usable_root(p: CoverParams):
    return next(r.value for r in f4_roots(p) if not r.is_one)


def sympy_quotient(a, b, z):
    """G(X, z)/(X - z)^2 computed by sympy polynomial division."""
    X = sp.Symbol("X")
    a, b, z = (sp.Rational(v.numerator, v.denominator) for v in (a, b, z))
    F1 = lambda x: x**2 + (2 * a + 2 * b + a**2) * x + 2 * a * b + b**2
    F2 = lambda x: (2 * a + 1) * x**2 + (a**2 + 2 * a * b + 2 * b) * x + b**2
    G = sp.Poly(X * F1(X) ** 2 * F2(z) ** 2 - z * F1(z) ** 2 * F2(X) ** 2, X)
    q, r = sp.div(G, sp.Poly((X - z) ** 2, X))
    assert r.is_zero
    return [Fraction(int(c.p), int(c.q)) for c in reversed(q.all_coeffs())]


# -- g3 -----------------------------------------------------------------------------
@pytest.mark.parametrize("p", RATIONAL_POINTS, ids=str)
def test_g3_is_proportional_to_sympy_quotient(p):
    z = usable_root(p)
    ours = g3_oracle(p.a, p.b, z)
    theirs = sympy_quotient(p.a, p.b, z)
    ratio = theirs[3] / ours[3]
    assert [ratio * c for c in ours] == theirs


def test_g3_is_linear_in_z():
    assert all(c.degree("z") <= 1 for c in g3_symbolic())


def test_transcribed_table_differs_only_in_constant_coefficient():
    delta = g3_transcription_delta()
    assert delta["scale"] == -1
    agrees = {k: v["agrees"] for k, v in delta["coefficients"].items()}
    assert agrees == {"a0": False, "a1": True, "a2": True, "a3": True}


def test_constant_coefficient_delta_is_a_single_term():
    assert g3_transcription_delta()["coefficients"]["a0"]["delta"] == parse_poly("-12 z a b^4")


def test_transcribed_table_at_a_point():
    p = RATIONAL_POINTS[0]
    z = usable_root(p)
    ours, theirs = g3_oracle(p.a, p.b, z), g3_transcribed(p.a, p.b, z)
    assert [-c for c in ours[1:]] == list(theirs[1:])


def test_roots_are_validated():
    with pytest.raises(InvalidRootError):
        g3_oracle(3, 2, Fraction(1))
    with pytest.raises(InvalidRootError):
        g3_oracle(3, 2, Fraction(5))


# -- the genus-2 curve -----------------------------------------------------------------
@pytest.mark.parametrize("p", RATIONAL_POINTS[:4], ids=str)
@pytest.mark.parametrize("word", ["s", "t", "st"])
def test_curve_is_invariant_under_the_s3_action(p, word):
    z = usable_root(p)
    a2, b2, z2 = s3_on_triple(p.a, p.b, z, word)
    assert same_point(curve_from_cover(p.a, p.b, z), curve_from_cover(a2, b2, z2))


@pytest.mark.parametrize("p", QUADRATIC_POINTS, ids=str)
def test_conjugate_roots_give_conjugate_invariants(p):
    r1, r2 = (r.value for r in f4_roots(p))
    inv1 = absolute_invariants(curve_from_cover_general(p.a, p.b, r1)).as_tuple()
    inv2 = absolute_invariants(curve_from_cover_general(p.a, p.b, r2)).as_tuple()
    assert inv2 == tuple(conjugate(x) for x in inv1)


def test_conjugation_example_at_1_2():
    r1, r2 = (r.value for r in f4_roots(CoverParams(1, 2)))
    assert r1.d == -87 and r2 == conjugate(r1)
    assert other_root(1, 2, r1) == r2
    lam = subcover(1, 2, r1).lam
    assert lam == conjugate(subcover(1, 2, r2).lam)


def test_genus2_curve_validation():
    with pytest.raises(InvalidInputError):
        Genus2Curve((1, 0, 0, 0, 1))
    with pytest.raises(SingularModelError):
        Genus2Curve(upoly.mul((1, 2, 1), (1, 0, 0, 0, 1)))
    c = Genus2Curve((0, 1, 0, 0, 0, 1, 0))
    assert c.degree == 5 and c.sextic()[-1] == 0


# -- elliptic subcover ----------------------------------------------------------------
@given(small_rationals())
def test_j_is_constant_on_the_lambda_orbit(lam):
    assume(lam not in (0, 1))
    j = j_from_lambda(lam)
    for other in (1 - lam, 1 / lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam):
        assert j_from_lambda(other) == j


def test_singular_lambda_is_rejected():
    with pytest.raises(DegenerateSubcoverError):
        j_from_lambda(Fraction(1))


# -- case I and case II models ---------------------------------------------------------
def test_case1_model_is_the_construction():
    curve, sub = case1_curve(6)
    assert sub.lam != 0
    with pytest.raises(ExcludedParameterError):
        case1_curve(-2)


def test_case2_table_values_at_3():
    g = [tr.poly(f"case2.b{i}").evaluate({"a": Fraction(3)}) for i in range(4)]
    assert g[3] == 2527 and g[0] == 7744
    curve, sub = case2_curve(3)
    assert sub.lam == Fraction(123904, 81)


@pytest.mark.parametrize("a", [3, 5, Fraction(1, 5)])
def test_case2_table_needs_b0_negated_to_match_the_construction(a):
    a = Fraction(a)
    target = curve_from_cover(*case2_point(a))
    assert not same_point(case2_curve(a)[0], target)
    g = [tr.poly(f"case2.b{i}").evaluate({"a": a}) for i in range(4)]
    g[0] = -g[0]
    assert same_point(Genus2Curve(upoly.mul((0, -1, 1), g)), target)


# -- case III --------------------------------------------------------------------------------
def test_case3_closed_form_model_at_1():
    curve, _ = case3_curve(1)
    z = case3_b_values(1)
    assert z[0].d == 7
    assert upoly.is_squarefree(curve.f_coeffs)
    assert tr.poly("case3.nonvanishing").evaluate({"a": 1}) == -19170
    quadratic = tr.ratfunc("case3.s").evaluate({"a": Fraction(1)})
    assert quadratic == Fraction(1, 4)


@pytest.mark.parametrize("a", [1, 3, Fraction(1, 2), -3])
def test_case3_closed_form_model_differs_from_the_construction(a):
    closed = absolute_invariants(case3_curve(a)[0]).as_tuple()
    built = absolute_invariants(case3_oracle_curve(a)).as_tuple()
    assert closed != built


@pytest.mark.parametrize("a", [1, 3, Fraction(1, 2), -3])
def test_case3_construction_is_rational_and_branch_independent(a):
    one = absolute_invariants(case3_oracle_curve(a, branch=0)).as_tuple()
    two = absolute_invariants(case3_oracle_curve(a, branch=1)).as_tuple()
    assert one == two
    assert all(isinstance(x, Fraction) for x in one)


def test_case3_construction_has_the_double_root_factor():
    a, b = Fraction(1), case3_b_values(1)[0]
    _, _, z = case3_point(a, b)
    g = upoly.trim(c.evaluate({"a": a, "b": b, "z": z}) for c in g3_symbolic())
    assert upoly.evaluate(g, z) == 0


def test_genus1_locus_radicand_matches_sympy():
    a, b = sp.symbols("a b")
    locus = a**3 + 4*b*a**2 + 4*a**2 - 12*b*a + 4*a*b**2 + 4*a - 16*b - 16*b**2
    disc = sp.Poly(sp.discriminant(locus, b), a)
    ours = y3bar_radicand()
    assert [Fraction(int(c.p), int(c.q)) for c in reversed(disc.all_coeffs())] == ours
    assert sp.factor(disc.as_expr()) == sp.factor(-16 * (a - 4) * (2 * a + 1) * (3 * a + 4))


def test_genus1_locus_j_by_three_routes():
    rad = y3bar_radicand()
    target = Fraction(702595369, 72900)
    assert j_from_quartic(rad) == target
    assert j_from_cubic_weierstrass(rad) == target
    assert j_from_legendre_roots(rad) == target
    assert y3bar_j() == target
