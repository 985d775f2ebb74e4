from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.polys.polyfuncs import rational_interpolate

from conftest import nonzero_rationals, small_rationals
from quintcover.cover import CoverParams, f4_roots, uv_invariants
from quintcover.curve import case3_oracle_curve
from quintcover.errors import (
    AmbiguityError,
    ExcludedParameterError,
    InvalidInputError,
    NotOnLocusError,
    QuintCoverError,
)
from quintcover.exactalg import parse_poly, upoly
from quintcover.igusa import absolute_invariants
from quintcover.loci import (
    a_of_t,
    case3_invariant_functions,
    classification,
    delta_w_check,
    derive_delta,
    is_v4_point,
    nielsen_count,
    recover_case3,
    recover_parameter,
    split_factors,
    t_of_a,
    u_of_a,
    verify_w_relation,
    w_of_z,
    w_relation,
    y1_formulas,
    y2_formulas,
    y3_membership,
    y3_uv_constraint,
)
from quintcover.loci.case3 import sample_points
from quintcover.loci.nielsen import compose, cycle_type, parse_cycle_type, s5

FORMULAS = {"I": y1_formulas, "II": y2_formulas}


# -- T parametrization ---------------------------------------------------------------
def test_t_of_a_examples():
    assert t_of_a(6, "I").T == Fraction(1, 100)
    assert t_of_a(3, "II").T == 9
    with pytest.raises(ExcludedParameterError):
        t_of_a(-2, "I")
    with pytest.raises(ExcludedParameterError):
        t_of_a(2, "II")
    with pytest.raises(InvalidInputError):
        t_of_a(1, "III")


@given(small_rationals())
def test_a_of_t_inverts_t_of_a(a):
    for case, bad in (("I", -2), ("II", 2)):
        if a == bad:
            continue
        T = t_of_a(a, case).T
        try:
            assert a in a_of_t(T, case)
        except ExcludedParameterError:
            assert T in (Fraction(1, 25), 1)


def test_a_of_t_over_an_extension():
    r1, r2 = a_of_t(2, "I")
    assert r1.d == 2 and r1.p == r2.p and r1.q == -r2.q


@pytest.mark.parametrize("case,T", [("I", Fraction(1, 25)), ("I", Fraction(1, 9)), ("II", Fraction(16, 25)), ("II", 1)])
def test_formulas_reject_their_poles(case, T):
    with pytest.raises(QuintCoverError):
        FORMULAS[case](T)


@pytest.mark.parametrize("case", ["I", "II"])
@given(T=small_rationals(60, 40))
def test_recovery_inverts_the_formulas(case, T):
    try:
        shown = FORMULAS[case](T)
    except QuintCoverError:
        assume(False)
    assert recover_parameter(*shown[:3], case).T == T


def test_perturbed_invariants_are_not_on_the_locus():
    i1, i2, i3, _ = y1_formulas(Fraction(3, 7))
    with pytest.raises(NotOnLocusError):
        recover_parameter(i1 + 1, i2, i3, "I")


# -- w tower --------------------------------------------------------------------------
@given(small_rationals().filter(lambda z: z not in (0, 1)))
def test_w_is_invariant_under_the_anharmonic_group(z):
    w = w_of_z(z)
    for other in (1 - z, 1 / z, 1 / (1 - z), z / (z - 1), (z - 1) / z):
        assert w_of_z(other) == w


@pytest.mark.parametrize("a,b", [(1, 2), (6, 9), (5, 3), (Fraction(-7, 2), Fraction(4, 3))])
def test_w_relation_at_sample_points(a, b):
    report = verify_w_relation(a, b)
    assert report.passed, report.detail
    assert report.constants["vieta"]


@pytest.mark.parametrize("a,b", [(1, 2), (5, 3), (Fraction(2, 3), Fraction(-5, 2))])
def test_w_relation_matches_sympy_elimination(a, b):
    """Res_z(F4(z), den(z) w - num(z)) is proportional to c2 w^2 + c1 w + c0."""
    z, w = sp.symbols("z w")
    A, B = sp.Rational(a), sp.Rational(b)
    F4 = (2 * A + 1) * z**2 + (2 * B - 2 * B * A - 2 * A - A**2) * z + B**2 + 2 * A * B
    res = sp.Poly(sp.resultant(F4, z**2 * (z - 1) ** 2 * w - (z**2 - z + 1) ** 3, z), w)
    u, v = uv_invariants(CoverParams(a, b))
    c0, c1, c2 = w_relation().at(u, v)
    ours = sp.Poly(sp.Rational(c2.numerator, c2.denominator) * w**2 + sp.Rational(c1) * w + sp.Rational(c0), w)
    assert sp.simplify(res.LC() * ours - ours.LC() * res).is_zero


def test_w_discriminant_is_delta_w_times_a_square():
    report = delta_w_check()
    assert report.passed
    assert report.constants["constant"] == 1
    assert report.constants["vanishes_on_2u+v=16"]


def test_case3_locus_membership():
    assert y3_membership(-2, 1)
    assert not y3_membership(1, 1)
    assert y3_membership(2, -4)
    assert y3_uv_constraint(*uv_invariants(CoverParams(2, -4)))


@given(nonzero_rationals(), nonzero_rationals())
def test_case3_locus_maps_to_the_line(a, b):
    try:
        params = CoverParams(a, b)
    except QuintCoverError:
        assume(False)
    u, v = uv_invariants(params)
    assert y3_uv_constraint(u, v) == y3_membership(a, b)


# -- classification polynomials ----------------------------------------------------------
def test_classification_degrees():
    assert (classification("I").degree, classification("I").radical_degree) == (36, 36)
    assert (classification("II").degree, classification("II").radical_degree) == (25, 25)
    assert (classification("III").degree, classification("III").radical_degree) == (79, 69)


def test_split_factors_reads_exponents():
    assert split_factors("(a + 1)^2(b - (c + 1))(d)^10") == [("a + 1", 2), ("b - (c + 1)", 1), ("d", 10)]


def test_v4_membership():
    f = classification("I").lowest_factors()[0]
    assert not is_v4_point(Fraction(3, 7), "I")
    # rational roots of a linear factor, if any, are V4 points
    linear = [g for g in classification("II").lowest_factors() if g.degree("T") == 1]
    for g in linear:
        c0, c1 = g.rational_coeffs("T")
        assert is_v4_point(-Fraction(c0) / c1, "II")
    assert f.degree("T") >= 1


# -- case III recovery ----------------------------------------------------------------------
def test_case3_invariants_match_sympy_interpolation():
    f = case3_invariant_functions()
    samples = sample_points(20)
    U = sp.Symbol("u")
    for k in range(3):
        degnum = len(f.nums[k]) - 1
        data = [(sp.Rational(u.numerator, u.denominator), sp.Rational(inv[k].numerator, inv[k].denominator))
                for u, inv in samples[: 2 * max(degnum, len(f.dens[k]) - 1) + 2]]
        theirs = rational_interpolate(data, degnum, X=U)
        for u, inv in samples:
            assert theirs.subs(U, sp.Rational(u.numerator, u.denominator)) == sp.Rational(inv[k].numerator, inv[k].denominator)


@pytest.mark.parametrize("a", [Fraction(5, 3), Fraction(-9, 4), Fraction(11, 2)])
def test_case3_recovery_on_fresh_points(a):
    u, v = u_of_a(a)
    inv = absolute_invariants(case3_oracle_curve(a)).as_tuple()
    assert case3_invariant_functions().at(u) == inv
    assert recover_case3(*inv) == (u, v)
    assert 2 * u + v == 16


def test_case3_u_is_the_same_on_both_branches():
    assert u_of_a(1) == u_of_a(1, 1) == (Fraction(22, 3), Fraction(4, 3))


def test_case3_recovery_rejects_points_off_the_locus():
    inv = absolute_invariants(case3_oracle_curve(Fraction(5, 3))).as_tuple()
    with pytest.raises((NotOnLocusError, AmbiguityError)):
        recover_case3(inv[0] + 1, inv[1], inv[2])


# -- degeneracy locus -------------------------------------------------------------------------
def test_elimination_produces_every_delta_factor():
    d = derive_delta()
    assert d.missing() == []
    assert d.extra_factor == 256 * parse_poly("a") ** 12
    assert d.multiplicities["a + b + 1"] == 35 and d.multiplicities["4b^2 + 4b + 4ba + a^2"] == 1


def test_singular_specializations_lie_on_delta():
    """At a = 3 every b with a singular model (found by sympy) is a root of some factor."""
    from quintcover.cover import DELTA_FACTORS
    from quintcover.curve import g3_symbolic

    b, z, x = sp.symbols("b z x")
    coeffs = [sp.sympify(str(c.subs({"a": 3})).replace("^", "**"), locals={"b": b, "z": z}) for c in g3_symbolic()]
    f = sp.expand(x * (x - 1) * sum(c * x**k for k, c in enumerate(coeffs)))
    F4 = 7 * z**2 + (2 * b - 6 * b - 6 - 9) * z + b**2 + 6 * b
    disc = sp.discriminant(sp.Poly(f, x))
    res = sp.Poly(sp.resultant(F4, disc, z), b)
    delta_at_3 = sp.Integer(1)
    for _, g in DELTA_FACTORS:
        delta_at_3 *= sp.sympify(str(g.subs({"a": 3})).replace("^", "**"), locals={"b": b})
    for root_factor, _ in sp.factor_list(res.as_expr())[1]:
        assert sp.rem(sp.Poly(delta_at_3, b), sp.Poly(root_factor, b)).is_zero


# -- Nielsen classes -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "group,types,classes",
    [
        ("S5", "2^2,2^2,2^2,2,2", 40),
        ("S5", "2^2,2^2,4,2", 8),
        ("S5", "2^2,2^2,2.3,2", 6),
    ],
)
def test_nielsen_rows(group, types, classes):
    assert nielsen_count(group, types).classes == classes


def test_a5_row_depends_on_the_conjugation_group():
    res = nielsen_count("A5", "2^2,2^2,2^2,3")
    assert res.by_conjugation == {"S5": 9, "A5": 18}
    assert res.to_json()["classes_by_conjugation"]["S5"] == 9


def test_nielsen_row_against_sympy_groups():
    """Generating tuples of type (2^2, 2^2, 4, 2) with product 1, counted with sympy."""
    def cls(ct):
        return [Permutation(list(p)) for p in itertools.permutations(range(5))
                if sorted(Permutation(list(p)).cycle_structure.items()) == ct]

    c22, c4, c2 = cls([(1, 1), (2, 2)]), cls([(1, 1), (4, 1)]), cls([(1, 3), (2, 1)])
    c2set = set(c2)
    count = 0
    for g1 in c22:
        for g2 in c22:
            for g3 in c4:
                g4 = (g1 * g2 * g3) ** -1
                if g4 in c2set and PermutationGroup([g1, g2, g3]).order() == 120:
                    count += 1
    assert count == nielsen_count("S5", "2^2,2^2,4,2").tuples == 960
    assert count // 120 == 8


def test_cycle_type_parsing():
    assert parse_cycle_type("2^2") == (2, 2)
    assert parse_cycle_type("2.3") == (3, 2)
    with pytest.raises(InvalidInputError):
        parse_cycle_type("3.3")
    with pytest.raises(InvalidInputError):
        parse_cycle_type("1")
    with pytest.raises(InvalidInputError):
        nielsen_count("S6", "2,2")


def test_permutation_helpers():
    perms = s5()
    assert len(perms) == 120
    p, q = perms[17], perms[93]
    assert cycle_type(compose(p, q)) == cycle_type(compose(q, p))
