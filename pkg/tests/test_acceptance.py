"""Acceptance criteria AC-1 .. AC-12.

Each test records a PASS/FAIL line that is printed in the terminal summary
(and to stdout, visible with ``-s``).  Criteria that the construction does not
satisfy are left failing; the reason is part of the recorded line.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from fractions import Fraction

import sympy as sp

from conftest import ACCEPTANCE_LINES
from quintcover.curve import case1_curve, case2_point, curve_from_cover, subcover
from quintcover.igusa import absolute_invariants
from quintcover.loci import t_of_a, y1_formulas, y2_formulas
from quintcover.verify import (
    CASE1_SAMPLES,
    CASE2_SAMPLES,
    check_case1_pipeline,
    check_case2_lambda_value,
    check_case2_pipeline,
    check_case3,
    check_square_identity,
    check_derivative_factorization,
    check_lambda_identity,
    check_nielsen,
    check_roundtrip,
    check_double_root,
    check_w_relation,
    check_v4,
    delta_derivation_check,
    delta_w_check,
)

SEED = 0


@contextmanager
def criterion(key: str, budget_s: float):
    notes: dict = {}
    start = time.perf_counter()
    try:
        yield notes
    except BaseException as exc:
        detail = notes.get("why") or f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        ACCEPTANCE_LINES[key] = (False, detail)
        print(f"{key} FAIL  {detail}")
        raise
    elapsed = time.perf_counter() - start
    if elapsed > budget_s:
        detail = f"over budget: {elapsed:.1f} s > {budget_s} s"
        ACCEPTANCE_LINES[key] = (False, detail)
        print(f"{key} FAIL  {detail}")
        raise AssertionError(detail)
    detail = f"{elapsed:.2f} s" + (f"; {notes['info']}" if "info" in notes else "")
    ACCEPTANCE_LINES[key] = (True, detail)
    print(f"{key} PASS  {detail}")


# -- sympy side, used as an independent oracle ------------------------------------
a, b, X = sp.symbols("a b X")
F1 = X**2 + (2 * a + 2 * b + a**2) * X + 2 * a * b + b**2
F2 = (2 * a + 1) * X**2 + (a**2 + 2 * a * b + 2 * b) * X + b**2
F3 = X**2 - (a**2 - 2 * b) * X + b**2
PHI = X * F1**2 / F2**2


def test_ac01_square_identity():
    with criterion("AC-1", 1.0):
        report = check_square_identity()
        assert report.passed, report.detail
        assert sp.expand(X * F1**2 - (X - 1) * F3**2 - F2**2) == 0


def test_ac02_derivative_factorization():
    with criterion("AC-2", 1.0) as notes:
        report = check_derivative_factorization()
        assert report.passed, report.detail
        notes["info"] = f"constant {report.constants.get('constant')}"


def test_ac03_double_root_division():
    with criterion("AC-3", 10.0) as notes:
        report = check_double_root(SEED)
        assert report.passed, report.detail
        assert report.constants["points"] == 20
        notes["info"] = "20 seeded points, g3 linear in z"


def test_ac04_case1_lambda_identity():
    with criterion("AC-4", 5.0) as notes:
        z = a * (8 + a) / (4 * (2 * a + 1))
        phi_z = PHI.subs({b: a**2 / 4}).subs(X, z)
        residual = sp.cancel(phi_z * (2 - a) ** 5 * (a + 2) ** 3 - 4 * (2 * a + 1) ** 3 * (a**2 + 4 * a + 8) ** 2)
        ours = check_lambda_identity("I")
        # the kernel and sympy must agree on the verdict before it is reported
        assert ours.passed == (residual == 0)
        notes["why"] = f"residual nonzero; {ours.detail}"
        assert residual == 0


def test_ac05_case1_pipeline():
    with criterion("AC-5", 30.0) as notes:
        report = check_case1_pipeline()
        assert report.passed, report.detail
        for x in CASE1_SAMPLES:
            curve, sub = case1_curve(x)
            T = ((x - 2) / (5 * (x + 2))) ** 2
            assert t_of_a(x, "I").T == T
            assert absolute_invariants(curve).as_tuple() + (sub.j,) == y1_formulas(T)
        notes["info"] = f"a in {[str(x) for x in CASE1_SAMPLES]}"


def test_ac06_case2_pipeline_and_lambda():
    with criterion("AC-6", 30.0) as notes:
        pipeline = check_case2_pipeline()
        assert pipeline.passed, pipeline.detail
        for x in CASE2_SAMPLES:
            T = (x / (x - 2)) ** 2
            assert t_of_a(x, "II").T == T
            p = case2_point(x)
            got = absolute_invariants(curve_from_cover(*p)).as_tuple() + (subcover(*p).j,)
            assert got == y2_formulas(T)
        at3 = check_case2_lambda_value()
        assert at3.passed, at3.detail
        z = (3 * a - 1) * (a - 1) / (2 * a + 1)
        phi_z = PHI.subs({b: a - 1}).subs(X, z)
        shown = (3 * a - 1) ** 3 * (a + 8) ** 2 * (a - 1) / (27 * a * (a - 2) ** 5)
        residual = sp.cancel(phi_z - shown)
        ours = check_lambda_identity("II")
        assert ours.passed == (residual == 0)
        notes["why"] = f"pipeline and lambda(3) pass; symbolic identity fails: {ours.detail}"
        assert residual == 0


def test_ac07_case3():
    with criterion("AC-7", 5.0) as notes:
        report = check_case3()
        assert report.passed, report.detail
        assert report.constants["j_quartic"] == Fraction(702595369, 72900)
        assert report.constants["j_weierstrass"] == Fraction(702595369, 72900)
        notes["info"] = "j = 702595369/72900 by two reductions"


def test_ac08_w_relation():
    with criterion("AC-8", 60.0) as notes:
        report = check_w_relation(SEED, 50)
        assert report.passed, report.detail
        dw = delta_w_check()
        assert dw.passed, dw.detail
        notes["info"] = "50 seeded points; discriminant quotient is a square"


def test_ac09_nielsen_counts():
    with criterion("AC-9", 60.0) as notes:
        report = check_nielsen()
        assert report.passed
        rows = report.constants["rows"]
        got = [row["classes_by_conjugation"] for row in rows]
        assert [r["expected"] for r in rows] == [40, 8, 6, 9]
        notes["info"] = (
            "classes " + ", ".join(str(g["S5"]) for g in got)
            + f" (S5 conjugation); A5 row under A5 conjugation: {got[3]['A5']}"
        )
        assert got[3]["S5"] == 9


def test_ac10_v4_classification():
    with criterion("AC-10", 60.0) as notes:
        report = check_v4(count=3, precision_bits=128)
        assert report.passed, report.constants
        assert report.constants["I"]["degree"] == 36
        assert report.constants["II"]["degree"] == 25
        notes["info"] = "degrees 36, 25; 3 roots each labelled V4"


def test_ac11_degeneracy_locus_derivation():
    with criterion("AC-11", 600.0) as notes:
        report = delta_derivation_check()
        assert report.passed, report.detail
        mult = report.constants["multiplicities"]
        assert all(m > 0 for m in mult.values())
        notes["info"] = f"multiplicities {mult}; extra factor {report.constants['extra_factor']}"


def test_ac12_round_trips():
    with criterion("AC-12", 10.0) as notes:
        report = check_roundtrip(SEED, 20)
        assert report.passed, report.detail
        assert report.constants == {"I": 20, "II": 20}
        notes["info"] = "20 T per case"
