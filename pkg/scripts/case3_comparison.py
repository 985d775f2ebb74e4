"""Case III: the closed-form curve against the construction, and the invariants as functions of u."""

from __future__ import annotations

import argparse
from fractions import Fraction

import mpmath

from quintcover import transcriptions as tr
from quintcover.curve import case3_curve, case3_oracle_curve
from quintcover.igusa import absolute_invariants, reduced_aut_group_numeric
from quintcover.loci import case3_invariant_functions, classification, u_of_a
from quintcover.loci.classification import curve_coeffs_numeric, numeric_roots
from quintcover.exactalg import upoly


def compare(samples) -> None:
    for a in samples:
        closed = absolute_invariants(case3_curve(a)[0]).as_tuple()
        built = absolute_invariants(case3_oracle_curve(a)).as_tuple()
        u, v = u_of_a(a)
        print(f"a = {a}: u = {u}, v = {v}")
        print(f"  closed form  i1 = {closed[0]}")
        print(f"  construction i1 = {built[0]}  (i2 = {built[1]}, i3 = {built[2]})")


def show_functions() -> None:
    f = case3_invariant_functions()
    for k, (p, q) in enumerate(zip(f.nums, f.dens), start=1):
        print(f"i{k}(u): numerator degree {upoly.degree(p)}, denominator degree {upoly.degree(q)}")
        print(f"  denominator (monic): {[str(c) for c in q]}")


def numeric_v4(count: int, bits: int) -> None:
    """Stabilizer orders at roots of the lowest-degree case III classification factors."""
    cls = classification("III")
    r_num, r_den = tr.poly("case3.r.num"), tr.poly("case3.r.den")
    locus = tr.poly("case3.locus")
    done = 0
    for f in cls.lowest_factors():
        for a in numeric_roots(f, "a", bits):
            if done == count:
                return
            with mpmath.workprec(bits):
                c = [x.evaluate({"a": a}) for x in locus.coeff_list("b")]
                for b in mpmath.polyroots(list(reversed(c)), maxsteps=200, extraprec=bits):
                    z = r_num.evaluate({"a": a, "b": b}) / r_den.evaluate({"a": a, "b": b})
                    rep = reduced_aut_group_numeric(curve_coeffs_numeric(a, b, z, bits), bits)
                    print(f"  factor {f}: a = {mpmath.nstr(a, 12)}, b = {mpmath.nstr(b, 12)} -> order {rep.order}")
            done += 1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--roots", type=int, default=3, help="numeric classification roots to test")
    ap.add_argument("--precision-bits", type=int, default=128)
    args = ap.parse_args()
    compare([Fraction(1), Fraction(3), Fraction(1, 2), Fraction(-3)])
    show_functions()
    print("numeric stabilizers on the case III classification polynomial:")
    numeric_v4(args.roots, args.precision_bits)


if __name__ == "__main__":
    main()
