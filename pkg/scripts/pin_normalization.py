"""Which weight-2k invariants reproduce the closed-form absolute invariants along cases I and II.

The absolute invariants are formed from (J2, J4, J6, J10) in two ways: with the
Igusa-Clebsch values and with Igusa's classical J's.  Only one choice matches the
closed-form i1, i2, i3 at every sample.
"""

from __future__ import annotations

from quintcover.curve import case2_point, case1_curve, curve_from_cover
from quintcover.igusa import absolute, igusa_from_sextic, igusa_j_from_sextic
from quintcover.loci import t_of_a, y1_formulas, y2_formulas
from quintcover.verify import CASE1_SAMPLES, CASE2_SAMPLES


def main() -> None:
    rows = [("I", a, case1_curve(a)[0], y1_formulas(t_of_a(a, "I").T)) for a in CASE1_SAMPLES]
    rows += [("II", a, curve_from_cover(*case2_point(a)), y2_formulas(t_of_a(a, "II").T)) for a in CASE2_SAMPLES]
    for case, a, curve, shown in rows:
        sextic = curve.sextic()
        clebsch = absolute(igusa_from_sextic(sextic)).as_tuple() == shown[:3]
        classical = absolute(igusa_j_from_sextic(sextic)).as_tuple() == shown[:3]
        print(f"case {case:2} a = {str(a):5}  Igusa-Clebsch: {clebsch!s:5}  classical J: {classical}")


if __name__ == "__main__":
    main()
