"""Relate the closed-form lambda of cases I and II to phi(z) along each family."""

from __future__ import annotations

from fractions import Fraction

from quintcover import transcriptions as tr
from quintcover.verify import lambda_relation, phi_on_case


def main() -> None:
    for case, key in (("I", "case1.lambda"), ("II", "case2.lambda")):
        phi = phi_on_case(case)
        shown = tr.ratfunc(key)
        rel = lambda_relation(case)
        print(f"case {case}: closed-form lambda = {rel} with phi = phi(z)")
        for a in (Fraction(3), Fraction(6), Fraction(7, 2)):
            try:
                print(f"  a = {a}: phi(z) = {phi.evaluate({'a': a})}, closed form = {shown.evaluate({'a': a})}")
            except ZeroDivisionError:
                print(f"  a = {a}: pole")


if __name__ == "__main__":
    main()
