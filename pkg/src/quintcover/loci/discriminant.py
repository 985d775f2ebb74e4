"""Derivation of the degeneracy locus Delta(a, b) by elimination.

The model x(x - 1) g3(x) is singular exactly where its discriminant vanishes.
Because Disc(fg) = Disc(f) Disc(g) Res(f, g)^2 and Res(x(x - 1), g) = g(0) g(1),
the discriminant splits as Disc(g3) (g3(0) g3(1))^2.  Each piece is reduced
modulo F4(z), which makes it linear in z, and z is eliminated with a resultant
against F4(z).  The result is trial-divided by the factors of Delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cover import DELTA_FACTORS, F4_SYM
from ..curve import g3_symbolic
from ..exactalg import MultiPoly, parse_poly, reduce_mod, resultant
from ..report import CheckReport

Z = parse_poly("z")


def cubic_discriminant(c0: MultiPoly, c1: MultiPoly, c2: MultiPoly, c3: MultiPoly) -> MultiPoly:
    return 18 * c3 * c2 * c1 * c0 - 4 * c2**3 * c0 + c2**2 * c1**2 - 4 * c3 * c1**3 - 27 * c3**2 * c0**2


@dataclass
class FactorSplit:
    """poly = cofactor * prod(factor^multiplicity)."""

    multiplicities: dict[str, int]
    cofactor: MultiPoly

    def to_json(self) -> dict:
        return {"multiplicities": self.multiplicities, "cofactor": str(self.cofactor)}


def split_by_delta_factors(p: MultiPoly) -> FactorSplit:
    mult: dict[str, int] = {}
    for name, f in DELTA_FACTORS:
        m = 0
        while True:
            q, r = p.divmod(f)
            if r:
                break
            p, m = q, m + 1
        mult[name] = m
    return FactorSplit(mult, p)


def eliminate_z(p: MultiPoly) -> MultiPoly:
    F4z = F4_SYM.subs({"X": Z})
    red, _ = reduce_mod(p, F4z, "z")
    return resultant(F4z, red, "z")


@dataclass
class DeltaDerivation:
    pieces: dict[str, FactorSplit] = field(default_factory=dict)

    @property
    def multiplicities(self) -> dict[str, int]:
        """Multiplicities in Res_z(F4, Disc(x(x - 1) g3))."""
        weights = {"disc": 1, "g(0)": 2, "g(1)": 2}
        total = {name: 0 for name, _ in DELTA_FACTORS}
        for key, split in self.pieces.items():
            for name, m in split.multiplicities.items():
                total[name] += weights[key] * m
        return total

    @property
    def extra_factor(self) -> MultiPoly:
        """What is left after removing every factor of Delta (weighted as above)."""
        out = MultiPoly.one()
        for key, w in (("disc", 1), ("g(0)", 2), ("g(1)", 2)):
            out = out * self.pieces[key].cofactor ** w
        return out

    def missing(self) -> list[str]:
        return [name for name, m in self.multiplicities.items() if m == 0]


def derive_delta() -> DeltaDerivation:
    c0, c1, c2, c3 = g3_symbolic()
    pieces = {
        "disc": cubic_discriminant(c0, c1, c2, c3),
        "g(0)": c0,
        "g(1)": c0 + c1 + c2 + c3,
    }
    return DeltaDerivation({k: split_by_delta_factors(eliminate_z(p)) for k, p in pieces.items()})


def delta_derivation_check() -> CheckReport:
    d = derive_delta()
    missing = d.missing()
    extra = d.extra_factor
    consts = {
        "multiplicities": d.multiplicities,
        "pieces": {k: v.to_json() for k, v in d.pieces.items()},
        "extra_factor": str(extra),
    }
    detail = "" if not missing else "factors not produced: " + ", ".join(missing)
    return CheckReport("delta", not missing, extra, consts, detail)
