"""Invariants of the case III locus as functions of u, and recovery of (u, v).

On the locus 2u + v = 16, so u alone parametrizes it.  For rational a the two
conjugate b-values give the same rational u and the same rational invariants,
so i1, i2, i3 can be sampled exactly from the construction and interpolated as
rational functions of u.  The interpolants are checked on held-out samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..cover import U_SYM, V_SYM
from ..curve import case3_oracle_curve, case3_point
from ..errors import AmbiguityError, ConstructionFailureError, NotOnLocusError, QuintCoverError
from ..exactalg import as_rational, upoly
from ..igusa import absolute_invariants

HELD_OUT = 6
MAX_DEGREE = 16


def u_of_a(a, branch: int = 0) -> tuple[Fraction, Fraction]:
    """(u, v) at the case III point over a."""
    A, B, _ = case3_point(a, branch=branch)
    pt = {"a": A, "b": B}
    return U_SYM.evaluate(pt), V_SYM.evaluate(pt)


def sample_points(count: int) -> list[tuple[Fraction, tuple]]:
    """Distinct (u, (i1, i2, i3)) pairs from a deterministic run of rational a."""
    out: dict[Fraction, tuple] = {}
    k = 1
    while len(out) < count:
        for a in (Fraction(k, 7), Fraction(-k, 7)):
            try:
                u, _ = u_of_a(a)
                if u in out:
                    continue
                out[u] = absolute_invariants(case3_oracle_curve(a)).as_tuple()
            except (QuintCoverError, ZeroDivisionError):
                continue
        k += 1
    return list(out.items())[:count]


def _kernel_vector(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """A nonzero solution of rows * x = 0, or None if only the trivial one exists."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for i, c in enumerate(pivots):
        x[c] = -m[i][free[0]]
    return x


def rational_interpolate(xs, ys, n: int) -> tuple[tuple, tuple] | None:
    """p/q with deg p, deg q <= n through (xs, ys), or None."""
    rows = []
    for x, y in zip(xs, ys):
        powers = [Fraction(x) ** k for k in range(n + 1)]
        rows.append(powers + [-y * pk for pk in powers])
    vec = _kernel_vector(rows)
    if vec is None:
        return None
    p, q = upoly.trim(vec[: n + 1]), upoly.trim(vec[n + 1:])
    if not q:
        return None
    g = upoly.gcd(p, q) if p else (1,)
    if upoly.degree(g) > 0:
        p, q = upoly.divmod_(p, g)[0], upoly.divmod_(q, g)[0]
    lc = q[-1]
    return upoly.scale(p, 1 / lc), upoly.scale(q, 1 / lc)


def _fits(p, q, xs, ys) -> bool:
    for x, y in zip(xs, ys):
        d = upoly.evaluate(q, x)
        if d == 0 or upoly.evaluate(p, x) / d != y:
            return False
    return True


@dataclass(frozen=True)
class Case3Invariants:
    """i_k(u) = nums[k] / dens[k] (ascending coefficients in u), with 2u + v = 16."""

    nums: tuple[tuple, ...]
    dens: tuple[tuple, ...]

    def at(self, u) -> tuple:
        u = as_rational(u)
        out = []
        for p, q in zip(self.nums, self.dens):
            d = upoly.evaluate(q, u)
            if d == 0:
                raise ZeroDivisionError(f"i-formula pole at u = {u}")
            out.append(Fraction(upoly.evaluate(p, u)) / d)
        return tuple(out)


@lru_cache(maxsize=1)
def case3_invariant_functions() -> Case3Invariants:
    samples = sample_points(2 * MAX_DEGREE + 1 + HELD_OUT)
    nums, dens = [], []
    for k in range(3):
        xs = [u for u, _ in samples]
        ys = [inv[k] for _, inv in samples]
        for n in range(1, MAX_DEGREE + 1):
            m = 2 * n + 1
            fit = rational_interpolate(xs[:m], ys[:m], n)
            if fit is not None and _fits(*fit, xs[m: m + HELD_OUT], ys[m: m + HELD_OUT]):
                break
        else:
            raise ConstructionFailureError(f"i{k + 1}(u) has no rational interpolant of degree <= {MAX_DEGREE}")
        nums.append(fit[0])
        dens.append(fit[1])
    return Case3Invariants(tuple(nums), tuple(dens))


def recover_case3(i1, i2, i3) -> tuple[Fraction, Fraction]:
    """(u, v) on 2u + v = 16 with the given absolute invariants."""
    f = case3_invariant_functions()
    g = None
    for value, p, q in zip((i1, i2, i3), f.nums, f.dens):
        eq = upoly.sub(upoly.scale(q, as_rational(value)), p)
        if not eq:
            continue
        g = eq if g is None else upoly.gcd(g, eq)
    if g is None or upoly.degree(g) > 1:
        raise AmbiguityError("several u share these invariants", candidates=g)
    if upoly.degree(g) <= 0:
        raise NotOnLocusError("no point of the case III locus has these invariants")
    g = upoly.monic(g)
    u = -g[0]
    return u, 16 - 2 * u
