"""Brute-force Nielsen class counts in S5.

A tuple (g1, ..., gr) of permutations with prescribed cycle types, product 1,
generating a prescribed group, is counted up to simultaneous conjugation.
Generating tuples of S5 or A5 have trivial centralizer in S5, so the number of
classes is the number of tuples divided by the order of the conjugating group;
an explicit orbit partition is the fallback when that division is not exact.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import InvalidInputError

N = 5
Perm = tuple  # images of 0..4

IDENTITY: Perm = tuple(range(N))
GROUP_ORDERS = {"S5": 120, "A5": 60}


def compose(p: Perm, q: Perm) -> Perm:
    """(p q)(i) = p(q(i)): apply q first."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * N
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen, parts = set(), []
    for i in range(N):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        if k > 1:
            parts.append(k)
    return tuple(sorted(parts, reverse=True))


def is_even(p: Perm) -> bool:
    return sum(k - 1 for k in cycle_type(p)) % 2 == 0


@lru_cache(maxsize=1)
def s5() -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(N)))


@lru_cache(maxsize=1)
def a5() -> tuple[Perm, ...]:
    return tuple(p for p in s5() if is_even(p))


def parse_cycle_type(text: str) -> tuple[int, ...]:
    """'2^2' -> (2, 2); '2.3', '2*3' or '3+2' -> (3, 2); '4' -> (4,).  Fixed points are implicit."""
    parts: list[int] = []
    for tok in re.split(r"[.*+· ]+", text.strip()):
        if not tok:
            continue
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
        if not m:
            raise InvalidInputError(f"bad cycle type token {tok!r}")
        k, e = int(m.group(1)), int(m.group(2) or 1)
        if k < 1 or e < 1:
            raise InvalidInputError(f"bad cycle type token {tok!r}")
        parts += [k] * e if k > 1 else []
    if sum(parts) > N:
        raise InvalidInputError(f"cycle type {text!r} does not fit in S{N}")
    if not parts:
        raise InvalidInputError("the identity is not a ramification type")
    return tuple(sorted(parts, reverse=True))


def parse_types(types) -> list[tuple[int, ...]]:
    if isinstance(types, str):
        types = types.split(",")
    return [parse_cycle_type(t) if isinstance(t, str) else tuple(sorted(t, reverse=True)) for t in types]


@lru_cache(maxsize=None)
def conjugacy_class(ct: tuple[int, ...]) -> tuple[Perm, ...]:
    return tuple(p for p in s5() if cycle_type(p) == ct)


def generated_order(gens) -> int:
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _tuples(types: list[tuple[int, ...]]):
    """All tuples with the given cycle types and product g1 g2 ... gr = 1."""
    classes = [conjugacy_class(t) for t in types]
    last = set(classes[-1])
    for head in itertools.product(*classes[:-1]):
        prod = IDENTITY
        for g in head:
            prod = compose(prod, g)
        g_last = inverse(prod)
        if g_last in last:
            yield head + (g_last,)


def _canonical(tup, conj) -> tuple:
    return min(tuple(compose(compose(h, g), inverse(h)) for g in tup) for h in conj)


def _orbits(tuples: list, conj) -> int:
    return len({_canonical(t, conj) for t in tuples})


@dataclass
class NielsenCount:
    group: str
    types: list[str]
    tuples: int
    classes: int
    by_conjugation: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "types": self.types,
            "tuples": self.tuples,
            "classes": self.classes,
            "classes_by_conjugation": dict(sorted(self.by_conjugation.items())),
        }


def _fmt(ct: tuple[int, ...]) -> str:
    c = Counter(ct)
    return ".".join(f"{k}^{m}" if m > 1 else str(k) for k, m in sorted(c.items()))


def nielsen_count(group: str, cycle_types) -> NielsenCount:
    """Classes of generating tuples of ``group`` with the given cycle types and product 1.

    Classes are counted up to S5-conjugation; for A5 the A5-conjugation count is
    reported alongside.
    """
    if group not in GROUP_ORDERS:
        raise InvalidInputError(f"group must be one of {sorted(GROUP_ORDERS)}")
    types = parse_types(cycle_types)
    if len(types) < 2:
        raise InvalidInputError("need at least two branch cycles")
    target = GROUP_ORDERS[group]
    found = [t for t in _tuples(types) if generated_order(t) == target]
    conj_groups = {"S5": s5()} if group == "S5" else {"S5": s5(), "A5": a5()}
    counts: dict[str, int] = {}
    for name, conj in conj_groups.items():
        order = len(conj)
        counts[name] = len(found) // order if len(found) % order == 0 else _orbits(found, conj)
    return NielsenCount(group, [_fmt(t) for t in types], len(found), counts["S5"], counts)
