"""Sparse multivariate polynomials over the rationals.

Monomials are packed into one Python int: a field of ``_W`` bits per variable
plus a leading total-degree field.  With that layout monomial multiplication is
integer addition and the graded-lexicographic order (first variable most
significant) is integer comparison.  Exponents must stay below ``2**15``.

Coefficients are ``int`` or ``Fraction``; integer polynomials stay on the fast
int path.  Zero coefficients are never stored.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from ..errors import InvalidInputError
from .scalars import as_rational, rational_str

VAR_ORDER = ("X", "x", "t", "z", "a", "b", "u", "v", "w", "T")

_W = 16
_MASK = (1 << _W) - 1
_MAX_EXP = 1 << (_W - 1)


def _var_key(name: str):
    try:
        return (VAR_ORDER.index(name), "")
    except ValueError:
        return (len(VAR_ORDER), name)


def canonical_gens(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


@lru_cache(maxsize=None)
def _layout(n: int):
    shifts = tuple(_W * (n - 1 - i) for i in range(n))
    degshift = _W * n
    guard = sum(1 << (_W * j + _W - 1) for j in range(n + 1))
    units = tuple((1 << s) + (1 << degshift) for s in shifts)
    return shifts, degshift, guard, units


def _pack(exps: Sequence[int], n: int) -> int:
    shifts, degshift, _, _ = _layout(n)
    key = sum(exps) << degshift
    for e, s in zip(exps, shifts):
        if e < 0 or e >= _MAX_EXP:
            raise InvalidInputError(f"exponent {e} out of range")
        key |= e << s
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    shifts = _layout(n)[0]
    return tuple((key >> s) & _MASK for s in shifts)


def _divides(k_small: int, k_big: int, n: int) -> bool:
    guard = _layout(n)[2]
    return ((k_big | guard) - k_small) & guard == guard


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def qdiv(c, s):
    """Exact rational quotient, staying on ints when the division is exact."""
    if type(c) is int and type(s) is int:
        if c % s == 0:
            return c // s
        return Fraction(c, s)
    return _norm(Fraction(c) / s)


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients.

    ``gens`` lists variable names in canonical order; ``terms`` maps packed
    monomials to nonzero coefficients.  Two polynomials over different variable
    lists are aligned to the union before any binary operation, so equality is
    structural regardless of unused variables.
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, gens: Sequence[str] = ()):
        gens = tuple(gens)
        if tuple(canonical_gens(gens)) != gens or len(set(gens)) != len(gens):
            order = canonical_gens(gens)
            perm = [gens.index(g) for g in order]
        else:
            order, perm = gens, None
        n = len(order)
        packed: dict[int, object] = {}
        for exps, c in (terms or {}).items():
            if isinstance(exps, int):
                exps = (exps,)
            if len(exps) != len(gens):
                raise InvalidInputError("exponent vector length does not match variables")
            if perm is not None:
                exps = tuple(exps[i] for i in perm)
            c = _norm(as_rational(c)) if not isinstance(c, int) else c
            if c:
                k = _pack(exps, n)
                packed[k] = packed.get(k, 0) + c
        self.gens = order
        self.terms = {k: _norm(c) for k, c in packed.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, gens: tuple[str, ...], terms: dict[int, object]) -> MultiPoly:
        obj = object.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls._raw((name,), {_pack((1,), 1): 1})

    @classmethod
    def const(cls, c) -> MultiPoly:
        c = _norm(as_rational(c))
        return cls._raw((), {0: c} if c else {})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls._raw((), {})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls._raw((), {0: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, var: str) -> MultiPoly:
        """Univariate polynomial from ascending coefficients (scalars or polys)."""
        x = cls.var(var)
        result = cls.zero()
        for c in reversed(list(coeffs)):
            result = result * x + c
        return result

    @classmethod
    def from_coeff_map(cls, coeffs: Mapping[int, MultiPoly], var: str) -> MultiPoly:
        """Inverse of :meth:`coeffs_in`."""
        result = cls.zero()
        x = cls.var(var)
        for k, c in coeffs.items():
            result = result + lift(c) * x**k
        return result

    # -- alignment -------------------------------------------------------
    def _with_gens(self, gens: tuple[str, ...]) -> dict[int, object]:
        if gens == self.gens:
            return self.terms
        n_old, n_new = len(self.gens), len(gens)
        idx = [gens.index(g) for g in self.gens]
        out = {}
        for k, c in self.terms.items():
            old = _unpack(k, n_old)
            new = [0] * n_new
            for i, e in zip(idx, old):
                new[i] = e
            out[_pack(new, n_new)] = c
        return out

    def with_gens(self, gens: Sequence[str]) -> MultiPoly:
        gens = canonical_gens(tuple(gens) + self.used_gens())
        return MultiPoly._raw(gens, self._with_gens(gens))

    @staticmethod
    def _align(p: MultiPoly, q: MultiPoly):
        if p.gens == q.gens:
            return p.gens, p.terms, q.terms
        gens = canonical_gens(p.gens + q.gens)
        return gens, p._with_gens(gens), q._with_gens(gens)

    def used_gens(self) -> tuple[str, ...]:
        n = len(self.gens)
        if n == 0:
            return ()
        acc = [0] * n
        for k in self.terms:
            for i, e in enumerate(_unpack(k, n)):
                if e:
                    acc[i] = 1
        return tuple(g for g, used in zip(self.gens, acc) if used)

    def trim(self) -> MultiPoly:
        used = self.used_gens()
        if used == self.gens:
            return self
        n_old = len(self.gens)
        idx = [self.gens.index(g) for g in used]
        out = {}
        for k, c in self.terms.items():
            e = _unpack(k, n_old)
            out[_pack([e[i] for i in idx], len(used))] = c
        return MultiPoly._raw(used, out)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = lift(other)
        if other is NotImplemented:
            return NotImplemented
        gens, a, b = MultiPoly._align(self, other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiPoly._raw(gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.gens, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MultiPoly:
        c = _norm(as_rational(c)) if not isinstance(c, int) else c
        if not c:
            return MultiPoly._raw(self.gens, {})
        if c == 1:
            return self
        return MultiPoly._raw(self.gens, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = lift(other)
        if other is NotImplemented:
            return NotImplemented
        gens, a, b = MultiPoly._align(self, other)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw(gens, {k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = MultiPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return MultiPoly._raw(self.gens, {k: qdiv(c, other) for k, c in self.terms.items()})
        other = lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.exact_div(other)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = lift(other)
            if other is NotImplemented:
                return NotImplemented
        _, a, b = MultiPoly._align(self, other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            t = self.trim()
            self._hash = hash((t.gens, frozenset(t.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise InvalidInputError("polynomial is not constant")
        return self.terms.get(0, 0)

    def nterms(self) -> int:
        return len(self.terms)

    def _index(self, var: str) -> int | None:
        try:
            return self.gens.index(var)
        except ValueError:
            return None

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        n = len(self.gens)
        if var is None:
            return max(self.terms) >> _layout(n)[1]
        i = self._index(var)
        if i is None:
            return 0
        s = _layout(n)[0][i]
        return max((k >> s) & _MASK for k in self.terms)

    def exponents(self) -> list[tuple[int, ...]]:
        n = len(self.gens)
        return [_unpack(k, n) for k in sorted(self.terms, reverse=True)]

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        """(exponent vector, coefficient) pairs in descending grlex order."""
        n = len(self.gens)
        return [(_unpack(k, n), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def leading_key(self) -> int:
        return max(self.terms)

    def leading_coeff(self):
        """Coefficient of the grlex-leading monomial."""
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    def coeffs_in(self, var: str) -> dict[int, MultiPoly]:
        """Split as ``sum c_k * var**k``; coefficients keep the same variable list."""
        i = self._index(var)
        if i is None:
            return {0: self} if self.terms else {}
        n = len(self.gens)
        s = _layout(n)[0][i]
        unit = _layout(n)[3][i]
        parts: dict[int, dict[int, object]] = {}
        for k, c in self.terms.items():
            e = (k >> s) & _MASK
            parts.setdefault(e, {})[k - e * unit] = c
        return {e: MultiPoly._raw(self.gens, t) for e, t in parts.items()}

    def coeff_list(self, var: str) -> list[MultiPoly]:
        """Ascending dense coefficient list in ``var``."""
        parts = self.coeffs_in(var)
        if not parts:
            return []
        d = max(parts)
        z = MultiPoly._raw(self.gens, {})
        return [parts.get(k, z) for k in range(d + 1)]

    def lc_in(self, var: str) -> MultiPoly:
        parts = self.coeffs_in(var)
        if not parts:
            return MultiPoly.zero()
        return parts[max(parts)]

    def rational_coeffs(self, var: str) -> list:
        """Ascending scalar coefficients of a polynomial univariate in ``var``."""
        out = []
        for c in self.coeff_list(var):
            if not c.is_constant():
                raise InvalidInputError(f"coefficient {c} is not a constant")
            out.append(c.constant_value())
        return out

    # -- calculus and substitution --------------------------------------
    def diff(self, var: str) -> MultiPoly:
        i = self._index(var)
        if i is None:
            return MultiPoly._raw(self.gens, {})
        n = len(self.gens)
        s = _layout(n)[0][i]
        unit = _layout(n)[3][i]
        out = {}
        for k, c in self.terms.items():
            e = (k >> s) & _MASK
            if e:
                out[k - unit] = c * e
        return MultiPoly._raw(self.gens, out)

    def subs(self, mapping: Mapping[str, object]) -> MultiPoly:
        """Substitute polynomials or rationals for variables (simultaneously)."""
        items = [(v, val) for v, val in mapping.items() if self._index(v) is not None]
        if not items:
            return self
        if all(isinstance(val, (int, Fraction, str)) for _, val in items):
            return self._subs_scalars({v: as_rational(val) for v, val in items})
        n = len(self.gens)
        idx = [self.gens.index(v) for v, _ in items]
        vals = [lift(val) for _, val in items]
        keep = [i for i in range(n) if i not in idx]
        keep_gens = tuple(self.gens[i] for i in keep)
        groups: dict[tuple, dict[int, object]] = {}
        for k, c in self.terms.items():
            e = _unpack(k, n)
            sub_e = tuple(e[i] for i in idx)
            rest = _pack([e[i] for i in keep], len(keep))
            groups.setdefault(sub_e, {})[rest] = c
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(j, e):
            key = (j, e)
            if key not in power_cache:
                power_cache[key] = vals[j] ** e
            return power_cache[key]

        result = MultiPoly.zero()
        for sub_e, rest_terms in groups.items():
            term = MultiPoly._raw(keep_gens, rest_terms)
            for j, e in enumerate(sub_e):
                if e:
                    term = term * power(j, e)
            result = result + term
        return result

    def _subs_scalars(self, mapping: Mapping[str, Fraction]) -> MultiPoly:
        n = len(self.gens)
        idx = {self.gens.index(v): val for v, val in mapping.items()}
        keep = [i for i in range(n) if i not in idx]
        keep_gens = tuple(self.gens[i] for i in keep)
        pow_cache: dict[tuple[int, int], object] = {}
        out: dict[int, object] = {}
        for k, c in self.terms.items():
            e = _unpack(k, n)
            for i, val in idx.items():
                if e[i]:
                    key = (i, e[i])
                    pv = pow_cache.get(key)
                    if pv is None:
                        pv = pow_cache[key] = _norm(val ** e[i])
                    c = c * pv
            if c:
                nk = _pack([e[i] for i in keep], len(keep))
                out[nk] = out.get(nk, 0) + c
        return MultiPoly._raw(keep_gens, {k: _norm(c) for k, c in out.items() if c})

    def evaluate(self, assignment: Mapping[str, object]):
        """Full evaluation at scalars of any ring type (rationals, extension elements, mpmath)."""
        n = len(self.gens)
        vals = []
        for g, used in zip(self.gens, self._used_mask()):
            if g in assignment:
                vals.append(assignment[g])
            elif used:
                raise InvalidInputError(f"no value for variable {g}")
            else:
                vals.append(0)
        pow_cache: dict[tuple[int, int], object] = {}
        total = 0
        for k, c in self.terms.items():
            term = c
            for i, e in enumerate(_unpack(k, n)):
                if e:
                    pv = pow_cache.get((i, e))
                    if pv is None:
                        pv = pow_cache[(i, e)] = vals[i] ** e
                    term = term * pv
            total = total + term
        return total

    def _used_mask(self):
        used = set(self.used_gens())
        return [g in used for g in self.gens]

    def __call__(self, **assignment):
        return self.evaluate(assignment)

    # -- division --------------------------------------------------------
    def divmod(self, other: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        """Multivariate division by a single divisor in grlex order."""
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        gens, a, b = MultiPoly._align(self, other)
        n = len(gens)
        lk = max(b)
        lc = b[lk]
        rest = [(k, c) for k, c in b.items() if k != lk]
        rem = dict(a)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quo: dict[int, object] = {}
        out_rem: dict[int, object] = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue
            while heap and heap[0] == -k:
                heapq.heappop(heap)
            if not _divides(lk, k, n):
                out_rem[k] = c
                continue
            qk = k - lk
            qc = qdiv(c, lc)
            quo[qk] = qc
            for kb, cb in rest:
                kk = qk + kb
                old = rem.get(kk)
                if old is None:
                    rem[kk] = _norm(-qc * cb)
                    heapq.heappush(heap, -kk)
                else:
                    v = old - qc * cb
                    if v:
                        rem[kk] = _norm(v)
                    else:
                        del rem[kk]
        return MultiPoly._raw(gens, quo), MultiPoly._raw(gens, out_rem)

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        if other.is_constant():
            return self / other.constant_value()
        q, r = self.divmod(other)
        if r:
            raise InvalidInputError("inexact polynomial division")
        return q

    def divides(self, other: MultiPoly) -> bool:
        """True when ``self`` divides ``other`` exactly."""
        if not self.terms:
            return not other.terms
        return not other.divmod(self)[1].terms

    # -- normalization ---------------------------------------------------
    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integral, primitive and with positive leading coefficient
        times the sign of the leading coefficient."""
        from math import gcd

        if not self.terms:
            return Fraction(0)
        num, den = 0, 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        if self.leading_coeff() < 0:
            content = -content
        return content

    def primitive(self) -> MultiPoly:
        """Integer-primitive associate with positive leading coefficient."""
        if not self.terms:
            return self
        return self / self.rational_content()

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        return self / self.leading_coeff()

    # -- printing / serialization ---------------------------------------
    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, exps) if e
            )
            cs = rational_str(c)
            if mono:
                if c == 1:
                    s = mono
                elif c == -1:
                    s = "-" + mono
                else:
                    s = f"{cs}*{mono}" if "/" not in cs else f"({cs})*{mono}"
            else:
                s = cs
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def to_json(self, gens: Sequence[str] | None = None) -> list:
        """Ordered term list ``[[exponent-vector, "p/q"], ...]``.

        Exponent vectors refer to ``gens`` when given, else to :meth:`json_vars`.
        """
        t = self.trim() if gens is None else self.with_gens(gens)
        return [[list(e), rational_str(c)] for e, c in t.items()]

    def json_vars(self) -> list[str]:
        return list(self.used_gens())

    @classmethod
    def from_json(cls, terms: list, gens: Sequence[str]) -> MultiPoly:
        return cls({tuple(e): as_rational(c) for e, c in terms}, gens)


def lift(x):
    """Coerce scalars to constant polynomials; NotImplemented for foreign types."""
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.const(x)
    if isinstance(x, str):
        return parse_poly(x)
    return NotImplemented


def variables(*names: str) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.var(n) for n in names)


# -- parser ----------------------------------------------------------------
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[-+*/^()]))")


def parse_poly(text: str, allowed: str | None = None) -> MultiPoly:
    """Parse a polynomial written the way displays print it.

    Juxtaposition is multiplication (``2ab^2`` means ``2*a*b**2``), variables are
    single letters, ``^`` and ``**`` are powers, ``/`` divides by an integer
    literal.  The unicode minus sign is accepted.
    """
    src = text.replace("−", "-").replace("·", "*")
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise InvalidInputError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num:
            tokens.append(("num", num))
        elif name:
            if allowed is not None and name not in allowed:
                raise InvalidInputError(f"variable {name!r} not allowed in {text!r}")
            tokens.append(("var", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    parser = _Parser(tokens, text)
    result = parser.expr()
    if parser.i != len(tokens):
        raise InvalidInputError(f"trailing input in {text!r}")
    return result


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> MultiPoly:
        result = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.power()
            elif kind == "op" and val == "/":
                self.take()
                k, v = self.take()
                if k != "num":
                    raise InvalidInputError(f"only integer divisors supported in {self.text!r}")
                result = result / int(v)
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                result = result * self.power()
            else:
                return result

    def power(self) -> MultiPoly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, v = self.take()
            if k != "num":
                raise InvalidInputError(f"exponent must be an integer literal in {self.text!r}")
            return base ** int(v)
        return base

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(int(val))
        if kind == "var":
            return MultiPoly.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            k, v = self.take()
            if v != ")":
                raise InvalidInputError(f"unbalanced parenthesis in {self.text!r}")
            return inner
        if kind == "op" and val == "-":
            return -self.power()
        raise InvalidInputError(f"unexpected token {val!r} in {self.text!r}")
