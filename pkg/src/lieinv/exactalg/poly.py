"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a :class:`PolyRing`, which is nothing more than an
ordered tuple of variable names.  Terms are stored as a dict mapping dense
exponent tuples to nonzero :class:`fractions.Fraction` coefficients.  The
monomial order is graded lexicographic with ``x_1 > x_2 > ...`` following
declaration order.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

NEG_INF = -math.inf  # degree of the zero polynomial


class PolyError(ValueError):
    pass


class RingMismatch(PolyError):
    pass


class UnassignedVariable(PolyError):
    pass


class NotDivisible(PolyError):
    """Raised by exact division; ``remainder`` is the division remainder."""

    def __init__(self, dividend, divisor, remainder):
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


class ParseError(PolyError):
    pass


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class PolyRing:
    """Ordered set of variable names.  Rings with equal names compare equal."""

    _cache: dict = {}

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        ring = cls._cache.get(names)
        if ring is None:
            if len(set(names)) != len(names):
                raise PolyError(f"duplicate variable names in {names}")
            ring = super().__new__(cls)
            ring.names = names
            ring.nvars = len(names)
            ring._index = {n: i for i, n in enumerate(names)}
            ring._zero_exp = (0,) * len(names)
            cls._cache[names] = ring
        return ring

    def __reduce__(self):
        return (PolyRing, (self.names,))

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolyError(f"unknown variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return MultiPoly(self, {self._zero_exp: Fraction(1)})

    def const(self, c) -> "MultiPoly":
        c = as_rational(c)
        return MultiPoly(self, {self._zero_exp: c} if c else {})

    def gen(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["MultiPoly"]:
        return [self.gen(n) for n in self.names]

    def monomial(self, exps: Mapping[str, int], coeff=1) -> "MultiPoly":
        e = [0] * self.nvars
        for name, k in exps.items():
            e[self.index(name)] += k
        return MultiPoly(self, {tuple(e): as_rational(coeff)})

    def linear(self, coords: Iterable, names: Iterable[str] | None = None) -> "MultiPoly":
        """The linear form ``sum c_i * x_i`` over the given (default: all) variables."""
        names = self.names if names is None else tuple(names)
        terms = {}
        for name, c in zip(names, coords):
            c = as_rational(c)
            if c:
                e = [0] * self.nvars
                e[self.index(name)] = 1
                terms[tuple(e)] = c
        return MultiPoly(self, terms)

    def parse(self, text: str, defs: Mapping[str, "MultiPoly"] | None = None) -> "MultiPoly":
        return _Parser(self, text, defs or {}).parse()


def _glex_key(e):
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, Fraction]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction helpers -------------------------------------------------
    def _new(self, terms) -> "MultiPoly":
        return MultiPoly(self.ring, terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    # -- predicates -----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def is_monomial(self) -> bool:
        """Single nonzero term (a constant times a power product)."""
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError(f"{self} is not constant")
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s += c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = as_rational(other)
            if not c:
                return self.ring.zero
            return self._new({e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return self._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPoly) and not other.is_constant():
            return self.divexact(other)
        c = other.constant_value() if isinstance(other, MultiPoly) else as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero polynomial")
        return self * (1 / c)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring is other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- orderings and degrees --------------------------------------------------
    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple, Fraction]:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda t: _glex_key(t[0]))

    def leading_coeff(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self * (Fraction(1) / self.leading_coeff())

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name_or_index) -> int:
        i = name_or_index if isinstance(name_or_index, int) else self.ring.index(name_or_index)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def variables(self) -> list[str]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return [n for n, u in zip(self.ring.names, used) if u]

    def support_indices(self) -> set[int]:
        out = set()
        for e in self.terms:
            out.update(i for i, k in enumerate(e) if k)
        return out

    def monomial_content(self) -> tuple:
        """Exponent-wise minimum over all terms (the largest monomial factor)."""
        if not self.terms:
            return self.ring._zero_exp
        it = iter(self.terms)
        lo = list(next(it))
        for e in it:
            for i, k in enumerate(e):
                if k < lo[i]:
                    lo[i] = k
        return tuple(lo)

    def shift(self, exps: tuple, sign: int = 1) -> "MultiPoly":
        """Multiply (sign=1) or divide (sign=-1) by the monomial with exponents ``exps``."""
        if sign > 0:
            return self._new({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, exps))
            if min(ne, default=0) < 0:
                raise PolyError("monomial does not divide polynomial")
            out[ne] = c
        return self._new(out)

    # -- calculus and evaluation ---------------------------------------------------
    def diff(self, name_or_index) -> "MultiPoly":
        i = name_or_index if isinstance(name_or_index, int) else self.ring.index(name_or_index)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return self._new(out)

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        """Value at a point assigning every occurring variable."""
        vals = []
        for i, name in enumerate(self.ring.names):
            if name in point:
                vals.append(as_rational(point[name]))
            else:
                vals.append(None)
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    x = vals[i]
                    if x is None:
                        raise UnassignedVariable(f"variable {self.ring.names[i]!r} is unassigned")
                    v *= x ** k
            total += v
        return total

    def eval_mod(self, point: list[int], p: int) -> int:
        """Value modulo ``p`` at an integer point given in ring order."""
        total = 0
        for e, c in self.terms.items():
            v = c.numerator * pow(c.denominator, -1, p)
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p)
            total += v
        return total % p

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute rationals or same-ring polynomials for some variables."""
        if not values:
            return self
        idx = {self.ring.index(n): v for n, v in values.items()}
        out = self.ring.zero
        numeric = all(not isinstance(v, MultiPoly) for v in idx.values())
        if numeric:
            vals = {i: as_rational(v) for i, v in idx.items()}
            terms: dict = {}
            for e, c in self.terms.items():
                coef = c
                ne = list(e)
                for i, x in vals.items():
                    if e[i]:
                        coef *= x ** e[i]
                        ne[i] = 0
                if coef:
                    t = tuple(ne)
                    s = terms.get(t, 0) + coef
                    if s:
                        terms[t] = s
                    else:
                        terms.pop(t, None)
            return self._new(terms)
        for e, c in self.terms.items():
            ne = list(e)
            factor = self.ring.const(c)
            for i, v in idx.items():
                if e[i]:
                    ne[i] = 0
                    factor = factor * (self._coerce(v) ** e[i])
            out = out + factor.shift(tuple(ne))
        return out

    def to_ring(self, ring: PolyRing) -> "MultiPoly":
        """Re-express in another ring by variable name."""
        if ring is self.ring:
            return self
        pos = []
        for i, name in enumerate(self.ring.names):
            pos.append(ring.index(name) if name in ring else None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    j = pos[i]
                    if j is None:
                        raise RingMismatch(f"variable {self.ring.names[i]!r} not in {ring}")
                    ne[j] = k
            out[tuple(ne)] = c
        return MultiPoly(ring, out)

    def coeffs_in(self, i: int) -> dict[int, "MultiPoly"]:
        """Coefficients w.r.t. variable index ``i`` (each free of that variable)."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: self._new(t) for k, t in out.items()}

    # -- division -----------------------------------------------------------------
    def divmod(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single divisor (graded lex)."""
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lt_e, lt_c = other.leading_term()
        rest = [(e, c) for e, c in other.terms.items() if e != lt_e]
        p = dict(self.terms)
        q: dict = {}
        r: dict = {}
        while p:
            e, c = max(p.items(), key=lambda t: _glex_key(t[0]))
            d = tuple(a - b for a, b in zip(e, lt_e))
            if min(d) < 0:
                r[e] = c
                del p[e]
                continue
            f = c / lt_c
            q[d] = q.get(d, 0) + f
            del p[e]
            for e2, c2 in rest:
                t = tuple(a + b for a, b in zip(e2, d))
                s = p.get(t, 0) - f * c2
                if s:
                    p[t] = s
                else:
                    p.pop(t, None)
        return self._new({e: c for e, c in q.items() if c}), self._new(r)

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        other = self._coerce(other)
        if other.is_monomial():
            (oe, oc), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(a - b for a, b in zip(e, oe))
                if min(ne, default=0) < 0:
                    break
                out[ne] = c / oc
            else:
                return self._new(out)
        q, r = self.divmod(other)
        if r.terms:
            raise NotDivisible(self, other, r)
        return q

    def divides(self, other: "MultiPoly") -> bool:
        """True if ``self`` divides ``other`` exactly."""
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    # -- text -------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            a = abs(c)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def poly_arith(op: str, a: MultiPoly, b=None):
    """Dispatch helper: ``op`` is one of add, sub, mul, eval (``b`` is the point)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eval":
        return a.evaluate(b)
    raise PolyError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )`` with juxtaposition as product.

    Division by a nonconstant polynomial is exact division.
    """

    def __init__(self, ring, text, defs):
        self.ring = ring
        self.text = text
        self.defs = defs
        self.toks = self._lex(text)
        self.pos = 0

    def _lex(self, text):
        toks = []
        i = 0
        text = text.rstrip()
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                raise ParseError(f"bad character at {i} in {text!r}")
            num, ident, op = m.groups()
            if num is not None:
                toks.append(("num", int(num)))
            elif ident is not None:
                toks.append(("id", ident))
            else:
                toks.append(("op", "^" if op == "**" else op))
            i = m.end()
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial")
        val = self.expr()
        if self.pos != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.power()
            elif kind == "op" and val == "/":
                self.take()
                d = self.power()
                try:
                    acc = acc / d
                except ZeroDivisionError:
                    raise ParseError(f"division by zero in {self.text!r}") from None
            elif kind in ("num", "id") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer literal in {self.text!r}")
            return base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "id":
            if val in self.defs:
                return self.defs[val].to_ring(self.ring)
            if val in self.ring:
                return self.ring.gen(val)
            raise ParseError(f"unknown name {val!r} in {self.text!r}")
        if kind == "op" and val == "(":
            e = self.expr()
            k2, v2 = self.take()
            if v2 != ")":
                raise ParseError(f"missing ')' in {self.text!r}")
            return e
        if kind == "op" and val == "-":
            return -self.power()
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")
