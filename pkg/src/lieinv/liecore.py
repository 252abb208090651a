"""Lie algebras given by structure constants, subspaces, series and families.

Basis indices are 0-based in the Python API and 1-based in the JSON format
and in every user-facing witness.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .exactalg.linalg import in_span, kernel_basis, rref
from .exactalg.poly import MultiPoly, ParseError, PolyError, PolyRing, as_rational, format_rational

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class LieError(ValueError):
    pass


class InvalidAlgebra(LieError):
    pass


class IndexOutOfRange(InvalidAlgebra):
    pass


class BadCoefficient(InvalidAlgebra):
    pass


class DuplicatePair(InvalidAlgebra):
    pass


class ParametersUnspecialized(LieError):
    pass


class BadFamilyParams(LieError):
    pass


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------
class Subspace:
    """Subspace of Q^n stored by its reduced row echelon basis."""

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise LieError(f"vector of length {len(v)} in a {n}-dimensional space")
        rows, pivots = rref(vecs, n) if vecs else ([], [])
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.coordinate(n, range(n))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        vecs = []
        for i in sorted(set(indices)):
            v = [0] * n
            v[i] = 1
            vecs.append(v)
        return cls(n, vecs)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[tuple]:
        return list(self.rows)

    def contains(self, v: Sequence) -> bool:
        return in_span(self.rows, self.pivots, v)

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.n, list(self.rows) + list(other.rows))

    def is_coordinate(self) -> bool:
        return all(sum(1 for x in r if x) == 1 for r in self.rows)

    def format(self, names: Sequence[str]) -> list[str]:
        return [format_vector(r, names) for r in self.rows]

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def format_vector(v: Sequence, names: Sequence[str]) -> str:
    """Linear form text such as ``x2 - x3``."""
    out = []
    for c, name in zip(v, names):
        c = Fraction(c)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = name if a == 1 else f"{format_rational(a)}*{name}"
        out.append((sign, body))
    if not out:
        return "0"
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def parse_vector(text: str, names: Sequence[str]) -> tuple:
    """Inverse of :func:`format_vector`; the text must be a linear form."""
    ring = PolyRing(names)
    p = ring.parse(text)
    v = [Fraction(0)] * len(names)
    for e, c in p.terms.items():
        if sum(e) != 1:
            raise ParseError(f"{text!r} is not a linear form")
        v[e.index(1)] = c
    return tuple(v)


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------
BracketTable = Mapping[tuple, Sequence[tuple]]


@dataclass(frozen=True)
class JacobiResult:
    holds: bool
    residuals: tuple  # distinct monic MultiPoly in the parameters
    witnesses: tuple  # (a, b, c, k, poly), 1-based indices

    def residual_strings(self) -> list[str]:
        return [str(r) for r in self.residuals]


@dataclass(frozen=True)
class CentralSeries:
    lower: tuple
    upper: tuple
    nilpotent: bool
    filiform: bool


@dataclass(frozen=True)
class AdaptedCheck:
    adapted: bool
    nonstandard: bool


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q(params).

    ``brackets`` maps ``(i, j)`` with ``i < j`` (0-based) to ``((k, coeff), ...)``
    where ``coeff`` is a :class:`MultiPoly` in the parameter ring.
    """

    def __init__(self, name: str, basis: Sequence[str], params: Sequence[str] = (),
                 brackets: BracketTable | None = None):
        basis = tuple(basis)
        params = tuple(params)
        for nm in basis + params:
            if not _IDENT.match(nm):
                raise InvalidAlgebra(f"invalid name {nm!r}")
        if len(set(basis)) != len(basis):
            raise InvalidAlgebra("duplicate basis names")
        if set(basis) & set(params) or len(set(params)) != len(params):
            raise InvalidAlgebra("parameter names must be distinct from each other and from basis names")
        self.name = name
        self.basis = basis
        self.params = params
        self.pring = PolyRing(params)
        n = len(basis)
        table = {}
        for (i, j), terms in (brackets or {}).items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRange(f"bracket pair ({i + 1},{j + 1}) outside 1..{n}")
            if i == j:
                raise InvalidAlgebra(f"bracket of x{i + 1} with itself")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            acc: dict[int, MultiPoly] = {}
            for k, c in terms:
                if not 0 <= k < n:
                    raise IndexOutOfRange(f"target index {k + 1} outside 1..{n}")
                c = c if isinstance(c, MultiPoly) else self.pring.const(c)
                if c.ring is not self.pring:
                    raise BadCoefficient(f"coefficient {c} is not in the parameter ring")
                acc[k] = acc.get(k, self.pring.zero) + c * sign
            entry = tuple((k, c) for k, c in sorted(acc.items()) if c)
            if (i, j) in table:
                raise DuplicatePair(f"pair ({i + 1},{j + 1}) given twice")
            if entry:
                table[(i, j)] = entry
        self.brackets = table
        self.specialized = all(c.is_constant() for t in table.values() for _, c in t)
        self._num = None
        if self.specialized:
            num = {}
            for key, t in table.items():
                num[key] = tuple((k, c.constant_value()) for k, c in t)
            self._num = num

    # -- basic data -------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def sring(self) -> PolyRing:
        """Coordinate ring S(L) = Q[basis]."""
        return PolyRing(self.basis)

    @property
    def full_ring(self) -> PolyRing:
        """Q[basis, params], for structure matrices before specialization."""
        return PolyRing(self.basis + self.params)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, params={list(self.params)})"

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.basis == other.basis
                and self.params == other.params and self.brackets == other.brackets)

    def __hash__(self):
        return hash((self.basis, self.params))

    def require_specialized(self):
        if not self.specialized:
            free = sorted({v for t in self.brackets.values() for _, c in t for v in c.variables()})
            raise ParametersUnspecialized(
                f"{self.name}: structure constants depend on {', '.join(free)}; "
                f"declared parameters: {', '.join(self.params)}")

    def bracket_terms(self, i: int, j: int) -> tuple:
        """Symbolic ``[x_i, x_j]`` as ``((k, coeff), ...)``."""
        if i == j:
            return ()
        if i < j:
            return self.brackets.get((i, j), ())
        return tuple((k, -c) for k, c in self.brackets.get((j, i), ()))

    def numeric_terms(self, i: int, j: int) -> tuple:
        self.require_specialized()
        if i == j:
            return ()
        if i < j:
            return self._num.get((i, j), ())
        return tuple((k, -c) for k, c in self._num.get((j, i), ()))

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Numeric bracket of coordinate vectors."""
        self.require_specialized()
        out = [Fraction(0)] * self.dim
        nzu = [(i, Fraction(a)) for i, a in enumerate(u) if a]
        nzv = [(j, Fraction(b)) for j, b in enumerate(v) if b]
        for i, a in nzu:
            for j, b in nzv:
                if i == j:
                    continue
                for k, c in self.numeric_terms(i, j):
                    out[k] += a * b * c
        return out

    def ad_matrix(self, i: int) -> list[list[Fraction]]:
        """Matrix of ad x_i (column j holds the coordinates of [x_i, x_j])."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.numeric_terms(i, j):
                m[k][j] += c
        return m

    def unit(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def vector(self, text: str) -> tuple:
        return parse_vector(text, self.basis)

    # -- parameters -----------------------------------------------------------
    def specialize(self, values: Mapping[str, object], name: str | None = None) -> "LieAlgebra":
        unknown = [k for k in values if k not in self.params]
        if unknown:
            raise BadFamilyParams(f"unknown parameters {unknown}; declared: {list(self.params)}")
        vals = {k: as_rational(v) for k, v in values.items()}
        rest = tuple(p for p in self.params if p not in vals)
        ring = PolyRing(rest)
        table = {key: tuple((k, c.subs(vals).to_ring(ring)) for k, c in t)
                 for key, t in self.brackets.items()}
        if name is None:
            name = self.name
            if vals:
                name += "[" + ",".join(f"{k}={format_rational(v)}" for k, v in vals.items()) + "]"
        return LieAlgebra(name, self.basis, rest, table)

    # -- serialization --------------------------------------------------------
    def to_dict(self) -> dict:
        br = []
        for (i, j), t in sorted(self.brackets.items()):
            br.append({"i": i + 1, "j": j + 1,
                       "terms": [{"coeff": str(c), "k": k + 1} for k, c in t]})
        return {"name": self.name, "dim": self.dim, "params": list(self.params),
                "basis": list(self.basis), "brackets": br}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_dict(cls, desc: Mapping) -> "LieAlgebra":
        return from_structure_constants(desc)

    @classmethod
    def from_json(cls, text: str) -> "LieAlgebra":
        return from_structure_constants(json.loads(text))

    @classmethod
    def load(cls, path) -> "LieAlgebra":
        return cls.from_json(Path(path).read_text())


def from_structure_constants(desc: Mapping) -> LieAlgebra:
    """Validate a JSON-style description (1-based indices) into a LieAlgebra."""
    try:
        n = int(desc["dim"])
    except (KeyError, TypeError, ValueError):
        raise InvalidAlgebra("description needs an integer 'dim'") from None
    basis = list(desc.get("basis") or [f"x{i}" for i in range(1, n + 1)])
    if len(basis) != n:
        raise InvalidAlgebra(f"dim {n} but {len(basis)} basis names")
    params = list(desc.get("params") or [])
    pring = PolyRing(params)
    table: dict = {}
    for b in desc.get("brackets") or []:
        try:
            i, j = int(b["i"]), int(b["j"])
        except (KeyError, TypeError, ValueError):
            raise InvalidAlgebra(f"bracket entry {b!r} needs integer 'i' and 'j'") from None
        for idx in (i, j):
            if not 1 <= idx <= n:
                raise IndexOutOfRange(f"index {idx} outside 1..{n}")
        if i == j:
            raise InvalidAlgebra(f"bracket of x{i} with itself")
        key = (min(i, j) - 1, max(i, j) - 1)
        if key in table:
            raise DuplicatePair(f"pair ({key[0] + 1},{key[1] + 1}) given twice")
        sign = 1 if i < j else -1
        terms = []
        for t in b.get("terms") or []:
            try:
                k = int(t["k"])
            except (KeyError, TypeError, ValueError):
                raise InvalidAlgebra(f"term {t!r} needs an integer 'k'") from None
            if not 1 <= k <= n:
                raise IndexOutOfRange(f"target index {k} outside 1..{n}")
            raw = t.get("coeff", 1)
            try:
                c = pring.parse(raw) if isinstance(raw, str) else pring.const(raw)
            except (PolyError, TypeError) as exc:
                raise BadCoefficient(f"coefficient {raw!r} of [{basis[i - 1]},{basis[j - 1]}]: {exc}") from None
            terms.append((k - 1, c * sign))
        table[key] = terms
    return LieAlgebra(str(desc.get("name", "L")), basis, params, table)


# ---------------------------------------------------------------------------
# Jacobi identity
# ---------------------------------------------------------------------------
def _sym_bracket(L: LieAlgebra, u: Mapping[int, MultiPoly], j: int) -> dict[int, MultiPoly]:
    out: dict[int, MultiPoly] = {}
    for i, a in u.items():
        for k, c in L.bracket_terms(i, j):
            out[k] = out.get(k, L.pring.zero) + a * c
    return out


def jacobi_check(L: LieAlgebra) -> JacobiResult:
    """Jacobiators of all triples a<b<c, symbolically in the parameters."""
    n = L.dim
    seen: dict = {}
    witnesses = []
    for a in range(n):
        for b in range(a + 1, n):
            ab = dict(L.bracket_terms(a, b))
            for c in range(b + 1, n):
                bc = dict(L.bracket_terms(b, c))
                ca = dict(L.bracket_terms(c, a))
                if not (ab or bc or ca):
                    continue
                total: dict[int, MultiPoly] = {}
                for part in (_sym_bracket(L, ab, c), _sym_bracket(L, bc, a), _sym_bracket(L, ca, b)):
                    for k, v in part.items():
                        total[k] = total.get(k, L.pring.zero) + v
                for k, v in sorted(total.items()):
                    if v:
                        witnesses.append((a + 1, b + 1, c + 1, k + 1, v))
                        m = v.monic()
                        seen.setdefault(str(m), m)
    residuals = tuple(seen[s] for s in sorted(seen))
    return JacobiResult(not witnesses, residuals, tuple(witnesses))


# ---------------------------------------------------------------------------
# subspace operations
# ---------------------------------------------------------------------------
def bracket_span(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """span{[a, b] : a in A, b in B}."""
    vecs = []
    for a in A.rows:
        for b in B.rows:
            w = L.bracket(a, b)
            if any(w):
                vecs.append(w)
    return Subspace(L.dim, vecs)


def centralizer(L: LieAlgebra, S: Subspace) -> Subspace:
    """{x : [x, s] = 0 for all s in S}."""
    L.require_specialized()
    n = L.dim
    eqs = []
    for s in S.rows:
        # row k of the system: coefficient of x_i in ([x, s])_k
        cols = [L.bracket(L.unit(i), s) for i in range(n)]
        for k in range(n):
            row = [cols[i][k] for i in range(n)]
            if any(row):
                eqs.append(row)
    if not eqs:
        return Subspace.full(n)
    return Subspace(n, kernel_basis(eqs, n))


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, Subspace.full(L.dim))


def _annihilator(S: Subspace) -> list[tuple]:
    """Functionals vanishing on S."""
    if S.dim == 0:
        return [tuple(Fraction(int(i == j)) for j in range(S.n)) for i in range(S.n)]
    return kernel_basis([list(r) for r in S.rows], S.n)


def _next_upper(L: LieAlgebra, Z: Subspace) -> Subspace:
    n = L.dim
    ann = _annihilator(Z)
    if not ann:
        return Subspace.full(n)
    brk = [[L.bracket(L.unit(i), L.unit(j)) for j in range(n)] for i in range(n)]
    eqs = []
    for j in range(n):
        for w in ann:
            row = [sum((a * b for a, b in zip(w, brk[i][j]) if a and b), Fraction(0)) for i in range(n)]
            if any(row):
                eqs.append(row)
    if not eqs:
        return Subspace.full(n)
    return Subspace(n, kernel_basis(eqs, n))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """C^1 = L, C^{k+1} = [L, C^k], up to and including the first repeat-free stable member."""
    L.require_specialized()
    full = Subspace.full(L.dim)
    series = [full]
    while True:
        nxt = bracket_span(L, full, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def upper_central_series(L: LieAlgebra) -> list[Subspace]:
    """Z = Z(L) ⊆ Z_1 ⊆ ... until stable."""
    L.require_specialized()
    series = [center(L)]
    while True:
        nxt = _next_upper(L, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def central_series(L: LieAlgebra) -> CentralSeries:
    lower = lower_central_series(L)
    upper = upper_central_series(L)
    n = L.dim
    nilpotent = lower[-1].dim == 0
    filiform = (nilpotent and n >= 3 and len(lower) == n
                and all(lower[i - 1].dim == n - i for i in range(2, n + 1)))
    return CentralSeries(tuple(lower), tuple(upper), nilpotent, filiform)


def is_abelian_subspace(L: LieAlgebra, S: Subspace) -> bool:
    rows = S.rows
    return all(not any(L.bracket(rows[a], rows[b])) for a in range(len(rows)) for b in range(a + 1, len(rows)))


def is_adapted_filiform(L: LieAlgebra) -> AdaptedCheck:
    """Check the adapted-basis bracket shape of a filiform algebra."""
    L.require_specialized()
    n = L.dim
    adapted = n >= 3
    for i in range(1, n):
        want = ((i + 1, Fraction(1)),) if i < n - 1 else ()
        if L.numeric_terms(0, i) != want:
            adapted = False
            break
    nonstandard = False
    for i in range(1, n):
        for j in range(i + 1, n):
            t = L.numeric_terms(i, j)
            if t:
                nonstandard = True
                # 1-based i+j is (i+1)+(j+1); target index (0-based) must be >= i+j+1
                if any(k < i + j + 1 for k, _ in t):
                    adapted = False
    return AdaptedCheck(adapted, nonstandard)


def trace_ad(L: LieAlgebra, i: int) -> Fraction:
    """Trace of ad x_i: sum over j of the x_j-coefficient of [x_i, x_j]."""
    total = Fraction(0)
    for j in range(L.dim):
        for k, c in L.numeric_terms(i, j):
            if k == j:
                total += c
    return total


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class FamilySpec:
    tag: str
    args: tuple = ()
    kwargs: tuple = field(default=())  # sorted (name, value) pairs

    def __str__(self):
        parts = [str(a) for a in self.args] + [f"{k}={v}" for k, v in self.kwargs]
        return f"{self.tag}({','.join(parts)})" if parts else self.tag


_FAMILY_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*\Z")


def parse_family(text: str) -> FamilySpec:
    """Parse ``tag``, ``tag(n)`` or ``tag(name=value, ...)``."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise BadFamilyParams(f"cannot parse family spec {text!r}")
    tag, inner = m.group(1), m.group(2)
    args, kwargs = [], {}
    if inner and inner.strip():
        for part in inner.split(","):
            part = part.strip()
            if "=" in part:
                k, v = part.split("=", 1)
                kwargs[k.strip()] = v.strip()
            else:
                args.append(part)
    return FamilySpec(tag, tuple(args), tuple(sorted(kwargs.items())))


def _int_arg(spec: FamilySpec, lo: int, what: str = "n") -> int:
    if len(spec.args) != 1 or spec.kwargs:
        raise BadFamilyParams(f"{spec.tag} takes exactly one integer argument {what}")
    try:
        v = int(spec.args[0])
    except ValueError:
        raise BadFamilyParams(f"{spec.tag}: {what} must be an integer, got {spec.args[0]!r}") from None
    if v < lo:
        raise BadFamilyParams(f"{spec.tag}: {what} must be >= {lo}, got {v}")
    return v


def _xs(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def _table(pairs) -> dict:
    """Build a bracket table from 1-based ``(i, j, [(coeff, k), ...])`` triples."""
    out: dict = {}
    for i, j, terms in pairs:
        out.setdefault((i - 1, j - 1), []).extend((k - 1, c) for c, k in terms)
    return out


def heisenberg(m: int) -> LieAlgebra:
    basis = [f"x{i}" for i in range(1, m + 1)] + [f"y{i}" for i in range(1, m + 1)] + ["z"]
    z = 2 * m + 1
    return LieAlgebra(f"H{2 * m + 1}", basis, (), _table((i, m + i, [(1, z)]) for i in range(1, m + 1)))


def diamond(m: int) -> LieAlgebra:
    basis = ["t"] + [f"x{i}" for i in range(1, m + 1)] + [f"y{i}" for i in range(1, m + 1)] + ["z"]
    z = 2 * m + 2
    pairs = []
    for i in range(1, m + 1):
        xi, yi = 1 + i, 1 + m + i
        pairs += [(1, xi, [(1, xi)]), (1, yi, [(-1, yi)]), (xi, yi, [(1, z)])]
    return LieAlgebra(f"D{2 * m + 2}", basis, (), _table(pairs))


def standard_filiform(n: int) -> LieAlgebra:
    return LieAlgebra(f"L{n}", _xs(n), (), _table((1, i, [(1, i + 1)]) for i in range(2, n)))


def q_family(n: int) -> LieAlgebra:
    if n % 2 or n < 4:
        raise BadFamilyParams(f"Q(n) needs an even n >= 4, got {n}")
    q = n // 2
    pairs = [(1, i, [(1, i + 1)]) for i in range(2, n - 1)]
    pairs += [(j, n - j + 1, [((-1) ** (j + 1), n)]) for j in range(2, q + 1)]
    return LieAlgebra(f"Q{n}", _xs(n), (), _table(pairs))


def r_family(n: int) -> LieAlgebra:
    if n < 5:
        raise BadFamilyParams(f"R(n) needs n >= 5, got {n}")
    pairs = [(1, i, [(1, i + 1)]) for i in range(2, n)]
    pairs += [(2, j, [(1, j + 2)]) for j in range(3, n - 1)]
    return LieAlgebra(f"R{n}", _xs(n), (), _table(pairs))


FILIFORM9_PARAMS = ("a25", "a26", "a27", "a28", "a29", "a37", "a38", "a39", "a49")
FILIFORM10_PARAMS = ("a25", "a26", "a27", "a28", "a29", "a2_10", "a37", "a38", "a39", "a3_10",
                     "a49", "lambda", "mu")


def _family_from_text(name, n, params, rows) -> LieAlgebra:
    pring = PolyRing(params)
    pairs = [(1, i, [(pring.one, i + 1)]) for i in range(2, n)]
    for i, j, text in rows:
        terms = []
        for coeff, k in text:
            terms.append((pring.parse(coeff), k))
        pairs.append((i, j, terms))
    return LieAlgebra(name, _xs(n), params, _table(pairs))


def filiform9() -> LieAlgebra:
    rows = [
        (2, 3, [("a25", 5), ("a26", 6), ("a27", 7), ("a28", 8), ("a29", 9)]),
        (2, 4, [("a25", 6), ("a26", 7), ("a27", 8), ("a28", 9)]),
        (2, 5, [("a25 - a37", 7), ("a26 - a38", 8), ("a27 - a39", 9)]),
        (2, 6, [("a25 - 2 a37", 8), ("a26 - 2 a38", 9)]),
        (2, 7, [("a25 - 3 a37 + a49", 9)]),
        (3, 4, [("a37", 7), ("a38", 8), ("a39", 9)]),
        (3, 5, [("a37", 8), ("a38", 9)]),
        (3, 6, [("a37 - a49", 9)]),
        (4, 5, [("a49", 9)]),
    ]
    return _family_from_text("filiform9", 9, FILIFORM9_PARAMS, rows)


def filiform10() -> LieAlgebra:
    rows = [
        (2, 3, [("a25", 5), ("a26", 6), ("a27", 7), ("a28", 8), ("a29", 9), ("a2_10", 10)]),
        (2, 4, [("a25", 6), ("a26", 7), ("a27", 8), ("a28", 9), ("a29", 10)]),
        (2, 5, [("a25 - a37", 7), ("a26 - a38", 8), ("a27 - a39", 9), ("a28 - a3_10", 10)]),
        (2, 6, [("a25 - 2 a37", 8), ("a26 - 2 a38", 9), ("a27 - 2 a39", 10)]),
        (2, 7, [("a25 - 3 a37 + a49", 9), ("a26 - 3 a38 + mu", 10)]),
        (2, 8, [("a25 - 4 a37 + 3 a49", 10)]),
        (2, 9, [("-lambda", 10)]),
        (3, 4, [("a37", 7), ("a38", 8), ("a39", 9), ("a3_10", 10)]),
        (3, 5, [("a37", 8), ("a38", 9), ("a39", 10)]),
        (3, 6, [("a37 - a49", 9), ("a38 - mu", 10)]),
        (3, 7, [("a37 - 2 a49", 10)]),
        (3, 8, [("lambda", 10)]),
        (4, 5, [("a49", 9), ("mu", 10)]),
        (4, 6, [("a49", 10)]),
        (4, 7, [("-lambda", 10)]),
        (5, 6, [("lambda", 10)]),
    ]
    return _family_from_text("filiform10", 10, FILIFORM10_PARAMS, rows)


# matrix families: basis elements are n x n matrices, brackets are commutators
def _matrix_algebra(name: str, n: int, offdiag: list[tuple], diag: str) -> LieAlgebra:
    """``offdiag``: (i, j) with i != j, 1-based.  ``diag``: 'E' (all E_ii), 'H'
    (E_ii - E_{i+1,i+1}) or 'none'."""
    names, mats = [], []
    for i, j in offdiag:
        names.append(f"E{i}_{j}")
        mats.append({(i, j): 1})
    if diag == "E":
        # keep E_ii in row-major position among the E_ij
        items = sorted([((i, j), f"E{i}_{j}", {(i, j): 1}) for i, j in offdiag]
                       + [((i, i), f"E{i}_{i}", {(i, i): 1}) for i in range(1, n + 1)])
        names = [x[1] for x in items]
        mats = [x[2] for x in items]
    elif diag == "H":
        for i in range(1, n):
            names.append(f"H{i}")
            mats.append({(i, i): 1, (i + 1, i + 1): -1})
    index = {nm: a for a, nm in enumerate(names)}

    def coords(mat: dict) -> list[tuple]:
        out = []
        cum = 0
        for (i, j), c in sorted(mat.items()):
            if not c:
                continue
            if i != j:
                out.append((index[f"E{i}_{j}"], c))
            elif diag == "E":
                out.append((index[f"E{i}_{i}"], c))
        if diag == "H":
            for i in range(1, n):
                cum += mat.get((i, i), 0)
                if cum:
                    out.append((index[f"H{i}"], cum))
        return out

    def mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for (i, j), x in a.items():
            for (k, l), y in b.items():
                if j == k:
                    out[(i, l)] = out.get((i, l), 0) + x * y
        return out

    table = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            ab, ba = mul(mats[a], mats[b]), mul(mats[b], mats[a])
            comm = {key: ab.get(key, 0) - ba.get(key, 0) for key in set(ab) | set(ba)}
            terms = coords(comm)
            if terms:
                table[(a, b)] = [(k, c) for k, c in terms]
    return LieAlgebra(name, names, (), table)


def strict_upper(n: int) -> LieAlgebra:
    return _matrix_algebra(f"N{n}", n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], "none")


def upper(n: int) -> LieAlgebra:
    return _matrix_algebra(f"T{n}", n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], "E")


def borel_sl(n: int) -> LieAlgebra:
    return _matrix_algebra(f"B{n}", n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], "H")


def gl(n: int) -> LieAlgebra:
    return _matrix_algebra(f"gl{n}", n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j], "E")


def sl(n: int) -> LieAlgebra:
    return _matrix_algebra(f"sl{n}", n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j], "H")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(f"k{n}", _xs(n), (), {})


_SIMPLE = {
    "heisenberg": (heisenberg, 1, "m"),
    "diamond": (diamond, 1, "m"),
    "standard_filiform": (standard_filiform, 3, "n"),
    "L": (standard_filiform, 3, "n"),
    "Q": (q_family, 4, "n"),
    "R": (r_family, 5, "n"),
    "gl": (gl, 1, "n"),
    "sl": (sl, 2, "n"),
    "strict_upper": (strict_upper, 2, "n"),
    "upper": (upper, 1, "n"),
    "borel_sl": (borel_sl, 2, "n"),
    "abelian": (abelian, 0, "n"),
}

FAMILY_TAGS = tuple(sorted(set(_SIMPLE) | {"filiform9", "filiform10", "explicit"}))


def build_family(spec: FamilySpec | str) -> LieAlgebra:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.tag in _SIMPLE:
        fn, lo, what = _SIMPLE[spec.tag]
        return fn(_int_arg(spec, lo, what))
    if spec.tag in ("filiform9", "filiform10"):
        if spec.args:
            raise BadFamilyParams(f"{spec.tag} takes only name=value parameters")
        L = filiform9() if spec.tag == "filiform9" else filiform10()
        if spec.kwargs:
            try:
                L = L.specialize({k: as_rational(v) for k, v in spec.kwargs})
            except (TypeError, ValueError) as exc:
                raise BadFamilyParams(str(exc)) from None
        return L
    if spec.tag == "explicit":
        if len(spec.args) != 1:
            raise BadFamilyParams("explicit(file) takes one path")
        return LieAlgebra.load(spec.args[0])
    raise BadFamilyParams(f"unknown family {spec.tag!r}; known: {', '.join(FAMILY_TAGS)}")


def direct_sum(A: LieAlgebra, B: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """Block-diagonal sum; clashing names in B get a numeric suffix."""
    used = set(A.basis) | set(A.params)
    rename = {}
    for nm in B.basis + B.params:
        new = nm
        k = 2
        while new in used:
            new = f"{nm}_{k}"
            k += 1
        rename[nm] = new
        used.add(new)
    params = A.params + tuple(rename[p] for p in B.params)
    pring = PolyRing(params)
    shift = A.dim
    table = {key: [(k, c.to_ring(pring)) for k, c in t] for key, t in A.brackets.items()}
    bmap = {p: pring.gen(rename[p]) for p in B.params}
    for (i, j), t in B.brackets.items():
        terms = []
        for k, c in t:
            cc = pring.zero
            for e, v in c.terms.items():
                mono = pring.const(v)
                for p, ex in zip(B.params, e):
                    if ex:
                        mono = mono * bmap[p] ** ex
                cc = cc + mono
            terms.append((k + shift, cc))
        table[(i + shift, j + shift)] = terms
    return LieAlgebra(name or f"{A.name}+{B.name}", A.basis + tuple(rename[b] for b in B.basis), params, table)


def subalgebra_closure_ok(L: LieAlgebra, S: Subspace) -> bool:
    rows = S.rows
    return all(S.contains(L.bracket(rows[a], rows[b])) for a in range(len(rows)) for b in range(a + 1, len(rows)))
