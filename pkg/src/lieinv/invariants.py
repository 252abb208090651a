"""Index, magic number, fundamental semi-invariant, stabilizers and F(L)."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .exactalg.gcd import gcd_list
from .exactalg.linalg import kernel_basis
from .exactalg.poly import MultiPoly
from .exactalg.polymatrix import PolyMatrix, matrix_rank_ff, principal_pfaffians
from .liecore import (
    LieAlgebra,
    LieError,
    Subspace,
    bracket_span,
    center,
    lower_central_series,
    trace_ad,
)

SAMPLE_BOUND = 10 ** 6
MAX_BATCHES = 64


class SamplingExhausted(LieError):
    pass


class HintViolated(LieError):
    pass


@dataclass(frozen=True)
class IndexResult:
    i: int
    c: int
    rank: int


@dataclass(frozen=True)
class SemiInvariant:
    p: MultiPoly
    singular: bool
    t: int


@dataclass(frozen=True)
class Stabilizer:
    subspace: Subspace
    regular: bool


@dataclass(frozen=True)
class FrobeniusResult:
    F: Subspace
    quasi_quadratic: bool
    samples: int
    regular_samples: int


@dataclass(frozen=True)
class InvariantReport:
    i: int
    c: int
    p: MultiPoly
    singular: bool
    frobenius: bool
    quasi_quadratic: bool
    square_integrable: bool
    unimodular: bool
    F: Subspace
    Z: Subspace
    samples: int


@dataclass(frozen=True)
class AlphaBounds:
    lower: int
    upper: int
    sources: tuple  # (name, value) pairs that produced lower bounds


def structure_matrix(L: LieAlgebra) -> PolyMatrix:
    """B = ([x_i, x_j]) over Q[basis, params]."""
    ring = L.full_ring if L.params else L.sring
    gens = [ring.gen(b) for b in L.basis]
    n = L.dim
    rows = [[ring.zero] * n for _ in range(n)]
    for (i, j), terms in L.brackets.items():
        e = ring.zero
        for k, c in terms:
            e = e + c.to_ring(ring) * gens[k]
        rows[i][j] = e
        rows[j][i] = -e
    return PolyMatrix(ring, rows)


def index_and_magic(L: LieAlgebra, seed: int = 0, method: str = "auto") -> IndexResult:
    L.require_specialized()
    r = matrix_rank_ff(structure_matrix(L), method=method, seed=seed)
    i = L.dim - r
    if (L.dim - i) % 2:
        raise AssertionError(f"{L.name}: odd rank {r} of a skew matrix")
    return IndexResult(i, (L.dim + i) // 2, r)


def fundamental_semi_invariant(L: LieAlgebra, seed: int = 0) -> SemiInvariant:
    """GCD of the principal t x t Pfaffians, t = rank B, graded-lex monic.

    Symbolic parameters are treated as extra polynomial variables.
    """
    B = structure_matrix(L)
    t = matrix_rank_ff(B, seed=seed)
    ring = B.ring
    if t == 0:
        return SemiInvariant(ring.one, False, 0)
    pfs = [q for q in principal_pfaffians(B, t).values() if q]
    p = gcd_list(pfs)
    return SemiInvariant(p, not p.is_constant(), t)


def _evaluated_form(L: LieAlgebra, xi: Sequence) -> list[list[Fraction]]:
    n = L.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), terms in L._num.items():
        v = sum((c * Fraction(xi[k]) for k, c in terms if xi[k]), Fraction(0))
        if v:
            m[i][j] = v
            m[j][i] = -v
    return m


def stabilizer(L: LieAlgebra, xi: Sequence, index: int | None = None) -> Stabilizer:
    """L(xi) = {x : xi([x, y]) = 0 for all y}."""
    L.require_specialized()
    if len(xi) != L.dim:
        raise LieError(f"functional of length {len(xi)} for a {L.dim}-dimensional algebra")
    ker = kernel_basis(_evaluated_form(L, xi), L.dim)
    S = Subspace(L.dim, ker)
    if index is None:
        index = index_and_magic(L).i
    return Stabilizer(S, S.dim == index)


def random_functional(rng: random.Random, n: int, bound: int = SAMPLE_BOUND) -> list[int]:
    return [rng.randint(-bound, bound) for _ in range(n)]


def frobenius_semiradical(L: LieAlgebra, seed: int = 0, samples: int | None = None,
                          index: int | None = None, max_batches: int = MAX_BATCHES) -> FrobeniusResult:
    """Monte Carlo span of stabilizers of regular functionals.

    Batches of ``samples`` (default 2*dim) random functionals are drawn until two
    consecutive batches leave the span unchanged.  The result is a lower
    bound for F(L) that equals it with overwhelming probability.
    """
    L.require_specialized()
    n = L.dim
    if index is None:
        index = index_and_magic(L, seed=seed).i
    batch = samples if samples else 2 * n
    rng = random.Random(seed)
    span = Subspace.zero(n)
    used = regular = quiet = 0
    for _ in range(max_batches):
        before = span.dim
        for _ in range(batch):
            xi = random_functional(rng, n)
            used += 1
            st = stabilizer(L, xi, index)
            if st.regular:
                regular += 1
                if not st.subspace <= span:
                    span = span + st.subspace
        if regular == 0:
            continue
        quiet = quiet + 1 if span.dim == before else 0
        # the full space cannot grow further
        if quiet >= 2 or span.dim == n:
            break
    if regular == 0:
        raise SamplingExhausted(f"{L.name}: no regular functional in {used} samples")
    return FrobeniusResult(span, span.dim == n, used, regular)


def is_unimodular(L: LieAlgebra) -> bool:
    L.require_specialized()
    return all(trace_ad(L, i) == 0 for i in range(L.dim))


def structural_flags(L: LieAlgebra, seed: int = 0, samples: int | None = None) -> InvariantReport:
    L.require_specialized()
    idx = index_and_magic(L, seed=seed)
    semi = fundamental_semi_invariant(L, seed=seed)
    fr = frobenius_semiradical(L, seed=seed, samples=samples, index=idx.i)
    Z = center(L)
    return InvariantReport(
        i=idx.i, c=idx.c, p=semi.p, singular=semi.singular, frobenius=idx.i == 0,
        quasi_quadratic=fr.quasi_quadratic, square_integrable=Z.dim == idx.i,
        unimodular=is_unimodular(L), F=fr.F, Z=Z, samples=fr.samples)


# ---------------------------------------------------------------------------
# alpha bounds
# ---------------------------------------------------------------------------
def solvable_bound(n: int) -> int:
    """Smallest integer a >= (sqrt(8n+9) - 3)/2."""
    a = max(0, (isqrt(8 * n + 9) - 3) // 2)
    while (2 * a + 3) ** 2 < 8 * n + 9:
        a += 1
    return a


def nilpotent_bound(n: int) -> int:
    """Smallest integer a >= (sqrt(8n+1) - 1)/2."""
    a = max(0, (isqrt(8 * n + 1) - 1) // 2)
    while (2 * a + 1) ** 2 < 8 * n + 1:
        a += 1
    return a


def metabelian_bound(n: int, t: int) -> int:
    return (2 * n + t * t + t) // (t + 2)


def derived_series(L: LieAlgebra) -> list[Subspace]:
    series = [Subspace.full(L.dim)]
    while True:
        nxt = bracket_span(L, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def alpha_bounds(L: LieAlgebra, class_hint: str = "none", t: int | None = None, seed: int = 0) -> AlphaBounds:
    """Lower bound max(i, class bound); upper bound c.

    ``class_hint`` is one of solvable, nilpotent, metabelian, none.  Hints are
    checked; a false hint raises :class:`HintViolated`.
    """
    L.require_specialized()
    idx = index_and_magic(L, seed=seed)
    n = L.dim
    sources = [("index", idx.i)]
    if class_hint == "solvable":
        if not is_solvable(L):
            raise HintViolated(f"{L.name} is not solvable")
        sources.append(("solvable", solvable_bound(n)))
    elif class_hint == "nilpotent":
        if not is_nilpotent(L):
            raise HintViolated(f"{L.name} is not nilpotent")
        sources.append(("nilpotent", nilpotent_bound(n)))
    elif class_hint == "metabelian":
        D = bracket_span(L, Subspace.full(n), Subspace.full(n))
        if not D <= center(L):
            raise HintViolated(f"{L.name}: [L,L] is not central")
        if D.dim < 2:
            raise HintViolated(f"{L.name}: dim [L,L] = {D.dim} < 2")
        if t is not None and t != D.dim:
            raise HintViolated(f"{L.name}: dim [L,L] = {D.dim}, not {t}")
        sources.append(("metabelian", metabelian_bound(n, D.dim)))
    elif class_hint != "none":
        raise HintViolated(f"unknown class hint {class_hint!r}")
    lower = max(v for _, v in sources)
    return AlphaBounds(lower, idx.c, tuple(sources))
