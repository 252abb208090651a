"""Poisson structure on S(L): brackets, centrality, transcendence degree and
certification of Poisson-commutative subalgebras."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .exactalg.poly import MultiPoly, RingMismatch, as_rational
from .exactalg.polymatrix import PolyMatrix, det_bareiss, matrix_rank_ff
from .invariants import index_and_magic
from .liecore import LieAlgebra

MINOR_LIMIT = 50_000


def _own(L: LieAlgebra, f) -> MultiPoly:
    ring = L.sring
    if not isinstance(f, MultiPoly):
        return ring.const(f)
    if f.ring is ring:
        return f
    try:
        return f.to_ring(ring)
    except RingMismatch:
        raise RingMismatch(f"{f} is not a polynomial in {', '.join(L.basis)}") from None


def _bracket_polys(L: LieAlgebra) -> dict:
    """[x_i, x_j] as linear polynomials, i < j."""
    L.require_specialized()
    ring = L.sring
    gens = ring.gens()
    out = {}
    for (i, j), terms in L._num.items():
        e = ring.zero
        for k, c in terms:
            e = e + gens[k] * c
        out[(i, j)] = e
    return out


def poisson_bracket(L: LieAlgebra, f, g) -> MultiPoly:
    """{f, g} = sum_{i,j} [x_i, x_j] df/dx_i dg/dx_j."""
    f, g = _own(L, f), _own(L, g)
    br = _bracket_polys(L)
    ring = L.sring
    if f.is_constant() or g.is_constant():
        return ring.zero
    df = {i: f.diff(i) for i in f.support_indices()}
    dg = {j: g.diff(j) for j in g.support_indices()}
    total = ring.zero
    for (i, j), e in br.items():
        part = ring.zero
        if i in df and j in dg:
            part = part + df[i] * dg[j]
        if j in df and i in dg:
            part = part - df[j] * dg[i]
        if part:
            total = total + e * part
    return total


def is_poisson_central(L: LieAlgebra, f) -> bool:
    return not central_defects(L, f)


def central_defects(L: LieAlgebra, f) -> list[tuple[str, MultiPoly]]:
    """Pairs (x_j, {f, x_j}) with nonzero bracket."""
    f = _own(L, f)
    br = _bracket_polys(L)
    ring = L.sring
    df = {i: f.diff(i) for i in f.support_indices()}
    out = []
    for j in range(L.dim):
        total = ring.zero
        for i, d in df.items():
            if i < j and (i, j) in br:
                total = total + br[(i, j)] * d
            elif i > j and (j, i) in br:
                total = total - br[(j, i)] * d
        if total:
            out.append((L.basis[j], total))
    return out


def jacobian(L: LieAlgebra, gens: Sequence) -> PolyMatrix:
    gens = [_own(L, g) for g in gens]
    return PolyMatrix(L.sring, [[g.diff(i) for i in range(L.dim)] for g in gens])


def trdeg(L: LieAlgebra, gens: Sequence, seed: int = 0) -> int:
    """Transcendence degree via the rank of the Jacobian over Q(x)."""
    L.require_specialized()
    if not gens:
        return 0
    return matrix_rank_ff(jacobian(L, gens), seed=seed)


@dataclass(frozen=True)
class PolySubalgebraCandidate:
    generators: tuple
    claims: dict = field(default_factory=dict)  # commutative / complete / degree_le_2


@dataclass(frozen=True)
class CertificationResult:
    pairwise_commute: bool
    trdeg: int
    c: int
    complete: bool
    max_degree: int
    milovanov_ok: bool
    failures: tuple

    def to_dict(self) -> dict:
        return {"pairwise_commute": self.pairwise_commute, "trdeg": self.trdeg, "c": self.c,
                "complete": self.complete, "max_degree": self.max_degree,
                "milovanov_ok": self.milovanov_ok, "failures": list(self.failures)}


def certify_candidate(L: LieAlgebra, cand: PolySubalgebraCandidate | Sequence, seed: int = 0,
                      c: int | None = None) -> CertificationResult:
    """Check commutativity, completeness (trdeg = c) and the degree bound."""
    if not isinstance(cand, PolySubalgebraCandidate):
        cand = PolySubalgebraCandidate(tuple(cand))
    gens = [_own(L, g) for g in cand.generators]
    failures: list = []
    for a, g in enumerate(gens):
        if not g:
            failures.append(f"generator {a + 1} is zero")
    commute = True
    for a, b in combinations(range(len(gens)), 2):
        br = poisson_bracket(L, gens[a], gens[b])
        if br:
            commute = False
            failures.append(f"{{{gens[a]}, {gens[b]}}} = {br}")
    if c is None:
        c = index_and_magic(L, seed=seed).c
    td = trdeg(L, gens, seed=seed)
    complete = td == c
    if not complete:
        failures.append(f"trdeg {td} != c {c}")
    max_deg = max((g.degree() for g in gens if g), default=0)
    if max_deg > 2:
        worst = [str(g) for g in gens if g and g.degree() > 2]
        failures.append(f"degree {max_deg} > 2: {', '.join(worst)}")
    observed = {"commutative": commute, "complete": complete, "degree_le_2": max_deg <= 2}
    for key, want in cand.claims.items():
        if key in observed and observed[key] != bool(want):
            failures.append(f"claim {key}={want} but observed {observed[key]}")
    return CertificationResult(commute, td, c, complete, int(max_deg), commute and complete and max_deg <= 2,
                               tuple(failures))


def expand_identity(terms: Iterable[tuple]) -> MultiPoly | None:
    """Expand sum(coeff * prod(factors)); ``None`` for an empty sum."""
    total = None
    for coeff, factors in terms:
        q = as_rational(coeff)
        prod = None
        for f in factors:
            prod = f if prod is None else prod * f
        if prod is None:
            raise ValueError("a term needs at least one factor")
        term = prod * q
        total = term if total is None else total + term
    return total


def verify_identity(terms: Iterable[tuple]) -> bool:
    total = expand_identity(terms)
    return total is None or total.is_zero()


# ---------------------------------------------------------------------------
# coordinate Jacobian locus
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class JacobianLocus:
    status: str  # "ok" or "unknown"
    codim: int | None
    locus_vars: tuple  # variables of a smallest component
    components: tuple  # each a tuple of variable names set to zero
    rank: int


def _minimal_hitting_sets(supports: list[frozenset]) -> list[frozenset]:
    universe = sorted(set().union(*supports))
    found: list[frozenset] = []
    for size in range(1, len(universe) + 1):
        for cand in combinations(universe, size):
            s = frozenset(cand)
            if any(f <= s for f in found):
                continue
            if all(s & sup for sup in supports):
                found.append(s)
    return found


def _decompose(minors: list[MultiPoly], zeroed: frozenset, out: set, budget: list) -> bool:
    """Coordinate components of V(minors); False when a level has no monomial minor."""
    budget[0] -= 1
    if budget[0] < 0:
        return False
    live = [m for m in minors if m]
    if not live:
        out.add(zeroed)
        return True
    if any(m.is_constant() for m in live):
        return True
    supports = [frozenset(m.support_indices()) for m in live if m.is_monomial()]
    if not supports:
        return False
    names = live[0].ring.names
    for hit in _minimal_hitting_sets(supports):
        vals = {names[v]: 0 for v in hit}
        if not _decompose([m.subs(vals) for m in live], zeroed | hit, out, budget):
            return False
    return True


def coordinate_jacobian_locus(L: LieAlgebra, gens: Sequence, seed: int = 0,
                              minor_limit: int = MINOR_LIMIT) -> JacobianLocus:
    """Rank-drop locus of the Jacobian when it is a union of coordinate subspaces.

    All maximal (r x r, r = generic rank) minors are computed.  Monomial minors
    force some coordinate to vanish; the minimal such choices are substituted
    and the procedure recurses.  The result is the exact decomposition of the
    locus into coordinate subspaces, or ``unknown`` when some stage offers no
    monomial minor.
    """
    L.require_specialized()
    J = jacobian(L, gens)
    r = matrix_rank_ff(J, seed=seed)
    n = L.dim
    if r == 0:
        return JacobianLocus("unknown", None, (), (), 0)
    if comb(J.rows, r) * comb(n, r) > minor_limit:
        return JacobianLocus("unknown", None, (), (), r)
    minors = []
    for rows in combinations(range(J.rows), r):
        for cols in combinations(range(n), r):
            d = det_bareiss(J.submatrix(rows, cols))
            if d:
                minors.append(d)
    comps: set = set()
    if not _decompose(minors, frozenset(), comps, [10_000]):
        return JacobianLocus("unknown", None, (), (), r)
    minimal = [c for c in comps if not any(o < c for o in comps)]
    named = sorted((tuple(L.basis[v] for v in sorted(c)) for c in minimal), key=lambda t: (len(t), t))
    if not named:
        return JacobianLocus("ok", n, (), (), r)
    return JacobianLocus("ok", len(named[0]), named[0], tuple(named), r)
