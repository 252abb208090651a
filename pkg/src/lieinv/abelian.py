"""Abelian subalgebra certificates, commutative polarizations and alpha."""
from __future__ import annotations

from dataclasses import dataclass

from . import _accel
from .invariants import index_and_magic
from .liecore import (
    LieAlgebra,
    LieError,
    Subspace,
    center,
    central_series,
    centralizer,
    is_abelian_subspace,
    subalgebra_closure_ok,
)

DEFAULT_BUDGET = 1 << 22


class UnverifiedCertificate(LieError):
    pass


class NotFiliform(LieError):
    pass


class StandardFiliform(LieError):
    pass


class BudgetExceeded(LieError):
    def __init__(self, best: "SearchResult"):
        super().__init__(f"subset budget exhausted; best dimension so far {best.certificate.dim}")
        self.best = best


@dataclass(frozen=True)
class AbelianCertificate:
    subspace: Subspace
    verified_subalgebra: bool
    verified_abelian: bool
    dim: int

    @property
    def ok(self) -> bool:
        return self.verified_subalgebra and self.verified_abelian


@dataclass(frozen=True)
class FiliformAlpha:
    alpha: int
    m: int
    certificate: AbelianCertificate


@dataclass(frozen=True)
class SearchResult:
    certificate: AbelianCertificate
    source: str
    budget_exceeded: bool


@dataclass(frozen=True)
class RPropertyVerdict:
    status: str  # CP, R_HOLDS, R_FAILS or UNDECIDED
    alpha_lower: int
    alpha_upper: int
    witness: AbelianCertificate


def certify_abelian(L: LieAlgebra, S: Subspace) -> AbelianCertificate:
    """Exact closure and commutativity check on a basis of S."""
    L.require_specialized()
    if S.n != L.dim:
        raise LieError(f"subspace of Q^{S.n} in a {L.dim}-dimensional algebra")
    abelian = is_abelian_subspace(L, S)
    sub = abelian or subalgebra_closure_ok(L, S)
    return AbelianCertificate(S, sub, abelian, S.dim)


def _require(cert: AbelianCertificate):
    if not cert.ok:
        raise UnverifiedCertificate("certificate is not a verified abelian subalgebra")


def is_cp(L: LieAlgebra, cert: AbelianCertificate, c: int | None = None) -> bool:
    _require(cert)
    if c is None:
        c = index_and_magic(L).c
    return cert.dim == c


def is_standard_filiform(L: LieAlgebra, series=None) -> bool:
    """Filiform with an abelian ideal of codimension one (the type L_n).

    Such an ideal contains C^2, so it exists iff C^2 is abelian and its
    centralizer is strictly larger.
    """
    cs = series or central_series(L)
    C2 = cs.lower[1]
    return is_abelian_subspace(L, C2) and centralizer(L, C2).dim > C2.dim


def filiform_alpha(L: LieAlgebra) -> FiliformAlpha:
    """alpha = dim C^m with m the smallest index such that C^m is abelian."""
    L.require_specialized()
    cs = central_series(L)
    if not cs.filiform:
        raise NotFiliform(f"{L.name} is not filiform")
    if is_standard_filiform(L, cs):
        raise StandardFiliform(f"{L.name} is of standard type; alpha = n - 1 = {L.dim - 1}")
    for m, C in enumerate(cs.lower, start=1):
        if is_abelian_subspace(L, C):
            cert = certify_abelian(L, C)
            return FiliformAlpha(C.dim, m, cert)
    raise AssertionError("the last lower central term is zero, hence abelian")


def commuting_adjacency(L: LieAlgebra) -> list[int]:
    n = L.dim
    adj = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not L.numeric_terms(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def abelian_subset_search(L: LieAlgebra, budget: int | None = None, strict: bool = False) -> SearchResult:
    """Best verified abelian subalgebra among basis subsets, abelian members of
    the lower central series, and Z(L) plus one basis vector."""
    L.require_specialized()
    n = L.dim
    budget = DEFAULT_BUDGET if budget is None else budget
    exceeded = (1 << n) > budget
    mask, _ = _accel.best_commuting_subset(commuting_adjacency(L), n, budget if exceeded else 0)
    best = certify_abelian(L, Subspace.coordinate(n, [i for i in range(n) if mask >> i & 1]))
    source = "basis-subset"
    for m, C in enumerate(central_series(L).lower, start=1):
        if C.dim > best.dim and is_abelian_subspace(L, C):
            best, source = certify_abelian(L, C), f"C^{m}"
    Z = center(L)
    for i in range(n):
        S = Z + Subspace.coordinate(n, [i])
        if S.dim > best.dim:
            best, source = certify_abelian(L, S), f"Z+{L.basis[i]}"
            break
    result = SearchResult(best, source, exceeded)
    if exceeded and strict:
        raise BudgetExceeded(result)
    return result


def r_property_verdict(L: LieAlgebra, cert: AbelianCertificate, alpha_upper_proof: int | None = None) -> RPropertyVerdict:
    _require(cert)
    idx = index_and_magic(L)
    c = idx.c
    upper = c if alpha_upper_proof is None else min(c, alpha_upper_proof)
    if cert.dim > upper:
        raise LieError(f"certificate of dimension {cert.dim} exceeds the upper bound {upper}")
    lower = max(cert.dim, idx.i)
    if cert.dim == c:
        status = "CP"
    elif cert.dim >= c - 1:
        status = "R_HOLDS"
    elif upper <= c - 2:
        status = "R_FAILS"
    else:
        status = "UNDECIDED"
    return RPropertyVerdict(status, lower, upper, cert)
