import pytest

from lieinv.abelian import (
    BudgetExceeded,
    NotFiliform,
    StandardFiliform,
    UnverifiedCertificate,
    abelian_subset_search,
    certify_abelian,
    filiform_alpha,
    is_cp,
    is_standard_filiform,
    r_property_verdict,
)
from lieinv.catalog import get_entry
from lieinv.invariants import index_and_magic
from lieinv.liecore import LieError, Subspace, build_family

import oracles


def span(L, *names):
    return Subspace(L.dim, [L.vector(n) for n in names])


def test_cp_of_item5():
    L = get_entry("g6.18").algebra()
    cert = certify_abelian(L, span(L, "x4", "x5", "x6"))
    assert cert.ok and cert.dim == 3
    assert not is_cp(L, cert)


def test_non_abelian_subspace_is_rejected():
    L = build_family("heisenberg(1)")
    cert = certify_abelian(L, span(L, "x1", "y1"))
    assert not cert.ok
    with pytest.raises(UnverifiedCertificate):
        is_cp(L, cert)


def test_non_closed_subspace_is_not_a_subalgebra():
    L = build_family("sl(2)")
    cert = certify_abelian(L, span(L, "E1_2", "E2_1"))
    assert not cert.verified_subalgebra and not cert.ok


def test_heisenberg_lagrangian_is_a_cp():
    L = build_family("heisenberg(3)")
    cert = certify_abelian(L, span(L, "x1", "x2", "x3", "z"))
    assert cert.ok and is_cp(L, cert)
    assert r_property_verdict(L, cert).status == "CP"


def test_filiform_alpha_for_g89():
    L = get_entry("g8.9").algebra().specialize({"lambda": 1})
    fa = filiform_alpha(L)
    assert fa.alpha == 5 and fa.m == 3 and fa.certificate.ok


def test_filiform_alpha_errors():
    with pytest.raises(StandardFiliform):
        filiform_alpha(build_family("L(6)"))
    with pytest.raises(NotFiliform):
        filiform_alpha(build_family("heisenberg(2)"))
    assert is_standard_filiform(build_family("L(7)"))
    assert not is_standard_filiform(build_family("Q(8)"))


def test_subset_search_finds_lexicographically_first_maximum():
    L = build_family("heisenberg(2)")
    found = abelian_subset_search(L)
    assert found.certificate.dim == 3 and found.certificate.ok
    assert found.certificate.subspace == span(L, "x1", "x2", "z")
    assert not found.budget_exceeded


def test_subset_search_budget():
    L = build_family("strict_upper(5)")
    with pytest.raises(BudgetExceeded) as info:
        abelian_subset_search(L, budget=16, strict=True)
    assert info.value.best.certificate.ok
    assert abelian_subset_search(L, budget=16).budget_exceeded


def test_r_property_verdicts():
    L = get_entry("g8.4").algebra()
    cert = certify_abelian(L, span(L, "x5", "x6", "x7", "x8"))
    assert r_property_verdict(L, cert).status == "R_HOLDS"
    low = certify_abelian(L, span(L, "x7", "x8"))
    assert r_property_verdict(L, low, alpha_upper_proof=3).status == "R_FAILS"
    assert r_property_verdict(L, low).status == "UNDECIDED"
    with pytest.raises(LieError):
        r_property_verdict(L, cert, alpha_upper_proof=3)


@pytest.mark.parametrize("key", ["g5.5", "g6.18", "g7.0.1", "g8.4", "ex6.4", "ex7.3", "D4"])
def test_sandwich_index_alpha_c(key):
    L = get_entry(key).algebra()
    exp = get_entry(key).expected
    idx = index_and_magic(L)
    cert = certify_abelian(L, Subspace(L.dim, [L.vector(v) for v in exp["h"]]))
    assert cert.ok
    assert idx.i <= cert.dim == exp["alpha"] <= idx.c


def test_abelian_oracle_agrees():
    L = get_entry("ex7.3").algebra()
    h = [L.vector(v) for v in get_entry("ex7.3").expected["h"]]
    assert oracles.abelian_span(L, h) == certify_abelian(L, Subspace(L.dim, h)).verified_abelian
