import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lieinv.catalog import get_entry
from lieinv.exactalg import MultiPoly
from lieinv.liecore import ParametersUnspecialized, build_family
from lieinv.poisson import (
    PolySubalgebraCandidate,
    central_defects,
    certify_candidate,
    coordinate_jacobian_locus,
    expand_identity,
    is_poisson_central,
    jacobian,
    poisson_bracket,
    trdeg,
    verify_identity,
)

import oracles

ALGEBRAS = {
    "g6.18": get_entry("g6.18").algebra(),
    "g8.4": get_entry("g8.4").algebra(),
    "ex6.5": get_entry("ex6.5").algebra(),
    "D4": get_entry("D4").algebra(),
    "sl3": build_family("sl(3)"),
}


@st.composite
def poly_in(draw, L, max_terms=3, max_deg=2):
    ring = L.sring
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        e = [0] * L.dim
        for _ in range(draw(st.integers(0, max_deg))):
            e[draw(st.integers(0, L.dim - 1))] += 1
        c = draw(st.integers(-3, 3))
        if c:
            terms[tuple(e)] = c
    from fractions import Fraction

    return MultiPoly(ring, {k: Fraction(v) for k, v in terms.items()})


@st.composite
def triples(draw):
    name = draw(st.sampled_from(sorted(ALGEBRAS)))
    L = ALGEBRAS[name]
    return L, draw(poly_in(L)), draw(poly_in(L)), draw(poly_in(L))


@settings(max_examples=100)
@given(triples())
def test_leibniz_jacobi_and_skew(t):
    L, f, g, h = t
    br = lambda a, b: poisson_bracket(L, a, b)  # noqa: E731
    assert br(f, g * h) == br(f, g) * h + g * br(f, h)
    assert br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)) == L.sring.zero
    assert br(f, g) == -br(g, f)


@settings(max_examples=30)
@given(triples())
def test_bracket_matches_sympy_oracle(t):
    L, f, g, _ = t
    ours = poisson_bracket(L, f, g)
    ref = oracles.bracket(L, oracles.sympify(L, str(f).replace("*", " ")), oracles.sympify(L, str(g).replace("*", " ")))
    assert sp.expand(oracles.sympify(L, str(ours).replace("*", " ")) - ref) == 0


def test_degree_one_brackets_are_lie_brackets():
    L = ALGEBRAS["g8.4"]
    gens = L.sring.gens()
    for i in range(L.dim):
        for j in range(L.dim):
            want = L.sring.linear(L.bracket(L.unit(i), L.unit(j)))
            assert poisson_bracket(L, gens[i], gens[j]) == want


def test_heisenberg_center_and_defects():
    L = build_family("heisenberg(2)")
    assert is_poisson_central(L, L.sring.parse("z"))
    bad = central_defects(L, L.sring.parse("x1 + z"))
    assert [name for name, _ in bad] == ["y1"]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_diamond_casimir(m):
    L = build_family(f"diamond({m})")
    f = L.sring.parse("t z + " + " + ".join(f"x{i} y{i}" for i in range(1, m + 1)))
    assert is_poisson_central(L, f)
    assert oracles.is_central(L, oracles.sympify(L, str(f).replace("*", " ")))


def test_bracket_needs_numbers():
    with pytest.raises(ParametersUnspecialized):
        poisson_bracket(get_entry("g8.9").algebra(), 1, 1)


def test_trdeg_and_jacobian():
    L = build_family("heisenberg(1)")
    R = L.sring
    assert trdeg(L, [R.parse("x1"), R.parse("x1^2"), R.parse("z")]) == 2
    assert jacobian(L, [R.parse("x1 y1")]).entries[0][:2] == (R.parse("y1"), R.parse("x1"))


def test_certify_incomplete_abelian_span():
    L = ALGEBRAS["ex6.5"]
    res = certify_candidate(L, [L.sring.parse(x) for x in ("x5", "x6", "x7", "x8")])
    assert res.pairwise_commute and res.trdeg == 4 and res.c == 5 and not res.complete
    assert not res.milovanov_ok


def test_certify_claim_mismatch_is_reported():
    L = ALGEBRAS["g8.4"]
    R = L.sring
    cand = PolySubalgebraCandidate((R.parse("x1"), R.parse("x2")), {"commutative": True})
    res = certify_candidate(L, cand)
    assert not res.pairwise_commute
    assert any("claim commutative" in f for f in res.failures)
    assert res.to_dict()["failures"] == list(res.failures)


def test_identity_expansion():
    L = build_family("heisenberg(1)")
    R = L.sring
    x, y = R.parse("x1"), R.parse("y1")
    assert verify_identity([(1, [x + y, x + y]), (-1, [x, x]), (-2, [x, y]), (-1, [y, y])])
    assert not verify_identity([(1, [x])])
    assert expand_identity([]) is None


def test_locus_of_example_91_ii():
    L = get_entry("g8.9").algebra().specialize({"lambda": 1})
    R = L.sring
    gens = [R.parse(t) for t in ("x4", "x5", "x6", "x7", "x8", "x2 x8 - x3 x8 - x3 x7")]
    loc = coordinate_jacobian_locus(L, gens)
    assert loc.status == "ok" and loc.codim == 2 and loc.components == (("x7", "x8"),)
    assert oracles.jacobian_rank_drops(L, [oracles.sympify(L, str(g).replace("*", " ")) for g in gens],
                                       {sp.Symbol("x7"): 0, sp.Symbol("x8"): 0})


def test_locus_of_example_54_has_two_components_of_codim_two():
    L = get_entry("ex5.4").algebra()
    R = L.sring
    gens = [R.parse(t) for t in ("x5", "x6", "x7", "x1 x7 - x3 x6", "x2 x7 - x4 x5")]
    loc = coordinate_jacobian_locus(L, gens)
    assert loc.codim == 2
    assert sorted(loc.components) == [("x5", "x7"), ("x6", "x7")]
    # independent check: rank drops on {x5 = x7 = 0} with every other coordinate generic
    sym = [oracles.sympify(L, str(g).replace("*", " ")) for g in gens]
    assert oracles.jacobian_rank_drops(L, sym, {sp.Symbol("x5"): 0, sp.Symbol("x7"): 0})
    assert not oracles.jacobian_rank_drops(L, sym, {sp.Symbol("x5"): 0})


def test_locus_all_coordinates_is_empty():
    L = build_family("heisenberg(2)")
    loc = coordinate_jacobian_locus(L, L.sring.gens())
    assert loc.status == "ok" and loc.codim == L.dim and loc.components == ()


def test_locus_unknown_when_no_monomial_minor_remains():
    L = build_family("heisenberg(1)")
    loc = coordinate_jacobian_locus(L, [L.sring.parse("x1 y1 + x1 z")])
    assert loc.status == "unknown" and loc.codim is None


def test_random_polynomials_have_trdeg_at_most_count():
    rng = random.Random(3)
    L = ALGEBRAS["g8.4"]
    R = L.sring
    for _ in range(10):
        gens = [R.parse(f"{rng.randint(1, 3)}x{rng.randint(1, 8)} x{rng.randint(1, 8)}") for _ in range(3)]
        assert trdeg(L, gens) <= 3
