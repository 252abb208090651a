from itertools import combinations

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lieinv import _accel
from lieinv.abelian import commuting_adjacency
from lieinv.liecore import build_family

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


@pytest.fixture
def numpy_only(monkeypatch):
    monkeypatch.setenv("LIEINV_NUMBA", "0")
    assert not _accel.numba_enabled()


def brute_clique(adj, n):
    """First maximum commuting index set in lexicographic order."""
    for size in range(n, 0, -1):
        for idx in combinations(range(n), size):
            if all(adj[i] >> j & 1 for i in idx for j in idx):
                return sum(1 << i for i in idx), size
    return 0, 0


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 9))
    adj = [1 << i for i in range(n)]
    for i, j in combinations(range(n), 2):
        if draw(st.booleans()):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj, n


@settings(max_examples=60)
@given(graphs())
def test_clique_matches_brute_force(g):
    adj, n = g
    assert _accel.best_commuting_subset(adj, n) == brute_clique(adj, n)


@settings(max_examples=60)
@given(graphs())
def test_clique_fallback_matches_brute_force(g):
    adj, n = g
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("LIEINV_NUMBA", "0")
        assert _accel.best_commuting_subset(adj, n) == brute_clique(adj, n)


@needs_numba
@pytest.mark.parametrize("spec", ["heisenberg(3)", "strict_upper(4)", "L(9)", "sl(3)", "upper(3)"])
def test_clique_kernels_agree_on_families(spec, monkeypatch):
    L = build_family(spec)
    adj = commuting_adjacency(L)
    fast = _accel.best_commuting_subset(adj, L.dim)
    monkeypatch.setenv("LIEINV_NUMBA", "0")
    assert _accel.best_commuting_subset(adj, L.dim) == fast


def test_scan_limit_caps_the_search(numpy_only):
    adj = [0b11, 0b11]
    assert _accel.best_commuting_subset(adj, 2, limit=2) == (1, 1)
    assert _accel.best_commuting_subset(adj, 2) == (3, 2)


matrices = st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=1, max_size=6)


@settings(max_examples=50)
@given(matrices)
def test_rank_matches_sympy(rows):
    assert _accel.rank_mod_p(rows) == sp.Matrix(rows).rank()


@settings(max_examples=50)
@given(matrices)
def test_rank_fallback_matches_sympy(rows):
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("LIEINV_NUMBA", "0")
        assert _accel.rank_mod_p(rows) == sp.Matrix(rows).rank()


@pytest.mark.parametrize("flag", ["1", "0"])
def test_batch_rank(flag, monkeypatch):
    monkeypatch.setenv("LIEINV_NUMBA", flag)
    stack = np.array([[[1, 2], [2, 4]], [[1, 0], [0, 1]], [[0, 0], [0, 0]]])
    assert list(_accel.batch_rank_mod_p(stack)) == [1, 2, 0]
    assert _accel.batch_rank_mod_p(np.zeros((0, 2, 2))).shape == (0,)


def test_empty_inputs():
    assert _accel.rank_mod_p(np.zeros((0, 3))) == 0
    assert _accel.best_commuting_subset([], 0) == (0, 0)


def test_flag_spellings(monkeypatch):
    for off in ("0", "false", "No", "OFF"):
        monkeypatch.setenv("LIEINV_NUMBA", off)
        assert not _accel.numba_enabled()
    monkeypatch.setenv("LIEINV_NUMBA", "1")
    assert _accel.numba_enabled() == _accel.HAVE_NUMBA
