"""Hot integer kernels with a numba path and a pure-numpy fallback.

Set ``LIEINV_NUMBA=0`` to force the numpy path.  Both paths are exact
(integers mod a prime below 2**31, so products fit in int64).
"""
from __future__ import annotations

import os

import numpy as np

PRIME = 2147483647  # 2**31 - 1

try:  # pragma: no cover - depends on the environment
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    flag = os.environ.get("LIEINV_NUMBA", "1").strip().lower()
    return HAVE_NUMBA and flag not in ("0", "false", "no", "off")


# ---------------------------------------------------------------------------
# modular rank
# ---------------------------------------------------------------------------
def _rank_mod_p_numpy(a, p):
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        f = m[r + 1:, c].copy()
        # operands are reduced mod p < 2**31, so products stay below 2**62
        m[r + 1:] = (m[r + 1:] - (f[:, None] * m[r][None, :]) % p) % p
        r += 1
    return r


def _batch_rank_numpy(stack, p):
    return np.array([_rank_mod_p_numpy(s, p) for s in stack], dtype=np.int64)


# ---------------------------------------------------------------------------
# largest commuting subset of basis vectors (max clique on bitmasks)
# ---------------------------------------------------------------------------
def _best_clique_numpy(adj, n, limit):
    total = 1 << n
    stop = total if limit <= 0 or limit > total else limit
    masks = np.arange(stop, dtype=np.int64)
    ok = np.ones(stop, dtype=bool)
    for i in range(n):
        has = ((masks >> i) & 1).astype(bool)
        ok &= ~has | ((masks & ~np.int64(adj[i])) == 0)
    cand = masks[ok]
    sizes = np.zeros(cand.shape, dtype=np.int64)
    for i in range(n):
        sizes += (cand >> i) & 1
    best_size = int(sizes.max())
    top = cand[sizes == best_size]
    # lexicographically smallest index set == largest bit-reversed mask
    rev = np.zeros(top.shape, dtype=np.int64)
    for i in range(n):
        rev |= ((top >> i) & 1) << (n - 1 - i)
    return int(top[int(np.argmax(rev))]), best_size


if HAVE_NUMBA:  # pragma: no branch
    @numba.njit(cache=True)
    def _inv_mod_nb(a, p):
        # a**(p-2) mod p
        result = 1
        base = a % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @numba.njit(cache=True)
    def _popcount_nb(x):
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @numba.njit(cache=True)
    def _rank_mod_p_nb(a, p):
        m = a.copy()
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            piv = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    t = m[r, j]
                    m[r, j] = m[piv, j]
                    m[piv, j] = t
            inv = _inv_mod_nb(m[r, c], p)
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
            for i in range(r + 1, rows):
                f = m[i, c]
                if f != 0:
                    for j in range(c, cols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
            r += 1
            if r == rows:
                break
        return r

    @numba.njit(cache=True)
    def _batch_rank_nb(stack, p):
        out = np.zeros(stack.shape[0], dtype=np.int64)
        for k in range(stack.shape[0]):
            out[k] = _rank_mod_p_nb(stack[k], p)
        return out

    @numba.njit(cache=True)
    def _best_clique_nb(adj, n, limit):
        best = 0
        best_size = 0
        total = 1 << n
        stop = total if limit <= 0 or limit > total else limit
        for mask in range(stop):
            ok = True
            rest = mask
            while rest:
                low = rest & (-rest)
                i = 0
                t = low
                while t > 1:
                    t >>= 1
                    i += 1
                if (mask & ~adj[i]) != 0:
                    ok = False
                    break
                rest ^= low
            if not ok:
                continue
            size = _popcount_nb(mask)
            if size > best_size:
                best = mask
                best_size = size
            elif size == best_size and mask != best:
                diff = mask ^ best
                lowbit = diff & (-diff)
                if mask & lowbit:
                    best = mask
        return best, best_size


# ---------------------------------------------------------------------------
# public dispatchers
# ---------------------------------------------------------------------------
def rank_mod_p(a, p: int = PRIME) -> int:
    a = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if a.size == 0:
        return 0
    if numba_enabled():
        return int(_rank_mod_p_nb(a, p))
    return _rank_mod_p_numpy(a, p)


def batch_rank_mod_p(stack, p: int = PRIME) -> np.ndarray:
    stack = np.ascontiguousarray(np.asarray(stack, dtype=np.int64) % p)
    if stack.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if numba_enabled():
        return _batch_rank_nb(stack, p)
    return _batch_rank_numpy(stack, p)


def best_commuting_subset(adj, n: int, limit: int = 0) -> tuple[int, int]:
    """Largest mask whose members pairwise commute; ``adj[i]`` is the mask of
    basis vectors commuting with vector ``i`` (including ``i``).  Ties go to
    the lexicographically smallest index set.  ``limit`` caps the masks scanned.
    """
    adj = np.ascontiguousarray(np.asarray(adj, dtype=np.int64))
    if n == 0:
        return 0, 0
    if numba_enabled():
        best, size = _best_clique_nb(adj, n, limit)
        return int(best), int(size)
    return _best_clique_numpy(adj, n, limit)
