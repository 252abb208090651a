"""Matrices of polynomials: rank over the fraction field, determinants, Pfaffians."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .. import _accel
from .poly import MultiPoly, PolyError, PolyRing


class NotSkewSymmetric(PolyError):
    pass


class PolyMatrix:
    """Rectangular matrix with entries in a single :class:`PolyRing`."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[MultiPoly]]):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise PolyError("ragged matrix")

    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero
        return cls(ring, [[z] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def is_skew(self) -> bool:
        n = self.rows
        if n != self.cols:
            return False
        for i in range(n):
            if self.entries[i][i]:
                return False
            for j in range(i + 1, n):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> "PolyMatrix":
        cols = rows if cols is None else cols
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, list(zip(*self.entries)) if self.entries else [])

    def eval_mod(self, point: list[int], p: int = _accel.PRIME):
        import numpy as np

        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e:
                    out[i, j] = e.eval_mod(point, p)
        return out

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


# ---------------------------------------------------------------------------
# rank
# ---------------------------------------------------------------------------
def evaluated_rank(m: PolyMatrix, rng: random.Random, p: int = _accel.PRIME) -> int:
    """Rank modulo ``p`` at a random point; never exceeds the symbolic rank."""
    point = [rng.randrange(1, p) for _ in range(m.ring.nvars)]
    return _accel.rank_mod_p(m.eval_mod(point, p), p)


def _pivot_cost(e: MultiPoly):
    return (len(e.terms), e.degree())


def _strip_monomial_content(row: dict) -> dict:
    polys = list(row.values())
    lo = list(polys[0].monomial_content())
    for q in polys[1:]:
        if not any(lo):
            break
        for i, k in enumerate(q.monomial_content()):
            if k < lo[i]:
                lo[i] = k
    if any(lo):
        lo = tuple(lo)
        return {c: q.shift(lo, -1) for c, q in row.items()}
    return row


def _eliminate_rank(m: PolyMatrix) -> int:
    """Fraction-free elimination with cheapest-pivot selection.

    Each step replaces ``row_i`` by ``u*row_i - v*pivot_row`` with ``u != 0`` and
    strips monomial content, so no rational functions ever appear.
    """
    rows = []
    for row in m.entries:
        d = {j: e for j, e in enumerate(row) if e}
        if d:
            rows.append(d)
    rank = 0
    while rows:
        best = None
        for ri, row in enumerate(rows):
            for c, e in row.items():
                key = (_pivot_cost(e), ri, c)
                if best is None or key < best:
                    best = key
        _, ri, c = best
        prow = rows.pop(ri)
        pv = prow[c]
        mono = pv.is_monomial()
        new_rows = []
        for row in rows:
            a = row.get(c)
            if a is None:
                new_rows.append(row)
                continue
            if mono:
                (pe, pc), = pv.terms.items()
                g = tuple(min(x, y) for x, y in zip(pe, a.monomial_content()))
                u = MultiPoly(m.ring, {tuple(x - y for x, y in zip(pe, g)): pc})
                v = a.shift(g, -1)
            else:
                u, v = pv, a
            out = {}
            for j in set(row) | set(prow):
                if j == c:
                    continue
                x = row.get(j)
                y = prow.get(j)
                val = (u * x if x is not None else m.ring.zero) - (v * y if y is not None else m.ring.zero)
                if val:
                    out[j] = val
            if out:
                new_rows.append(_strip_monomial_content(out))
        rows = new_rows
        rank += 1
    return rank


def _bareiss(m: PolyMatrix):
    """Bareiss elimination with full pivoting; returns (rank, sign, last pivot)."""
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    prev = m.ring.one
    sign = 1
    k = 0
    while k < min(nr, nc):
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                e = a[i][j]
                if e:
                    key = (_pivot_cost(e), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, nr):
            aik = a[i][k]
            for j in range(k + 1, nc):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.divexact(prev) if num else num
            a[i][k] = m.ring.zero
        prev = akk
        k += 1
    return k, sign, prev


def matrix_rank_ff(m: PolyMatrix, method: str = "auto", seed: int = 0) -> int:
    """Rank over the field of rational functions in all ring variables.

    ``auto`` evaluates at random points mod p first; a full-rank evaluation is
    a certificate (evaluated rank <= symbolic rank <= min(rows, cols)).
    Otherwise, and for ``method='eliminate'``, the exact fraction-free
    elimination decides.  ``method='bareiss'`` runs classical Bareiss.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    if method == "bareiss":
        return _bareiss(m)[0]
    if method == "auto":
        rng = random.Random(seed)
        full = min(m.rows, m.cols)
        for _ in range(2):
            if evaluated_rank(m, rng) == full:
                return full
    elif method != "eliminate":
        raise ValueError(f"unknown rank method {method!r}")
    return _eliminate_rank(m)


def det_bareiss(m: PolyMatrix) -> MultiPoly:
    if m.rows != m.cols:
        raise PolyError("determinant of a non-square matrix")
    if m.rows == 0:
        return m.ring.one
    r, sign, last = _bareiss(m)
    if r < m.rows:
        return m.ring.zero
    return last * sign


# ---------------------------------------------------------------------------
# Pfaffians
# ---------------------------------------------------------------------------
def _check_skew(m: PolyMatrix):
    if not m.is_skew():
        raise NotSkewSymmetric("matrix is not skew-symmetric with zero diagonal")


def _pf(a, idx: tuple, memo: dict, ring) -> MultiPoly:
    if not idx:
        return ring.one
    if len(idx) % 2:
        return ring.zero
    hit = memo.get(idx)
    if hit is not None:
        return hit
    i0 = idx[0]
    rest = idx[1:]
    total = ring.zero
    for k, j in enumerate(rest):
        e = a[i0][j]
        if not e:
            continue
        sub = _pf(a, rest[:k] + rest[k + 1:], memo, ring)
        if sub:
            term = e * sub
            total = total + term if k % 2 == 0 else total - term
    memo[idx] = total
    return total


def pfaffian(m: PolyMatrix) -> MultiPoly:
    """Pfaffian by first-row expansion, memoized on index subsets.

    Odd size gives the zero polynomial; ``Pf([[0, a], [-a, 0]]) = a``.
    """
    _check_skew(m)
    return _pf(m.entries, tuple(range(m.rows)), {}, m.ring)


def principal_pfaffians(m: PolyMatrix, t: int) -> dict[tuple, MultiPoly]:
    """Pfaffians of all principal t x t submatrices, sharing one memo table."""
    _check_skew(m)
    memo: dict = {}
    return {idx: _pf(m.entries, idx, memo, m.ring) for idx in combinations(range(m.rows), t)}
