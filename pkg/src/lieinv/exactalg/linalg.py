"""Dense exact linear algebra over Q on lists of Fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple  # tuple of Fraction
_ZERO = Fraction(0)


def to_fraction_rows(m) -> list[list[Fraction]]:
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in m]


def rref(m, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    rows = to_fraction_rows(m)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[col]
        if inv != 1:
            prow = [x * inv for x in prow]
            rows[r] = prow
        nz = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][col]
                if f:
                    row = rows[i]
                    for j, x in nz:
                        row[j] -= f * x
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m, ncols: int | None = None) -> list[Vector]:
    """Row-reduced basis of the right kernel ``{v : m v = 0}``."""
    if ncols is None:
        ncols = len(m[0]) if len(m) else 0
    rows, pivots = rref(m, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for fcol in free:
        v = [_ZERO] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    if not basis:
        return []
    red, _ = rref(basis, ncols)
    return [tuple(r) for r in red]


def det(m) -> Fraction:
    """Determinant by fraction-free elimination on integer-scaled rows."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = to_fraction_rows(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return Fraction(0)
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) / prev
            row_i[k] = _ZERO
        prev = akk
    return sign * a[n - 1][n - 1]


def matvec(m, v) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v) if a and b), _ZERO) for row in m]


def in_span(rows: Sequence[Sequence[Fraction]], pivots: Sequence[int], v) -> bool:
    """Membership test for ``v`` against an RREF basis with given pivots."""
    w = list(v)
    for row, pc in zip(rows, pivots):
        f = w[pc]
        if f:
            for j, x in enumerate(row):
                if x:
                    w[j] -= f * x
    return not any(w)
