"""Independent reference computations in sympy, used to cross-check derived values."""
from __future__ import annotations

from itertools import combinations

import sympy as sp

from lieinv.liecore import LieAlgebra


def _rat(q) -> sp.Rational:
    return sp.Rational(q.numerator, q.denominator)


def symbols(L: LieAlgebra):
    return sp.symbols(" ".join(L.basis), seq=True)


def structure_matrix(L: LieAlgebra) -> sp.Matrix:
    xs = symbols(L)
    B = sp.zeros(L.dim, L.dim)
    for (i, j), terms in L._num.items():
        e = sum(_rat(c) * xs[k] for k, c in terms)
        B[i, j], B[j, i] = e, -e
    return B


def symbolic_rank(M: sp.Matrix) -> int:
    """Rank over the rational function field of the free symbols."""
    from sympy.polys.matrices import DomainMatrix

    gens = sorted(M.free_symbols, key=str)
    if not gens:
        return M.rank()
    dM = DomainMatrix.from_Matrix(M).convert_to(sp.QQ.frac_field(*gens))
    return dM.rank()


def index(L: LieAlgebra) -> int:
    return L.dim - symbolic_rank(structure_matrix(L))


def bracket(L: LieAlgebra, f, g):
    xs = symbols(L)
    B = structure_matrix(L)
    grad_f = [sp.diff(f, x) for x in xs]
    grad_g = [sp.diff(g, x) for x in xs]
    return sp.expand(sum(grad_f[i] * B[i, j] * grad_g[j] for i in range(L.dim) for j in range(L.dim)))


def sympify(L: LieAlgebra, text: str, defs: dict | None = None):
    """Parse a catalog-style polynomial ("2x3 x5 - x1^2") into sympy."""
    import re

    loc = {nm: s for nm, s in zip(L.basis, symbols(L))}
    loc.update(defs or {})
    text = text.replace("^", "**")
    text = re.sub(r"(\d)\s*([A-Za-z(])", r"\1*\2", text)
    text = re.sub(r"([A-Za-z0-9_)])\s+([A-Za-z(])", r"\1*\2", text)
    return sp.sympify(text, locals=loc)


def is_central(L: LieAlgebra, f) -> bool:
    return all(bracket(L, f, x) == 0 for x in symbols(L))


def jacobian_rank_drops(L: LieAlgebra, gens, point: dict) -> bool:
    """True when the Jacobian of ``gens`` has lower rank at ``point`` than generically."""
    xs = symbols(L)
    J = sp.Matrix([[sp.diff(g, x) for x in xs] for g in gens])
    return symbolic_rank(J.subs(point)) < symbolic_rank(J)


def pfaffian(M: sp.Matrix):
    n = M.shape[0]
    if n % 2:
        return sp.Integer(0)
    if n == 0:
        return sp.Integer(1)
    total = sp.Integer(0)
    for j in range(1, n):
        rest = [k for k in range(n) if k not in (0, j)]
        total += (-1) ** (j - 1) * M[0, j] * pfaffian(M.extract(rest, rest))
    return sp.expand(total)


def abelian_span(L: LieAlgebra, vectors) -> bool:
    for u, v in combinations(vectors, 2):
        if any(L.bracket(u, v)):
            return False
    return True
