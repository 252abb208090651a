"""Multivariate polynomial GCD by primitive pseudo-remainder sequences.

Monomial content is stripped first; then the recursion treats the polynomials
as univariate in their highest-index variable, with coefficients in the
remaining variables.  Adequate for the near-monomial Pfaffians met here.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .poly import MultiPoly


def _monomial(ring, exps) -> MultiPoly:
    return MultiPoly(ring, {tuple(exps): Fraction(1)})


def _content(p: MultiPoly, v: int) -> MultiPoly:
    coeffs = sorted(p.coeffs_in(v).values(), key=lambda c: len(c.terms))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g


def _prem(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    db = b.degree_in(v)
    lcb = b.coeffs_in(v)[db]
    r = a
    while r and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lcr = r.coeffs_in(v)[dr]
        shift = [0] * r.ring.nvars
        shift[v] = dr - db
        r = lcb * r - (lcr * b).shift(tuple(shift))
    return r


def _primitive(p: MultiPoly, v: int) -> MultiPoly:
    c = _content(p, v)
    if c.is_constant():
        return p.monic()
    return p.divexact(c).monic()


def _gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    ring = a.ring
    if not a:
        return b
    if not b:
        return a
    if a.is_constant() or b.is_constant():
        return ring.one
    ma, mb = a.monomial_content(), b.monomial_content()
    mg = tuple(min(x, y) for x, y in zip(ma, mb))
    a = a.shift(ma, -1)
    b = b.shift(mb, -1)
    support = a.support_indices() | b.support_indices()
    if not support:
        return _monomial(ring, mg)
    v = max(support)
    ca, cb = _content(a, v), _content(b, v)
    cg = _gcd(ca, cb)
    pa = a.divexact(ca) if not ca.is_constant() else a
    pb = b.divexact(cb) if not cb.is_constant() else b
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    if pb.degree_in(v) <= 0:
        g = ring.one
    else:
        while True:
            r = _prem(pa, pb, v)
            if not r:
                g = pb
                break
            if r.degree_in(v) <= 0:
                g = ring.one
                break
            pa, pb = pb, _primitive(r, v)
        g = _primitive(g, v) if g.degree_in(v) > 0 else ring.one
    return (g * cg).shift(mg)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """GCD normalized to graded-lex leading coefficient 1; ``gcd(0, 0) = 0``."""
    if a.ring is not b.ring:
        from .poly import RingMismatch

        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return _gcd(a, b).monic()


def gcd_list(polys) -> MultiPoly:
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("gcd of no nonzero polynomials")
    # cheapest first keeps the running gcd small
    polys.sort(key=lambda p: (len(p.terms), p.degree()))
    g = reduce(lambda acc, p: acc if acc.is_constant() else _gcd(acc, p), polys[1:], polys[0])
    return g.monic()
