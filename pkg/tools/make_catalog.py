"""Generate the catalog data files (algebra JSON plus expectations.json).

Run from the repository root:  python3 tools/make_catalog.py
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from lieinv.catalog import verbatim_value
from lieinv.exactalg.poly import MultiPoly, PolyRing

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "lieinv" / "catalog" / "data"
ALG = DATA / "algebras"

GENERIC = "7/3"


def xs(n):
    return [f"x{i}" for i in range(1, n + 1)]


def span(a, b):
    return [f"x{i}" for i in range(a, b + 1)]


def chain(n, last=None):
    """[x1, xj] = x(j+1) for j = 2..last (default n-1)."""
    last = n - 1 if last is None else last
    return [(1, j, f"x{j + 1}") for j in range(2, last + 1)]


def algebra_json(name, basis, rows, params=()):
    ring = PolyRing(list(basis) + list(params))
    nb = len(basis)
    out = []
    for a, b, rhs in rows:
        i = a if isinstance(a, int) else basis.index(a) + 1
        j = b if isinstance(b, int) else basis.index(b) + 1
        poly = ring.parse(rhs)
        acc = {}
        pring = PolyRing(list(params))
        for exps, c in poly.terms.items():
            ks = [v for v in range(nb) if exps[v]]
            if len(ks) != 1 or exps[ks[0]] != 1:
                raise ValueError(f"{name}: [{a},{b}] = {rhs} is not linear in the basis")
            coeff = MultiPoly(pring, {tuple(exps[nb:]): c})
            acc[ks[0]] = acc.get(ks[0], pring.zero) + coeff
        terms = [{"coeff": str(c), "k": k + 1} for k, c in sorted(acc.items()) if c]
        out.append({"i": i, "j": j, "terms": terms})
    return {"name": name, "dim": nb, "params": list(params), "basis": list(basis), "brackets": out}


ENTRIES: list[dict] = []
FILES: dict[str, dict] = {}


def add(key, *, aliases=(), item=None, tag, family, tags=(), algebra=None, file_alg=None,
        samples=None, derived=(), unchecked=None, discrepancies=(), **expect):
    if file_alg is not None:
        fname = key.replace(":", "_").replace("=", "") + ".json"
        FILES[fname] = file_alg
        alg = {"file": fname}
    else:
        alg = {"family": algebra}
    dim = file_alg["dim"] if file_alg else expect.pop("dim")
    e = {
        "key": key,
        "aliases": list(aliases),
        "item": item,
        "origin": tag,
        "family": family,
        "tags": sorted(tags),
        "dim": dim,
        "algebra": alg,
        "samples": samples or [{"params": {}}],
        "expect": {k: v for k, v in expect.items() if v is not None},
        "derived": list(derived),
        "unchecked": unchecked or {},
        "discrepancies": list(discrepancies),
    }
    for rec in e["discrepancies"]:
        rec["verbatim"] = verbatim_value(_expect_at(e, rec["params"]), rec["field"])
    ENTRIES.append(e)
    return e


def _expect_at(e, params):
    exp = dict(e["expect"])
    for s in e["samples"]:
        if params is not None and s["params"] == params:
            exp.update(s.get("expect") or {})
    return exp


def erratum(field, witness, corrected, note, params=None):
    """A verbatim source value that fails verification, with the failing witness and a checked correction."""
    return {"field": field, "params": params, "witness": witness, "corrected": corrected, "note": note,
            "verbatim": None}


def M(gens, complete=True, degree_le_2=True, commutative=True):
    return {"gens": gens, "complete": complete, "degree_le_2": degree_le_2, "commutative": commutative}


def rel(*terms):
    return {"terms": [[str(c), list(f)] for c, f in terms]}


def lst(n, key, aliases, rows, *, params=(), tags=(), **kw):
    """A member of the filiform list."""
    t = {"list"} | set(tags)
    if kw.get("cp") is False:
        t.add("no-cp")
    t.add("milovanov")
    add(key, aliases=["item%02d" % n] + list(aliases), item=n, tag=f"item {n}", family="filiform", tags=t,
        file_alg=algebra_json(key, xs(kw.pop("dim")), rows, params), **kw)


# ---------------------------------------------------------------------------
# the filiform list, dimensions 3 to 8
# ---------------------------------------------------------------------------
lst(1, "g3", ["L3"], [(1, 2, "x3")], dim=3, i=1, c=2, p="x3", F=["x3"], alpha=2, h=["x2", "x3"], cp=True,
    Y=["x3"], M=[M(["x2", "x3"])], flags={"square_integrable": True})
lst(2, "g4", ["L4"], chain(4), dim=4, i=2, c=3, p="1", F=span(2, 4), alpha=3, h=span(2, 4), cp=True,
    Y=["x4", "x3^2 - 2x2 x4"], M=[M(span(2, 4))])
lst(3, "g5.6", ["R5"], chain(5) + [(2, 3, "x5")], dim=5, i=1, c=3, p="x5^2", F=["x5"], alpha=3,
    h=span(3, 5), cp=True, Y=["x5"], M=[M(span(3, 5))], flags={"square_integrable": True})
lst(4, "g5.5", ["L5"], chain(5), dim=5, tags={"not-coregular"}, i=3, c=4, p="1", F=span(2, 5), alpha=4,
    h=span(2, 5), cp=True,
    defs=[["f1", "2x3 x5 - x4^2"], ["f2", "3x2 x5^2 - 3x3 x4 x5 + x4^3"],
          ["f3", "9x2^2 x5^2 - 18x2 x3 x4 x5 + 6x2 x4^3 + 8x3^3 x5 - 3x3^2 x4^2"]],
    Y=["x5", "f1", "f2", "f3"], QY=["x5", "f1", "f2"],
    relations=[rel((1, ["f1", "f1", "f1"]), (1, ["f2", "f2"]), (-1, ["x5", "x5", "f3"]))],
    M=[M(span(2, 5))])
lst(5, "g6.18", ["Q6"], chain(6, 4) + [(2, 5, "x6"), (3, 4, "-x6")], dim=6, i=2, c=4, p="x6",
    F=["x1", "x3", "x4", "x5", "x6"], alpha=3, h=span(4, 6), cp=False,
    Y=["x6", "x4^2 - 2x3 x5 - 2x1 x6"], M=[M(["x4", "x5", "x6", "x3 x5 + x1 x6"])])
lst(6, "g6.17", [], chain(6) + [(2, 3, "x6")], dim=6, i=2, c=4, p="x6", F=span(4, 6), alpha=4, h=span(3, 6),
    cp=True, Y=["x6", "x5^2 - 2x4 x6"], M=[M(span(3, 6))])
lst(7, "g6.19", ["R6"], chain(6) + [(2, 3, "x5"), (2, 4, "x6")], dim=6, i=2, c=4, p="1", F=span(3, 6),
    alpha=4, h=span(3, 6), cp=True, Y=["x6", "x5^3 - 3x4 x5 x6 + 3x3 x6^2"], M=[M(span(3, 6))])
lst(8, "g6.20", [], chain(6, 4) + [(2, 3, "x5"), (2, 5, "x6"), (3, 4, "-x6")], dim=6, i=2, c=4, p="1",
    F=["x1", "x3", "x4", "x5", "x6"], alpha=3, h=span(4, 6), cp=False,
    Y=["x6", "2x5^3 + 3x4^2 x6 - 6x3 x5 x6 - 6x1 x6^2"], M=[M(["x4", "x5", "x6", "x3 x5 + x1 x6"])])
lst(9, "g6.16", ["L6"], chain(6), dim=6, tags={"not-coregular"}, i=4, c=5, p="1", F=span(2, 6), alpha=5,
    h=span(2, 6), cp=True,
    defs=[["f1", "x5^2 - 2x4 x6"], ["f2", "x5^3 - 3x4 x5 x6 + 3x3 x6^2"], ["f3", "x4^2 + 2x2 x6 - 2x3 x5"],
          ["f4", "2x4^3 + 6x2 x5^2 + 9x3^2 x6 - 12x2 x4 x6 - 6x3 x4 x5"]],
    Y=["x6", "f1", "f2", "f3", "f4"], QY=["x6", "f1", "f2", "f3"],
    relations=[rel((1, ["f1", "f1", "f1"]), (-1, ["f2", "f2"]), (-3, ["x6", "x6", "f1", "f3"]),
                   (1, ["x6", "x6", "x6", "f4"]))],
    M=[M(span(2, 6))])

# n = 7, coregular
lst(10, "g7.1.1i", ["g7.1.1(i_lambda)", "O4-30"],
    chain(7) + [(2, 3, "x5"), (2, 4, "x6"), (2, 5, "lambda x7"), (3, 4, "(1 - lambda) x7")],
    params=("lambda",), dim=7, tags={"coregular"},
    samples=[{"params": {"lambda": "3"}}, {"params": {"lambda": GENERIC}}],
    i=1, c=4, p="x7^3", F=["x7"], alpha=4, h=span(4, 7), cp=True, Y=["x7"], M=[M(span(4, 7))],
    flags={"square_integrable": True})
lst(11, "g7.1.1ii", ["g7.1.1(ii)", "O4-31"], chain(7) + [(2, 5, "x7"), (3, 4, "-x7")], dim=7,
    tags={"coregular"}, i=1, c=4, p="x7^3", F=["x7"], alpha=4, h=span(4, 7), cp=True, Y=["x7"],
    M=[M(span(4, 7))], flags={"square_integrable": True})
lst(12, "g7.0.1", ["O5-83"], chain(7) + [(2, 3, "x6"), (2, 4, "x7"), (2, 5, "x7"), (3, 4, "-x7")], dim=7,
    tags={"coregular"}, i=1, c=4, p="x7^3", F=["x7"], alpha=4, h=span(4, 7), cp=True, Y=["x7"],
    M=[M(span(4, 7))], flags={"square_integrable": True})
lst(13, "g7.1.4", ["O5-106"], chain(7) + [(2, 3, "x6"), (2, 4, "x7")], dim=7, tags={"coregular"}, i=3, c=5,
    p="1", F=span(3, 7), alpha=5, h=span(3, 7), cp=True,
    Y=["x7", "x5^2 - 2x4 x6 + 2x3 x7", "x6^2 - 2x5 x7"], M=[M(span(3, 7))])

# n = 7, not coregular
lst(14, "g7.0.2", ["O5-153"], chain(7) + [(2, 3, "x5 + x7"), (2, 4, "x6"), (2, 5, "x7")], dim=7,
    tags={"not-coregular"}, i=3, c=5, p="1", F=span(3, 7), alpha=5, h=span(3, 7), cp=True,
    defs=[["f", "x6^3 - 3x5 x6 x7 + 3x4 x7^2"],
          ["g", "x6^4 - 4x5 x6^2 x7 + 2x5^2 x7^2 + 4x4 x6 x7^2 - 2x6^2 x7^2 - 4x3 x7^3 + 4x5 x7^3"],
          ["h", "(f^4 - g^3 - 6x7^2 f^2 g) / x7^3"]],
    Y=["x7", "f", "g", "h"], QY=["x7", "f", "g"],
    relations=[rel((1, ["f"] * 4), (-1, ["g"] * 3), (-6, ["x7", "x7", "f", "f", "g"]), (-1, ["x7"] * 3 + ["h"]))],
    M=[M(span(3, 7))])
lst(15, "g7.0.3", ["O5-141"], chain(7) + [(2, 3, "x6 + x7"), (2, 4, "x7")], dim=7, tags={"not-coregular"},
    i=3, c=5, p="1", F=span(3, 7), alpha=5, h=span(3, 7), cp=True,
    defs=[["f", "x6^2 - 2x5 x7"], ["g", "2x6^3 - 3x5^2 x7 + 6x4 x6 x7 - 6x5 x6 x7 - 6x3 x7^2 + 6x4 x7^2"],
          ["h", "(4f^3 - g^2) / x7"]],
    Y=["x7", "f", "g", "h"], QY=["x7", "f", "g"],
    relations=[rel((4, ["f"] * 3), (-1, ["g", "g"]), (-1, ["x7", "h"]))], M=[M(span(3, 7))])
lst(16, "g7.1.6", ["O5-137"], chain(7) + [(2, 3, "x7")], dim=7, tags={"not-coregular"}, i=3, c=5, p="x7",
    F=span(4, 7), alpha=5, h=span(3, 7), cp=True,
    defs=[["f", "x6^2 - 2x5 x7"], ["g", "x6^3 - 3x5 x6 x7 + 3x4 x7^2"], ["h", "(f^3 - g^2) / x7^2"]],
    Y=["x7", "f", "g", "h"], QY=["x7", "f", "g"],
    relations=[rel((1, ["f"] * 3), (-1, ["g", "g"]), (-1, ["x7", "x7", "h"]))], M=[M(span(3, 7))])
lst(17, "g7.1.1i:lambda=1", ["R7", "O5-151"], chain(7) + [(2, 3, "x5"), (2, 4, "x6"), (2, 5, "x7")], dim=7,
    tags={"not-coregular"}, i=3, c=5, p="1", F=span(3, 7), alpha=5, h=span(3, 7), cp=True,
    defs=[["f", "x6^3 - 3x5 x6 x7 + 3x4 x7^2"],
          ["g", "x6^4 - 4x5 x6^2 x7 + 2x5^2 x7^2 + 4x4 x6 x7^2 - 4x3 x7^3"], ["h", "(f^4 - g^3) / x7^3"]],
    Y=["x7", "f", "g", "h"], QY=["x7", "f", "g"],
    relations=[rel((1, ["f"] * 4), (-1, ["g"] * 3), (-1, ["x7"] * 3 + ["h"]))], M=[M(span(3, 7))])
lst(18, "g7.1.1i:lambda=0", ["O5-155"], chain(7) + [(2, 3, "x5"), (2, 4, "x6"), (3, 4, "x7")], dim=7,
    tags={"not-coregular"}, i=3, c=5, p="1", F=span(2, 7), alpha=4, h=span(4, 7), cp=False,
    defs=[["f", "x6^2 - 2x5 x7"],
          ["g", "2x6^5 - 10x5 x6^3 x7 + 15x5^2 x6 x7^2 - 15x4 x5 x7^3 + 15x3 x6 x7^3 - 15x2 x7^4"],
          ["h", "(4f^5 - g^2) / x7^3"]],
    Y=["x7", "f", "g", "h"], QY=["x7", "f", "g"],
    relations=[rel((4, ["f"] * 5), (-1, ["g", "g"]), (-1, ["x7"] * 3 + ["h"]))],
    M=[M(["x4", "x5", "x6", "x7", "x3 x6 - x2 x7"])])
lst(19, "g7.2.3", ["L7", "O5-159"], chain(7), dim=7, tags={"not-coregular"}, i=5, c=6, p="1", F=span(2, 7),
    alpha=6, h=span(2, 7), cp=True,
    defs=[["f1", "x7"], ["f2", "x6^2 - 2x5 x7"], ["f3", "x6^3 - 3x5 x6 x7 + 3x4 x7^2"],
          ["f4", "x5^2 - 2x4 x6 + 2x3 x7"], ["f5", "2x4 x6^2 - x5^2 x6 + x4 x5 x7 - 5x3 x6 x7 + 5x2 x7^2"]],
    QY=["f1", "f2", "f3", "f4", "f5"], M=[M(span(2, 7))])

# n = 8, coregular
G8 = chain(8)
NOCP8 = dict(F=["x1 - x2"] + span(3, 8), alpha=4, h=span(5, 8), cp=False)
lst(20, "g8.1", [], G8 + [(2, 3, "x5 + lambda x6"), (2, 4, "x6 + lambda x7"), (2, 5, "3x7 + lambda x8"),
                          (2, 6, "5x8"), (2, 7, "x8"), (3, 4, "-2x7"), (3, 5, "-2x8"), (3, 6, "-x8"),
                          (4, 5, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": "0"}}, {"params": {"lambda": GENERIC}}],
    i=2, c=5, p="1", **NOCP8,
    defs=[["g", "x3 x7 + 5x4 x7 - x4 x6 + (lambda - 10) x4 x8 + x1 x8 - x2 x8 - 5x3 x8"],
          ["f", "x5^2 x8^2 - 2(lambda - 10) x5 x7 x8^2 + (lambda + 2) x6^2 x8^2 - 12x6 x7^2 x8 - 4x5 x7^2 x8"
                " + 2x6^2 x7 x8 - 2x5 x6 x8^2 + 3x7^4 + 2x8^2 g"]],
    Y=["x8", "f"], M=[M(["x5", "x6", "x7", "x8", "g"])])
lst(21, "g8.2", [], G8 + [(2, 3, "x6 + lambda x7"), (2, 4, "x7 + lambda x8"), (2, 5, "x8"), (2, 7, "x8"),
                          (3, 6, "-x8"), (4, 5, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": GENERIC}},
             {"params": {"lambda": "0"}, "expect": {
                 "p": "x8^2",
                 "defs": [["g", "(x1 - x2) x8 - x4 x6 + x3 x7 + x4 x8"], ["f", "x5^2 + x6^2 - 2x5 x7 + 2g"]]}}],
    i=2, c=5, p="x8", **NOCP8,
    defs=[["g", "(x1 - x2) x8 - x4 x6 + x3 x7 + x4 x8"],
          ["f", "3x5^2 x8 + 3x6^2 x8 - 2lambda x7^3 - 6x5 x7 x8 + 6lambda x6 x7 x8 - 6lambda x5 x8^2 + 6x8 g"]],
    Y=["x8", "f"], M=[M(["x5", "x6", "x7", "x8", "g"])])
lst(22, "g8.3", [], G8 + [(2, 3, "x7"), (2, 4, "x8"), (2, 7, "x8"), (3, 6, "-x8"), (4, 5, "x8")], dim=8,
    tags={"coregular"}, i=2, c=5, p="x8", **NOCP8,
    defs=[["g", "(x1 - x2) x8 - x4 x6 + x3 x7"], ["f", "3x5^2 x8 - 2x7^3 - 6x5 x8^2 + 6x6 x7 x8 + 6x8 g"]],
    Y=["x8", "f"], M=[M(["x5", "x6", "x7", "x8", "g"])])
lst(23, "g8.4", ["Q8"], G8 + [(2, 7, "x8"), (3, 6, "-x8"), (4, 5, "x8")], dim=8, tags={"coregular"}, i=2, c=5,
    p="x8^2", **NOCP8,
    defs=[["g", "(x1 - x2) x8 + x3 x7 - x4 x6"], ["f", "x5^2 + 2g"]],
    Y=["x8", "f"], M=[M(["x5", "x6", "x7", "x8", "g"])])
CP8 = dict(alpha=5, h=span(4, 8), cp=True, M=[M(span(4, 8))])
lst(24, "g8.5", [], G8 + [(2, 3, "lambda x5"), (2, 4, "lambda x6"), (2, 5, "(lambda - 1) x7 - x8"),
                          (2, 6, "(lambda - 2) x8"), (3, 4, "x7 + x8"), (3, 5, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": GENERIC}},
             {"params": {"lambda": "1"}, "expect": {
                 "p": "x8",
                 "defs": [["f", "6x6 x8^2 - 6x5 x8^2 + 6x4 x8^2 + 3x6^2 x8 + 6x6 x7 x8 - 3x7^2 x8 - 2x7^3"]]}}],
    i=2, c=5, p="1", F=span(4, 8), **CP8,
    defs=[["f", "12x6 x8^2 + 3(lambda - 1) x7^4 - 12(lambda - 2) x4 x8^3 + 6lambda x6^2 x8^2"
                " + 12(lambda - 2) x5 x8^3 + 4(lambda - 2) x7^3 x8 - 12(lambda - 1) x6 x7^2 x8"
                " - 12(lambda - 2) x6 x7 x8^2 + 12(lambda - 2) x5 x7 x8^2 - 6x7^2 x8^2"]],
    discrepancies=[
        erratum("Y[1]", "{f, x1} = 12*x7*x8^3 - 12*x7*x8^2; {f, x2} = 4*x8^4 - 4*x8^3",
                "12x6 x8^3 + 3(lambda - 1) x7^4 - 12(lambda - 2) x4 x8^3 + 6lambda x6^2 x8^2"
                " + 12(lambda - 2) x5 x8^3 + 4(lambda - 2) x7^3 x8 - 12(lambda - 1) x6 x7^2 x8"
                " - 12(lambda - 2) x6 x7 x8^2 + 12(lambda - 2) x5 x7 x8^2 - 6x7^2 x8^2",
                "degree-3 term 12x6x8^2 in a degree-4 invariant; x8^3 restores centrality",
                {"lambda": GENERIC}),
        erratum("Y[1]", "{f, x1} = -6*x5*x8^2 - 6*x6*x7*x8; {f, x2} = 6*x7*x8^2; {f, x3} = -6*x7*x8^2",
                "6x6 x8^2 - 6x5 x8^2 + 6x4 x8^2 + 3x6^2 x8 + 6x6 x7 x8 - 3x7^2 x8 - 2x7^3 - 6x5 x7 x8",
                "term -6x5x7x8 missing from the lambda = 1 invariant", {"lambda": "1"})],
    Y=["x8", "f"])
lst(25, "g8.5:lambda=2", [], G8 + [(2, 3, "2x5"), (2, 4, "2x6"), (2, 5, "x7 - x8"), (3, 4, "x7 + x8"),
                                   (3, 5, "x8")], dim=8, tags={"coregular"},
    i=2, c=5, p="x7^2 - 2x6 x8 - x8^2", F=span(6, 8), **CP8, Y=["x8", "2x6 x8 - x7^2"])
lst(26, "g8.6", [], G8 + [(2, 3, "lambda x5"), (2, 4, "lambda x6"), (2, 5, "(lambda - 1) x7"),
                          (2, 6, "(lambda - 2) x8"), (3, 4, "x7"), (3, 5, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": GENERIC}},
             {"params": {"lambda": "1"}, "expect": {"p": "x8^2", "defs": [["f", "2x4 x8 + x6^2 - 2x5 x7"]]}}],
    i=2, c=5, p="1", F=span(4, 8), **CP8,
    defs=[["f", "4(lambda - 2) x4 x8^3 - 2lambda x6^2 x8^2 - 4(lambda - 2) x5 x7 x8^2"
                " + 4(lambda - 1) x6 x7^2 x8 - (lambda - 1) x7^4"]],
    Y=["x8", "f"])
lst(27, "g8.6:lambda=2", [], G8 + [(2, 3, "2x5"), (2, 4, "2x6"), (2, 5, "x7"), (3, 4, "x7"), (3, 5, "x8")],
    dim=8, tags={"coregular"}, i=2, c=5, p="2x6 x8 - x7^2", F=span(6, 8), **CP8, Y=["x8", "2x6 x8 - x7^2"])
lst(28, "g8.7", [], G8 + [(2, 3, "x6"), (2, 4, "x7"), (2, 5, "-x7 + x8"), (2, 6, "-2x8"), (3, 4, "x7"),
                          (3, 5, "x8")], dim=8, tags={"coregular"},
    i=2, c=5, p="1", F=span(4, 8), **CP8, Y=["x8", "8x4 x8^3 - 8x5 x7 x8^2 + 4x6 x7^2 x8 - x7^4"])
lst(29, "g8.8", [], G8 + [(2, 3, "x5 + lambda x7"), (2, 4, "x6 + lambda x8"), (2, 5, "x7 - x8"), (2, 6, "x8"),
                          (3, 4, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": "0"}}, {"params": {"lambda": GENERIC}}],
    i=2, c=5, p="x8", F=span(5, 8), **CP8, Y=["x8", "6(x5 + x6) x8^2 - 6x6 x7 x8 - 3x7^2 x8 + 2x7^3"])
lst(30, "g8.9", [], G8 + [(2, 3, "lambda x6 + x7"), (2, 4, "lambda x7 + x8"), (2, 5, "(lambda - 1) x8"),
                          (3, 4, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": "0"}}, {"params": {"lambda": "1"}, "route": "g8.9:lambda=1"},
             {"params": {"lambda": "5"}}, {"params": {"lambda": GENERIC}}],
    i=2, c=5, p="x8^2", F=span(6, 8), **CP8, Y=["x8", "2x6 x8 - x7^2"],
    stabilizer={"xi": "x8", "basis": ["x6", "x7"]},
    discrepancies=[erratum("stabilizer", '["x6", "x8"]', ["x6", "x8"],
                           "x7 is not in the stabilizer since x8*([x7, x1]) = -1; x8 is central", params=p)
                   for p in ({"lambda": "0"}, {"lambda": "5"}, {"lambda": GENERIC})])
lst(31, "g8.10", [], G8 + [(2, 3, "lambda x6"), (2, 4, "lambda x7"), (2, 5, "(lambda - 1) x8"), (3, 4, "x8")],
    params=("lambda",), dim=8, tags={"coregular"},
    samples=[{"params": {"lambda": "0"}}, {"params": {"lambda": "1"}, "route": "g8.10:lambda=1"},
             {"params": {"lambda": GENERIC}}],
    i=2, c=5, p="x8^2", F=span(6, 8), **CP8, Y=["x8", "2x6 x8 - x7^2"])

# n = 8, not coregular
NOCP8B = dict(i=4, c=6, p="1", F=span(2, 8), alpha=5, h=span(4, 8), cp=False)
lst(32, "g8.9:lambda=1", [], G8 + [(2, 3, "x6 + x7"), (2, 4, "x7 + x8"), (3, 4, "x8")], dim=8,
    tags={"not-coregular"}, **NOCP8B,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "3x5 x8^2 - 3x6 x7 x8 + x7^3"],
          ["f3", "10(x2 - x3) x8^2 - 10x3 x7 x8 + 10x4 x6 x8 + 10x4 x7 x8 - 5x5^2 x8 - 2x5 x6 x8"
                 " + 2x6^2 x7 - 4x5 x7^2"],
          ["g", "10x4 x6 x8 + 10x4 x7 x8 - 5x5^2 x8 - 2x5 x6 x8 + 2x6^2 x7 - 4x5 x7^2"]],
    QY=["x8", "f1", "f2", "f3"],
    relations=[rel((1, ["f3"]), (-10, ["x2 x8 - x3 x8 - x3 x7", "x8"]), (-1, ["g"]))],
    M=[M(span(4, 8) + ["x2 x8 - x3 x8 - x3 x7"]), M(span(4, 8) + ["f3"], degree_le_2=False)],
    stabilizer={"xi": "x8", "basis": ["x2 - x3", "x5", "x6", "x8"]},
    locus={"M": 0, "components": [["x7", "x8"]], "codim": 2})
lst(33, "g8.10:lambda=1", [], G8 + [(2, 3, "x6"), (2, 4, "x7"), (3, 4, "x8")], dim=8, tags={"not-coregular"},
    **NOCP8B,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "2x2 x8 - 2x3 x7 + 2x4 x6 - x5^2"],
          ["f3", "3x5 x8^2 - 3x6 x7 x8 + x7^3"]],
    QY=["x8", "f1", "f2", "f3"], M=[M(span(4, 8) + ["x2 x8 - x3 x7"])])
CP8B = dict(i=4, c=6, p="1", F=span(3, 8), alpha=6, h=span(3, 8), cp=True, M=[M(span(3, 8))])
lst(34, "g8.11", [], G8 + [(2, 3, "lambda x5 + x7 + x8"), (2, 4, "lambda x6 + x8"), (2, 5, "lambda x7"),
                           (2, 6, "lambda x8")],
    params=("lambda",), dim=8, tags={"not-coregular"},
    samples=[{"params": {"lambda": GENERIC}},
             {"params": {"lambda": "0"}, "expect": {
                 "defs": [["f", "2x6 x8 - x7^2"], ["g", "3x5 x8^2 - 3x6 x7 x8 + x7^3"],
                          ["h", "10(x3 - x4) x8^2 - 2x5 x6 x8 - 10x4 x7 x8 - 5x6^2 x8 + 10x5 x7 x8"
                                " + 4x5 x7^2 - 2x6^2 x7"]],
                 "QY": ["x8", "f", "g", "h"]}}],
    discrepancies=[erratum("QY[3]", "{h, x1} = 4*x5*x7*x8 + 4*x6^2*x8",
                           "10(x3 - x4) x8^2 + 2x5 x6 x8 - 10x4 x7 x8 - 5x6^2 x8 + 10x5 x7 x8 + 4x5 x7^2 - 2x6^2 x7",
                           "sign of the 2x5x6x8 term in the lambda = 0 invariant h", {"lambda": "0"})],
    **CP8B,
    defs=[["f1", "3x5 x8^2 - 3x6 x7 x8 + x7^3"],
          ["f2", "4(x6 - lambda x4) x8^3 + 2lambda (x6^2 + 2x5 x7) x8^2 - 2x7^2 x8^2 - 4lambda x6 x7^2 x8"
                 " + lambda x7^4"],
          ["f3", "10(x6 - lambda x3) x8^4 - 5x7^2 x8^3 + 2lambda (5x4 x7 x8^3 + 5x5 x6 x8^3 - 5x5 x7^2 x8^2"
                 " - 5x6^2 x7 x8^2 + 5x6 x7^3 x8 - x7^5)"]],
    QY=["x8", "f1", "f2", "f3"])
F837 = [["f1", "3x5 x8^2 - 3x6 x7 x8 + x7^3"], ["f2", "4x4 x8^3 - 4x5 x7 x8^2 - 2x6^2 x8^2 + 4x6 x7^2 x8 - x7^4"]]
lst(35, "g8.12", [], G8 + [(2, 3, "x5 + x7"), (2, 4, "x6 + x8"), (2, 5, "x7"), (2, 6, "x8")], dim=8,
    tags={"not-coregular"}, **CP8B,
    defs=[["f1", "3x5 x8^2 - 3x6 x7 x8 + x7^3"],
          ["f2", "4(x4 - x6) x8^3 - 2x6^2 x8^2 + 2x7^2 x8^2 + 4x6 x7^2 x8 - 4x5 x7 x8^2 - x7^4"],
          ["f3", "5x3 x8^4 - 5x5 x6 x8^3 - 5x4 x7 x8^3 + 5x5 x7^2 x8^2 + 5x6^2 x7 x8^2 - 5x6 x7^3 x8 + x7^5"]],
    QY=["x8", "f1", "f2", "f3"])
lst(36, "g8.13", [], G8 + [(2, 3, "x5 + x8"), (2, 4, "x6"), (2, 5, "x7"), (2, 6, "x8")], dim=8,
    tags={"not-coregular"}, **CP8B,
    defs=F837 + [["f3", "30(x3 - x6) x8^4 + 32x4^2 x8^3 + 15x7^2 x8^3 - 30x3 x5 x8^3 - 30x4 x7 x8^3"
                        " - 34x4 x5 x7 x8^2 + 30x3 x6 x7 x8^2 + 15x5 x7^2 x8^2 + 30x5^2 x6 x8^2"
                        " - 32x4 x6^2 x8^2 - 5x6 x7^3 x8 + 8x6^4 x8 - 28x5 x6^2 x7 x8 + 34x4 x6 x7^2 x8"
                        " - 10x3 x7^3 x8 + 2x5^2 x7^2 x8 - 2x6^3 x7^2 + 6x5 x6 x7^3 - 2x6^3 x7^2"
                        " - 6x4 x7^4 + x7^5"]],
    QY=["x8", "f1", "f2", "f3"],
    discrepancies=[erratum("QY[3]", "{f3, x1} = 4*x6^3*x7*x8 + 6*x6^2*x7^3; {f3, x2} = 6*x6^2*x7^2*x8",
                           "30(x3 - x6) x8^4 + 32x4^2 x8^3 + 15x7^2 x8^3 - 30x3 x5 x8^3 - 30x4 x7 x8^3"
                           " - 34x4 x5 x7 x8^2 + 30x3 x6 x7 x8^2 + 15x5 x7^2 x8^2 + 30x5^2 x6 x8^2"
                           " - 32x4 x6^2 x8^2 - 5x6 x7^3 x8 + 8x6^4 x8 - 28x5 x6^2 x7 x8 + 34x4 x6 x7^2 x8"
                           " - 10x3 x7^3 x8 + 2x5^2 x7^2 x8 - 2x6^3 x7^2 + 6x5 x6 x7^3 - 6x4 x7^4 + x7^5",
                           "the monomial -2x6^3x7^2 is listed twice; once is central", {})])
lst(37, "g8.14", ["R8"], G8 + [(2, 3, "x5"), (2, 4, "x6"), (2, 5, "x7"), (2, 6, "x8")], dim=8,
    tags={"not-coregular"}, **CP8B,
    defs=F837 + [["f3", "5x3 x8^4 - 5x5 x6 x8^3 - 5x4 x7 x8^3 + 5x6^2 x7 x8^2 + 5x5 x7^2 x8^2"
                        " - 5x6 x7^3 x8 + x7^5"]],
    QY=["x8", "f1", "f2", "f3"])
lst(38, "g8.15", [], G8 + [(2, 3, "x6 + x7"), (2, 4, "x7 + x8"), (2, 5, "x8")], dim=8, tags={"not-coregular"},
    **CP8B,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "6(x4 - x5) x8^2 + 3x6^2 x8 - 6x5 x7 x8 + 6x6 x7 x8 - 2x7^3"],
          ["f3", "10x3 x8^3 - 12x4 x6 x8^2 + 2x5 x6 x8^2 - 10x4 x7 x8^2 + 12x5 x6 x7 x8"
                 " - 2x6^2 x7 x8 - 6x6^3 x8 + 6x4 x7^2 x8 + 4x5 x7^2 x8 + 3x6^2 x7^2 - 6x5 x7^3"]],
    QY=["x8", "f1", "f2", "f3"])
lst(39, "g8.16", [], G8 + [(2, 3, "x6"), (2, 4, "x7"), (2, 5, "x8")], dim=8, tags={"not-coregular"}, **CP8B,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "2x4 x8 + x6^2 - 2x5 x7"],
          ["f3", "5x3 x8^4 - 5x4 x7 x8^3 - 5x5 x6 x8^3 + 5x5 x7^2 x8^2 + 5x6^2 x7 x8^2 - 5x6 x7^3 x8 + x7^5"]],
    QY=["x8", "f1", "f2", "f3"])
lst(40, "g8.17", [], G8 + [(2, 3, "x7"), (2, 4, "x8")], dim=8, tags={"not-coregular"}, **CP8B,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "3x5 x8^2 - 3x6 x7 x8 + x7^3"],
          ["f3", "5x3 x8^2 + x5 x6 x8 - 5x4 x7 x8 - x6^2 x7 + 2x5 x7^2"]],
    QY=["x8", "f1", "f2", "f3"])
lst(41, "g8.18", [], G8 + [(2, 3, "x8")], dim=8, tags={"not-coregular"},
    **{**CP8B, "p": "x8", "F": span(4, 8)},
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "2x4 x8 + x6^2 - 2x5 x7"], ["f3", "3x5 x8^2 - 3x6 x7 x8 + x7^3"]],
    QY=["x8", "f1", "f2", "f3"])
lst(42, "g8.19", ["L8"], G8, dim=8, tags={"not-coregular"}, i=6, c=7, p="1", F=span(2, 8), alpha=7,
    h=span(2, 8), cp=True,
    defs=[["f1", "2x6 x8 - x7^2"], ["f2", "3x5 x8^2 - 3x6 x7 x8 + x7^3"], ["f3", "2x4 x8 + x6^2 - 2x5 x7"],
          ["f4", "5x3 x8^2 + x5 x6 x8 - 5x4 x7 x8 - x6^2 x7 + 2x5 x7^2"],
          ["f5", "2x2 x8 + 2x4 x6 - x5^2 - 2x3 x7"]],
    QY=["x8", "f1", "f2", "f3", "f4", "f5"], M=[M(span(2, 8))])

# ---------------------------------------------------------------------------
# worked examples
# ---------------------------------------------------------------------------
QQ = {"quasi_quadratic": True}
add("D4", aliases=["ex2.2.1"], tag="example 2.2(1)", family="solvable", tags={"example", "milovanov"},
    file_alg=algebra_json("D4", ["t", "x", "y", "z"], [("t", "x", "x"), ("t", "y", "-y"), ("x", "y", "z")]),
    i=2, c=3, alpha=2, h=["y", "z"], cp=False, Y=["z", "t z + x y"], M=[M(["y", "z", "t z + x y"])],
    flags=QQ)
add("g5.4", aliases=["ex2.2.2"], tag="example 2.2(2)", family="nilpotent", tags={"example", "milovanov"},
    file_alg=algebra_json("g5.4", xs(5), [(1, 2, "x3"), (1, 3, "x4"), (2, 3, "x5")]),
    i=3, c=4, p="1", alpha=3, h=span(3, 5), cp=False, Y=["x4", "x5", "x3^2 + 2x1 x5 - 2x2 x4"],
    M=[M(["x3", "x4", "x5", "x1 x5 - x2 x4"])], flags=QQ,
    locus={"M": 0, "components": [["x4", "x5"]], "codim": 2}, derived=["locus"])
add("ex2.2.3", tag="example 2.2(3)", family="solvable", tags={"example", "milovanov"},
    file_alg=algebra_json("ex2.2.3", xs(6), [(1, 2, "-x2"), (1, 3, "2x3"), (1, 4, "-2x4"), (1, 5, "x5"),
                                             (2, 3, "x5"), (2, 5, "x6"), (3, 4, "x6")]),
    i=2, c=4, p="1", alpha=3, h=span(4, 6), cp=False,
    Y=["x6", "x4 x5^2 + x2 x5 x6 - 2x3 x4 x6 - x1 x6^2"],
    M=[M(["x4", "x5", "x6", "(x2 x5 - 2x3 x4 - x1 x6) x6"], degree_le_2=False),
       M(["x4", "x5", "x6", "x2 x5 - 2x3 x4 - x1 x6"])], flags=QQ,
    unchecked={"strongly_complete": "complete but not strongly complete for the first M; no verification route"})
add("ex2.2.4", tag="example 2.2(4)", family="solvable", tags={"example", "milovanov"},
    file_alg=algebra_json("ex2.2.4", xs(7), [(1, 2, "x2"), (1, 3, "-x3"), (1, 5, "-x5"), (1, 6, "x6"),
                                             (2, 4, "x6"), (2, 5, "x7"), (3, 4, "-x5"), (3, 6, "-x7")]),
    i=3, c=5, p="1", alpha=4, h=span(4, 7), cp=False,
    defs=[["f", "x5 x6 - x4 x7"], ["g", "x1 x7 + x2 x5 + x3 x6"]],
    Y=["x7", "f", "g"], M=[M(["x4", "x5", "x6", "x7", "g"])], flags=QQ)
add("L6.3", aliases=["ex2.2.5"], tag="example 2.2(5)", family="nonsolvable", tags={"example"},
    file_alg=algebra_json("L6.3", ["h", "x", "y", "e0", "e1", "e2"],
                          [("h", "x", "2x"), ("h", "y", "-2y"), ("x", "y", "h"), ("h", "e0", "e0"),
                           ("h", "e1", "-e1"), ("x", "e1", "e0"), ("y", "e0", "e1"), ("e0", "e1", "e2")]),
    i=2, c=4, p="1", alpha=3, h=["x", "e0", "e2"], cp=False,
    Y=["e2", "e2 (h^2 + 4x y) + 2(e0 e1 h + e1^2 x - e0^2 y)"],
    M=[M(["x", "e0", "e2", "e2 (h^2 + 4x y) + 2(e0 e1 h + e1^2 x - e0^2 y)"], degree_le_2=False)], flags=QQ)
add("sl2", tag="nonsolvable list", family="nonsolvable", tags={"example"}, algebra="sl(2)", dim=3,
    i=1, c=2, alpha=1, h=["H1"], cp=False, flags=QQ)
add("ex3.6", tag="example 3.6", family="solvable", tags={"example"},
    file_alg=algebra_json("ex3.6", ["x", "y", "z"], [("x", "y", "y"), ("x", "z", "z")]),
    i=1, c=2, F=["y", "z"], alpha=1, h=["x"], Y=[], M=[M(["x"], complete=False)],
    flags={"unimodular": False})
add("ex5.4", tag="example 5.4", family="solvable", tags={"example", "milovanov"},
    file_alg=algebra_json("ex5.4", xs(7), [(1, 3, "-x3"), (1, 6, "x6"), (2, 4, "-x4"), (2, 5, "x5"),
                                           (3, 6, "x7"), (4, 5, "x7")]),
    i=3, c=5, p="1", alpha=3, h=span(5, 7), cp=False,
    defs=[["f", "x1 x7 - x3 x6"], ["g", "x2 x7 - x4 x5"]],
    Y=["x7", "f", "g"], M=[M(["x5", "x6", "x7", "f", "g"])], flags=QQ,
    locus={"M": 0, "components": [["x5", "x6", "x7"]], "codim": 3},
    discrepancies=[erratum("locus", '{"codim": 2, "components": [["x5", "x7"], ["x6", "x7"]]}',
                           {"codim": 2, "components": [["x5", "x7"], ["x6", "x7"]]},
                           "df, dg mod x5, x6, x7 have minors x7^2, x5x7, x6x7, x5x6; the rank drops on"
                           " {x5 = x7 = 0} and {x6 = x7 = 0}", {})])
add("ex6.4", tag="example 6.4", family="nilpotent", tags={"example", "milovanov"},
    file_alg=algebra_json("ex6.4", xs(8), [(1, 3, "x6"), (1, 4, "x5"), (1, 5, "x7"), (2, 3, "x5"), (2, 4, "x6"),
                                           (2, 6, "x7"), (3, 5, "x8"), (4, 6, "x8")]),
    i=4, c=6, alpha=4, h=span(5, 8), cp=False,
    defs=[["f", "x1 x8 - x3 x7 + x5 x6"], ["g", "x5^2 + 2x2 x8 - 2x4 x7 + x6^2"]],
    Y=["x7", "x8", "f", "g"], M=[M(span(5, 8) + ["x1 x8 - x3 x7", "x2 x8 - x4 x7"])], flags=QQ,
    locus={"M": 0, "components": [["x7", "x8"]], "codim": 2}, derived=["locus"])
add("ex6.5", tag="example 6.5", family="nilpotent", tags={"example", "milovanov"},
    file_alg=algebra_json("ex6.5", xs(8), [(1, 2, "x5"), (1, 3, "x6"), (1, 4, "x7"), (1, 5, "-x8"),
                                           (2, 3, "x8"), (2, 4, "x6"), (2, 6, "-x7"), (3, 4, "-x5"),
                                           (3, 5, "-x7"), (4, 6, "-x8")]),
    i=2, c=5, F=["x7", "x8"], alpha=4, h=span(5, 8), cp=False, Y=["x7", "x8"],
    M=[M(span(5, 8), complete=False), M(span(5, 8) + ["x1 x7 + x2 x8 - x3 x8 - x4 x7"])],
    flags={"square_integrable": True},
    unchecked={"cp": "absence of a CP rests on an external argument; F is abelian here"})
add("ex7.3", tag="example 7.3", family="metabelian", tags={"example"},
    file_alg=algebra_json("ex7.3", xs(8), [(1, 2, "x7"), (2, 3, "x8"), (3, 4, "x7"), (4, 5, "x8"),
                                           (5, 6, "x7")]),
    i=2, c=5, alpha=5, h=["x1", "x3", "x5", "x7", "x8"], cp=True, metabelian_t=2)

# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------
for m in range(1, 6):
    hb = [f"y{k}" for k in range(1, m + 1)] + ["z"]
    add(f"H_n:m={m}", tag="heisenberg family", family="heisenberg", tags={"family"}, algebra=f"heisenberg({m})",
        dim=2 * m + 1, i=1, c=m + 1, alpha=m + 1, h=hb, cp=True, F=["z"], Y=["z"])
for m in range(1, 5):
    fd = "t z + " + " + ".join(f"x{k} y{k}" for k in range(1, m + 1))
    A = [f"y{k}" for k in range(1, m + 1)] + ["z"]
    add(f"D_n:m={m}", tag="diamond family", family="diamond", tags={"family", "milovanov"},
        algebra=f"diamond({m})", dim=2 * m + 2, i=2, c=m + 2, alpha=m + 1, h=A, cp=False, Y=["z", fd],
        M=[M(A + [fd])], flags=QQ)
for n in range(2, 8):
    q = n // 2
    P = [f"E{a}_{b}" for a in range(1, q + 1) for b in range(q + 1, n + 1)]
    extra = dict(alpha=q * (n - q), h=P, cp=True) if n <= 6 else {}
    add(f"N_n:n={n}", tag="strictly upper triangular family", family="strict_upper", tags={"family"},
        algebra=f"strict_upper({n})", dim=n * (n - 1) // 2, i=q, c=(n * (n - 1) // 2 + q) // 2, **extra)
for n in range(2, 7):
    q = n // 2
    P = [f"E{a}_{b}" for a in range(1, q + 1) for b in range(q + 1, n + 1)]
    ident = " + ".join(f"E{a}_{a}" for a in range(1, n + 1))
    add(f"T_n:n={n}", tag="upper triangular family", family="upper", tags={"family"}, algebra=f"upper({n})",
        dim=n * (n + 1) // 2, alpha=n * n // 4 + 1, h=[ident] + P)
for n in (6, 8, 10):
    q = n // 2
    f = f"2x1 x{n} + {(-1) ** (q + 1)} x{q + 1}^2" + "".join(
        f" + {2 * (-1) ** k} x{k} x{n - k + 2}" for k in range(3, q + 1))
    add(f"Q_n:n={n}", tag="filiform family Q", family="Q", tags={"family", "milovanov"}, algebra=f"Q({n})",
        dim=n, i=2, c=q + 1, F=["x1"] + span(3, n), alpha=q, h=span(q + 1, n), cp=False,
        Y=[f"x{n}", f], M=[M(span(q + 1, n) + [f])], stabilizer={"xi": f"x{n}", "basis": ["x1", f"x{n}"]})
for n in range(5, 10):
    add(f"R_n:n={n}", tag="filiform family R", family="R", tags={"family", "milovanov"}, algebra=f"R({n})",
        dim=n, i=n - 4, c=n - 2, alpha=n - 2, h=span(3, n), cp=True, M=[M(span(3, n))])
for n in range(3, 10):
    add(f"L_n:n={n}", tag="standard filiform family", family="L", tags={"family", "milovanov"},
        algebra=f"L({n})", dim=n, i=n - 2, c=n - 1, alpha=n - 1, h=span(2, n), cp=True,
        F=span(2, n) if n >= 4 else ["x3"], M=[M(span(2, n))])


# generic filiform families of dimension 9 and 10
def filiform9_samples(count=5, seed=20240917):
    """Random rational points on (J): a49 = 3 a37^2 / (2 a25 + a37)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        vals = {k: Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                for k in ("a25", "a26", "a27", "a28", "a29", "a37", "a38", "a39")}
        den = 2 * vals["a25"] + vals["a37"]
        if den == 0:
            continue
        vals["a49"] = 3 * vals["a37"] ** 2 / den
        out.append({"params": {k: str(v) for k, v in sorted(vals.items())}})
    return out


def index_oracle(sample):
    """Independent rank computation with sympy for the frozen index values."""
    import sympy

    from lieinv.liecore import filiform9

    L = filiform9().specialize({k: Fraction(v) for k, v in sample["params"].items()})
    syms = sympy.symbols(" ".join(L.basis))
    B = sympy.zeros(L.dim, L.dim)
    for (i, j), terms in L._num.items():
        e = sum(sympy.Rational(c.numerator, c.denominator) * syms[k] for k, c in terms)
        B[i, j], B[j, i] = e, -e
    return L.dim - B.rank(simplify=True)


J = "a49 (2a25 + a37) - 3a37^2"
f9 = filiform9_samples()
for s in f9:
    s["expect"] = {"i": index_oracle(s)}
add("filiform9:generic", tag="filiform dimension 9 normal form", family="filiform9", tags={"family"},
    algebra="filiform9", dim=9, samples=[{"params": {}}] + f9, derived=["i"],
    jacobi_residuals=[J])
add("filiform10:generic", tag="filiform dimension 10 normal form", family="filiform10", tags={"family"},
    algebra="filiform10", dim=10,
    jacobi_residuals=["lambda (2a25 - a37 - a49)", J,
                      "lambda (2a27 + a39) - mu (2a25 + a37) - 3a49 (a26 + a38) + 7a37 a38"])


def main():
    ALG.mkdir(parents=True, exist_ok=True)
    for old in ALG.glob("*.json"):
        old.unlink()
    for fname, desc in FILES.items():
        (ALG / fname).write_text(json.dumps(desc, indent=1, sort_keys=True) + "\n")
    keys = [e["key"] for e in ENTRIES]
    assert len(set(keys)) == len(keys), "duplicate catalog keys"
    (DATA / "expectations.json").write_text(json.dumps({"entries": ENTRIES}, indent=1) + "\n")
    print(f"{len(ENTRIES)} entries, {len(FILES)} algebra files")


if __name__ == "__main__":
    main()
