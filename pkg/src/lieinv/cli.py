"""Command-line front end: ``lieinv analyze|catalog|poisson|alpha|jacobi``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import catalog
from .abelian import (
    NotFiliform,
    StandardFiliform,
    abelian_subset_search,
    certify_abelian,
    filiform_alpha,
    is_standard_filiform,
    r_property_verdict,
)
from .exactalg.poly import PolyError, as_rational, format_rational
from .invariants import (
    HintViolated,
    SamplingExhausted,
    alpha_bounds,
    frobenius_semiradical,
    fundamental_semi_invariant,
    index_and_magic,
    is_nilpotent,
    is_solvable,
    is_unimodular,
)
from .liecore import (
    LieAlgebra,
    LieError,
    Subspace,
    build_family,
    center,
    central_series,
    centralizer,
    is_abelian_subspace,
    jacobi_check,
)
from .poisson import PolySubalgebraCandidate, central_defects, certify_candidate, poisson_bracket

SECTIONS = ("jacobi", "invariants", "frobenius", "alpha", "poisson", "milovanov")
NEEDS_NUMBERS = frozenset(SECTIONS) - {"jacobi"}
EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; exit code 2."""


class MissingParam(InputError):
    pass


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------
def load_source(text: str) -> LieAlgebra:
    kind, sep, rest = text.partition(":")
    if not sep:
        kind, rest = "file", text
    if kind == "catalog":
        return catalog.get_entry(rest).algebra()
    if kind == "family":
        return build_family(rest)
    if kind == "file":
        path = Path(rest)
        if not path.is_file():
            raise InputError(f"no such file: {rest}")
        try:
            return LieAlgebra.load(path)
        except json.JSONDecodeError as exc:
            raise InputError(f"{rest}: not valid JSON ({exc})") from None
    raise InputError(f"unknown source kind {kind!r}; use catalog:KEY, file:PATH or family:SPEC")


def parse_params(items: Sequence[str] | None) -> dict[str, str]:
    out: dict[str, str] = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--param expects NAME=p/q, got {item!r}")
        try:
            out[name.strip()] = format_rational(as_rational(value.strip()))
        except (ValueError, ZeroDivisionError, PolyError):
            raise InputError(f"--param {name}: {value!r} is not a rational number") from None
    return out


def specialize(L: LieAlgebra, params: dict[str, str], required: bool) -> LieAlgebra:
    unknown = sorted(set(params) - set(L.params))
    if unknown:
        raise InputError(f"{L.name} has no parameter {', '.join(unknown)}; declared: {', '.join(L.params) or 'none'}")
    missing = [p for p in L.params if p not in params]
    if missing and required:
        raise MissingParam(f"{L.name} needs values for {', '.join(missing)} (declared parameters: "
                           f"{', '.join(L.params)}); pass --param NAME=p/q")
    return L.specialize(params) if params else L


def read_gens(items: Sequence[str] | None) -> list[str]:
    """Generator strings; ``@path`` reads one polynomial per non-empty line."""
    gens: list[str] = []
    for item in items or ():
        if item.startswith("@"):
            path = Path(item[1:])
            if not path.is_file():
                raise InputError(f"no such file: {item[1:]}")
            gens.extend(ln.strip() for ln in path.read_text().splitlines() if ln.strip() and not ln.startswith("#"))
        else:
            gens.append(item)
    return gens


def parse_polys(L: LieAlgebra, texts: Sequence[str]):
    ring = L.sring
    return [ring.parse(t) for t in texts]


# ---------------------------------------------------------------------------
# sections
# ---------------------------------------------------------------------------
def _span(S: Subspace, L: LieAlgebra) -> list[str]:
    return S.format(L.basis)


def section_jacobi(L: LieAlgebra, args) -> tuple[dict, bool]:
    res = jacobi_check(L)
    out = {"holds": res.holds, "residuals": res.residual_strings()}
    if res.witnesses and L.specialized:
        a, b, c, k, v = res.witnesses[0]
        out["witness"] = {"triple": [a, b, c], "component": L.basis[k - 1], "value": str(v)}
    if not res.holds:
        out["error"] = "JacobiViolation"
    return out, res.holds


def section_invariants(L: LieAlgebra, args) -> tuple[dict, bool]:
    idx = index_and_magic(L, seed=args.seed)
    semi = fundamental_semi_invariant(L, seed=args.seed)
    Z = center(L)
    return {"i": idx.i, "c": idx.c, "p": str(semi.p), "singular": semi.singular, "frobenius": idx.i == 0,
            "unimodular": is_unimodular(L), "center": _span(Z, L),
            "square_integrable": Z.dim == idx.i}, True


def section_frobenius(L: LieAlgebra, args) -> tuple[dict, bool]:
    fr = frobenius_semiradical(L, seed=args.seed, samples=args.samples)
    return {"F": _span(fr.F, L), "dim": fr.F.dim, "quasi_quadratic": fr.quasi_quadratic,
            "samples": fr.samples, "regular_samples": fr.regular_samples, "probabilistic": True}, True


def _best_certificate(L: LieAlgebra):
    cs = central_series(L)
    if cs.filiform:
        if is_standard_filiform(L, cs):
            cert = certify_abelian(L, centralizer(L, cs.lower[1]))
            if cert.ok:
                return cert, "codimension-one abelian ideal"
        try:
            fa = filiform_alpha(L)
            return fa.certificate, f"C^{fa.m}"
        except (NotFiliform, StandardFiliform):
            pass
    found = abelian_subset_search(L)
    return found.certificate, found.source


def section_alpha(L: LieAlgebra, args) -> tuple[dict, bool]:
    hints = []
    if is_nilpotent(L):
        hints.append("nilpotent")
    if is_solvable(L):
        hints.append("solvable")
    lower, sources = 0, []
    for hint in hints + ["metabelian", "none"]:
        try:
            b = alpha_bounds(L, hint, seed=args.seed)
        except HintViolated:
            continue
        for s in b.sources:
            if list(s) not in sources:
                sources.append(list(s))
        lower = max(lower, b.lower)
        upper = b.upper
    cert, origin = _best_certificate(L)
    upper_sources = [["c", upper]]
    fr = frobenius_semiradical(L, seed=args.seed, samples=args.samples)
    if not is_abelian_subspace(L, fr.F):
        # a CP would contain F(L); the sampled span lies inside F(L)
        upper -= 1
        upper_sources.append(["F(L) not abelian", upper])
    lower = max(lower, cert.dim)
    verdict = r_property_verdict(L, cert, upper)
    out = {"lower": lower, "upper": upper, "lower_sources": sources, "upper_sources": upper_sources,
           "certificate": {"basis": _span(cert.subspace, L), "dim": cert.dim, "source": origin,
                           "verified": cert.ok},
           "exact": lower == upper, "verdict": verdict.status}
    if lower == upper:
        out["alpha"] = lower
    return out, cert.ok


def section_poisson(L: LieAlgebra, args) -> tuple[dict, bool]:
    gens = read_gens(args.gens)
    if not gens:
        raise InputError("the poisson section needs --gens")
    polys = parse_polys(L, gens)
    rows, ok = [], True
    for text, g in zip(gens, polys):
        bad = central_defects(L, g)
        ok &= not bad
        rows.append({"gen": text, "central": not bad,
                     "defects": [{"with": name, "bracket": str(v)} for name, v in bad]})
    return {"generators": rows}, ok


def section_milovanov(L: LieAlgebra, args) -> tuple[dict, bool]:
    gens = read_gens(args.gens)
    if not gens:
        raise InputError("the milovanov section needs --gens")
    res = certify_candidate(L, PolySubalgebraCandidate(tuple(parse_polys(L, gens))), seed=args.seed)
    d = res.to_dict()
    d["generators"] = gens
    return d, res.milovanov_ok


_SECTION_FN = {"jacobi": section_jacobi, "invariants": section_invariants, "frobenius": section_frobenius,
               "alpha": section_alpha, "poisson": section_poisson, "milovanov": section_milovanov}


def analyze_report(source: str, params: dict[str, str], sections: Sequence[str], args) -> tuple[dict, bool]:
    """Run the requested sections, Jacobi first; a failing Jacobi check stops the rest."""
    unknown = [s for s in sections if s not in SECTIONS]
    if unknown:
        raise InputError(f"unknown section {', '.join(unknown)}; choose from {', '.join(SECTIONS)}")
    order = [s for s in SECTIONS if s in sections]
    L0 = load_source(source)
    L = specialize(L0, params, required=bool(NEEDS_NUMBERS & set(order)))
    report: dict = {"source": source, "algebra": L0.name, "dim": L.dim, "params": dict(sorted(params.items())),
                    "sections": {}}
    ok = True
    if "jacobi" not in order:
        order = ["jacobi"] + order
    for name in order:
        if name != "jacobi" and "jacobi" in report["sections"] and not report["sections"]["jacobi"]["holds"]:
            report["sections"][name] = {"skipped": "Jacobi identity fails"}
            continue
        data, good = _SECTION_FN[name](L, args)
        report["sections"][name] = data
        ok &= good
    report["ok"] = ok
    return report, ok


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------
def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text_value(v) -> str:
    if isinstance(v, list) and v and all(isinstance(x, list) and len(x) == 2 and isinstance(x[0], str) for x in v):
        return ", ".join(f"{a}={b}" for a, b in v)
    if isinstance(v, list):
        if all(isinstance(x, str) for x in v):
            return "<" + ", ".join(v) + ">"
        if all(isinstance(x, (int, bool)) for x in v):
            return "(" + ", ".join(map(str, v)) + ")"
        return "; ".join(_text_value(x) for x in v)
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text_value(x)}" for k, x in sorted(v.items()))
    return str(v)


def render_report(report: dict) -> str:
    lines = [f"{report['algebra']} (dim {report['dim']})"
             + (f" at {_text_value(report['params'])}" if report["params"] else "")]
    for name, data in report["sections"].items():
        lines.append(f"[{name}]")
        for k, v in sorted(data.items()):
            lines.append(f"  {k}: {_text_value(v)}")
    lines.append("ok" if report["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def render_entry_report(r: catalog.EntryReport, verbose: bool = False) -> str:
    lines = [f"{r.key}: {'ok' if r.ok else 'MISMATCH'}"]
    for s in r.samples:
        at = _text_value(s.params) if s.params else "-"
        for c in s.checks:
            if c.status == catalog.PASS and not verbose:
                continue
            line = f"  [{at}] {c.field}: {c.status}"
            if c.status == catalog.FAIL:
                line += f" expected {_text_value(c.expected)} got {_text_value(c.observed)}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def cmd_analyze(args) -> int:
    sections = [s.strip() for s in args.sections.split(",") if s.strip()]
    report, ok = analyze_report(args.source, parse_params(args.param), sections, args)
    sys.stdout.write(dump_json(report) if args.json else render_report(report))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_alpha(args) -> int:
    args.sections = "alpha"
    return cmd_analyze(args)


def cmd_jacobi(args) -> int:
    args.sections = "jacobi"
    return cmd_analyze(args)


def cmd_catalog_list(args) -> int:
    entries = catalog.list_entries(args.filter, _entries(args))
    if args.json:
        sys.stdout.write(dump_json([{"key": e.key, "aliases": list(e.aliases), "item": e.item, "dim": e.dim,
                                     "family": e.family, "tags": list(e.tags)} for e in entries]))
    else:
        for e in entries:
            alias = f" ({', '.join(e.aliases)})" if e.aliases else ""
            sys.stdout.write(f"{e.key}{alias}  dim={e.dim}  {e.family}\n")
    return EXIT_OK


def _entries(args):
    return catalog.load_entries(args.expectations) if getattr(args, "expectations", None) else None


def cmd_catalog_verify(args) -> int:
    pool = _entries(args)
    if args.key:
        keys = [catalog.get_entry(args.key, pool).key]
    else:
        keys = [e.key for e in catalog.list_entries(args.filter, pool)]
    reports = catalog.verify_many(keys, seed=args.seed, jobs=args.jobs, path=args.expectations)
    ok = all(r.ok for r in reports)
    if args.json:
        sys.stdout.write(dump_json({"ok": ok, "seed": args.seed, "entries": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            sys.stdout.write(render_entry_report(r, args.verbose))
        bad = sum(not r.ok for r in reports)
        sys.stdout.write(f"{len(reports) - bad}/{len(reports)} entries verified\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def _numeric_algebra(args) -> LieAlgebra:
    return specialize(load_source(args.source), parse_params(args.param), required=True)


def cmd_poisson_bracket(args) -> int:
    L = _numeric_algebra(args)
    f, g = parse_polys(L, [args.f, args.g])
    out = {"f": args.f, "g": args.g, "bracket": str(poisson_bracket(L, f, g))}
    sys.stdout.write(dump_json(out) if args.json else out["bracket"] + "\n")
    return EXIT_OK


def cmd_poisson_central(args) -> int:
    L = _numeric_algebra(args)
    args.gens = args.f
    data, ok = section_poisson(L, args)
    if args.json:
        sys.stdout.write(dump_json(data))
    else:
        for row in data["generators"]:
            tail = "" if row["central"] else "  " + "; ".join(
                f"{{f, {d['with']}}} = {d['bracket']}" for d in row["defects"])
            sys.stdout.write(f"{row['gen']}: {'central' if row['central'] else 'not central'}{tail}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_poisson_certify(args) -> int:
    L = _numeric_algebra(args)
    args.gens = args.gens_pos
    data, ok = section_milovanov(L, args)
    if args.json:
        sys.stdout.write(dump_json(data))
    else:
        for k in ("pairwise_commute", "trdeg", "c", "complete", "max_degree", "milovanov_ok"):
            sys.stdout.write(f"{k}: {data[k]}\n")
        for f in data["failures"]:
            sys.stdout.write(f"  {f}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------
def _common(p: argparse.ArgumentParser, source: bool = True):
    if source:
        p.add_argument("source", help="catalog:KEY, file:PATH or family:SPEC")
        p.add_argument("--param", action="append", metavar="NAME=p/q", help="parameter value (repeatable)")
        p.add_argument("--samples", type=int, default=None, help="functionals per sampling batch")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lieinv", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run analysis sections on one algebra")
    _common(p)
    p.add_argument("--sections", default="jacobi,invariants", help=f"comma list from {','.join(SECTIONS)}")
    p.add_argument("--gens", action="append", help="polynomial or @file for poisson/milovanov")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("alpha", help="bounds and certificate for the maximal abelian dimension")
    _common(p)
    p.set_defaults(func=cmd_alpha, gens=None)

    p = sub.add_parser("jacobi", help="check the Jacobi identity")
    _common(p)
    p.set_defaults(func=cmd_jacobi, gens=None)

    cat = sub.add_parser("catalog", help="list or verify shipped entries").add_subparsers(dest="action", required=True)
    p = cat.add_parser("list")
    p.add_argument("filter", nargs="?", default=None, help="e.g. no-cp, dim=8,coregular, family=filiform")
    p.add_argument("--expectations", default=None, help="alternative expectations file")
    _common(p, source=False)
    p.set_defaults(func=cmd_catalog_list)
    p = cat.add_parser("verify")
    p.add_argument("key", nargs="?", default=None)
    p.add_argument("--filter", default=None)
    p.add_argument("--expectations", default=None, help="alternative expectations file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", "-v", action="store_true", help="also list passing checks")
    _common(p, source=False)
    p.set_defaults(func=cmd_catalog_verify)

    po = sub.add_parser("poisson", help="Poisson bracket tools").add_subparsers(dest="action", required=True)
    p = po.add_parser("bracket")
    _common(p)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_poisson_bracket)
    p = po.add_parser("central")
    _common(p)
    p.add_argument("f", nargs="+", help="polynomials or @file")
    p.set_defaults(func=cmd_poisson_central)
    p = po.add_parser("certify")
    _common(p)
    p.add_argument("gens_pos", nargs="+", metavar="gen", help="polynomials or @file")
    p.set_defaults(func=cmd_poisson_certify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SamplingExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, LieError, PolyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
