"""Command-line front end.

Exit codes: 0 on success (including "relations found"), 2 when a verification
disagrees with the transcribed golden data, 1 on usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence

from . import __version__
from .config import BudgetExceeded, budget, set_budget
from .lattice import AmbientSpace, Lattice, lex_simple_system, maximal_root_system, vscale
from .rootsys import RootSystem, SubRootSystem, TypeLabel, build, closure

SCHEMA_VERSION = 1
FORMATS = ("json", "text", "csv", "latex")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def _rat(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {s!r}") from exc


def _matrix(s: str) -> list[list[Fraction]]:
    return [[_rat(x) for x in row.split(",")] for row in s.split(";") if row.strip()]


def _parent(s: str) -> RootSystem:
    try:
        return build(str(TypeLabel.parse(s)))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"unknown root system {s!r}") from exc


def _wspec(P: RootSystem, sel: str):
    from .weyl import SymmetrySpec

    if sel == "weyl":
        return SymmetrySpec.weyl(P)
    if sel == "aut":
        return SymmetrySpec.aut(P)
    if sel.startswith("outer:"):
        try:
            perms = [tuple(int(x) for x in p.split(",")) for p in sel[6:].split(";") if p]
            return SymmetrySpec(P, perms, "outer")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown W selector {sel!r} (weyl, aut or outer:p0,p1,...;...)")


def _subsystem(P: RootSystem, parent: str, name: str | None = None, roots: str | None = None) -> SubRootSystem:
    from .subsystems import named_subsystem

    if roots is not None:
        try:
            idx = [int(x) for x in roots.split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError(f"bad root index list {roots!r}") from exc
        if any(i < 0 or i >= len(P.roots) for i in idx):
            raise UsageError("root index out of range")
        return SubRootSystem(P, closure(P, idx))
    if name is None:
        raise UsageError("a subsystem selector (--name or --roots) is required")
    try:
        return named_subsystem(name, parent)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from exc


def _names(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


# ---------------------------------------------------------------------------
# output


def _default(o):
    if isinstance(o, Fraction):
        return str(o.numerator) if o.denominator == 1 else f"{o.numerator}/{o.denominator}"
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(type(o).__name__)


def _emit(doc: dict, fmt: str, out, csv_rows=None, csv_cols=None, text=None, latex=None):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, default=_default) + "\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is not available for this command")
        from .reports import to_csv

        out.write(to_csv(csv_rows, csv_cols))
    elif fmt == "latex":
        if latex is None:
            raise UsageError("latex output is only available for report tables")
        out.write(latex)
    else:
        out.write(text if text is not None else json.dumps(doc, indent=2, default=_default) + "\n")


def _doc(_schema: str, /, **body) -> dict:
    return {"schema": f"dimdata/{_schema}", "version": SCHEMA_VERSION, **body}


# ---------------------------------------------------------------------------
# handlers; each returns (document, exit code, extra emitter kwargs)


def cmd_rootsys_build(a):
    P = _parent(a.type)
    return _doc("rootsys", **P.to_json(), rank=P.rank, positive=P.npos, cartan=[list(r) for r in P.cartan]), 0, {}


def cmd_rootsys_maximal(a):
    gram = _matrix(a.gram)
    dim = len(gram)
    basis = _matrix(a.basis) if a.basis else [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    try:
        L = Lattice(AmbientSpace(dim, tuple(tuple(r) for r in gram)), tuple(tuple(b) for b in basis))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    roots = maximal_root_system(L)
    body = {"dim": dim, "count": len(roots), "roots": sorted([str(x) for x in r] for r in roots)}
    if roots:
        # for non-reduced sets the skeleton comes from the roots whose doubles are not roots
        R = RootSystem(L.ambient, roots, lex_simple_system(a for a in roots if vscale(2, a) not in roots))
        body["type"] = R.full().type_string()
    else:
        body["type"] = ""
    return _doc("maximal-lattice", **body), 0, {}


def _class_rows(reps, w):
    from .characters import leading_term
    from .subsystems import class_name

    rows = []
    for phi in reps:
        row = {"name": class_name(phi, w), "type": phi.type_string(), "roots": len(phi.idx)}
        if phi.is_reduced():
            lt = leading_term(phi)
            row.update(fw=lt.fw_string(), e=lt.e)
        rows.append(row)
    return rows


def cmd_subsys_enumerate(a):
    from .subsystems import enumerate_subsystems

    P = _parent(a.parent)
    w = _wspec(P, a.w)
    reps = enumerate_subsystems(P, w, reduced_only=not a.all)
    rows = _class_rows(reps, w)
    text = "".join(f"{r['name']}\t{r.get('fw', '')}\t{_default(r['e']) if 'e' in r else ''}\n" for r in rows)
    return (
        _doc("enumerate", parent=a.parent, w=a.w, count=len(rows), classes=rows),
        0,
        {"csv_rows": rows, "csv_cols": ["name", "type", "roots", "fw", "e"], "text": text},
    )


def cmd_subsys_named(a):
    P = _parent(a.parent)
    phi = _subsystem(P, a.parent, a.name, a.roots)
    return _doc("subsystem", **phi.to_json(), size=len(phi.idx)), 0, {}


def cmd_subsys_conjugate(a):
    from .subsystems import are_conjugate

    P = _parent(a.parent)
    w = _wspec(P, a.w)
    p1, p2 = (_subsystem(P, a.parent, n) for n in (a.a, a.b))
    ans = are_conjugate(p1, p2, w)
    return _doc("conjugate", parent=a.parent, w=a.w, a=a.a, b=a.b, conjugate=ans), 0, {"text": f"{ans}\n"}


def cmd_char_compute(a):
    from .characters import character_F

    P = _parent(a.parent)
    w = _wspec(P, a.w)
    phi = _subsystem(P, a.parent, a.name, a.roots)
    c = character_F(phi, w)
    terms = c.to_json()
    return (
        _doc("character", parent=a.parent, w=a.w, subsystem=phi.type_string(), terms=terms),
        0,
        {"csv_rows": terms, "csv_cols": ["fw", "norm", "coefficient"], "text": c.pretty() + "\n"},
    )


def cmd_char_equal(a):
    from .characters import character_F, characters_equal

    P = _parent(a.parent)
    w = _wspec(P, a.w)
    c1, c2 = (character_F(_subsystem(P, a.parent, n), w) for n in (a.a, a.b))
    eq = characters_equal(c1, c2)
    return _doc("char-equal", parent=a.parent, w=a.w, a=a.a, b=a.b, equal=eq), 0, {"text": f"{eq}\n"}


def cmd_char_relations(a):
    from .characters import character_F, linear_relations
    from .subsystems import class_name

    P = _parent(a.parent)
    w = _wspec(P, a.w)
    if a.all:
        reps = list(_enumerate_for(P, w))
        names = [class_name(p, w) for p in reps]
    elif a.names:
        names = _names(a.names)
        reps = [_subsystem(P, a.parent, n) for n in names]
    else:
        raise UsageError("give --all or --names")
    cs = [character_F(p, w) for p in reps]
    rel = linear_relations(cs)
    rels = [{"vector": list(v), "terms": {names[i]: x for i, x in enumerate(v) if x}} for v in rel]
    text = "".join(" ".join(f"{x:+d}*F[{n}]" for n, x in r["terms"].items()) + " = 0\n" for r in rels) or "no relations\n"
    return _doc("relations", parent=a.parent, w=a.w, names=names, relations=rels), 0, {"text": text}


def _enumerate_for(P, w):
    from .subsystems import enumerate_subsystems

    return enumerate_subsystems(P, w, reduced_only=True)


def cmd_char_leading(a):
    from .characters import leading_term

    P = _parent(a.parent)
    phi = _subsystem(P, a.parent, a.name, a.roots)
    lt = leading_term(phi)
    body = {
        "parent": a.parent,
        "subsystem": phi.type_string(),
        "two_delta_prime": [str(x) for x in lt.two_delta_prime],
        "fw": list(lt.fw_coords),
        "fw_string": lt.fw_string(),
        "e": lt.e,
    }
    return _doc("leading", **body), 0, {"text": f"{lt.fw_string()}\t{_default(lt.e)}\n"}


def cmd_poly_lp(a):
    from .polys import lp_poly, sigma

    if a.n < 0:
        raise UsageError("n must be non-negative")
    p = lp_poly(a.kind, a.n)
    if a.sigma:
        p = sigma(p)
    terms = p.to_json()
    return (
        _doc("lp", kind=a.kind, n=a.n, sigma=a.sigma, terms=terms),
        0,
        {"csv_rows": terms, "csv_cols": ["exponents", "coefficient"], "text": p.pretty() + "\n"},
    )


def cmd_poly_identities(a):
    from .polys import verify_identities

    names = _names(a.names) if a.names else None
    try:
        res = verify_identities(a.n, names)
    except KeyError as exc:
        raise UsageError(f"unknown identity {exc}") from exc
    ok = all(r["status"] == "pass" for r in res)
    text = "".join(f"{r['name']}\t{'' if r['n'] is None else r['n']}\t{r['status']}\n" for r in res)
    return (
        _doc("identities", ok=ok, results=res),
        0 if ok else 2,
        {"csv_rows": res, "csv_cols": ["name", "n", "status"], "text": text},
    )


def cmd_poly_genfun(a):
    from .polys import genfun

    P = _parent(a.parent)
    phi = _subsystem(P, a.parent, a.name, a.roots) if (a.name or a.roots) else P.full()
    f = genfun(phi, a.path)
    terms = f.to_json()
    return (
        _doc("genfun", parent=a.parent, subsystem=phi.type_string(), path=a.path, terms=terms),
        0,
        {"csv_rows": terms, "csv_cols": ["exponent", "coefficient"], "text": f.pretty() + "\n"},
    )


def cmd_report_table1(a):
    from .reports import table1

    rows = table1(a.n_max)
    ok = all(r["status"] == "match" for r in rows)
    text = "".join(f"{r['label']}\t{r['computed']}\t{r['expected']}\t{r['status']}\n" for r in rows)
    return (
        _doc("table1", ok=ok, rows=rows),
        0 if ok else 2,
        {"csv_rows": rows, "csv_cols": ["label", "n", "computed", "expected", "status"], "text": text},
    )


def _parents(sel: str, allowed: Sequence[str]) -> list[str]:
    if sel == "all":
        return list(allowed)
    out = _names(sel)
    bad = [p for p in out if p not in allowed]
    if bad:
        raise UsageError(f"no data for {', '.join(bad)}; choose from {', '.join(allowed)}")
    return out


def cmd_report_tables(a):
    from .reports import TABLE_PARENTS, to_latex, verify_tables

    reps = [verify_tables(p) for p in _parents(a.parent, TABLE_PARENTS)]
    ok = all(r["ok"] for r in reps)
    rows = [dict(parent=r["parent"], **row) for r in reps for row in r["rows"]]
    text = "".join(
        f"{r['parent']}\t{r['name']}\t{r['computed']['fw']}\t{r['computed']['e']}\t"
        f"{r['expected']['fw']}\t{r['expected']['e']}\t{r['status']}\n"
        for r in rows
    )
    latex = "".join(to_latex(r) for r in reps)
    return (
        _doc("tables", ok=ok, reports=reps),
        0 if ok else 2,
        {
            "csv_rows": rows,
            "csv_cols": ["parent", "name", "computed.fw", "computed.e", "expected.fw", "expected.e", "status"],
            "text": text,
            "latex": latex,
        },
    )


def cmd_report_relations(a):
    from .reports import relation_catalog

    parents = _parents(a.parent, ("D4", "E6", "E7", "E8", "F4", "G2"))
    reps = [relation_catalog(p, full=not a.no_full) for p in parents]
    ok = all(r["ok"] for r in reps)
    rows = [dict(parent=r["parent"], **i) for r in reps for i in r["relations"]]
    text = "".join(f"{r['id']}\t{r['relation']}\t{r['status']}\n" for r in rows)
    return (
        _doc("relation-catalog", ok=ok, reports=reps),
        0 if ok else 2,
        {"csv_rows": rows, "csv_cols": ["parent", "id", "relation", "zero", "perturbation_nonzero", "status"], "text": text},
    )


def cmd_report_small(a):
    from .reports import verify_small_weights

    reps = [verify_small_weights(p) for p in _parents(a.parent, ("E6", "F4"))]
    ok = all(r["ok"] for r in reps)
    rows = [
        {
            "parent": r["parent"],
            "k": row["k"],
            "computed": " ".join(row["computed"]["representatives"]),
            "expected": " ".join(row["expected"]["representatives"]) or f"({row['expected']['count']} orbit)",
            "status": row["status"],
        }
        for r in reps
        for row in r["rows"]
    ]
    text = "".join(f"{r['parent']}\t{r['k']}\t{r['computed']}\t{r['expected']}\t{r['status']}\n" for r in rows)
    return (
        _doc("small-weights", ok=ok, reports=reps),
        0 if ok else 2,
        {"csv_rows": rows, "csv_cols": ["parent", "k", "computed", "expected", "status"], "text": text},
    )


# ---------------------------------------------------------------------------
# parser


def _sel(p, roots=True):
    p.add_argument("--parent", required=True, help="ambient root system, e.g. E7")
    p.add_argument("--name", help="registry name, e.g. \"(A5)'\" or A2^S")
    if roots:
        p.add_argument("--roots", help="comma separated root indices generating the subsystem")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dimdata", allow_abbrev=False, description="Exact root system, character and polynomial computations.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--format", choices=FORMATS, default="json")
    ap.add_argument("--budget-orbit", type=int, help="largest orbit walked")
    ap.add_argument("--budget-enum", type=int, help="largest root system enumerated")
    ap.add_argument("--budget-degree", type=int, help="largest LP polynomial index")
    top = ap.add_subparsers(dest="group", required=True)

    g = top.add_parser("rootsys").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("build")
    p.add_argument("--type", required=True)
    p.set_defaults(fn=cmd_rootsys_build)
    p = g.add_parser("maximal-lattice")
    p.add_argument("--gram", required=True, help="rows separated by ';', entries by ','")
    p.add_argument("--basis", help="lattice basis, same syntax (default: standard basis)")
    p.set_defaults(fn=cmd_rootsys_maximal)

    g = top.add_parser("subsys").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("enumerate")
    p.add_argument("--parent", required=True)
    p.add_argument("--w", default="weyl")
    p.add_argument("--all", action="store_true", help="include non-reduced subsystems")
    p.set_defaults(fn=cmd_subsys_enumerate)
    p = g.add_parser("named")
    _sel(p)
    p.set_defaults(fn=cmd_subsys_named)
    p = g.add_parser("conjugate")
    p.add_argument("--parent", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w", default="weyl")
    p.set_defaults(fn=cmd_subsys_conjugate)

    g = top.add_parser("char").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("compute")
    _sel(p)
    p.add_argument("--w", default="weyl")
    p.set_defaults(fn=cmd_char_compute)
    p = g.add_parser("equal")
    p.add_argument("--parent", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w", default="weyl")
    p.set_defaults(fn=cmd_char_equal)
    p = g.add_parser("relations")
    p.add_argument("--parent", required=True)
    p.add_argument("--all", action="store_true", help="use every enumerated reduced class")
    p.add_argument("--names", help="comma separated registry names")
    p.add_argument("--w", default="weyl")
    p.set_defaults(fn=cmd_char_relations)
    p = g.add_parser("leading")
    _sel(p)
    p.set_defaults(fn=cmd_char_leading)

    g = top.add_parser("poly").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("lp")
    p.add_argument("--kind", required=True, choices=["a", "b", "b'", "c", "d"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", action="store_true")
    p.set_defaults(fn=cmd_poly_lp)
    p = g.add_parser("identities")
    p.add_argument("--n", type=int, help="largest n for the indexed families")
    p.add_argument("--names", help="comma separated identity names")
    p.set_defaults(fn=cmd_poly_identities)
    p = g.add_parser("genfun")
    _sel(p)
    p.add_argument("--path", choices=["product", "sum"], default="product")
    p.set_defaults(fn=cmd_poly_genfun)

    g = top.add_parser("report").add_subparsers(dest="cmd", required=True)
    p = g.add_parser("table1")
    p.add_argument("--n-max", type=int, default=2)
    p.set_defaults(fn=cmd_report_table1)
    p = g.add_parser("tables")
    p.add_argument("--parent", default="all")
    p.set_defaults(fn=cmd_report_tables)
    p = g.add_parser("relations")
    p.add_argument("--parent", default="all")
    p.add_argument("--no-full", action="store_true", help="skip the nullspace comparison")
    p.set_defaults(fn=cmd_report_relations)
    p = g.add_parser("small-weights")
    p.add_argument("--parent", default="all")
    p.set_defaults(fn=cmd_report_small)
    return ap


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    caps = {"orbit": a.budget_orbit, "enum_roots": a.budget_enum, "degree": a.budget_degree}
    caps = {k: v for k, v in caps.items() if v is not None}
    saved = budget()
    if caps:
        set_budget(**caps)
    try:
        doc, code, extra = a.fn(a)
        _emit(doc, a.format, out, **extra)
        return code
    except UsageError as exc:
        err.write(f"dimdata: error: {exc}\n")
        return 1
    except BudgetExceeded as exc:
        err.write(f"dimdata: budget exceeded: {exc}\n")
        return 1
    finally:
        set_budget(**asdict(saved))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
