"""Command line front end: ``ehrhart-lf {check,ehrhart,decompose,verify}``.

Every command prints one JSON report on stdout.  Exit codes: 0 ok,
1 violation, 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bernoulli import DEFAULT_BUDGET
from .decomp import (
    cell_count_report,
    count_cell,
    count_omega,
    count_omega_grid,
    decompose,
    decomposition_multiset_check,
    identity_det2,
    identity_gsigma,
    zero5_suite,
)
from .documents import dump_report, load_document, polytope_to_dict, report
from .ehrhart import brute_count, ehrhart_formula, interior_formula, interpolate_ehrhart, reciprocity_holds
from .errors import BudgetExceeded, EhrhartError, GeneralPositionError, ParseError
from .exactmath import format_rational
from .geometry import Polytope, general_position_check, triangulate, volume
from .latticeface import canonical_order, generate_lattice_face_simplex, is_canonical, is_lattice_face

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("main2", "fdecomp", "gsigma", "det2", "zero5", "reciprocity")


def _rats(xs):
    return [format_rational(x) for x in xs]


def _witness(p: Polytope, chk) -> Optional[dict]:
    if chk.ok:
        return None
    w = chk.witness
    if hasattr(w, "as_dict"):
        return w.as_dict(p)
    return {"subset": list(w), "points": [_rats(p.vertices[i]) for i in w]}


def cmd_check(p: Polytope, budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    gp = general_position_check(p)
    lf = is_lattice_face(p)
    return "ok", {
        "general_position": gp.ok,
        "general_position_witness": _witness(p, gp),
        "lattice_face": lf.ok,
        "lattice_face_witness": _witness(p, lf),
    }


def cmd_ehrhart(p: Polytope, method: str = "both", budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    payload: dict = {"method": method}
    if method in ("formula", "both"):
        lf = is_lattice_face(p)
        if not lf.ok:
            payload["lattice_face"] = False
            payload["witness"] = _witness(p, lf)
            return "violation", payload
        res = ehrhart_formula(p)
        payload["formula"] = {
            "coefficients": _rats(res.poly.coeffs),
            "level_volumes": _rats(res.per_level_volumes),
            "interior_coefficients": _rats(interior_formula(p).coeffs),
        }
    if method in ("interp", "both"):
        res = interpolate_ehrhart(p, budget)
        payload["interpolation"] = {"coefficients": _rats(res.poly.coeffs)}
    if method == "both":
        agree = payload["formula"]["coefficients"] == payload["interpolation"]["coefficients"]
        payload["agree"] = agree
        if not agree:
            return "violation", payload
    return "ok", payload


def cmd_decompose(p: Polytope, budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    if not p.is_simplex:
        raise GeneralPositionError("decompose needs a simplex; triangulate the polytope and decompose each simplex")
    gp = general_position_check(p)
    if not gp.ok:
        return "violation", {"general_position": False, "witness": _witness(p, gp)}
    lattice_face = is_lattice_face(p).ok
    if lattice_face and not is_canonical(p):
        p = canonical_order(p)
    cells = []
    signed_total = 0
    for cell in decompose(p):
        row = {
            "sigma": "".join(str(i + 1) for i in cell.sigma),
            "sign": cell.sign,
            "chain": [_rats(c) for c in cell.chain],
            "z": _rats(cell.zvec.values),
            "a": _rats(cell.avec),
        }
        if lattice_face:
            row["count"] = count_cell(p, cell.sigma, budget, check=False)
            signed_total += cell.sign * row["count"]
        cells.append(row)
    totals: dict = {"cells": len(cells), "volume": format_rational(volume(p))}
    if lattice_face:
        totals["signed_count"] = signed_total
    return "ok", {"lattice_face": lattice_face, "vertices": polytope_to_dict(p)["vertices"],
                  "cells": cells, "totals": totals}


def _run_suite(name: str, simplex: Polytope, budget: int) -> dict:
    if name == "main2":
        p = simplex if is_canonical(simplex) else canonical_order(simplex)
        formula = count_omega(p)
        grid = count_omega_grid(p, budget)
        vol = volume(p)
        cells = cell_count_report(p, budget)
        ok = formula == grid == vol and cells.ok and cells.values["signed_total"] == formula
        return {"ok": ok, "count_omega": formula, "grid_omega": grid, "volume": format_rational(vol),
                "cell_counts": cells.values["counts"]}
    if name == "fdecomp":
        return decomposition_multiset_check(simplex, budget=budget).as_dict()
    if name == "gsigma":
        return identity_gsigma(simplex).as_dict()
    if name == "det2":
        return identity_det2(simplex).as_dict()
    if name == "zero5":
        return zero5_suite(simplex).as_dict()
    raise ValueError(name)


def _verify_instance(p: Polytope, suites, budget: int) -> dict:
    out: dict = {"polytope": polytope_to_dict(p), "suites": {}}
    lf = is_lattice_face(p).ok
    gp = general_position_check(p).ok
    simplices = triangulate(p)
    for name in suites:
        if name in ("main2", "reciprocity") and not lf:
            out["suites"][name] = {"ok": False, "error": "not a lattice-face polytope"}
            continue
        if not gp:
            out["suites"][name] = {"ok": False, "error": "not in general position"}
            continue
        if name == "reciprocity":
            res = ehrhart_formula(p)
            interior = interior_formula(p)
            brute_interior = brute_count(p, 1, "interior", budget)
            ok = reciprocity_holds(p) and interior(1) == brute_interior
            out["suites"][name] = {"ok": ok, "ehrhart": _rats(res.poly.coeffs),
                                   "interior": _rats(interior.coeffs), "interior_brute_m1": brute_interior}
            continue
        if name == "main2" and len(simplices) > 1:
            parts = [_run_suite(name, s, budget) for s in simplices]
            total = sum(r["count_omega"] for r in parts)
            vol = volume(p)
            grid = count_omega_grid(p, budget)
            out["suites"][name] = {"ok": all(r["ok"] for r in parts) and total == vol == grid,
                                   "count_omega": total, "grid_omega": grid, "volume": format_rational(vol),
                                   "simplices": len(parts)}
            continue
        reps = [_run_suite(name, s, budget) for s in simplices]
        out["suites"][name] = reps[0] if len(reps) == 1 else {"ok": all(r["ok"] for r in reps), "simplices": reps}
    out["ok"] = all(r["ok"] for r in out["suites"].values())
    return out


def cmd_verify(instances, suites, budget: int = DEFAULT_BUDGET) -> tuple[str, dict]:
    results = [_verify_instance(p, suites, budget) for p in instances]
    failed = sum(1 for r in results if not r["ok"])
    return ("ok" if failed == 0 else "violation"), {
        "suites": list(suites), "instances": len(results), "violations": failed, "results": results,
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ehrhart-lf", description="Exact lattice-point counts for lattice-face polytopes")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on grid-scan and enumeration steps")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="lattice-face and general-position verdicts")
    p.add_argument("file")

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial by formula and/or interpolation")
    p.add_argument("file")
    p.add_argument("--method", choices=("formula", "interp", "both"), default="both")

    p = sub.add_parser("decompose", help="signed permutation decomposition of a simplex")
    p.add_argument("file")

    p = sub.add_parser("verify", help="run invariant suites on a file or generated instances")
    p.add_argument("file", nargs="?")
    p.add_argument("--gen", nargs=3, type=int, metavar=("D", "SEED", "COUNT"))
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    command = {k: v for k, v in vars(args).items() if v is not None}
    try:
        if args.command == "verify":
            if (args.file is None) == (args.gen is None):
                raise ParseError("give exactly one of FILE or --gen D SEED COUNT", "arguments")
            if args.gen:
                d, seed, count = args.gen
                try:
                    instances = [generate_lattice_face_simplex(d, seed + i) for i in range(count)]
                except (ValueError, RuntimeError) as exc:
                    raise ParseError(f"generation failed: {exc}", "--gen") from None
            else:
                instances = [load_document(args.file)]
            suites = SUITES if args.suite == "all" else (args.suite,)
            status, payload = cmd_verify(instances, suites, args.budget)
        else:
            p = load_document(args.file)
            if args.command == "check":
                status, payload = cmd_check(p, args.budget)
            elif args.command == "ehrhart":
                status, payload = cmd_ehrhart(p, args.method, args.budget)
            else:
                status, payload = cmd_decompose(p, args.budget)
        code = EXIT_OK if status == "ok" else EXIT_VIOLATION
    except ParseError as exc:
        status, payload, code = "error", {"kind": "parse", "message": str(exc), "location": exc.location}, EXIT_USAGE
    except BudgetExceeded as exc:
        status, payload, code = "error", {"kind": "budget", "message": str(exc)}, EXIT_BUDGET
    except EhrhartError as exc:
        status, payload, code = "error", {"kind": type(exc).__name__, "message": str(exc)}, EXIT_VIOLATION
    sys.stdout.write(dump_report(report(command, status, payload)))
    return code


if __name__ == "__main__":
    sys.exit(main())
