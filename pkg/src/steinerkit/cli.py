"""Command-line front end.

    steinerkit design fano|s2413|sts V|search T N V [-o FILE]
    steinerkit invariants --design D --what Q [--mode formula|oracle|both] [-m M]
    steinerkit containment --design D -m M -d D
    steinerkit code --design D --which steiner|complement|star [--nodes a,b,...]

``--design`` takes a design JSON file or one of the bundled names. Reports are
JSON on stdout; exit status is 0 on success, 1 on errors and 2 when a formula
disagrees with its oracle.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction
from math import comb
from pathlib import Path

from . import __version__
from . import codes, formulas, geometry
from .designs import (
    BUNDLED,
    BlockFamily,
    DesignError,
    DesignParams,
    SearchBudgetExceeded,
    SteinerSystem,
    bundled,
    complement,
    construct_sts,
    design_to_json,
    load_design,
    search_design,
)
from .monomials import (
    CoverIdealSpec,
    DegreeCapExceeded,
    alpha_symbolic,
    containment_witness,
    in_ordinary_power,
    in_symbolic_power,
    minimal_generators,
)
from .simplicial import CohenMacaulayViolation, h_vector_oracle, hochster_betti

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2

DEEP_CLASSES = 10**6  # truncation classes an h-vector run may visit without --deep
DEEP_SUBSETS = 2 * 10**6  # n-subsets a hyp run may visit without --deep

WHAT = ("alpha", "hvector", "betti", "waldschmidt", "regularity", "omega", "resurgence")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _load(spec: str) -> SteinerSystem:
    if spec.lower() in BUNDLED or spec.lower() == "s_2_4_13":
        return bundled(spec)
    path = Path(spec)
    if not path.exists():
        raise CliError(f"no design file {spec!r} (bundled: {', '.join(BUNDLED)})")
    return load_design(path)


def _params_dict(p: DesignParams) -> dict:
    return {"t": p.t, "n": p.n, "v": p.v}


class Report:
    def __init__(self, command: str, parameters: dict):
        self.command = command
        self.parameters = parameters
        self.results: dict = {}
        self.mismatches: list[dict] = []
        self.notes: list[str] = []
        self._start = time.perf_counter()

    def compare(self, quantity: str, formula, oracle) -> None:
        if formula != oracle:
            self.mismatches.append(
                {"quantity": quantity, "formula": _jsonable(formula), "oracle": _jsonable(oracle)}
            )

    def to_dict(self, timestamp: bool) -> dict:
        meta = {"tool": "steinerkit", "version": __version__, "command": self.command,
                "parameters": _jsonable(self.parameters)}
        if timestamp:
            meta["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
            meta["wall_time_s"] = round(time.perf_counter() - self._start, 3)
        out = {"metadata": meta, "results": _jsonable(self.results), "mismatches": self.mismatches}
        if self.notes:
            out["notes"] = self.notes
        return out

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if self.mismatches else EXIT_OK


def _progress(stream):
    last = [0.0]

    def report(done, total):
        now = time.perf_counter()
        if now - last[0] > 1.0 or done == total:
            last[0] = now
            print(f"  {done}/{total} classes ({100 * done / total:.0f}%)", file=stream, flush=True)

    return report


# design ---------------------------------------------------------------------

def cmd_design(args) -> int:
    kind = args.kind
    if kind in ("fano", "s2413"):
        if args.rest:
            raise CliError(f"design {kind} takes no arguments")
        system = bundled(kind)
    elif kind == "sts":
        if len(args.rest) != 1:
            raise CliError("usage: design sts V")
        system = construct_sts(int(args.rest[0]))
    elif kind == "search":
        if len(args.rest) != 3:
            raise CliError("usage: design search T N V")
        t, n, v = map(int, args.rest)
        found = search_design(DesignParams(t, n, v), time_budget=args.budget)
        if found is None:
            raise CliError(f"no S({t},{n},{v}) exists")
        system = found
    else:
        raise CliError(f"unknown design kind {kind!r}")
    text = design_to_json(system.params, system.blocks)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {len(system.blocks)} blocks to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# invariants -----------------------------------------------------------------

def _invariant(report: Report, system: SteinerSystem, what: str, mode: str, m: int, args) -> None:
    p = system.params
    C = complement(system)
    want_f = mode in ("formula", "both")
    want_o = mode in ("oracle", "both")
    res = report.results
    if what == "alpha":
        if want_f:
            res["formula"] = formulas.alpha_formula(p, m).alpha
        if want_o:
            res["oracle"] = alpha_symbolic(CoverIdealSpec(C), m)
    elif what == "hvector":
        if want_o:
            classes = (m + 1) ** p.v
            if classes > DEEP_CLASSES and not args.deep:
                raise CliError(f"h-vector oracle visits {classes} classes; pass --deep")
            prog = _progress(sys.stderr) if args.deep else None
            res["oracle"] = list(h_vector_oracle(C, m, progress=prog).entries)
        if want_f:
            if m == 1:
                res["formula"] = list(formulas.h_vector_formula(p).entries)
            else:
                report.notes.append("no closed h-vector for m > 1; oracle only")
    elif what == "betti":
        if want_f:
            strict = p.t == p.n - 1
            if not strict:
                report.notes.append("t < n - 1: two-strand formula applied outside its proven range")
            res["formula"] = formulas.betti_table_formula(p, strict=strict).to_rows()
        if want_o:
            res["oracle"] = hochster_betti(C).to_rows()
    elif what == "waldschmidt":
        if want_f:
            res["formula"] = formulas.waldschmidt(p)
        if want_o:
            res["oracle"] = Fraction(alpha_symbolic(CoverIdealSpec(C), p.n), p.n)
            report.notes.append("oracle is alpha of the n-th symbolic power over n")
    elif what == "regularity":
        if want_f:
            res["formula"] = formulas.regularity(p)
        if want_o:
            res["oracle"] = len(h_vector_oracle(C, 1))
    elif what == "omega":
        if want_f:
            res["formula"] = formulas.omega(p)
        if want_o:
            res["oracle"] = max(sum(g) for g in minimal_generators(CoverIdealSpec(C)))
    elif what == "resurgence":
        if want_o:
            raise CliError("resurgence has no oracle; use --mode formula")
        b = formulas.resurgence_bounds(p)
        res["formula"] = {"lower": b.lower, "upper": b.upper, "asymptotic_equality": b.asymptotic_equality}
    if "formula" in res and "oracle" in res:
        report.compare(what, _jsonable(res["formula"]), _jsonable(res["oracle"]))


def cmd_invariants(args) -> tuple[Report, list[list] | None]:
    system = _load(args.design)
    m = args.m or 1
    if m < 1:
        raise CliError("-m must be positive")
    params = {**_params_dict(system.params), "what": args.what, "mode": args.mode}
    if args.what in ("alpha", "hvector"):
        params["m"] = m
    report = Report("invariants", params)
    _invariant(report, system, args.what, args.mode, m, args)
    return report, _table(args.what, report.results)


def _table(what: str, res: dict) -> list[list] | None:
    if what == "hvector":
        f, o = res.get("formula", []), res.get("oracle", [])
        return [["degree", "formula", "oracle"]] + [
            [i, f[i] if i < len(f) else "", o[i] if i < len(o) else ""]
            for i in range(max(len(f), len(o)))
        ]
    if what == "betti":
        f = {(r["i"], r["j"]): r["beta"] for r in res.get("formula", [])}
        o = {(r["i"], r["j"]): r["beta"] for r in res.get("oracle", [])}
        return [["i", "j", "formula", "oracle"]] + [
            [i, j, f.get((i, j), ""), o.get((i, j), "")] for i, j in sorted(set(f) | set(o))
        ]
    return None


# containment ----------------------------------------------------------------

def cmd_containment(args) -> tuple[Report, None]:
    system = _load(args.design)
    m, d = args.m, args.d
    if m is None or d is None:
        raise CliError("containment needs -m and -d")
    if m < 1 or d < 1:
        raise CliError("-m and -d must be positive")
    p = system.params
    report = Report("containment", {**_params_dict(p), "m": m, "d": d})
    threshold = formulas.noncontainment_threshold(p, m)
    predicted = d > threshold
    res = report.results
    res["threshold"] = threshold
    res["predicted_noncontained"] = predicted
    res["trivially_contained"] = d == 1
    J = CoverIdealSpec(complement(system))
    wit = containment_witness(J, m, d)
    if wit is None:
        res["witness"] = None
    else:
        gens = minimal_generators(J)
        in_sym = in_symbolic_power(wit, J, m)
        in_ord = in_ordinary_power(wit, gens, d) if d <= 4 else None
        res["witness"] = {"exponents": list(wit), "degree": sum(wit),
                          "in_symbolic": in_sym, "in_ordinary": in_ord}
        if not in_sym or in_ord:
            raise CliError(f"witness {wit} failed re-verification")
    if predicted:
        report.compare("noncontained", True, wit is not None)
    return report, None


# code -----------------------------------------------------------------------

def _nodes(spec: str | None):
    if not spec:
        return None
    try:
        return [Fraction(x.strip()) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad --nodes value {spec!r}") from None


def cmd_code(args) -> tuple[Report, None]:
    system = _load(args.design)
    p = system.params
    nodes = _nodes(args.nodes)
    A = geometry.vandermonde_arrangement(p.v, p.n, nodes)
    if not geometry.general_position_check(A):
        raise CliError("arrangement is not in general position")
    family = {
        "steiner": system.blocks,
        "complement": complement(system),
        "star": BlockFamily.all_subsets(p.n, p.v),
    }[args.which]
    subsets = comb(len(family), p.n)
    if subsets > DEEP_SUBSETS and not args.deep:
        raise CliError(f"hyp brute force visits {subsets} subsets; pass --deep")
    pts = geometry.configuration_points(A, family)
    h = codes.hyp(pts)
    cp = codes.CodeParams(len(pts), codes.rank(codes.generating_matrix(pts)), len(pts) - h.count)
    report = Report("code", {**_params_dict(p), "which": args.which,
                             "nodes": nodes or geometry.default_nodes(p.v)})
    res = report.results
    res["code"] = cp.to_dict()
    res["hyp"] = h.count
    res["hyperplane"] = list(h.hyperplane.coefficients)
    if args.which == "star":
        res["formula_distance"] = formulas.star_distance(p)
    else:
        d_b, d_c = formulas.distance_formulas(p)
        mds_b, mds_c = formulas.mds_check(p)
        res["formula_distance"] = d_b if args.which == "steiner" else d_c
        res["formula_mds"] = mds_b if args.which == "steiner" else mds_c
        report.compare("mds", res["formula_mds"], cp.mds)
    report.compare("distance", res["formula_distance"], cp.distance)
    if args.matrix:
        res["matrix"] = codes.generating_matrix(pts).rows
    return report, None


# entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--deep", action="store_true", help="allow long oracle runs")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit timestamp and wall time for byte-stable output")

    parser = _Parser(prog="steinerkit", description="Steiner configurations: formulas against oracles.")
    parser.add_argument("--version", action="version", version=f"steinerkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("design", parents=[common], help="write a design as JSON")
    d.add_argument("kind", choices=("fano", "s2413", "sts", "search"))
    d.add_argument("rest", nargs="*", help="V for sts; T N V for search")
    d.add_argument("-o", "--output")
    d.add_argument("--budget", type=float, default=30.0, help="search time budget in seconds")

    inv = sub.add_parser("invariants", parents=[common], help="compute an invariant")
    inv.add_argument("--design", required=True)
    inv.add_argument("--what", choices=WHAT, required=True)
    inv.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
    inv.add_argument("-m", type=int)

    c = sub.add_parser("containment", parents=[common], help="symbolic vs ordinary power containment")
    c.add_argument("--design", required=True)
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-d", type=int, required=True)

    k = sub.add_parser("code", parents=[common], help="linear code of a configuration")
    k.add_argument("--design", required=True)
    k.add_argument("--which", choices=("steiner", "complement", "star"), default="steiner")
    k.add_argument("--nodes", help="comma-separated distinct rationals, one per point")
    k.add_argument("--matrix", action="store_true", help="include the generating matrix")
    return parser


def _emit(report: Report, table, args) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table is None:
            w.writerow(["key", "value"])
            for key, val in report.results.items():
                val = _jsonable(val)
                w.writerow([key, json.dumps(val) if isinstance(val, (dict, list)) else val])
        else:
            w.writerows(table)
        sys.stdout.write(buf.getvalue())
        for mm in report.mismatches:
            print(f"mismatch: {mm['quantity']}: formula {mm['formula']} != oracle {mm['oracle']}",
                  file=sys.stderr)
    else:
        json.dump(report.to_dict(not args.no_timestamp), sys.stdout, indent=2)
        sys.stdout.write("\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "design":
            return cmd_design(args)
        handler = {"invariants": cmd_invariants, "containment": cmd_containment, "code": cmd_code}
        report, table = handler[args.command](args)
    except (CliError, DesignError, SearchBudgetExceeded, DegreeCapExceeded,
            CohenMacaulayViolation, ValueError, ArithmeticError) as exc:
        print(f"steinerkit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(report, table, args)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
