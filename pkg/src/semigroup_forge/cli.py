"""Command-line front end.

    semigroup-forge invariants --gens 35,36,41,42 [--show-apery]
    semigroup-forge ideal --gens 3,4,5
    semigroup-forge verify --e 5 --i 2
    semigroup-forge sweep --e 4 --i-range 2..7

Exit codes: 0 everything matched, 1 a closed form disagreed with the generic
computation, 2 invalid input, 3 a resource budget was exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from .errors import InvalidInput, ResourceLimit
from .family import SUPPORTED_E, verify_family
from .poly import DEFAULT_MAX_SPAIRS, gastinger_check
from .presentation import (
    DEFAULT_MAX_NODES,
    minimal_generating_set,
    minimality_check,
    mu_and_betti_degrees,
    toric_ideal_generators,
)
from .semigroup import apery, new_semigroup, pseudo_frobenius

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "SEMIGROUP_FORGE_BUDGET"


def parse_budget(text: str | None) -> dict[str, int]:
    """``"500000"`` or ``"spairs=500000,nodes=10000000"``."""
    budget = {"spairs": DEFAULT_MAX_SPAIRS, "nodes": DEFAULT_MAX_NODES}
    if not text:
        return budget
    text = text.strip()
    if text.isdigit():
        budget["spairs"] = int(text)
        return budget
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in budget or not value.strip().isdigit() or int(value) <= 0:
            raise InvalidInput(f"bad {BUDGET_ENV} entry {part!r}")
        budget[key] = int(value)
    return budget


def parse_gens(text: str) -> list[int]:
    try:
        gens = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InvalidInput(f"cannot parse generator list {text!r}") from None
    if not gens:
        raise InvalidInput("empty generator list")
    return gens


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"2..5"`` (inclusive) or ``"2,4,6"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise InvalidInput(f"cannot parse range {text!r}") from None


# -- commands ------------------------------------------------------------------------

def cmd_invariants(gens: Sequence[int], show_apery: bool = False) -> dict[str, Any]:
    sg = new_semigroup(gens)
    inv = pseudo_frobenius(sg)
    row: dict[str, Any] = {
        "generators": list(sg.generators),
        "multiplicity": sg.multiplicity,
        "embedding_dimension": sg.embedding_dimension,
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "pseudo_frobenius": list(inv.pseudo_frobenius),
        "type": inv.type,
    }
    if show_apery:
        row["apery"] = sorted(apery(sg, sg.multiplicity).entries)
    return {"command": "invariants", "params": {"gens": list(gens)}, "rows": [row],
            "discrepancies": []}


def cmd_ideal(gens: Sequence[int], budget: dict[str, int]) -> dict[str, Any]:
    gens = tuple(new_semigroup(gens).generators)
    if len(gens) == 1:
        row = {"generators": list(gens), "mu": 0, "betti_degrees": {}, "generating_set": [],
               "certified": True, "minimal": True}
        return {"command": "ideal", "params": {"gens": list(gens)}, "rows": [row],
                "discrepancies": []}
    raw = toric_ideal_generators(gens, "saturation", budget["spairs"])
    minimal = minimal_generating_set(gens, raw, budget["nodes"])
    cert = gastinger_check(minimal, gens, 0, max_spairs=budget["spairs"])
    report = mu_and_betti_degrees(gens, raw, assume_certified=True,
                                  max_spairs=budget["spairs"], max_nodes=budget["nodes"])
    is_min = cert.certified and minimality_check(gens, minimal, assume_certified=True,
                                                 max_nodes=budget["nodes"])
    row = {
        "generators": list(gens),
        "mu": report.mu,
        "betti_degrees": {str(k): v for k, v in sorted(report.betti_degrees.items())},
        "generating_set": [str(f) for f in minimal],
        "certified": cert.certified,
        "minimal": is_min,
    }
    disc = [] if (cert.certified and is_min) else [{"kind": "presentation", "certified": cert.certified,
                                                      "minimal": is_min}]
    return {"command": "ideal", "params": {"gens": list(gens)}, "rows": [row], "discrepancies": disc}


def _verify_row(args: tuple[int, int, dict[str, int]]) -> tuple[dict[str, Any], list[dict], str | None]:
    e, i, budget = args
    try:
        rep = verify_family(e, i, max_spairs=budget["spairs"], max_nodes=budget["nodes"])
    except ResourceLimit as exc:
        return {"e": e, "i": i, "error": str(exc)}, [], "budget"
    row = rep.as_row()
    row["all_match"] = rep.all_match
    row["error"] = ""
    disc = [dict(d, n=rep.params.n) for d in rep.discrepancies]
    return row, disc, None if rep.all_match else "mismatch"


def cmd_sweep(e: int, i_values: Sequence[int], budget: dict[str, int], threads: int = 1,
              command: str = "sweep") -> tuple[dict[str, Any], int]:
    if e not in SUPPORTED_E:
        raise InvalidInput(f"UnsupportedE: closed forms exist only for e in {SUPPORTED_E}, got {e}")
    if not i_values or min(i_values) < 2:
        raise InvalidInput("i must be at least 2")
    jobs = [(e, i, budget) for i in sorted(set(i_values))]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_verify_row, jobs))
    else:
        results = [_verify_row(j) for j in jobs]
    rows, discrepancies, status = [], [], set()
    for row, disc, flag in results:
        rows.append(row)
        discrepancies.extend(disc)
        if flag:
            status.add(flag)
    code = EXIT_MISMATCH if "mismatch" in status else EXIT_BUDGET if "budget" in status else EXIT_OK
    i_sorted = sorted(set(i_values))
    params = {"e": e, "i": i_sorted[0] if command == "verify" else i_sorted}
    return {"command": command, "params": params, "rows": rows, "discrepancies": discrepancies}, code


# -- output ------------------------------------------------------------------------------

def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    if isinstance(v, dict):
        return " ".join(f"{k}:{x}" for k, x in v.items())
    return str(v)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for k in row:
            if k not in cols:
                cols.append(k)
    return cols


def render(result: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2) + "\n"
    rows = result["rows"]
    cols = _columns(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in cols])
        return buf.getvalue()
    lines = []
    if len(rows) == 1 and result["command"] in ("invariants", "ideal"):
        width = max(map(len, cols))
        for c in cols:
            v = rows[0][c]
            if c == "generating_set":
                lines.append(f"{c}:")
                lines.extend(f"  {f}" for f in v)
            else:
                lines.append(f"{c.ljust(width)}  {_cell(v)}")
    else:
        table = [cols] + [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(t[k]) for t in table) for k in range(len(cols))]
        for t in table:
            lines.append("  ".join(x.rjust(w) for x, w in zip(t, widths)).rstrip())
    for d in result["discrepancies"]:
        lines.append("DISCREPANCY " + json.dumps(d, sort_keys=True))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--max-spairs", type=int, default=None,
                        help="S-pair budget for Groebner computations")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for sweeps (default: number of cores)")

    parser = argparse.ArgumentParser(prog="semigroup-forge", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="Frobenius number, PF set, type")
    p.add_argument("--gens", required=True)
    p.add_argument("--show-apery", action="store_true")

    p = sub.add_parser("ideal", parents=[common], help="minimal presentation of the monomial curve")
    p.add_argument("--gens", required=True)

    for name in ("verify", "sweep"):
        p = sub.add_parser(name, parents=[common], help=f"{name} closed forms for a family")
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--i", dest="i", default=None, help="index, or a range such as 2..4")
        p.add_argument("--i-range", dest="i_range", default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budget = parse_budget(os.environ.get(BUDGET_ENV))
        if args.max_spairs is not None:
            if args.max_spairs <= 0:
                raise InvalidInput("--max-spairs must be positive")
            budget["spairs"] = args.max_spairs
        threads = args.threads or os.cpu_count() or 1
        if threads <= 0:
            raise InvalidInput("--threads must be positive")
        code = EXIT_OK
        if args.command == "invariants":
            result = cmd_invariants(parse_gens(args.gens), args.show_apery)
        elif args.command == "ideal":
            result = cmd_ideal(parse_gens(args.gens), budget)
            code = EXIT_MISMATCH if result["discrepancies"] else EXIT_OK
        else:
            i_text = args.i_range or args.i
            if i_text is None or (args.i_range and args.i):
                raise InvalidInput("give exactly one of --i and --i-range")
            i_values = parse_range(i_text)
            if args.command == "verify" and len(i_values) != 1:
                raise InvalidInput("verify takes a single --i; use sweep for ranges")
            result, code = cmd_sweep(args.e, i_values, budget, threads, args.command)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(render(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
