"""Command-line front end.

One binary with subcommands; every command emits a run report (JSON with
--json or to --out, aligned tables for humans otherwise).  Reports echo the
command, digest their inputs, and are deterministic up to the timing field.
Category arguments accept preset names, "double:<group>", a JSON file path,
or "-" to read a category JSON from stdin, so commands can be piped:

    pointedcat double Z2 --json | pointedcat lagrangian -
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .errors import PointedCatError, exit_code_for
from .cyclotomic import format_root
from .groups import format_group, parse_group
from .cocycles import (
    check_hexagons,
    check_pentagon,
    classify_h3ab,
    trace_form,
)
from .metric import (
    CenterReport,
    detect_center,
    drinfeld_double,
    is_nondegenerate,
    is_symmetric,
    mueger_center,
    smatrix1,
    tmatrix_diagonal,
)
from .brmod import (
    admissible_subgroups,
    pi0_report,
    schur_classes,
    smatrix2,
    verify_character_table,
)
from .battery import default_cases, run_all
from .serde import (
    category_to_json,
    cocycle_to_json,
    element_array,
    load_category,
    matrix_strings,
    qf_to_json,
    raw_cocycle_from_source,
)


def _digest(payload) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def _aligned(rows: list[list[str]]) -> list[str]:
    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]


def _emit(args, command: str, inputs, results, human_lines, started: float) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "digest": _digest({"command": command, "inputs": inputs}),
        "results": results,
        "timing_ms": round((time.perf_counter() - started) * 1000, 3),
        "version": __version__,
    }
    text = json.dumps(report, indent=2, sort_keys=False)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        return
    # default to the JSON report when piped, so commands chain through stdin
    want_json = getattr(args, "json", False) or (
        not getattr(args, "human", False) and not sys.stdout.isatty()
    )
    if want_json:
        print(text)
    else:
        for line in human_lines:
            print(line)


def _load(args):
    stdin_text = None
    if args.cat == "-":
        stdin_text = sys.stdin.read()
    return load_category(args.cat, stdin_text)


def _category_inputs(args, category) -> dict:
    return {"cat": args.cat, "category": category_to_json(category)}


# ----------------------------------------------------------------------
# Subcommands.
# ----------------------------------------------------------------------

def cmd_smatrix(args) -> None:
    started = time.perf_counter()
    category = _load(args)
    if args.level == 1:
        sm = smatrix1(category)
        rank = sm.matrix.rank()
        results = {
            "category": category.label,
            "level": 1,
            "elements": [element_array(g) for g in category.group.elements()],
            "matrix": matrix_strings(sm.roots),
            "rank": rank,
            "invertible": rank == category.group.order,
        }
        human = [f"S-matrix (level 1) of {category.label or format_group(category.group)}:"]
        human += _aligned(results["matrix"])
        human.append(f"rank {rank} of {category.group.order}; invertible: {results['invertible']}")
    else:
        sm = smatrix2(category)
        match = verify_character_table(category)
        results = {
            "category": category.label,
            "level": 2,
            "center": [element_array(g) for g in sm.cols],
            "classes": [list(cls.restricted.coords) for cls in sm.rows],
            "matrix": matrix_strings(sm.roots),
            "square": len(sm.rows) == len(sm.cols),
            "invertible": not sm.matrix.det().is_zero,
            "character_table_match": match,
        }
        human = [f"S-matrix (level 2) of {category.label or format_group(category.group)}:"]
        human += _aligned(results["matrix"])
        human.append(
            f"square: {results['square']}; invertible: {results['invertible']}; "
            f"character-table match: {match}"
        )
    _emit(args, "smatrix", _category_inputs(args, category) | {"level": args.level},
          results, human, started)


def cmd_tmatrix(args) -> None:
    started = time.perf_counter()
    category = _load(args)
    diag = tmatrix_diagonal(category)
    results = {
        "category": category.label,
        "elements": [element_array(g) for g in category.group.elements()],
        "diagonal": [format_root(r) for r in diag],
    }
    human = [f"T-matrix diagonal of {category.label or format_group(category.group)}:"]
    human += _aligned([[format_root(r)] for r in diag])
    _emit(args, "tmatrix", _category_inputs(args, category), results, human, started)


def cmd_center(args) -> None:
    started = time.perf_counter()
    category = _load(args)
    center = mueger_center(category)
    results = {
        "category": category.label,
        "center": [element_array(g) for g in center.elements],
        "order": center.order,
        "symmetric": is_symmetric(category),
        "nondegenerate": is_nondegenerate(category),
    }
    human = [
        f"transparent subgroup of {category.label or format_group(category.group)}: "
        f"order {center.order}",
        "elements: " + ", ".join(str(list(g)) for g in center.elements),
        f"symmetric: {results['symmetric']}; nondegenerate: {results['nondegenerate']}",
    ]
    _emit(args, "center", _category_inputs(args, category), results, human, started)


def cmd_lagrangian(args) -> None:
    started = time.perf_counter()
    category = _load(args)
    report: CenterReport = detect_center(category, args.max_group_order)
    results = {
        "category": category.label,
        "nondegenerate": report.nondegenerate,
        "lagrangian": [
            [element_array(g) for g in sub.elements] for sub in report.witnesses
        ],
        "lagrangian_count": report.lagrangian_count,
        "is_center": report.is_center,
        "degenerate_ambient_warning": report.degenerate_ambient,
    }
    human = [
        f"{category.label or format_group(category.group)}: "
        f"{report.lagrangian_count} Lagrangian subgroup(s); "
        f"nondegenerate: {report.nondegenerate}; detected as a center: {report.is_center}"
    ]
    for sub in report.witnesses:
        human.append("  L = {" + ", ".join(str(list(g)) for g in sub.elements) + "}")
    if report.degenerate_ambient:
        human.append("warning: ambient category is degenerate; Lagrangian notion is formal")
    _emit(args, "lagrangian", _category_inputs(args, category), results, human, started)


def cmd_double(args) -> None:
    started = time.perf_counter()
    group = parse_group(args.group)
    category = drinfeld_double(group)
    results = {
        "group": format_group(group),
        "category": category_to_json(category),
        "nondegenerate": True,
    }
    human = [
        f"Drinfeld double of {format_group(group)}: "
        f"{format_group(category.group)} with q = chi(g)",
        json.dumps(qf_to_json(category.form)["q"], sort_keys=True),
    ]
    _emit(args, "double", {"group": args.group}, results, human, started)


def cmd_classify(args) -> None:
    started = time.perf_counter()
    group = parse_group(args.group)
    classes = classify_h3ab(group, args.values)
    results = {
        "group": format_group(group),
        "values": args.values,
        "count": len(classes),
        "classes": [
            {
                "q": qf_to_json(cls.form)["q"],
                "psi": cocycle_to_json(cls.representative)["psi"],
                "omega": cocycle_to_json(cls.representative)["omega"],
                "orbit_size": cls.orbit_size,
            }
            for cls in classes
        ],
    }
    human = [
        f"{len(classes)} cohomology class(es) on {format_group(group)} "
        f"with values of order dividing {args.values}:"
    ]
    for cls in results["classes"]:
        human.append(
            f"  q={json.dumps(cls['q'], sort_keys=True)} "
            f"omega={json.dumps(cls['omega'], sort_keys=True)} "
            f"psi={json.dumps(cls['psi'], sort_keys=True)} "
            f"(orbit size {cls['orbit_size']})"
        )
    _emit(args, "classify", {"group": args.group, "values": args.values},
          results, human, started)


def cmd_modcats(args) -> None:
    started = time.perf_counter()
    category = _load(args)
    center = mueger_center(category)
    subs = admissible_subgroups(category, args.max_group_order)
    classes = schur_classes(category)
    report = pi0_report(category)
    results = {
        "category": category.label,
        "center": [element_array(g) for g in center.elements],
        "admissible_subgroups": [
            [element_array(g) for g in sub.elements] for sub in subs
        ],
        "classes": [list(item.schur.restricted.coords) for item in classes],
        "representatives": [
            {
                "chi": list(item.representative.chi.coords),
                "H": [element_array(g) for g in item.representative.subgroup.elements],
            }
            for item in classes
        ],
        "pi0": {"pi0": report.pi0, "pi0_omega": report.pi0_omega, "equal": report.equal},
    }
    human = [
        f"{category.label or format_group(category.group)}: "
        f"{len(subs)} admissible subgroup(s), {len(classes)} Schur class(es)",
        f"pi0 = {report.pi0}, pi0(loop) = {report.pi0_omega}, equal: {report.equal}",
    ]
    for item in classes:
        human.append(f"  class chi|_center = {list(item.schur.restricted.coords)} "
                     f"(lift chi = {list(item.representative.chi.coords)})")
    _emit(args, "modcats", _category_inputs(args, category), results, human, started)


def cmd_cocycle_check(args) -> None:
    started = time.perf_counter()
    stdin_text = sys.stdin.read() if args.cat == "-" else None
    label, cocycle = raw_cocycle_from_source(args.cat, stdin_text)
    if cocycle is None:
        raise PointedCatError("the input carries no cocycle tables to check")
    normalized = cocycle.normalized
    pentagon_ok, pentagon_witness = check_pentagon(cocycle)
    hexagon_ok, hexagon_witness = check_hexagons(cocycle)
    valid = normalized and pentagon_ok and hexagon_ok
    results = {
        "category": label,
        "normalized": normalized,
        "pentagon": {"ok": pentagon_ok, "witness": pentagon_witness and list(map(list, pentagon_witness))},
        "hexagons": {
            "ok": hexagon_ok,
            "witness": hexagon_witness
            and [hexagon_witness[0], [list(x) for x in hexagon_witness[1]]],
        },
        "is_abelian_cocycle": valid,
        "trace_q": qf_to_json(trace_form(cocycle))["q"] if valid else None,
    }
    human = [
        f"normalized: {'yes' if normalized else 'no'}",
        f"pentagon: {'ok' if pentagon_ok else f'fails at {pentagon_witness}'}",
        f"hexagons: {'ok' if hexagon_ok else f'fail at {hexagon_witness}'}",
    ]
    if results["trace_q"] is not None:
        human.append(f"trace form: {json.dumps(results['trace_q'], sort_keys=True)}")
    _emit(args, "cocycle-check", {"cat": args.cat}, results, human, started)
    if not valid:
        raise SystemExit(2)


def cmd_battery(args) -> None:
    started = time.perf_counter()
    summary = run_all(default_cases())
    results = [
        {
            "case": row.case,
            "check": row.check,
            "pass": row.passed,
            **({"witness": row.witness} if row.witness else {}),
        }
        for row in summary.rows
    ]
    table = [["PASS" if row.passed else "FAIL", row.check, row.case]
             for row in summary.rows]
    human = _aligned(table) if table else []
    passed = sum(1 for row in summary.rows if row.passed)
    human.append(f"{passed}/{len(summary.rows)} checks passed")
    if summary.warning:
        human.append(f"warning: {summary.warning}")
    _emit(args, "battery", {"cases": len(summary.rows)}, results, human, started)
    if not summary.all_pass:
        raise SystemExit(1)


# ----------------------------------------------------------------------
# Parser and entry point.
# ----------------------------------------------------------------------

def _add_category_arg(sub) -> None:
    sub.add_argument(
        "cat_positional",
        nargs="?",
        metavar="CATEGORY",
        help="preset, double:<group>, JSON file or - for stdin",
    )
    sub.add_argument("--cat", help="same as the positional category argument")
    sub.add_argument("--json", action="store_true", help="emit the JSON run report")
    sub.add_argument("--human", action="store_true", help="force the aligned table view")
    sub.add_argument("--out", help="write the JSON run report to a file")
    sub.add_argument(
        "--max-group-order",
        type=int,
        default=256,
        help="bound on subgroup enumeration (default 256)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointedcat",
        description="Exact S-matrix computations for pointed braided fusion categories.",
    )
    parser.add_argument("--version", action="version", version=f"pointedcat {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sm = subs.add_parser("smatrix", help="S-matrix at level 1 or 2")
    _add_category_arg(sm)
    sm.add_argument("--level", type=int, choices=(1, 2), default=1)
    sm.set_defaults(fn=cmd_smatrix)

    tm = subs.add_parser("tmatrix", help="diagonal of twists q(g)")
    _add_category_arg(tm)
    tm.set_defaults(fn=cmd_tmatrix)

    ce = subs.add_parser("center", help="transparent (Mueger) subgroup")
    _add_category_arg(ce)
    ce.set_defaults(fn=cmd_center)

    la = subs.add_parser("lagrangian", help="Lagrangian subgroups and center detection")
    _add_category_arg(la)
    la.set_defaults(fn=cmd_lagrangian)

    do = subs.add_parser("double", help="Drinfeld double of a finite abelian group")
    do.add_argument("group", help='group literal such as "Z2" or "Z2xZ3"')
    do.add_argument("--json", action="store_true")
    do.add_argument("--human", action="store_true")
    do.add_argument("--out")
    do.set_defaults(fn=cmd_double)

    cl = subs.add_parser("classify", help="brute-force cohomology classes on tiny groups")
    cl.add_argument("group")
    cl.add_argument("--values", type=int, default=4, help="root-of-unity order bound")
    cl.add_argument("--json", action="store_true")
    cl.add_argument("--human", action="store_true")
    cl.add_argument("--out")
    cl.set_defaults(fn=cmd_classify)

    mo = subs.add_parser("modcats", help="braided module categories and Schur classes")
    _add_category_arg(mo)
    mo.set_defaults(fn=cmd_modcats)

    cc = subs.add_parser("cocycle-check", help="pentagon/hexagon diagnostics")
    _add_category_arg(cc)
    cc.set_defaults(fn=cmd_cocycle_check)

    ba = subs.add_parser("battery", help="run the full verification battery")
    ba.add_argument("--json", action="store_true")
    ba.add_argument("--human", action="store_true")
    ba.add_argument("--out")
    ba.set_defaults(fn=cmd_battery)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "cat_positional"):
            args.cat = args.cat or args.cat_positional
            if not args.cat:
                parser.error("a category is required (positional or --cat)")
        args.fn(args)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 1
    except PointedCatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
