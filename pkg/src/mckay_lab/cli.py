"""Command-line interface.

Every subcommand supports --json, emitting a stable envelope
{"command", "version", "result", "diagnostics"} with exact integers rendered
as decimal strings (the 54-digit monster order does not fit a float).
Exit codes: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, groups
from .adequiver import identify_affine_ade, mckay_quiver, quiver_checks
from .chartab import character_table
from .mckaycheck import battery_groups, mckay_check, primes_dividing
from .moonshine import (
    MONSTER_VERIFIED_PREFIX,
    enumerate_decompositions,
    load_monster_dims,
    meaning_of_life,
    monster_order_check,
    MONSTER_ORDER,
)
from .qseries import discriminant, eisenstein, j_cube_root, j_invariant
from .selfcheck import run_selfcheck


def _envelope(command: str, result, diagnostics=()):
    return {
        "command": command,
        "version": __version__,
        "result": result,
        "diagnostics": list(diagnostics),
    }


def _emit(args, command, result, diagnostics=(), human=None):
    if args.json:
        print(json.dumps(_envelope(command, result, diagnostics), indent=2))
    else:
        for line in (human if human is not None else [json.dumps(result)]):
            print(line)
        for note in diagnostics:
            print(f"note: {note}", file=sys.stderr)
    return 0


def _rational_str(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _series_result(series):
    if series.is_zero():
        return {"valuation": series.order + 1, "coeffs": []}
    return {
        "valuation": series.valuation,
        "coeffs": [_rational_str(c) for c in series.coefficients()],
    }


def _cmd_series(args, parser):
    kind = args.kind
    if kind == "eisenstein":
        if args.weight is None or args.weight < 4 or args.weight % 2:
            parser.error("eisenstein needs an even --weight >= 4")
        if args.order < 0:
            parser.error("--order must be >= 0")
        series = eisenstein(args.weight, args.order)
    elif kind == "j":
        if args.order < -1:
            parser.error("--order must be >= -1 for j")
        series = j_invariant(args.order)
    elif kind == "delta":
        if args.order < 1:
            parser.error("--order must be >= 1 for delta")
        series = discriminant(args.order)
    else:  # j-cube-root
        if args.order < 0:
            parser.error("--order must be >= 0")
        series = j_cube_root(args.order)
    human = [str(series)]
    return _emit(args, f"series {kind}", _series_result(series), human=human)


def _cmd_group(args, parser):
    group = groups.build_named_group(args.name)
    classes = group.conjugacy_classes()
    result = {
        "name": group.name,
        "size": group.size,
        "class_count": classes.count,
        "class_sizes": list(classes.sizes),
        "exponent": group.exponent(),
        "abelian": group.is_abelian(),
    }
    human = [
        f"group {group.name}: size {group.size}, {classes.count} conjugacy classes",
        f"class sizes: {list(classes.sizes)}",
    ]
    return _emit(args, "group info", result, human=human)


def _cmd_chartab(args, parser):
    group = groups.build_named_group(args.name)
    table = character_table(group)
    result = {
        "name": group.name,
        "size": group.size,
        "class_sizes": list(table.class_sizes),
        "degrees": list(table.degrees),
        "entries": [[str(x) for x in row] for row in table.entries],
        "dixon_prime": table.dixon_prime,
    }
    human = [f"character table of {group.name} (lift prime {table.dixon_prime})",
             "class sizes: " + " ".join(str(s) for s in table.class_sizes)]
    width = max(len(str(x)) for row in table.entries for x in row)
    for row in table.entries:
        human.append("  ".join(str(x).rjust(width) for x in row))
    return _emit(args, "chartab", result, human=human)


def _quiver_dot(quiver, name: str) -> str:
    lines = [f'graph "{name}" {{']
    for i, dim in enumerate(quiver.node_dims):
        shape = ', peripheries=2' if i == quiver.affine_node_index else ""
        lines.append(f'  n{i} [label="{dim}"{shape}];')
    for i in range(quiver.node_count):
        for j in range(i, quiver.node_count):
            for _ in range(quiver.adjacency[i][j]):
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_quiver(args, parser):
    group = groups.build_named_group(args.name)
    table = character_table(group)
    quiver = mckay_quiver(table, group.defining_character())
    ade = identify_affine_ade(quiver)
    report = quiver_checks(quiver, group.size)
    diagnostics = [] if report.passed else [f"failed checks: {report.failures}"]
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(_quiver_dot(quiver, f"{group.name} ({ade})"))
        diagnostics.append(f"DOT written to {args.dot}")
    result = {
        "name": group.name,
        "type": str(ade),
        "adjacency": [list(row) for row in quiver.adjacency],
        "node_dims": list(quiver.node_dims),
        "affine_node_index": quiver.affine_node_index,
        "checks_passed": report.passed,
    }
    human = [f"{group.name}: {ade}, node dims {list(quiver.node_dims)} "
             f"(affine node {quiver.affine_node_index})"]
    human += ["  " + " ".join(str(x) for x in row) for row in quiver.adjacency]
    return _emit(args, "quiver", result, diagnostics, human=human)


def _cmd_moonshine(args, parser):
    if args.moonshine_command == "decompose":
        dims = load_monster_dims(args.monster_dims)
        if args.coeff_index < 1:
            parser.error("--coeff-index must be >= 1")
        series = j_invariant(args.coeff_index)
        target = series.coefficient(args.coeff_index)
        if target.denominator != 1:
            raise ArithmeticError("non-integer j coefficient")
        diagnostics = []
        if args.max_irreps > MONSTER_VERIFIED_PREFIX:
            diagnostics.append(
                "bundled dimensions beyond the first "
                f"{MONSTER_VERIFIED_PREFIX} are placeholders; supply a complete "
                "table via --monster-dims for trustworthy results"
            )
        found = enumerate_decompositions(int(target), dims, args.max_irreps, args.max_mult)
        result = {
            "coeff_index": args.coeff_index,
            "target": str(target),
            "max_irreps": args.max_irreps,
            "max_mult": args.max_mult,
            "decompositions": [
                {
                    "multiplicities": list(d.multiplicity_vector(args.max_irreps)),
                    "pretty": d.describe(),
                }
                for d in found
            ],
        }
        human = [f"c_{args.coeff_index} = {target}: {len(found)} decompositions"]
        human += [f"  {d.describe()}" for d in found]
        return _emit(args, "moonshine decompose", result, diagnostics, human=human)
    if args.moonshine_command == "meaning-of-life":
        residue = meaning_of_life(args.source)
        result = {"source": args.source, "window": "q^1..q^24", "residue_mod_70": residue}
        return _emit(args, "moonshine meaning-of-life", result,
                     human=[f"{args.source}: sum of squares over q^1..q^24 mod 70 = {residue}"])
    # order-check
    ok = monster_order_check()
    result = {"order": str(MONSTER_ORDER), "holds": ok}
    return _emit(args, "moonshine order-check", result,
                 human=[f"order factorization holds: {ok}"])


def _report_payload(report):
    return {
        "group": report.group_name,
        "p": report.prime,
        "group_size": report.group_size,
        "sylow_size": report.sylow_size,
        "normalizer_size": report.normalizer_size,
        "count_group": report.count_group,
        "count_normalizer": report.count_normalizer,
        "degrees_group": list(report.degrees_group),
        "degrees_normalizer": list(report.degrees_normalizer),
        "holds": report.holds,
    }


def _cmd_conjecture(args, parser):
    if args.all_builders:
        reports = []
        for group in battery_groups():
            for p in primes_dividing(group.size):
                reports.append(mckay_check(group, p))
        result = [_report_payload(r) for r in reports]
        human = [
            f"{r.group_name:20s} p={r.prime}: |S|={r.sylow_size} |N|={r.normalizer_size} "
            f"{r.count_group} = {r.count_normalizer} -> {'holds' if r.holds else 'FAILS'}"
            for r in reports
        ]
        return _emit(args, "conjecture --all-builders", result, human=human)
    if not args.name or args.p is None:
        parser.error("conjecture needs --name and --p (or --all-builders)")
    if not groups.is_prime(args.p):
        parser.error(f"--p must be prime, got {args.p}")
    group = groups.build_named_group(args.name)
    report = mckay_check(group, args.p)
    human = [
        f"{report.group_name}, p={report.prime}: sylow size {report.sylow_size}, "
        f"normalizer size {report.normalizer_size}",
        f"degrees prime to p in group:      {list(report.degrees_group)}",
        f"degrees prime to p in normalizer: {list(report.degrees_normalizer)}",
        f"counts {report.count_group} = {report.count_normalizer}: "
        f"{'holds' if report.holds else 'FAILS'}",
    ]
    return _emit(args, "conjecture", _report_payload(report), human=human)


def _cmd_selfcheck(args, parser):
    ok = run_selfcheck()
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mckay-lab",
        description="Exact-arithmetic toolkit: moonshine, the McKay correspondence, "
                    "and the McKay conjecture at desk scale.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="q-expansions over exact rationals")
    p_series.add_argument("kind", choices=["j", "eisenstein", "delta", "j-cube-root"])
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--weight", type=int)
    p_series.add_argument("--json", action="store_true")
    p_series.set_defaults(handler=_cmd_series)

    p_group = sub.add_parser("group", help="builder groups and their classes")
    group_sub = p_group.add_subparsers(dest="group_command", required=True)
    p_info = group_sub.add_parser("info")
    p_info.add_argument("--name", required=True)
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(handler=_cmd_group)

    p_chartab = sub.add_parser("chartab", help="exact character tables")
    p_chartab.add_argument("--name", required=True)
    p_chartab.add_argument("--json", action="store_true")
    p_chartab.set_defaults(handler=_cmd_chartab)

    p_quiver = sub.add_parser("quiver", help="tensor quivers and their affine type")
    p_quiver.add_argument("--name", required=True)
    p_quiver.add_argument("--dot", metavar="PATH")
    p_quiver.add_argument("--json", action="store_true")
    p_quiver.set_defaults(handler=_cmd_quiver)

    p_moon = sub.add_parser("moonshine", help="monster dimension numerology")
    moon_sub = p_moon.add_subparsers(dest="moonshine_command", required=True)
    p_dec = moon_sub.add_parser("decompose")
    p_dec.add_argument("--coeff-index", type=int, required=True)
    p_dec.add_argument("--max-irreps", type=int, default=6)
    p_dec.add_argument("--max-mult", type=int, default=3)
    p_dec.add_argument("--monster-dims", metavar="PATH")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(handler=_cmd_moonshine)
    p_mol = moon_sub.add_parser("meaning-of-life")
    p_mol.add_argument("--source", choices=["tau", "j"], required=True)
    p_mol.add_argument("--monster-dims", metavar="PATH")
    p_mol.add_argument("--json", action="store_true")
    p_mol.set_defaults(handler=_cmd_moonshine)
    p_ord = moon_sub.add_parser("order-check")
    p_ord.add_argument("--monster-dims", metavar="PATH")
    p_ord.add_argument("--json", action="store_true")
    p_ord.set_defaults(handler=_cmd_moonshine)

    p_conj = sub.add_parser("conjecture", help="prime-to-p character counts")
    p_conj.add_argument("--name")
    p_conj.add_argument("--p", type=int)
    p_conj.add_argument("--all-builders", action="store_true")
    p_conj.add_argument("--json", action="store_true")
    p_conj.set_defaults(handler=_cmd_conjecture)

    p_self = sub.add_parser("selfcheck", help="run the classical-value battery")
    p_self.add_argument("--json", action="store_true")
    p_self.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except (ValueError, ArithmeticError, OSError, groups.GroupTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
