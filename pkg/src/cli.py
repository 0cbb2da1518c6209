"""
Command-line surface: count, enumerate, map, render, verify and table.

Exit codes: 0 success, 1 domain error, 2 verification mismatch, 64 malformed
arguments (usage on stderr).
"""

import argparse
import json
import logging
import sys
from math import gcd
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from src.combinatorics.abacus import render_abacus, render_abacus_svg
from src.combinatorics.bijections import core_to_path, path_to_core, phi, phi_inverse
from src.combinatorics.counting import evaluate, formula_parameters
from src.combinatorics.oracle import enumerate_cores, enumerate_sc_cores
from src.combinatorics.partition_core import parse_partition
from src.combinatorics.paths import (
    enumerate_free_rational,
    enumerate_gen_dyck,
    enumerate_motzkin,
    enumerate_rational_motzkin,
    gen_dyck_vertices,
    parse_gen_dyck,
    parse_word,
    render_gen_dyck_svg,
    render_path_svg,
    render_path_text,
)
from src.models.errors import ParameterError
from src.models.lattice_path import RationalMotzkinPath
from src.models.partition import CoreFamily
from src.models.results import FormulaId, OutputFormat
from src.orchestrator import STEPS, VerificationOrchestrator

logger = logging.getLogger("CLI")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with EX_USAGE instead of argparse's 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(command: str, params: Dict[str, Any], result: Any) -> None:
    payload = {"command": command, "params": params, "result": result}
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _parse_moduli(text: str) -> List[int]:
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError as e:
        raise ParameterError(f"moduli must look like 3,5,7, got {text!r}") from e


def _family(args: argparse.Namespace) -> CoreFamily:
    if getattr(args, "family", None):
        return CoreFamily.parse(args.family)
    if args.s is None or args.d is None or args.p is None:
        raise ParameterError("a family needs --family s,d,p or all of --s, --d and --p")
    return CoreFamily(s=args.s, d=args.d, p=args.p)


def _family_params(fam: CoreFamily) -> Dict[str, int]:
    return {"s": fam.s, "d": fam.d, "p": fam.p}


def _moduli(args: argparse.Namespace) -> List[int]:
    if args.moduli:
        return _parse_moduli(args.moduli)
    return list(_family(args).moduli)


def _parse_rows(text: str) -> range:
    """argparse type for --rows: an inclusive, non-empty range a:b."""
    try:
        low, high = (int(piece) for piece in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"rows must look like a:b, got {text!r}") from e
    if low > high:
        raise argparse.ArgumentTypeError(f"rows {text!r} run backwards")
    return range(low, high + 1)


def _one_line(error: ValueError) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(detail["msg"] for detail in error.errors())
    return str(error)


def _count(args: argparse.Namespace) -> int:
    if args.moduli:
        result = evaluate(FormulaId.ORACLE, moduli=_parse_moduli(args.moduli),
                          self_conjugate=args.self_conjugate)
    elif args.formula:
        result = evaluate(args.formula, s=args.s, d=args.d, p=args.p, k=args.k, t=args.t,
                          n=args.n, m=args.m, ell=args.ell)
    elif args.self_conjugate:
        if args.d in (None, 1):
            result = evaluate(FormulaId.SC_MAIN, s=args.s, p=args.p)
        else:
            result = evaluate(FormulaId.ORACLE, moduli=list(_family(args).moduli), self_conjugate=True)
    elif args.corners is not None:
        if args.d not in (None, 1):
            raise ParameterError("corner counts are only known for d = 1")
        result = evaluate(FormulaId.CORNERS, s=args.s, p=args.p, k=args.corners)
    elif args.k is not None:
        result = evaluate(FormulaId.MAINPROP, s=args.s, d=args.d, p=args.p, k=args.k)
    else:
        result = evaluate(FormulaId.MAIN, s=args.s, d=args.d, p=args.p)

    if args.format == "json":
        _emit_json("count", result.parameters,
                   {"formula_id": result.formula_id.value, "value": result.value})
    else:
        _emit(str(result.value))
    return EXIT_OK


def _enumerate(args: argparse.Namespace) -> int:
    params: Dict[str, Any] = {"kind": args.kind}
    if args.kind in ("cores", "sc-cores"):
        moduli = _moduli(args)
        params["moduli"] = moduli
        found = enumerate_cores(moduli) if args.kind == "cores" else enumerate_sc_cores(moduli)
        items = [str(core) for core in found]
    elif args.kind in ("paths", "free-paths"):
        if args.kind == "paths":
            fam = _family(args)
            params.update(_family_params(fam))
            items = [path.word for path in enumerate_rational_motzkin(fam.s, fam.d, fam.p)]
        else:
            if args.s is None or args.d is None:
                raise ParameterError("free paths need --s and --d")
            params.update({"s": args.s, "d": args.d})
            items = [path.word for path in enumerate_free_rational(args.s, args.d)]
    elif args.kind == "motzkin":
        length = args.length if args.length is not None else args.s
        if length is None:
            raise ParameterError("motzkin paths need --length")
        p = args.p if args.p is not None else 2
        params.update({"length": length, "p": p})
        items = enumerate_motzkin(length, p)
    else:
        if args.s is None or args.p is None:
            raise ParameterError("generalized Dyck paths need --s and --p")
        params.update({"s": args.s, "p": args.p})
        items = [str(path) for path in enumerate_gen_dyck(args.s, args.p)]

    logger.info(f"Enumerated {len(items)} {args.kind}")
    if args.format == "json":
        _emit_json("enumerate", params, {"count": len(items), "items": items})
    else:
        sys.stdout.write("".join(item + "\n" for item in items))
    return EXIT_OK


def _map(args: argparse.Namespace) -> int:
    params: Dict[str, Any] = {"operation": args.operation}
    if args.operation in ("core-to-path", "path-to-core"):
        fam = _family(args)
        params.update(_family_params(fam))
        if args.operation == "core-to-path":
            if args.partition is None:
                raise ParameterError("core-to-path needs --partition")
            partition = parse_partition(args.partition)
            params["partition"] = str(partition)
            output = core_to_path(partition, fam).word
        else:
            if args.path is None:
                raise ParameterError("path-to-core needs --path")
            word = parse_word(args.path)
            params["path"] = word
            output = str(path_to_core(RationalMotzkinPath(word=word, s=fam.s, d=fam.d), fam))
    elif args.operation == "phi":
        if args.path is None or args.p is None:
            raise ParameterError("phi needs --path and --p")
        word = parse_word(args.path)
        params.update({"path": word, "p": args.p})
        output = str(phi(word, args.p))
    else:
        if args.path is None:
            raise ParameterError("phi-inverse needs --path")
        path = parse_gen_dyck(args.path, args.p)
        params.update({"path": str(path), "p": path.p})
        output = phi_inverse(path)

    if args.format == "json":
        _emit_json("map", params, {"output": output})
    else:
        _emit(output)
    return EXIT_OK


def _render(args: argparse.Namespace) -> int:
    svg = args.format == "svg"
    if args.what == "abacus":
        if args.partition is None or args.s is None:
            raise ParameterError("abacus rendering needs --partition and --s")
        partition = parse_partition(args.partition)
        rows = args.rows
        draw = render_abacus_svg if svg else render_abacus
        sys.stdout.write(draw(partition, args.s, args.d, rows))
    elif args.what == "path":
        if args.path is None:
            raise ParameterError("path rendering needs --path")
        word = parse_word(args.path)
        sys.stdout.write(render_path_svg(word, args.s, args.d) if svg else render_path_text(word))
    else:
        if args.path is None:
            raise ParameterError("generalized Dyck rendering needs --path")
        path = parse_gen_dyck(args.path, args.p)
        if svg:
            sys.stdout.write(render_gen_dyck_svg(path))
        else:
            _emit(" ".join(f"({x},{y})" for x, y in gen_dyck_vertices(path)))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    grid = tuple(args.grid)
    orchestrator = VerificationOrchestrator(workers=args.workers)
    report = orchestrator.run_pipeline(grid, args.steps)

    if args.format == "json":
        records = [record.model_dump(mode="json", include={"check", "family", "formula_value", "oracle_value", "match"})
                   for record in report.records]
        _emit_json("verify", {"grid": list(grid), "steps": args.steps or list(STEPS)},
                   {"passed": report.passed, "mismatches": len(report.mismatches), "records": records})
    else:
        for record in report.records:
            status = "ok" if record.match else "MISMATCH"
            family = ",".join(str(value) for value in record.family)
            detail = f"  {record.detail}" if record.detail else ""
            _emit(f"{status:8} {record.check:20} ({family}) {record.formula_value} "
                  f"{record.oracle_value}{detail}")
        _emit(f"{len(report.records)} checks, {len(report.mismatches)} mismatch(es)")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _table(args: argparse.Namespace) -> int:
    formula_id = FormulaId(args.formula)
    names = formula_parameters(formula_id)
    if not set(names) <= {"s", "d", "p"}:
        raise ParameterError(f"formula '{formula_id.value}' needs {', '.join(names)}; "
                             "tables only cover formulas of s, d and p")
    s_values = range(1, args.smax + 1) if "s" in names else [None]
    d_values = range(1, args.dmax + 1) if "d" in names else [None]
    p_values = range(2, args.pmax + 1) if "p" in names else [None]

    rows = []
    for s in s_values:
        for d in d_values:
            if s is not None and d is not None and gcd(s, d) != 1:
                continue
            for p in p_values:
                value = evaluate(formula_id, s=s, d=d, p=p).value
                rows.append({"s": s, "d": d, "p": p, "count": value})

    frame = pd.DataFrame(rows, columns=["s", "d", "p", "count"])
    for column in ("s", "d", "p"):
        frame[column] = frame[column].astype("Int64")
    params = {"formula": formula_id.value, "smax": args.smax, "dmax": args.dmax, "pmax": args.pmax}
    if args.format == "json":
        _emit_json("table", params, json.loads(frame.to_json(orient="records")))
    else:
        sys.stdout.write(frame.to_csv(index=False))
    return EXIT_OK


def _formats(*formats: OutputFormat) -> List[str]:
    return [f.value for f in formats]


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--s', type=int, help='First modulus s')
    parser.add_argument('--d', type=int, help='Common difference d')
    parser.add_argument('--p', type=int, help='Number of core conditions beyond s')


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog='core-motzkin',
        description='Simultaneous core partitions, rational Motzkin paths and their counts'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    count = subparsers.add_parser('count', help='Exact count from a closed formula or the oracle')
    _add_family_options(count)
    count.add_argument('--k', type=int, help='Number of up steps (count_mainprop)')
    count.add_argument('--corners', type=int, help='Number of corners (d = 1)')
    count.add_argument('--self-conjugate', action='store_true', help='Count self-conjugate cores')
    count.add_argument('--formula', choices=[f.value for f in FormulaId], help='Evaluate a named formula')
    count.add_argument('--moduli', help='Explicit moduli for an oracle count, e.g. 3,5,7')
    count.add_argument('--t', type=int, help='Second modulus for two-modulus formulas')
    count.add_argument('--n', type=int, help='Index for catalan/motzkin')
    count.add_argument('--m', type=int, help='Peaks for narayana')
    count.add_argument('--ell', type=int, help='UU factors for sym_dyck')
    count.add_argument('--format', choices=_formats(OutputFormat.TEXT, OutputFormat.JSON), default='text')
    count.set_defaults(handler=_count)

    enumerate_ = subparsers.add_parser('enumerate', help='List cores or paths')
    enumerate_.add_argument('kind', choices=['cores', 'sc-cores', 'paths', 'free-paths', 'motzkin', 'gen-dyck'])
    _add_family_options(enumerate_)
    enumerate_.add_argument('--family', help='Family as s,d,p')
    enumerate_.add_argument('--moduli', help='Explicit moduli, e.g. 3,5,7')
    enumerate_.add_argument('--length', type=int, help='Motzkin path length')
    enumerate_.add_argument('--format', choices=_formats(OutputFormat.TEXT, OutputFormat.JSON), default='text')
    enumerate_.set_defaults(handler=_enumerate)

    map_ = subparsers.add_parser('map', help='Apply a bijection')
    map_.add_argument('operation', choices=['core-to-path', 'path-to-core', 'phi', 'phi-inverse'])
    _add_family_options(map_)
    map_.add_argument('--family', help='Family as s,d,p')
    map_.add_argument('--partition', help='Partition as [a,b,c]')
    map_.add_argument('--path', help='Step word (UFD...) or generalized Dyck tokens ("U4 F1 D4")')
    map_.add_argument('--format', choices=_formats(OutputFormat.TEXT, OutputFormat.JSON), default='text')
    map_.set_defaults(handler=_map)

    render = subparsers.add_parser('render', help='Draw an abacus or a path')
    render.add_argument('what', choices=['abacus', 'path', 'gen-dyck'])
    _add_family_options(render)
    render.add_argument('--partition', help='Partition as [a,b,c]')
    render.add_argument('--path', help='Step word or generalized Dyck tokens')
    render.add_argument('--rows', type=_parse_rows, help='Abacus rows as a:b (use --rows=-2:3 for negative rows)')
    render.add_argument('--format', choices=_formats(OutputFormat.TEXT, OutputFormat.SVG), default='text')
    render.set_defaults(handler=_render)

    verify = subparsers.add_parser('verify', help='Compare formulas and bijections with the oracle')
    verify.add_argument('--grid', nargs=3, type=int, required=True, metavar=('SMAX', 'DMAX', 'PMAX'))
    verify.add_argument('--steps', nargs='+', choices=list(STEPS), help='Steps to run (default: all)')
    verify.add_argument('--workers', type=int, help='Worker processes (default from settings)')
    verify.add_argument('--format', choices=_formats(OutputFormat.TEXT, OutputFormat.JSON), default='text')
    verify.set_defaults(handler=_verify)

    table = subparsers.add_parser('table', help='Tabulate a formula over a grid')
    table.add_argument('--formula', choices=[f.value for f in FormulaId], default=FormulaId.MAIN.value)
    table.add_argument('--smax', type=int, required=True)
    table.add_argument('--dmax', type=int, default=1)
    table.add_argument('--pmax', type=int, default=2)
    table.add_argument('--format', choices=_formats(OutputFormat.CSV, OutputFormat.JSON), default='csv')
    table.set_defaults(handler=_table)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, dispatch to a subcommand and map errors to exit codes.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        The process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        return args.handler(args)
    except ValueError as e:
        message = _one_line(e)
        logger.error(f"{args.command} failed: {message}")
        sys.stderr.write(f"error: {message}\n")
        return EXIT_DOMAIN_ERROR
