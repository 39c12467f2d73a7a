"""
Command-line front end.

    doobcodes params --gamma 0 --delta 3
    doobcodes construct --preset d814 -o m.txt
    doobcodes construct --gamma 2 --delta 3 --npp 7 -o m.txt
    doobcodes verify m.txt
    doobcodes decode m.txt 0000000000000000|00|0001
    doobcodes analyze d707-qc --weight3

Matrix arguments accept a DOOBPC file path or a preset name. Exit status is
0 on success (or a true verdict), 1 on a false verdict, 2 on usage or I/O
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, check_matrix, constructions
from .check_matrix import CheckMatrix, MatrixFormatError
from .doob_space import format_vertex, parse_vertex

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2
MAX_LISTED = 20


class UsageError(Exception):
    pass


def _load(source: str) -> CheckMatrix:
    path = Path(source)
    if not path.exists() and source in constructions.PRESETS:
        return constructions.PRESETS[source]()
    try:
        return check_matrix.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror or exc}") from exc
    except MatrixFormatError as exc:
        raise UsageError(f"{source}: {exc}") from exc


def _shape_line(M: CheckMatrix) -> str:
    s = M.shape
    return f"rows={M.rows} m={s.m} nprime={s.nprime} npp={s.npp}"


def cmd_params(args) -> int:
    for p in constructions.admissible_params(args.gamma, args.delta):
        print(f"m={p.m} nprime={p.nprime} npp={p.npp}")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.preset:
        if any(v is not None for v in (args.gamma, args.delta, args.npp)):
            raise UsageError("--preset cannot be combined with --gamma/--delta/--npp")
        M = constructions.PRESETS[args.preset]()
    else:
        if any(v is None for v in (args.gamma, args.delta, args.npp)):
            raise UsageError("need --preset or all of --gamma, --delta, --npp")
        try:
            M = constructions.construct(args.gamma, args.delta, args.npp)
        except constructions.ConstructionError as exc:
            raise UsageError(str(exc)) from exc
    report = check_matrix.verify_perfect(M)
    if not report.is_perfect:
        print(f"internal error: constructed matrix {M.shape} is not 1-perfect", file=sys.stderr)
        return EXIT_FALSE
    try:
        check_matrix.save(M, args.output)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from exc
    print(f"shape=({M.shape.m},{M.shape.nprime},{M.shape.npp}) {_shape_line(M)}")
    print(f"subgroup={report.subgroup_size} verified=true")
    print(f"wrote {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    M = _load(args.matrix)
    r = check_matrix.verify_perfect(M)
    print(f"perfect: {str(r.is_perfect).lower()}")
    print(_shape_line(M))
    print(f"subgroup={r.subgroup_size} weight1={r.weight1_count}")
    print("zero_columns: " + (" ".join(map(str, r.zero_columns)) or "none"))
    print(f"zero_syndrome_errors: {len(r.zero_syndrome_errors)}")
    for pat in r.zero_syndrome_errors[:MAX_LISTED]:
        print(f"  {pat}")
    print(f"duplicate_syndromes: {len(r.duplicate_syndromes)}")
    for s, pats in r.duplicate_syndromes[:MAX_LISTED]:
        print(f"  {''.join(map(str, s))} <- " + ", ".join(map(str, pats)))
    return EXIT_OK if r.is_perfect else EXIT_FALSE


def cmd_decode(args) -> int:
    M = _load(args.matrix)
    try:
        word = parse_vertex(args.word, M.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        table = analysis.build_decoder(M)
    except analysis.NotPerfect as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    print(format_vertex(analysis.decode(table, word)))
    return EXIT_OK


def cmd_analyze(args) -> int:
    M = _load(args.matrix)
    if args.cyclic and M.shape.nprime:
        raise UsageError("cyclic analysis needs nprime = 0")
    if not check_matrix.verify_perfect(M).is_perfect:
        print("error: matrix is not 1-perfect", file=sys.stderr)
        return EXIT_FALSE
    if args.weight3:
        w = analysis.weight3_last_part(M)
        print(f"order2={w.order2_count} order4={w.order4_count}")
        return EXIT_OK
    try:
        cycles = analysis.quasi_cyclic_permutation(M)
    except analysis.NotQuasiCyclic:
        print("not quasi-cyclic")
        return EXIT_FALSE
    except ValueError as exc:  # no built-in ring for this row count
        raise UsageError(str(exc)) from exc
    lengths = sorted({len(c) for c in cycles})
    print(f"cycles={len(cycles)} length={','.join(map(str, lengths))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doobcodes", description="Additive 1-perfect codes in Doob graphs"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("params", help="list admissible (m, n', n'')")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("construct", help="build, verify and write a check matrix")
    p.add_argument("--preset", choices=sorted(constructions.PRESETS))
    p.add_argument("--gamma", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--npp", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check 1-perfectness of a matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", help="correct a single error")
    p.add_argument("matrix")
    p.add_argument("word")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("analyze", help="weight-3 counts or quasi-cyclic structure")
    p.add_argument("matrix")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--weight3", action="store_true")
    mode.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
