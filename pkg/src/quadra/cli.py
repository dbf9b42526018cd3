"""Command-line front end: census, predicate checks, detectors, witness search.

Exit codes for `witness`: 0 witness found, 2 certified impossible,
3 inconclusive, 1 input error. All randomness flows from --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import binmat, census, equivalence, forbidden, witness
from .binmat import BinMatrix, MatrixFormatError


def _default_jobs():
    env = os.environ.get("QUADRA_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _read_matrix(path):
    with open(path, "r", encoding="utf-8") as fh:
        return BinMatrix.from_text(fh.read())


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_counts(args):
    counts = census.count_table(args.max_degree, jobs=args.jobs)
    if args.format == "json":
        text = _dump_json({"max_degree": args.max_degree, "sequences": counts})
    else:
        lines = [f"{name}: {' '.join(map(str, counts[name]))}" for name in census.SEQUENCE_NAMES]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def cmd_enumerate(args):
    filt = census.CensusFilter(
        indecomposable=args.indecomposable,
        symmetric=args.symmetric,
        regular=args.regular,
        sigma=args.sigma,
    )
    table = census.enumerate_classes(args.degree, filt, jobs=args.jobs)
    if args.format == "json":
        text = _dump_json(table.to_json())
    elif args.format == "csv":
        lines = ["degree,rows,aut_order,S,T,R,N,zeros"]
        for rec in table.entries:
            flags = rec.to_json()["flags"]
            lines.append(
                ",".join(
                    [
                        str(rec.matrix.n),
                        "|".join(rec.matrix.row_strings()),
                        str(rec.aut_order),
                        str(int(flags["S"])),
                        str(int(flags["T"])),
                        str(int(flags["R"])),
                        str(int(flags["N"])),
                        str(rec.zeros),
                    ]
                )
            )
        text = "\n".join(lines) + "\n"
    else:
        blocks = []
        for rec in table.entries:
            meta = f"# aut={rec.aut_order} flags={rec.flag_string() or '-'} zeros={rec.zeros}"
            blocks.append(rec.matrix.to_text() + meta + "\n")
        blocks.append(f"# total classes: {table.total_classes}\n")
        text = "\n".join(blocks)
    _emit(text, args.output)
    return 0


def cmd_check(args):
    m = _read_matrix(args.file)
    yn = lambda b: "yes" if b else "no"
    lines = [
        f"degree: {m.n}",
        f"zeros: {binmat.zero_count(m)}",
        f"row sums: {' '.join(map(str, binmat.row_sum_multiset(m)))}",
        f"zero line: {yn(binmat.has_zero_line(m))}",
        f"quadrangular: {yn(binmat.is_quadrangular(m))}",
        f"SQ: {yn(binmat.is_strongly_quadrangular(m))}",
        f"indecomposable: {yn(binmat.is_indecomposable(m))}",
        f"regular: {yn(binmat.is_regular(m))}",
        f"aut order: {equivalence.aut_group_order(m)}",
        f"symmetric equivalent (S): {yn(equivalence.is_symmetric_equivalent(m))}",
        f"transpose inequivalent (T): {yn(not equivalence.is_transpose_equivalent(m))}",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_detect(args):
    m = _read_matrix(args.file)
    cond = forbidden.detect_cond(m)
    newcond = forbidden.detect_newcond(m)
    if args.format == "json":
        text = _dump_json(
            {
                "CondK": cond.to_json() if cond else None,
                "NewCond": newcond.to_json() if newcond else None,
            }
        )
    else:
        lines = []
        for name, emb in (("CondK", cond), ("NewCond", newcond)):
            if emb is None:
                lines.append(f"{name}: none")
            else:
                lines.append(f"{name}: {json.dumps(emb.to_json(), sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def cmd_witness(args):
    m = _read_matrix(args.file)
    result = witness.find_witness(
        m,
        restarts=args.restarts,
        iterations=args.iters,
        support_tol=args.support_tol,
        unitary_tol=args.unitary_tol,
        seed=args.seed,
    )
    payload = {
        "status": result.status.value,
        "degree": m.n,
        "restarts_used": result.restarts_used,
        "final_residual": result.final_residual,
        "certificate": result.certificate.to_json() if result.certificate else None,
        "entries": None,
    }
    if result.witness is not None:
        payload["entries"] = [
            [float(v.real), float(v.imag)] for v in result.witness.flatten()
        ]
    report = (
        f"status: {result.status.value}\n"
        f"restarts used: {result.restarts_used}\n"
        f"final residual: {result.final_residual:.3e}\n"
    )
    if result.certificate is not None:
        report += f"certificate: {json.dumps(result.certificate.to_json(), sort_keys=True)}\n"
    sys.stdout.write(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(payload))
    if result.status is witness.WitnessStatus.WITNESS:
        return 0
    if result.status is witness.WitnessStatus.CERTIFIED_IMPOSSIBLE:
        return 2
    return 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadra",
        description="Census, forbidden-structure detection, and unitary witnesses "
        "for strongly quadrangular (0,1)-matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("counts", help="the six census count sequences")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("enumerate", help="equivalence classes of SQ matrices")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--indecomposable", action="store_true")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--regular", action="store_true")
    p.add_argument("--sigma", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="predicates and flags for one matrix file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("detect", help="forbidden-structure certificates for one matrix file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("witness", help="search for a unitary realizing the pattern")
    p.add_argument("file")
    p.add_argument("--restarts", type=int, default=witness.DEFAULT_RESTARTS)
    p.add_argument("--iters", type=int, default=witness.DEFAULT_ITERATIONS)
    p.add_argument("--support-tol", type=float, default=witness.DEFAULT_SUPPORT_TOL)
    p.add_argument("--unitary-tol", type=float, default=witness.DEFAULT_UNITARY_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
