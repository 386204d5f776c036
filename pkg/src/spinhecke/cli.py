"""Command-line front end: verification suites, tables, element printing.

Output is deterministic: identical invocations produce identical bytes
(elapsed_ms stays null unless --timings is passed).  Exit status is 0 when
no selected check fails, 1 when any check fails, 2 on argument errors.
SPINHECKE_WORKERS sets the worker count for suite runs (default 1);
reports are assembled in a fixed order regardless of scheduling.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import (
    format_element,
    jm_elements,
    kappa_shifted,
    rho,
    sergeev_idempotent,
    sigma_t,
    tau,
)
from .tableaux import ShiftedTableau, StrictPartition, parse_partition, parse_tableau
from .verify import (
    ALGEBRA_LIMIT,
    CLOSURE_LIMIT,
    TENSOR_LIMIT,
    decomposition_csv,
    decomposition_table,
    lambda_jobs,
    reports_json,
    run_jobs,
    suite_jobs,
    verify_jm_commutation,
    verify_nazarov_identity,
    verify_spin_relations,
)

JM_PREFIX = {"classical": "x", "odd": "pi", "nazarov": "x"}


def _workers() -> int:
    raw = os.environ.get("SPINHECKE_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _reports_text(reports) -> str:
    lines = []
    for r in reports:
        params = " ".join(f"{key}={val}" for key, val in sorted(r.params.items()))
        head = f"{r.status.upper():<7} {r.check_id}"
        if params:
            head += f"  {params}"
        if r.elapsed_ms is not None:
            head += f"  [{r.elapsed_ms} ms]"
        lines.append(head)
        for w in r.witnesses:
            lines.append(f"        {w}")
        if r.notes:
            lines.append(f"        note: {r.notes}")
    npass = sum(r.status == "pass" for r in reports)
    nfail = sum(r.status == "fail" for r in reports)
    nskip = sum(r.status == "skipped" for r in reports)
    lines.append(f"{npass} passed, {nfail} failed, {nskip} skipped")
    return "\n".join(lines) + "\n"


def _exit_code(reports) -> int:
    return 0 if all(r.passed for r in reports) else 1


def _guard_k(parser, k: int, allow_large: bool) -> None:
    if k < 1:
        parser.error(f"k must be positive, got {k}")
    if k > ALGEBRA_LIMIT and not allow_large:
        parser.error(
            f"k = {k} exceeds the k <= {ALGEBRA_LIMIT} guardrail; pass --allow-large to override")


def _parse_strict(parser, text: str) -> StrictPartition:
    try:
        return StrictPartition(parse_partition(text))
    except ValueError as exc:
        parser.error(f"bad partition {text!r}: {exc}")


def _parse_shifted(parser, args) -> ShiftedTableau:
    """Tableau from --tableau row-lists, or the columnwise filling of --lambda."""
    if args.tableau:
        try:
            return ShiftedTableau(parse_tableau(args.tableau))
        except ValueError as exc:
            parser.error(f"bad tableau {args.tableau!r}: {exc}")
    if args.lam:
        return ShiftedTableau.columnwise(_parse_strict(parser, args.lam))
    parser.error("need --tableau or --lambda")


def _run_reports(args, parser, jobs, extra) -> int:
    reports = run_jobs(jobs, workers=_workers(), timings=args.timings)
    if args.format == "json":
        text = reports_json(reports, extra=extra)
    else:
        text = _reports_text(reports)
    _emit(text, args.out)
    return _exit_code(reports)


def _cmd_relations(args, parser) -> int:
    _guard_k(parser, args.k, args.allow_large)
    jobs = [
        (verify_spin_relations, (args.k,)),
        (verify_jm_commutation, (args.k,)),
        (verify_nazarov_identity, (args.k,)),
    ]
    return _run_reports(args, parser, jobs, {"k": args.k})


def _cmd_verify(args, parser) -> int:
    if (args.k is None) == (args.lam is None):
        parser.error("need exactly one of --k or --lambda")
    if args.k is not None:
        _guard_k(parser, args.k, args.allow_large)
        return _run_reports(args, parser, suite_jobs(args.k, args.allow_large), {"k": args.k})
    lam = _parse_strict(parser, args.lam)
    _guard_k(parser, lam.k, args.allow_large)
    return _run_reports(args, parser, lambda_jobs(lam, args.allow_large), {"lambda": str(lam)})


def _cmd_decompose(args, parser) -> int:
    if args.n < 1 or args.k < 1:
        parser.error("n and k must be positive")
    if (args.n > 2 or args.k > TENSOR_LIMIT) and not args.allow_large:
        parser.error(
            f"decompose is guarded to n <= 2, k <= {TENSOR_LIMIT}; pass --allow-large to override")
    rows, report = decomposition_table(args.n, args.k)
    if args.format == "csv":
        text = decomposition_csv(rows)
    elif args.format == "json":
        import json

        text = json.dumps(
            {"rows": rows, "report": report.to_dict()}, sort_keys=True, indent=2) + "\n"
    else:
        cols = ["lambda", "dim_M", "dim_R", "g", "delta", "dim_qspan"]
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
        lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
        for r in rows:
            lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in cols))
        lines.append(f"{report.status}: {'; '.join(report.witnesses)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if report.passed else 1


def _element_lines(args, parser) -> list[str]:
    kind = args.kind
    if kind == "tau":
        if args.k is None or args.i is None or args.j is None:
            parser.error("tau needs --k, --i, --j")
        _guard_k(parser, args.k, args.allow_large)
        try:
            return [format_element(tau(args.k, args.i, args.j))]
        except ValueError as exc:
            parser.error(str(exc))
    if kind == "jm":
        if args.k is None:
            parser.error("jm needs --k")
        _guard_k(parser, args.k, args.allow_large)
        elems = jm_elements(args.k, kind=args.family)
        name = JM_PREFIX[args.family]
        if args.i is not None:
            if not 1 <= args.i <= args.k:
                parser.error(f"--i must be in 1..{args.k}")
            return [format_element(elems[args.i - 1])]
        return [f"{name}_{i} = {format_element(e)}" for i, e in enumerate(elems, start=1)]
    if kind == "e_k":
        if args.k is None:
            parser.error("e_k needs --k")
        _guard_k(parser, args.k, args.allow_large)
        return [format_element(sergeev_idempotent(args.k))]
    t = _parse_shifted(parser, args)
    _guard_k(parser, t.k, args.allow_large)
    builder = {"kappa": kappa_shifted, "rho": rho, "sigma_t": sigma_t}[kind]
    return [format_element(builder(t))]


def _cmd_element(args, parser) -> int:
    lines = _element_lines(args, parser)
    if args.format == "json":
        import json

        text = json.dumps({"kind": args.kind, "elements": lines},
                          sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinhecke",
        description="Exact verification suites and element printing for the "
                    "Hecke-Clifford algebra and its tensor action.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--format", choices=formats, default=formats[0],
                       help=f"output format (default {formats[0]})")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument("--allow-large", action="store_true",
                       help="override the size guardrails")

    p = sub.add_parser("relations", help="check the defining relations in H_k")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.add_argument("--timings", action="store_true", help="record per-check wall time")
    p.set_defaults(fn=_cmd_relations)

    p = sub.add_parser("verify", help="run the verification suite for k or one lambda")
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", metavar="PARTS",
                   help='strict partition literal like "3,1"')
    common(p)
    p.add_argument("--timings", action="store_true", help="record per-check wall time")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("decompose", help="tensor-space decomposition table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p, formats=("json", "csv", "text"))
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("element", help="print a named element of H_k")
    p.add_argument("--kind", required=True,
                   choices=["tau", "jm", "kappa", "rho", "e_k", "sigma_t"])
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--family", choices=sorted(JM_PREFIX), default="classical",
                   help="JM family for --kind jm")
    p.add_argument("--lambda", dest="lam", metavar="PARTS",
                   help="strict partition; uses its columnwise standard filling")
    p.add_argument("--tableau", metavar="ROWS", help='row lists like "1,2;3"')
    p.add_argument("--print", action="store_true", dest="print_",
                   help="print to stdout (the default)")
    common(p, formats=("text", "json"))
    p.set_defaults(fn=_cmd_element)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args, parser)


if __name__ == "__main__":
    sys.exit(main())
