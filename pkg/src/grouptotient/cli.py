"""Command-line interface.

Subcommands:
  summarize --spec SPEC | --file PATH     per-group summary as JSON
  suite SUITE_ID [--param k=v]...         run one verification suite
  scan --family NAME --max-order N        scan a built-in family
  scan --catalogue DIR                    scan an ingested catalogue
  gauss --limit N                         classical divisor-sum identity

Spec strings: cyclic:6, abelian:2,2,4, dihedral:6, quaternion:16,
semidihedral:16, modular:3,4, heisenberg:3, sdp:7,3,2, and
product:(cyclic:4)x(cyclic:9).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalogue import load_catalogue, read_cayley_table
from .errors import GroupError
from .groups import DEFAULT_MAX_ORDER, construct
from .lattice import DEFAULT_MAX_SUBGROUPS
from .reports import canonical_json, to_csv, write_report
from .verify import (
    SCAN_FAMILIES,
    SUITE_IDS,
    family_specs,
    run_scan,
    run_suite,
    summarize,
    verify_classical_gauss,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouptotient",
        description="Totients and Gauss sums of finite groups over complete subgroup lattices.",
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help="cap on constructed group orders (default %(default)s)",
    )
    parser.add_argument(
        "--max-subgroups",
        type=int,
        default=None,
        help="cap on enumerated subgroups per group (default: command-specific)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="parallel workers for scans (default 1)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize one group")
    source = p_sum.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec", help="group spec string, e.g. dihedral:6")
    source.add_argument("--file", help="path to a Cayley-table file")
    _add_output_options(p_sum)

    p_suite = sub.add_parser("suite", help="run a verification suite")
    p_suite.add_argument("suite_id", choices=SUITE_IDS)
    p_suite.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="K=V",
        help="integer suite parameter, repeatable (e.g. --param n_max=40)",
    )
    _add_output_options(p_suite)

    p_scan = sub.add_parser("scan", help="scan a family or catalogue for class members")
    target = p_scan.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", choices=SCAN_FAMILIES)
    target.add_argument("--catalogue", help="directory of .cayley/.gens files")
    p_scan.add_argument(
        "--scan-max-order",
        type=int,
        default=None,
        help="family order bound (defaults to --max-order)",
    )
    p_scan.add_argument("--csv", help="also write the per-group CSV summary to this path")
    _add_output_options(p_scan)

    p_gauss = sub.add_parser("gauss", help="check the classical divisor-sum identity")
    p_gauss.add_argument("--limit", type=int, default=1000)
    _add_output_options(p_gauss)
    return parser


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write the report to this path instead of stdout")
    parser.add_argument(
        "--format", choices=("json", "csv"), default="json", help="report format for --out"
    )


def _emit(result, args, summary_id: str = "group") -> None:
    if args.out:
        if args.format == "csv":
            with open(args.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(to_csv(result, summary_id=summary_id))
        else:
            write_report(result, args.out, format=args.format)
    elif args.format == "csv":
        sys.stdout.write(to_csv(result, summary_id=summary_id))
    else:
        sys.stdout.write(canonical_json(result))


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise GroupError(f"malformed --param {pair!r}; expected K=V")
        try:
            params[key] = int(value)
        except ValueError:
            raise GroupError(f"suite parameters must be integers; got {pair!r}") from None
    return params


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "summarize":
        if args.spec:
            group = construct(args.spec, max_order=args.max_order)
            summary_id = str(group.spec)
        else:
            group = read_cayley_table(args.file)
            summary_id = Path(args.file).stem
        caps = {} if args.max_subgroups is None else {"max_subgroups": args.max_subgroups}
        _emit(summarize(group, **caps), args, summary_id=summary_id)
        return 0

    if args.command == "suite":
        kwargs = {"max_order": args.max_order}
        if args.max_subgroups is not None:
            kwargs["max_subgroups"] = args.max_subgroups
        result = run_suite(args.suite_id, _parse_params(args.param), **kwargs)
        _emit(result, args)
        return 0 if result.all_pass else 1

    if args.command == "gauss":
        result = verify_classical_gauss(args.limit)
        _emit(result, args)
        return 0 if result.all_pass else 1

    # scan
    if args.family:
        bound = args.scan_max_order if args.scan_max_order is not None else args.max_order
        corpus = family_specs(args.family, bound)
    else:
        corpus = load_catalogue(Path(args.catalogue))
    caps = args.max_subgroups if args.max_subgroups is not None else DEFAULT_MAX_SUBGROUPS
    result = run_scan(corpus, max_order=args.max_order, max_subgroups=caps, jobs=args.jobs)
    _emit(result, args)
    if args.csv:
        write_report(result, args.csv, format="csv")
    for skip in result.skipped:
        print(f"skipped {skip['id']}: {skip['reason']}", file=sys.stderr)
    return 0 if result.clean else 1


if __name__ == "__main__":
    raise SystemExit(main())
