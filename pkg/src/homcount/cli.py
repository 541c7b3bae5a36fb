"""Command-line surface.

Subcommands: count, enumerate, verify, export, series, asymptotic
(constants | ratios), expand, contract. Long flag names only; all values are
exact decimals (JSON exports carry them as strings, since they outgrow
53-bit floats early). Exit codes: 0 success, 1 check or runtime failure,
2 usage error. HOMCOUNT_CAP overrides the default brute-force cap of 7.
"""

from __future__ import annotations

import argparse
import json
import sys

from homcount import asymptotics, counting, enumeration, series, verify
from homcount.correspondence import (
    InvalidStructureError,
    contract_colored,
    contract_description,
    expand_colored,
    expand_model,
)
from homcount.counting import SEQUENCE_START, SequenceId
from homcount.enumeration import BruteForceCapError
from homcount.model import (
    colored_description_from_dict,
    colored_description_to_dict,
    description_from_dict,
    description_to_dict,
    model_from_dict,
    model_to_dict,
)

USAGE_ERROR = 2
FAILURE = 1

METHODS = {
    SequenceId.I: ("recurrence", "closed-form", "brute-force"),
    SequenceId.L: ("recurrence", "egf", "brute-force"),
    SequenceId.J_SURJECTIVE: ("recurrence", "egf", "brute-force"),
    SequenceId.K1: ("recurrence", "brute-force"),
    SequenceId.K2: ("recurrence", "brute-force"),
    SequenceId.FUBINI: ("recurrence", "egf", "brute-force"),
    SequenceId.I_CLOSED_NONEMPTY: ("closed-form", "brute-force"),
}

_EGF_BUILDERS = {
    SequenceId.L: series.egf_H,
    SequenceId.J_SURJECTIVE: series.egf_f,
    SequenceId.FUBINI: series.egf_fubini,
}


def _sequence(value: str) -> SequenceId:
    try:
        return SequenceId(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown sequence {value!r}; choose from "
            + ", ".join(s.value for s in SequenceId)
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcount",
        description="Exact counts of homogeneous colored linear orderings, "
        "cross-validated against brute-force enumeration, generating functions, "
        "and asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one sequence value")
    p.add_argument("--sequence", type=_sequence, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["recurrence", "closed-form", "egf", "brute-force"])
    p.add_argument("--cap", type=int, help="brute-force cap override (default 7)")

    p = sub.add_parser("enumerate", help="stream models as JSON lines")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--unconstrained", action="store_true", help="drop the R-adjacency rule")
    p.add_argument("--cap", type=int)

    p = sub.add_parser("verify", help="run the full cross-check battery")
    p.add_argument("--k-max", type=int, default=25)
    p.add_argument("--terms", type=int, default=25, help="generating-function order")
    p.add_argument("--cap", type=int)

    p = sub.add_parser("export", help="write a sequence as b-file, csv, or json")
    p.add_argument("--sequence", type=_sequence, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=["b-file", "csv", "json"], required=True)
    p.add_argument("--output", default="-", help="destination path, - for stdout")

    p = sub.add_parser("series", help="print a generating-function coefficient table")
    p.add_argument("--egf", choices=["H", "f", "fubini"], default="H")
    p.add_argument("--terms", type=int, default=10)

    p = sub.add_parser("asymptotic", help="singularity-analysis numbers")
    asub = p.add_subparsers(dest="asymptotic_command", required=True)
    asub.add_parser("constants", help="pole, residues, limit ratio, growth bound")
    pr = asub.add_parser("ratios", help="convergence table L/A and J/L")
    pr.add_argument("--k-max", type=int, default=12)

    p = sub.add_parser("expand", help="model JSON -> description JSON")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")

    p = sub.add_parser("contract", help="description JSON -> model JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--unconstrained", action="store_true", help="input is a colored description")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")

    return parser


def _count_value(seq: SequenceId, k: int, method: str, cap: int | None) -> int:
    if method == "recurrence" or (method == "closed-form" and seq == SequenceId.I_CLOSED_NONEMPTY):
        return counting.sequence_value(seq, k)
    if method == "closed-form":
        return counting.closed_form_I(k)
    if method == "egf":
        return series.egf_counts(_EGF_BUILDERS[seq](k), k)
    # brute force
    if seq in (SequenceId.I, SequenceId.L):
        return enumeration.count_by_enumeration(k, seq == SequenceId.I, cap=cap)
    if seq == SequenceId.I_CLOSED_NONEMPTY:
        return enumeration.count_by_enumeration(k, True, cap=cap) - 1
    if seq == SequenceId.J_SURJECTIVE:
        return enumeration.count_surjective_by_enumeration(k, False, cap=cap)
    if seq == SequenceId.FUBINI:
        return enumeration.count_ordered_set_partitions_by_enumeration(k, cap=cap)
    split = enumeration.surjective_first_point_split(k, True, cap=cap)
    return split[0] if seq == SequenceId.K1 else split[1]


def cmd_count(args) -> int:
    seq: SequenceId = args.sequence
    method = args.method or METHODS[seq][0]
    if method not in METHODS[seq]:
        print(
            f"method {method!r} does not apply to sequence {seq.value}; "
            f"valid: {', '.join(METHODS[seq])}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    if args.k < SEQUENCE_START[seq]:
        print(f"sequence {seq.value} starts at k={SEQUENCE_START[seq]}", file=sys.stderr)
        return USAGE_ERROR
    value = _count_value(seq, args.k, method, args.cap)
    print(f"{seq.value}({args.k}) = {value} [{method}]")
    if seq == SequenceId.I and method == "closed-form":
        print("note: excludes the empty ordering; recurrence value is +1")
    return 0


def cmd_enumerate(args) -> int:
    limit = enumeration.brute_force_cap(args.cap)
    if args.k > limit:
        raise BruteForceCapError(args.k, limit)
    for m in enumeration.enumerate_models(args.k, not args.unconstrained):
        print(json.dumps(model_to_dict(m)))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_checks(k_max=args.k_max, series_order=args.terms, cap=args.cap)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name.ljust(width)}  {r.detail}")
        failures += 0 if r.ok else 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else FAILURE


def _export_lines(seq: SequenceId, k_max: int, fmt: str) -> str:
    start = SEQUENCE_START[seq]
    terms = [(k, counting.sequence_value(seq, k)) for k in range(start, k_max + 1)]
    if fmt == "b-file":
        return "".join(f"{k} {v}\n" for k, v in terms)
    if fmt == "csv":
        return "k,value\n" + "".join(f"{k},{v}\n" for k, v in terms)
    return json.dumps({"sequence": seq.value, "terms": [[k, str(v)] for k, v in terms]}) + "\n"


def cmd_export(args) -> int:
    seq: SequenceId = args.sequence
    if args.k_max < SEQUENCE_START[seq]:
        print(f"sequence {seq.value} starts at k={SEQUENCE_START[seq]}", file=sys.stderr)
        return USAGE_ERROR
    payload = _export_lines(seq, args.k_max, args.format)
    if args.output == "-":
        sys.stdout.write(payload)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return FAILURE
    return 0


def cmd_series(args) -> int:
    if args.terms < 0:
        print(f"--terms must be nonnegative, got {args.terms}", file=sys.stderr)
        return USAGE_ERROR
    builders = {"H": series.egf_H, "f": series.egf_f, "fubini": series.egf_fubini}
    s = builders[args.egf](args.terms)
    rows = [
        (str(k), str(s.coeffs[k]), str(series.egf_counts(s, k)))
        for k in range(args.terms + 1)
    ]
    widths = [max(len(r[i]) for r in rows + [("k", "coefficient", "count")]) for i in range(3)]
    print(f"{'k'.ljust(widths[0])}  {'coefficient'.ljust(widths[1])}  {'count'.ljust(widths[2])}")
    for row in rows:
        print(f"{row[0].ljust(widths[0])}  {row[1].ljust(widths[1])}  {row[2].ljust(widths[2])}")
    return 0


def cmd_asymptotic(args) -> int:
    if args.asymptotic_command == "constants":
        c = asymptotics.constants()
        for label, value in [
            ("Z", c.Z),
            ("R", c.R),
            ("S", c.S),
            ("limit_ratio", c.limit_ratio),
            ("p_star", c.p_star),
            ("M", c.M),
        ]:
            print(f"{label.ljust(11)} = {value:.10g}")
        return 0
    rows = asymptotics.ratio_report(args.k_max)
    print(f"{'k'.rjust(3)}  {'L(k)/A(k)'.ljust(18)}  {'J(k)/L(k)'.ljust(18)}")
    for row in rows:
        print(f"{str(row.k).rjust(3)}  {row.l_over_a:<18.12f}  {row.j_over_l:<18.12f}")
    return 0


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_json(path: str, payload: dict) -> None:
    blob = json.dumps(payload) + "\n"
    if path == "-":
        sys.stdout.write(blob)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(blob)


def cmd_expand(args) -> int:
    model = model_from_dict(_read_json(args.input))
    if model.adjacency_constrained:
        payload = description_to_dict(expand_model(model))
    else:
        payload = colored_description_to_dict(expand_colored(model))
    _write_json(args.output, payload)
    return 0


def cmd_contract(args) -> int:
    data = _read_json(args.input)
    if args.unconstrained:
        model = contract_colored(colored_description_from_dict(data), args.k)
    else:
        model = contract_description(description_from_dict(data), args.k)
    _write_json(args.output, model_to_dict(model))
    return 0


_COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "export": cmd_export,
    "series": cmd_series,
    "asymptotic": cmd_asymptotic,
    "expand": cmd_expand,
    "contract": cmd_contract,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BruteForceCapError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except (InvalidStructureError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
