"""Command-line entry point.

    vnroles stats       --vn-path DIR [--format json|csv]
    vnroles classes     --vn-path DIR
    vnroles matrix      --vn-path DIR [--level class|verb]
    vnroles deps        --vn-path DIR [--threshold 55] [--level verb] [--format json|csv|dot]
    vnroles mutual      --vn-path DIR [--threshold 55] [--level verb] [--format json|csv]
    vnroles demo-events

``VN_PATH`` in the environment stands in for ``--vn-path``.  Exit status is
0 on success, 1 on input/output errors and 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .dependency import DEFAULT_THRESHOLD, check_threshold
from .errors import BadThreshold, VNRolesError
from .events import demo_events
from .lexicon import parse_lexicon
from .matrix import Level, format_matrix_csv
from .pipeline import analyse, build_matrix, lexicon_stats
from .reduction import effective_classes, format_classes_tsv
from .report import dependency_csv, emit_dot, mutual_csv, report_to_dict, report_to_json


def _threshold(text):
    try:
        check_threshold(text)
    except BadThreshold as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vnroles", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vn-path", default=None, help="directory of VerbNet class XML files (default: $VN_PATH)")
    common.add_argument("-o", "--output", default="-", help="output file (default: stdout)")

    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument("--threshold", type=_threshold, default=DEFAULT_THRESHOLD, help="percent in (0, 100]")
    analysis.add_argument("--level", choices=[lv.value for lv in Level], default=Level.VERB.value)

    p = sub.add_parser("stats", parents=[common], help="class, member and role counts")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    sub.add_parser("classes", parents=[common], help="effective classes as TSV")

    p = sub.add_parser("matrix", parents=[common], help="role incidence matrix as CSV")
    p.add_argument("--level", choices=[lv.value for lv in Level], default=Level.VERB.value)

    p = sub.add_parser("deps", parents=[common, analysis], help="full dependency report")
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")

    p = sub.add_parser("mutual", parents=[common, analysis], help="mutually dependent pairs")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("demo-events", help="example role/scalar event templates as JSON")
    p.add_argument("-o", "--output", default="-")
    return parser


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _render(args, lexicon) -> str:
    cmd = args.command
    if cmd == "stats":
        stats = lexicon_stats(lexicon).as_dict()
        if args.format == "json":
            return _dumps(stats)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["metric", "value"])
        writer.writerows(stats.items())
        return buf.getvalue()
    if cmd == "classes":
        return format_classes_tsv(effective_classes(lexicon))
    if cmd == "matrix":
        return format_matrix_csv(build_matrix(lexicon, args.level))

    report = analyse(lexicon, args.threshold, args.level)
    if cmd == "deps":
        if args.format == "csv":
            return dependency_csv(report)
        if args.format == "dot":
            return emit_dot(report)
        return report_to_json(report)
    # mutual
    if args.format == "csv":
        return mutual_csv(report)
    data = report_to_dict(report)
    return _dumps({key: data[key] for key in ("threshold", "level", "mutual_pairs")})


def _write(text: str, target: str):
    if target == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "demo-events":
            text = _dumps({name: ev.to_dict() for name, ev in demo_events().items()})
        else:
            vn_path = args.vn_path or os.environ.get("VN_PATH")
            if not vn_path:
                parser.print_usage(sys.stderr)
                print("vnroles: error: --vn-path is required (or set VN_PATH)", file=sys.stderr)
                return 2
            text = _render(args, parse_lexicon(vn_path))
        _write(text, args.output)
    except (VNRolesError, OSError) as exc:
        print(f"vnroles: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
