"""Command line front door: run fixture jobs, emit deterministic reports.

Exit codes: 0 all validators passed, 1 a validator failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, active_backend, available_backends
from .jobs import JobError, Overrides, export_csv, report_bytes, run_job
from .orders import order_from_name


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satlen", description=__doc__)
    parser.add_argument("--version", action="version", version=f"satlen {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a job file and print the JSON report")
    run.add_argument("job", help="path to a .job.json file")
    run.add_argument("--nmax", type=int, default=None, help="override every task's nmax")
    run.add_argument("--char", type=int, default=None, help="override the ring characteristic")
    run.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    run.add_argument("--verify-grid", type=int, default=None, help="override sop grid bound")
    run.add_argument("--oracle", action="store_true", help="cross-check h0 tasks by brute force")
    run.add_argument("--out-dir", default=None, help="write report.json and sequence CSVs here")
    run.add_argument(
        "--timings",
        action="store_true",
        help="include wall-clock seconds per task (breaks byte determinism)",
    )

    sub.add_parser("backends", help="show the active and available reduction kernels")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "backends":
        print(f"active: {active_backend()}")
        print(f"available: {', '.join(available_backends())}")
        return 0

    overrides = Overrides(
        nmax=args.nmax,
        characteristic=args.char,
        order=order_from_name(args.order),
        verify_grid=args.verify_grid,
        oracle=args.oracle,
        timings=args.timings,
    )
    try:
        report = run_job(args.job, overrides)
    except JobError as e:
        print(f"satlen: input error: {e}", file=sys.stderr)
        return 2
    payload = report_bytes(report)
    sys.stdout.write(payload.decode())
    if args.out_dir:
        from pathlib import Path

        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_bytes(payload)
        export_csv(report, out)
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
