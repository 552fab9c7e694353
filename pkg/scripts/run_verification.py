#!/usr/bin/env python3
"""Run verification suites and collect their reports.

Runs each requested suite in-process, writes one canonical JSON report
per suite into --report-dir, and prints a one-line summary per suite.
Exit status is non-zero if any suite fails.
"""

import argparse
import sys
import time
from pathlib import Path

from stratisets.cli import SUITES, run_suite
from stratisets.serialization import dumps_canonical


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("suites", nargs="*", default=[],
                        help="suite names (default: all known suites)")
    parser.add_argument("--report-dir", default="reports")
    parser.add_argument("--dim-bound", type=int, default=3)
    parser.add_argument("--max-poset", type=int, default=3)
    parser.add_argument("--max-word", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    args.json_out = None

    names = args.suites or sorted(SUITES)
    out_dir = Path(args.report_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    failed = []
    for name in names:
        t0 = time.monotonic()
        lines, ok = run_suite(name, args)
        elapsed = time.monotonic() - t0
        payload = {"suite": name, "results": lines,
                   "status": "pass" if ok else "fail"}
        path = out_dir / f"{name.replace('.', '_')}.json"
        path.write_text(dumps_canonical(payload))
        print(f"{name:20s} {'pass' if ok else 'FAIL'}  "
              f"{len(lines):5d} checks  {elapsed:7.1f}s  -> {path}")
        if not ok:
            failed.append(name)
    if failed:
        print("failed suites: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
