#!/usr/bin/env python3
"""Run the full verification battery and write a machine-readable report.

Usage:
    python scripts/verify_theorems.py [--out report.json] [--only ID ...]

Equivalent to `gpid verify-theorems --format json` but also records
per-check wall-clock times in the report.
"""

import argparse
import json
import sys

from gpid import checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="write JSON here (default stdout)")
    parser.add_argument("--only", action="append", default=None)
    parser.add_argument("--n-max", type=int, default=None)
    parser.add_argument("--k-max", type=int, default=None)
    args = parser.parse_args()

    results = checks.run_checks(only=args.only, n_max=args.n_max, k_max=args.k_max)
    payload = [
        {
            "check": r.check_id,
            "ok": r.ok,
            "instances": r.instances,
            "detail": r.detail,
            "seconds": round(elapsed, 3),
        }
        for r, elapsed in results
    ]
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r, elapsed in results:
        mark = "ok  " if r.ok else "FAIL"
        sys.stderr.write(f"{mark} {r.check_id:<16} {elapsed:7.2f}s  {r.detail}\n")
    return 0 if all(r.ok for r, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
