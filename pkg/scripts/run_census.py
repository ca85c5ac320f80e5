#!/usr/bin/env python3
"""Decide every sign sequence up to a size bound, cross-check against the
subset-search oracle, and summarize how close the forced-arrow counts get
to the bipartite bound.

Example:
    python scripts/run_census.py --n 2 --max 3 --out census_n2_a3.csv
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter

from tunnelfill import (
    OracleTooLargeError,
    census_rows,
    write_census_csv,
)
from tunnelfill.census import cross_check_with_oracle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2, help="largest half-length")
    parser.add_argument("--max", type=int, default=3, help="largest |a_i|")
    parser.add_argument("--out", default=None, help="optional CSV path")
    parser.add_argument("--no-oracle", action="store_true", help="skip cross-checks")
    parser.add_argument("--cap", type=int, default=20, help="oracle candidate cap")
    args = parser.parse_args()

    start = time.perf_counter()
    rows = list(census_rows(args.n, args.max))
    decide_time = time.perf_counter() - start

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            write_census_csv(iter(rows), handle)

    realizable = [r for r in rows if r.realizable]
    by_added = Counter(r.arrows_added for r in realizable)
    reasons = Counter(
        r.obstruction_reason.split(" at ")[0] for r in rows if r.obstruction_reason
    )
    bound = args.n * args.n + args.n

    print(f"decided {len(rows)} sequences in {decide_time:.2f}s")
    print(f"realizable: {len(realizable)} ({100 * len(realizable) / len(rows):.1f}%)")
    print(f"forced-arrow counts (bound {bound}): {dict(sorted(by_added.items()))}")
    print(f"obstruction reasons: {dict(reasons.most_common())}")

    if not args.no_oracle:
        start = time.perf_counter()
        mismatches = skipped = 0
        for row in rows:
            try:
                complaint = cross_check_with_oracle(row, cap=args.cap)
            except OracleTooLargeError:
                skipped += 1
                continue
            if complaint:
                mismatches += 1
                print(f"MISMATCH: {complaint}", file=sys.stderr)
        oracle_time = time.perf_counter() - start
        print(
            f"oracle cross-check: {len(rows) - skipped} rows in {oracle_time:.2f}s, "
            f"{mismatches} mismatches, {skipped} beyond the cap"
        )
        if mismatches:
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
