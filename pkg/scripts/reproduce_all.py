"""Run every verification suite and print a per-suite summary.

    python scripts/reproduce_all.py [--seed 0] [--verbose]
"""
import argparse
import sys
import time

from cgarep.suites import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--verbose", action="store_true", help="print every check, not only failures")
    args = ap.parse_args()

    failed = 0
    for name in SUITES[:-1]:
        start = time.perf_counter()
        checks = run_suite(name, args.seed)
        bad = [c for c in checks if not c.ok]
        failed += len(bad)
        print(f"{name:10s} {len(checks) - len(bad):4d}/{len(checks):<4d} passed  ({time.perf_counter() - start:.2f}s)")
        for c in checks if args.verbose else bad:
            print(f"    {'ok  ' if c.ok else 'FAIL'} {c.name} {c.detail}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
