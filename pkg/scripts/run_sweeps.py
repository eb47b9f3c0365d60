#!/usr/bin/env python3
"""Run exhaustive property sweeps over the bounded program family.

Example::

    python3 scripts/run_sweeps.py --atoms 2
    python3 scripts/run_sweeps.py --atoms 3 --properties hierarchy,unary-oracle
"""

from __future__ import annotations

import argparse
import sys
import time

from aspeq.harness import PROPERTIES, exhaustive_sweep


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--atoms", type=int, default=2, choices=(1, 2, 3))
    parser.add_argument("--max-rules", type=int, default=None,
                        help="programs per family member (default: 2 for "
                             "up to 2 atoms, 1 for 3 atoms)")
    parser.add_argument("--properties", default=None,
                        help="comma-separated subset (default: all)")
    args = parser.parse_args(argv)

    names = sorted(PROPERTIES) if args.properties is None else [
        n.strip() for n in args.properties.split(",") if n.strip()
    ]
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        parser.error(f"unknown properties: {', '.join(unknown)}")

    failures = 0
    for name in names:
        start = time.perf_counter()
        report = exhaustive_sweep(args.atoms, name, args.max_rules)
        elapsed = time.perf_counter() - start
        status = "ok" if report.ok else f"{len(report.counterexamples)} counterexamples"
        print(f"{name:24s} checked={report.checked:>8d}  {elapsed:6.2f}s  {status}")
        for c in report.counterexamples[:5]:
            print(f"    {c}")
        if not report.ok:
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
