#!/usr/bin/env python3
"""Run the full verification sweep with per-family timing.

Equivalent to `fockweyl verify all` but prints a compact timing table; useful
when experimenting with larger bounds than the defaults.
"""

import argparse
import sys
import time

from fockweyl.verify import RunConfig, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--tolerance", choices=["strict", "signed", "unit"],
                    default="signed")
    args = ap.parse_args()

    config = RunConfig(jobs=args.jobs, tolerance=args.tolerance)
    t0 = time.time()
    failed = 0
    mark_t = t0
    for rep in run_all(config):
        now = time.time()
        mark = "ok " if rep.failed == 0 else "FAIL"
        ell = rep.config.get("ell", "-")
        print(f"{mark} {rep.family:<16} ell={ell:<3} "
              f"cases={rep.passed + rep.failed:<4} failed={rep.failed:<3} "
              f"[{now - mark_t:6.1f}s]", flush=True)
        mark_t = now
        failed += rep.failed
    print(f"total elapsed {time.time() - t0:.1f}s, failed cases: {failed}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
