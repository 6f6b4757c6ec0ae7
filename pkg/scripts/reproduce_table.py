"""Classify maximal self-orthogonal ternary codes for a range of lengths.

Prints N(n), the split by minimum weight, the mass residual and the time per
length. Manifests go to OUTDIR (reused with --resume).

Usage: python scripts/reproduce_table.py [--lo 3] [--hi 14] [--out manifests] [--resume]
"""
import argparse
import logging
import time
from pathlib import Path

from terncode.classify import Classifier, ClassifyConfig

PUBLISHED = {3: 1, 4: 1, 5: 1, 6: 2, 7: 1, 8: 1, 9: 2, 10: 5, 11: 3, 12: 3, 13: 7, 14: 22,
             15: 12, 16: 7, 17: 23, 18: 160, 19: 56, 20: 24, 21: 216, 22: 13625,
             23: 2005, 24: 338, 25: 139613}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=14)
    p.add_argument("--out", type=Path, default=Path("manifests"))
    p.add_argument("--resume", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    cl = Classifier(ClassifyConfig(threads=args.threads, out_dir=args.out, resume=args.resume))
    print(f"{'n':>3} {'k':>3} {'N(n)':>6} {'table':>6} {'residual':>9} {'seconds':>8}  by d")
    for n in range(args.lo, args.hi + 1):
        t0 = time.perf_counter()
        m = cl.maximal(n)
        dt = time.perf_counter() - t0
        ref = PUBLISHED.get(n, "?")
        flag = "" if ref == len(m) else "  MISMATCH"
        print(f"{n:>3} {m.k:>3} {len(m):>6} {ref:>6} {m.audit.residual:>9} {dt:>8.1f}  "
              f"{m.counts_by_min_weight}{flag}", flush=True)


if __name__ == "__main__":
    main()
