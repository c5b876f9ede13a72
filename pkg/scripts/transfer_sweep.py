"""Run every transfer check on every curated pair and tabulate pass/fail/skipped counts."""

import argparse
import time
from collections import Counter

from approxdim.config import RunConfig
from approxdim.transport import CHECK_KINDS, curated_pairs, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cutoff", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = RunConfig(seed=args.seed, cutoff=args.cutoff, samples=args.samples)
    print(f"{'pair':<12}{'check':<14}{'pass':>6}{'fail':>6}{'skip':>6}{'sec':>8}")
    for pair in curated_pairs():
        for check in CHECK_KINDS:
            t = time.perf_counter()
            reports = run_suite(pair, check, cfg.cutoff, cfg.seed, cfg.samples, workers=args.workers)
            c = Counter(r.status for r in reports)
            print(f"{pair.name:<12}{check:<14}{c['pass']:>6}{c['fail']:>6}{c['skipped']:>6}"
                  f"{time.perf_counter() - t:>8.2f}")


if __name__ == "__main__":
    main()
