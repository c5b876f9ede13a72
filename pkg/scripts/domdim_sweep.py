"""Dominant dimension of every indecomposable over every corpus algebra, by both methods."""

import argparse
import json

from approxdim.approx import domdim
from approxdim.config import RunConfig
from approxdim.corpus import algebra_names, corpus_algebra
from approxdim.families import indecomposables


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cutoff", type=int, default=12)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = RunConfig(cutoff=args.cutoff, json=args.json)
    rows = []
    for name in algebra_names():
        for m in indecomposables(corpus_algebra(name)):
            a, b = domdim(m, cfg.cutoff, "lapp"), domdim(m, cfg.cutoff, "coresolution")
            rows.append({"algebra": name, "dims": list(m.dims), "lapp": a.render(),
                         "coresolution": b.render(), "agree": a == b})
    if cfg.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        print(f"{r['algebra']:<8}{str(tuple(r['dims'])):<16}{r['lapp']:<22}{r['coresolution']:<22}"
              f"{'agree' if r['agree'] else 'DISAGREE'}")
    print(f"{sum(r['agree'] for r in rows)}/{len(rows)} agree")


if __name__ == "__main__":
    main()
