"""Basic tilting and Wakamatsu tilting modules of each corpus algebra, found by summand search."""

import argparse

from approxdim.approx import fadim, is_tilting, pd
from approxdim.corpus import algebra_names, corpus_algebra
from approxdim.families import basic_tilting_modules, basic_wakamatsu_modules
from approxdim.repmod import decompose


def summands(m):
    return " + ".join(str(x.dims) for x in decompose(m).parts)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cutoff", type=int, default=8)
    args = ap.parse_args()
    for name in algebra_names():
        alg = corpus_algebra(name)
        tilts = basic_tilting_modules(alg, args.cutoff)
        waks = basic_wakamatsu_modules(alg, args.cutoff)
        print(f"== {name}: {len(tilts)} tilting, {len(waks)} Wakamatsu")
        for w in waks:
            print(f"  {summands(w):<50} pd {pd(w, args.cutoff).render():<16} "
                  f"fadim {fadim(w, args.cutoff).render():<22} tilting {is_tilting(w, args.cutoff).render()}")


if __name__ == "__main__":
    main()
