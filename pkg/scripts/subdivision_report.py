#!/usr/bin/env python3
"""Print a profile of one filtered simplex: subdivision sizes, the labeled
CW model of the subdivision, and stratified invariants per stratum.

Example:
    python scripts/subdivision_report.py --elements a,b,c \\
        --cover a:b,b:c --word a,a,b
"""

import argparse
import sys

from stratisets.filtered import filtered_simplex
from stratisets.labeled_cw import (functor_L, stratified_pi0,
                                   stratified_pi1_presentation,
                                   subcomplex_phi, vertical_cw_of_sdp)
from stratisets.poset import poset_from_cover
from stratisets.subdivision import ex_p, sd_p


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--elements", default="a,b",
                        help="comma-separated poset elements")
    parser.add_argument("--cover", default="a:b",
                        help="comma-separated cover pairs lo:hi")
    parser.add_argument("--word", default="a,b",
                        help="comma-separated filtration word")
    parser.add_argument("--dim-bound", type=int, default=3)
    args = parser.parse_args(argv)

    elements = args.elements.split(",")
    cover = [tuple(pair.split(":")) for pair in args.cover.split(",")
             if pair]
    P = poset_from_cover(elements, cover)
    word = tuple(args.word.split(","))
    X = filtered_simplex(P, word, args.dim_bound)

    print(f"word {word} over poset {sorted(P.elements)}")
    print(f"  simplex  f-vector {X.space.f_vector()}")
    r = sd_p(X)
    print(f"  sd_P     f-vector {r.filtered.space.f_vector()}")
    print(f"  Ex_P     f-vector {ex_p(X).space.f_vector()}")

    k = functor_L(vertical_cw_of_sdp(X))
    by_dim = {}
    for _, (d, _) in k.cells.items():
        by_dim[d] = by_dim.get(d, 0) + 1
    cells = " ".join(f"{d}:{by_dim[d]}" for d in sorted(by_dim))
    print(f"  CW model cells by dim {cells}, euler sum {k.euler_sum()}")

    strata = sorted({label for (_, label) in k.cells.values()})
    for phi in strata:
        count, _ = stratified_pi0(X, phi)
        line = f"  stratum {phi}: pi0 = {count}"
        sub = subcomplex_phi(k, phi)
        verts = sub.cells_of_dim(0)
        if verts:
            pres = stratified_pi1_presentation(X, phi, verts[0])
            line += (f", pi1 presented by {len(pres.generators)} generators"
                     f" / {len(pres.relators)} relators")
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
