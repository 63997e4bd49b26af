"""Size, point types and neighbour-graph spectrum of the projective line over
small product rings Z_m1 x ... x Z_mk."""

import argparse
import itertools
import math

from pauligeo import rings
from pauligeo.graphs import spectrum_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=12)
    args = ap.parse_args()
    print(f"{'ring':<14}{'points':>7}{'formula':>8}  one/both/zd   spectrum")
    for k in (1, 2):
        for mods in itertools.combinations_with_replacement(range(2, args.max_order + 1), k):
            if math.prod(mods) > args.max_order:
                continue
            R = rings.ProductRing(mods)
            pts = rings.projective_line(R)
            c = rings.point_type_counts(R, pts)
            spec = spectrum_exact(rings.neighbor_graph(R))
            name = " x ".join(f"Z{m}" for m in mods)
            types = f"{c['one-unit']}/{c['both-unit']}/{c['both-zero-divisor']}"
            print(f"{name:<14}{len(pts):>7}{rings.expected_line_size(R):>8}  {types:<12}  {spec}")


if __name__ == "__main__":
    main()
