"""Enumerate rows x cols grids in the three-qubit dual graph and tabulate how
many observables the lines of each row and column share."""

import argparse
import collections
import json
from dataclasses import asdict, dataclass

from pauligeo import geometry as G
from pauligeo.pauli import SystemSpec


@dataclass
class GridConfig:
    rows: int = 3
    cols: int = 3
    weight: int | None = 3
    limit: int | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=3)
    ap.add_argument("--cols", type=int, default=3)
    ap.add_argument("--weight", type=int, default=3, help="required mate weight (0 for any)")
    ap.add_argument("--limit", type=int)
    args = ap.parse_args()
    cfg = GridConfig(args.rows, args.cols, args.weight or None, args.limit)

    geo = G.build_geometry(SystemSpec((2, 2, 2)))
    dual = G.dual_graph(geo)
    grids = G.find_grids(dual, cfg.rows, cfg.cols, weight=cfg.weight, limit=cfg.limit)
    stats = collections.Counter()
    for grid in grids:
        rep = G.grid_sharing_report(geo, grid)
        for fam in rep["rows"] + rep["columns"]:
            stats[(fam["union_of_pairwise"], fam["common"], fam["points"])] += 1
    print(json.dumps({"config": asdict(cfg), "grids": len(grids)}))
    print("shared(union)  shared(common)  points  families")
    for (u, c, p), n in sorted(stats.items()):
        print(f"{u:13d}  {c:14d}  {p:6d}  {n:8d}")


if __name__ == "__main__":
    main()
