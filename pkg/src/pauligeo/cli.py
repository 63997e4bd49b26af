"""
Command-line front end.

    pauligeo operators   --dims 2,3
    pauligeo graph       --dims 2,2,2 --format dot
    pauligeo spectrum    --dims 3,3 --target dual
    pauligeo verify      [--dims 2,3]

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass

from . import geometry as geom
from . import rings
from .export import export_graph
from .graphs import Graph, spectrum_exact
from .labels import conventional_labels, label_table, line_names
from .pauli import SystemSpec, enumerate_operators
from .verify import DEFAULT_SYSTEMS, run_checks

log = logging.getLogger("pauligeo")

COMMANDS = ("operators", "graph", "lines", "dual", "spectrum", "mubs", "hyperplanes",
            "ringline", "verify")
FORMATS = {
    "operators": ("text", "json", "csv"),
    "graph": ("text", "dot", "json", "csv"),
    "lines": ("text", "json", "csv"),
    "dual": ("text", "dot", "json", "csv"),
    "spectrum": ("text", "json", "csv"),
    "mubs": ("text", "json"),
    "hyperplanes": ("text", "json"),
    "ringline": ("text", "dot", "json", "csv"),
    "verify": ("text",),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    dims: tuple[int, ...] | None = None
    target: str = "pauli"
    format: str = "text"
    out: str | None = None
    min_line_size: int | None = None
    verbose: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS[self.command]:
            raise UsageError(f"command {self.command!r} has no {self.format!r} output "
                             f"(choose from {', '.join(FORMATS[self.command])})")
        if self.target not in ("pauli", "dual"):
            raise UsageError(f"unknown target {self.target!r}")
        if self.command == "ringline":
            if self.dims is not None and any(m < 2 for m in self.dims):
                raise UsageError("ring moduli must be >= 2")
        elif self.dims is None:
            if self.command != "verify":
                raise UsageError(f"command {self.command!r} needs --dims")
        else:
            try:
                SystemSpec(self.dims)
            except ValueError as exc:
                raise UsageError(str(exc)) from None

    @property
    def spec(self) -> SystemSpec:
        return SystemSpec(self.dims)


def _geometry(cfg: RunConfig):
    t = time.perf_counter()
    geo = geom.build_geometry(cfg.spec, min_line_size=cfg.min_line_size)
    log.info("built geometry [%s]: %d points, %d lines in %.3fs", cfg.spec,
             len(geo.points), len(geo.lines), time.perf_counter() - t)
    return geo


def _labelled_pauli_graph(geo):
    g = geo.graph
    return Graph(g.n, g.edges, None, conventional_labels(geo).labels)


def _dump_json(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _csv(header, rows) -> str:
    out = [",".join(header)]
    out += [",".join(str(x) for x in row) for row in rows]
    return "\n".join(out) + "\n"


def cmd_operators(cfg: RunConfig) -> str:
    ops = enumerate_operators(cfg.spec)
    table = label_table(cfg.spec.factor_dims)
    rows = [(i, table.get(op, op.code()), op.code()) for i, op in enumerate(ops)]
    if cfg.format == "json":
        return _dump_json([{"index": i, "label": l, "exponents": [list(p) for p in op.exponents]}
                           for (i, l, _), op in zip(rows, ops)])
    if cfg.format == "csv":
        return _csv(("index", "label", "exponents"), rows)
    return f"{len(rows)} operators on [{cfg.spec}]\n" + "".join(
        f"{i:4d}  {l:>4}  {c}\n" for i, l, c in rows)


def cmd_graph(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    if cfg.target == "dual":
        return export_graph(geom.dual_graph(geo, labels=line_names(geo)).graph, cfg.format)
    return export_graph(_labelled_pauli_graph(geo), cfg.format)


def cmd_dual(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    return export_graph(geom.dual_graph(geo, labels=line_names(geo)).graph, cfg.format)


def cmd_lines(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    names = line_names(geo)
    labels = conventional_labels(geo)
    rows = [(name, [labels[p] for p in line]) for name, line in zip(names, geo.lines)]
    if cfg.format == "json":
        return _dump_json([{"name": n, "points": pts} for n, pts in rows])
    if cfg.format == "csv":
        return _csv(("line", "points"), [(n, " ".join(pts)) for n, pts in rows])
    return f"{len(rows)} lines on [{cfg.spec}]\n" + "".join(
        f"{n}: {{{', '.join(pts)}}}\n" for n, pts in rows)


def cmd_spectrum(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    g = geom.dual_graph(geo).graph if cfg.target == "dual" else geo.graph
    spec = spectrum_exact(g)
    if cfg.format == "json":
        return _dump_json({"eigenvalues": [list(p) for p in spec.eigenvalues],
                           "residual_factor": list(spec.residual_factor)})
    if cfg.format == "csv":
        return _csv(("eigenvalue", "multiplicity"), spec.eigenvalues)
    return str(spec) + "\n"


def cmd_mubs(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    names = line_names(geo)
    sets = geom.mub_line_sets(geo)
    named = [[names[i] for i in s] for s in sets]
    if cfg.format == "json":
        return _dump_json({"maximum": len(sets[0]) if sets else 0, "witnesses": named})
    head = f"maximum {len(sets[0]) if sets else 0} pairwise disjoint lines, {len(sets)} witnesses\n"
    return head + "".join(" ".join(s) + "\n" for s in named)


def cmd_hyperplanes(cfg: RunConfig) -> str:
    geo = _geometry(cfg)
    names = line_names(geo)
    labels = conventional_labels(geo)
    fams = geom.multi_line_hyperplanes(geo)
    rows = [{"lines": [names[i] for i in f.lines], "shared": [labels[p] for p in f.shared],
             "points": len(f.points(geo)),
             "strict": geom.is_hyperplane(geo, f.points(geo))} for f in fams]
    if cfg.format == "json":
        return _dump_json(rows)
    return f"{len(rows)} multi-line hyperplanes\n" + "".join(
        f"{{{' '.join(r['lines'])}}} sharing {{{', '.join(r['shared'])}}}: {r['points']} points"
        f"{'' if r['strict'] else ' (closed up to conjugate points)'}\n" for r in rows)


def cmd_ringline(cfg: RunConfig) -> str:
    R = rings.ProductRing(cfg.dims or (2, 3))
    if cfg.format in ("dot", "csv"):
        return export_graph(rings.neighbor_graph(R), cfg.format)
    points = rings.projective_line(R)
    units, zds = rings.classify_elements(R)
    counts = rings.point_type_counts(R, points)
    g = rings.neighbor_graph(R)
    label = (R.prime_label if R.moduli == (2, 3)
             else lambda x: "(" + ",".join(map(str, x)) + ")")
    if cfg.format == "json":
        return _dump_json({
            "moduli": list(R.moduli),
            "units": [label(u) for u in units],
            "zero_divisors": [label(z) for z in zds],
            "points": [rings.point_label(R, p) for p in points],
            "point_types": counts,
            "neighbor_edges": [[u, v] for u, v in sorted(g.edges)],
        })
    add, mul = rings.ring_tables(R)
    out = [f"ring Z{' x Z'.join(map(str, R.moduli))}: {len(R)} elements",
           f"units: {' '.join(label(u) for u in units)}",
           f"zero divisors: {' '.join(label(z) for z in zds)}"]
    for title, table in (("+", add), ("*", mul)):
        out.append(f"{title:>6} " + " ".join(f"{label(x):>6}" for x in R.elements))
        for x, row in zip(R.elements, table):
            out.append(f"{label(x):>6} " + " ".join(f"{label(y):>6}" for y in row))
    out.append(f"projective line: {len(points)} points "
               f"(one unit {counts['one-unit']}, both units {counts['both-unit']}, "
               f"both zero divisors {counts['both-zero-divisor']})")
    for v, p in enumerate(points):
        nb = " ".join(g.label(u) for u in sorted(g.adjacency[v]))
        out.append(f"{rings.point_label(R, p)} [{rings.point_type(R, p)}] neighbours: {nb}")
    return "\n".join(out) + "\n"


HANDLERS = {
    "operators": cmd_operators, "graph": cmd_graph, "lines": cmd_lines, "dual": cmd_dual,
    "spectrum": cmd_spectrum, "mubs": cmd_mubs, "hyperplanes": cmd_hyperplanes,
    "ringline": cmd_ringline,
}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    status = 0
    if cfg.command == "verify":
        systems = (cfg.dims,) if cfg.dims else DEFAULT_SYSTEMS
        text, ok = run_checks(systems)
        status = 0 if ok else 1
    else:
        text = HANDLERS[cfg.command](cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def _dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}")
    if not dims:
        raise argparse.ArgumentTypeError("empty dimension list")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauligeo",
        description="Commutation geometry of generalized Pauli operators.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--dims", type=_dims,
                        help="comma separated prime factor dimensions (ring moduli for ringline)")
    parser.add_argument("--target", choices=("pauli", "dual"), default="pauli")
    parser.add_argument("--format", choices=("dot", "json", "csv", "text"), default="text")
    parser.add_argument("--out", help="output path (default: standard output)")
    parser.add_argument("--min-line-size", type=int, default=None,
                        help="keep all maximal commuting sets of at least this size")
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(message)s", stream=sys.stderr)
    log.setLevel(level)
    cfg = RunConfig(args.command, args.dims, args.target, args.format, args.out,
                    args.min_line_size, args.verbose)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
