"""
Golden checks for the qubit-qutrit, two-qutrit, three-qubit and two-qubit
systems, and for the projective line over Z2 x Z3.

Every check recomputes its quantity from scratch and compares it with a
frozen expected value. Informational entries carry values that are reported
but not asserted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import geometry as geom
from . import rings
from .graphs import (complete_bipartite, is_isomorphic, is_regular, line_graph,
                     spectrum_exact, strongly_regular_parameters, validate_isomorphism)
from .labels import compare_reference_lines, conventional_labels, line_names
from .pauli import SystemSpec, commutes, matrix_commutes

# Z2 x Z3 Cayley tables in primed indices 0'..5'
Z2Z3_ADD = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 4, 5, 3],
    [2, 0, 1, 5, 3, 4],
    [3, 4, 5, 0, 1, 2],
    [4, 5, 3, 1, 2, 0],
    [5, 3, 4, 2, 0, 1],
]
Z2Z3_MUL = [
    [0, 0, 0, 0, 0, 0],
    [0, 1, 2, 0, 1, 2],
    [0, 2, 1, 0, 2, 1],
    [0, 0, 0, 3, 3, 3],
    [0, 1, 2, 3, 4, 5],
    [0, 2, 1, 3, 5, 4],
]
# listed points of P(Z2 x Z3), grouped by entry type
Z2Z3_POINTS = {
    "one-unit": [(4, 0), (4, 1), (4, 2), (4, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
    "both-unit": [(4, 4), (4, 5)],
    "both-zero-divisor": [(1, 3), (3, 1)],
}

SPECTRA = {
    ((2, 3), "dual"): {-2: 6, 1: 3, 2: 2, 5: 1},
    ((3, 3), "dual"): {-4: 15, 2: 24, 12: 1},
    ((3, 3), "pauli"): {-7: 15, -1: 40, 5: 24, 25: 1},
    ((2, 2, 2), "pauli"): {-5: 27, 3: 35, 30: 1},
}
LINE_CENSUS = {(2, 3): (12, 5), (3, 3): (40, 8), (2, 2, 2): (135, 7), (2, 2): (15, 3)}
MUB_MAXIMUM = {(2, 3): 3, (3, 3): 10}
PAULI_DEGREE = {(3, 3): 25, (2, 2, 2): 30}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool | None
    detail: str

    def line(self) -> str:
        tag = {True: "PASS", False: "FAIL", None: "INFO"}[self.passed]
        return f"[{tag}] {self.name}: {self.detail}"


class SystemData:
    """Lazily built artefacts for one system, shared by its checks."""

    def __init__(self, dims):
        self.spec = SystemSpec(tuple(dims))

    @cached_property
    def geometry(self):
        return geom.build_geometry(self.spec)

    @cached_property
    def names(self):
        return line_names(self.geometry)

    @cached_property
    def labeling(self):
        return conventional_labels(self.geometry)

    @cached_property
    def dual(self):
        return geom.dual_graph(self.geometry, labels=self.names)


def _fmt_spec(d: dict) -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(d.items())) + "}"


def check_operator_count(data: SystemData) -> Check:
    n = len(data.geometry.points)
    expected = data.spec.total_dim ** 2 - 1
    return Check("operator count", n == expected, f"{n} operators (expected {expected})")


def check_oracle(data: SystemData) -> Check:
    ops = data.geometry.points
    spec = data.spec
    pairs = disagree = 0
    for a, b in itertools.combinations(ops, 2):
        pairs += 1
        if commutes(a, b, spec) != matrix_commutes(a, b, spec):
            disagree += 1
    return Check("symplectic vs matrix commutation", disagree == 0,
                 f"{pairs} pairs, {disagree} disagreements")


def check_line_census(data: SystemData) -> Check:
    geo = data.geometry
    sizes = sorted({len(l) for l in geo.lines})
    expected = LINE_CENSUS.get(data.spec.factor_dims)
    detail = f"{len(geo.lines)} lines of size {','.join(map(str, sizes))}"
    if expected is None:
        return Check("line census", None, detail)
    ok = (len(geo.lines), sizes) == (expected[0], [expected[1]])
    return Check("line census", ok, detail + f" (expected {expected[0]} of size {expected[1]})")


def check_spectrum(data: SystemData, target: str) -> Check:
    g = data.dual.graph if target == "dual" else data.geometry.graph
    spec = spectrum_exact(g)
    expected = SPECTRA[data.spec.factor_dims, target]
    ok = spec.is_integral and spec.as_dict() == expected
    name = f"{target} graph spectrum"
    detail = f"{spec} (expected {_fmt_spec(expected)})"
    if target == "pauli":
        deg = is_regular(g)
        want = PAULI_DEGREE[data.spec.factor_dims]
        ok = ok and deg == want
        detail += f", regular of degree {deg}"
    return Check(name, ok, detail)


def check_strongly_regular(data: SystemData) -> Check:
    params = strongly_regular_parameters(data.geometry.graph)
    ok = params is not None and params[:2] == (63, 30)
    return Check("strongly regular parameters", ok, f"(n,k,lambda,mu) = {params}")


def check_line_graph_iso(data: SystemData) -> Check:
    target = line_graph(complete_bipartite(4, 3))
    m = is_isomorphic(data.dual.graph, target)
    ok = m is not None and validate_isomorphism(data.dual.graph, target, m)
    return Check("dual graph isomorphic to L(K(4,3))", ok,
                 "certified bijection" if ok else "no bijection")


def check_ring_line(data: SystemData) -> list[Check]:
    R = rings.ProductRing((2, 3))
    out = []
    units, zds = rings.classify_elements(R)
    out.append(Check("Z2xZ3 units / zero divisors", (len(units), len(zds)) == (2, 4)
                     and [R.index[u] for u in units] == [4, 5],
                     f"units {[R.prime_label(u) for u in units]}, "
                     f"zero divisors {[R.prime_label(z) for z in zds]}"))
    add, mul = rings.ring_tables(R)
    add_i = [[R.index[x] for x in row] for row in add]
    mul_i = [[R.index[x] for x in row] for row in mul]
    out.append(Check("Z2xZ3 Cayley tables", add_i == Z2Z3_ADD and mul_i == Z2Z3_MUL,
                     "addition and multiplication match entry for entry"
                     if add_i == Z2Z3_ADD and mul_i == Z2Z3_MUL else "table mismatch"))
    points = rings.projective_line(R)
    counts = rings.point_type_counts(R, points)
    listed_ok = True
    classes = {frozenset(rings.unit_class(R, p.alpha, p.beta)) for p in points}
    for kind, pairs in Z2Z3_POINTS.items():
        for a, b in pairs:
            pair = (R.elements[a], R.elements[b])
            cls = frozenset(rings.unit_class(R, *pair))
            if cls not in classes or rings.point_type(R, rings.ProjectivePoint(pair)) != kind:
                listed_ok = False
    ok = (len(points) == 12 and counts == {"one-unit": 8, "both-unit": 2, "both-zero-divisor": 2}
          and listed_ok)
    out.append(Check("projective line over Z2xZ3", ok,
                     f"{len(points)} points, classes {counts['one-unit']}/{counts['both-unit']}/"
                     f"{counts['both-zero-divisor']}, listed points {'found' if listed_ok else 'missing'}"))
    ng = rings.neighbor_graph(R)
    m = is_isomorphic(data.dual.graph, ng)
    ok = m is not None and validate_isomorphism(data.dual.graph, ng, m)
    out.append(Check("dual graph isomorphic to neighbour graph of P(Z2xZ3)", ok,
                     "certified bijection" if ok else "no bijection"))
    return out


def check_mubs(data: SystemData) -> Check:
    sets = geom.mub_line_sets(data.geometry)
    size = len(sets[0]) if sets else 0
    expected = MUB_MAXIMUM[data.spec.factor_dims]
    ok = size == expected
    detail = f"maximum {size} (expected {expected}), {len(sets)} witnesses"
    if data.spec.factor_dims == (3, 3):
        all_points = frozenset(range(len(data.geometry.points)))
        covers = all(
            frozenset().union(*(data.geometry.line_sets[i] for i in s)) == all_points
            and sum(len(data.geometry.lines[i]) for i in s) == len(all_points)
            for s in sets)
        ok = ok and covers
        detail += ", every witness partitions the points" if covers else ", a witness fails to partition"
    example = " ".join(data.names[i] for i in sets[0]) if sets else "-"
    return Check("mutually unbiased line sets", ok, detail + f"; e.g. {example}")


def check_anti_flags(data: SystemData) -> Check:
    numbers = geom.anti_flag_connection_numbers(data.geometry)
    values = sorted(set(numbers.values()))
    return Check("anti-flag connection numbers", set(values) <= {0, 1},
                 f"{len(numbers)} anti-flags, values {values}")


def _family_text(data: SystemData, fam) -> str:
    names = " ".join(data.names[i] for i in fam.lines)
    shared = ",".join(data.labeling[p] for p in fam.shared)
    return f"{{{names}}} sharing {{{shared}}}"


def check_multi_line(data: SystemData) -> list[Check]:
    geo = data.geometry
    dims = data.spec.factor_dims
    out = []
    if dims == (2, 3):
        fams = geom.multi_line_hyperplanes(geo)
        ok = (len(fams) == 4 and all(len(f.lines) == 3 and len(f.shared) == 2 for f in fams)
              and all(geom.is_hyperplane(geo, f.points(geo)) for f in fams))
        out.append(Check("multi-line hyperplanes", ok,
                         f"{len(fams)} families: " + "; ".join(_family_text(data, f) for f in fams)))
    elif dims == (3, 3):
        last = data.spec.n_factors - 1
        fams = geom.multi_line_hyperplanes(geo, local_factor=last)
        total = geom.multi_line_hyperplanes(geo)
        ok = len(fams) == 4 and all(len(f.lines) == 4 and len(f.shared) == 2 for f in fams)
        out.append(Check("multi-line hyperplanes on the last factor", ok,
                         f"{len(fams)} families: " + "; ".join(_family_text(data, f) for f in fams)))
        out.append(Check("multi-line hyperplanes in total", None,
                         f"{len(total)} families of {sorted({len(f.lines) for f in total})} lines"))
        grid = _reference_grid(data)
        if grid is None:
            out.append(Check("4x4 grid {L,M,N,P} x {1..4}", False, "not found"))
        else:
            pairs = [(u, v) for u, v in itertools.combinations(grid.cells, 2)
                     if data.dual.graph.has_edge(u, v)]
            weights = sorted({data.dual.graph.weight(u, v) for u, v in pairs})
            out.append(Check("4x4 grid {L,M,N,P} x {1..4}", weights == [2],
                             f"{len(pairs)} concurrent pairs, shared point counts {weights}"))
    return out


def _reference_grid(data: SystemData):
    want = {frozenset(f"{r}{c}" for c in "1234") for r in "LMNP"}
    for grid in geom.find_grids(data.dual, 4, 4):
        rows = {frozenset(data.names[v] for v in r) for r in grid.rows}
        cols = {frozenset(data.names[v] for v in c) for c in grid.columns}
        if rows == want or cols == want:
            return grid
    return None


def check_perp_sets(data: SystemData) -> Check:
    sizes = sorted({len(geom.perp_set(data.dual, v)) for v in range(data.dual.n)})
    return Check("perp-set sizes", sizes == [13], f"sizes {sizes} over {data.dual.n} dual points")


def check_three_qubit_grid(data: SystemData) -> list[Check]:
    grids = geom.find_grids(data.dual, 3, 3, weight=3, limit=1)
    if not grids:
        return [Check("3x3 grid of weight 3", False, "none found")]
    grid = grids[0]
    g = data.dual.graph
    mates = [(u, v) for r in grid.rows + grid.columns for u, v in itertools.combinations(r, 2)]
    ok = all(g.weight(u, v) == 3 for u, v in mates)
    report = geom.grid_sharing_report(data.geometry, grid)

    def summary(fams):
        return "/".join(f"{f['union_of_pairwise']}({f['common']})" for f in fams)

    return [
        Check("3x3 grid of weight 3", ok, f"rows {[list(r) for r in grid.rows]}"),
        Check("3x3 grid sharing", None,
              f"observables shared per row {summary(report['rows'])}, "
              f"per column {summary(report['columns'])} (union of pairwise meets, common meet in parentheses)"),
    ]


def check_no_multi_lines(data: SystemData) -> Check:
    pairs = geom.multi_line_pairs(data.geometry)
    return Check("multi-line pairs", not pairs, f"{len(pairs)} pairs")


def check_reference_tables(data: SystemData) -> Check:
    diffs = compare_reference_lines(data.geometry)
    if not diffs:
        return Check("reference line table", None, "all lines match")
    text = "; ".join(f"{d.name} lists {','.join(d.unexpected)} where {','.join(d.missing)} is computed"
                     for d in diffs)
    return Check("reference line table", None, text)


def system_checks(dims) -> list[Check]:
    data = SystemData(dims)
    dims = data.spec.factor_dims
    checks = [check_operator_count(data)]
    if data.spec.total_dim <= 64:
        checks.append(check_oracle(data))
    checks.append(check_line_census(data))
    if dims == (2, 3):
        checks += [check_reference_tables(data), check_spectrum(data, "dual"),
                   check_line_graph_iso(data), *check_ring_line(data), check_mubs(data),
                   check_anti_flags(data), *check_multi_line(data)]
    elif dims == (3, 3):
        checks += [check_reference_tables(data), check_spectrum(data, "pauli"),
                   check_spectrum(data, "dual"), check_mubs(data), *check_multi_line(data),
                   check_perp_sets(data)]
    elif dims == (2, 2, 2):
        checks += [check_spectrum(data, "pauli"), check_strongly_regular(data),
                   *check_three_qubit_grid(data)]
    elif dims == (2, 2):
        checks.append(check_no_multi_lines(data))
    return checks


DEFAULT_SYSTEMS = ((2, 3), (3, 3), (2, 2, 2), (2, 2))


def run_checks(systems=DEFAULT_SYSTEMS) -> tuple[str, bool]:
    """Text report and overall verdict."""
    lines = []
    ok = True
    for dims in systems:
        lines.append(f"== system [{','.join(map(str, dims))}]")
        for c in system_checks(dims):
            lines.append(c.line())
            ok = ok and c.passed is not False
    lines.append(f"== {'ALL CHECKS PASSED' if ok else 'VERIFICATION FAILED'}")
    return "\n".join(lines) + "\n", ok
