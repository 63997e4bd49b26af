"""
Point-line incidence geometry of a Pauli commutation graph.

Points are the non-identity operators, lines the maximum commuting sets
(maximal cliques of the commutation graph). The dual graph has the lines as
vertices, joined when they meet, with the size of the intersection as the
edge weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .graphs import Graph, maximal_cliques, maximum_independent_sets
from .pauli import PauliOperator, SystemSpec, commutes, enumerate_operators

DEFAULT_MAX_POINTS = 1024


def pauli_graph(spec: SystemSpec, points: list[PauliOperator] | None = None,
                labels=None) -> Graph:
    """Commutation graph on the non-identity operators of ``spec``."""
    points = enumerate_operators(spec) if points is None else points
    return Graph.from_adjacency(len(points), lambda u, v: commutes(points[u], points[v], spec),
                                labels=labels)


@dataclass(eq=False)
class IncidenceGeometry:
    spec: SystemSpec
    points: list[PauliOperator]
    lines: list[tuple[int, ...]]
    graph: Graph = field(repr=False)

    @cached_property
    def line_sets(self) -> list[frozenset]:
        return [frozenset(l) for l in self.lines]

    @cached_property
    def lines_through(self) -> list[tuple[int, ...]]:
        through = [[] for _ in self.points]
        for i, line in enumerate(self.lines):
            for p in line:
                through[p].append(i)
        return [tuple(t) for t in through]

    @cached_property
    def point_index(self) -> dict[PauliOperator, int]:
        return {op: i for i, op in enumerate(self.points)}

    def meet(self, i: int, j: int) -> frozenset:
        return self.line_sets[i] & self.line_sets[j]

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Points grouped by the exact set of lines through them."""
        groups: dict[tuple[int, ...], list[int]] = {}
        for p, through in enumerate(self.lines_through):
            groups.setdefault(through, []).append(p)
        return sorted(tuple(g) for g in groups.values())


def build_geometry(spec: SystemSpec, min_line_size: int | None = None,
                   max_points: int = DEFAULT_MAX_POINTS) -> IncidenceGeometry:
    """Lines are the maximal cliques of the largest size (or of size >= ``min_line_size``)."""
    n_points = spec.total_dim ** 2 - 1
    if n_points > max_points:
        raise ValueError(f"{n_points} operators exceeds the point cap {max_points}")
    points = enumerate_operators(spec)
    g = pauli_graph(spec, points)
    cliques = maximal_cliques(g, min_size=min_line_size or 1)
    if min_line_size is None:
        top = max(len(c) for c in cliques)
        cliques = [c for c in cliques if len(c) == top]
    return IncidenceGeometry(spec, points, [tuple(c) for c in cliques], g)


# ---------------------------------------------------------------- dual

@dataclass(eq=False)
class DualGeometry:
    geometry: IncidenceGeometry
    graph: Graph
    pencils: list[tuple[int, ...]]
    pencil_points: list[tuple[int, ...]]

    @property
    def n(self) -> int:
        return self.graph.n


def dual_graph(geo: IncidenceGeometry, labels=None) -> DualGeometry:
    n = len(geo.lines)
    sets = geo.line_sets
    g = Graph.from_adjacency(n, lambda i, j: bool(sets[i] & sets[j]),
                             weight=lambda i, j: len(sets[i] & sets[j]), labels=labels)
    groups: dict[tuple[int, ...], list[int]] = {}
    for p, through in enumerate(geo.lines_through):
        if len(through) >= 2:
            groups.setdefault(through, []).append(p)
    pencils = sorted(groups)
    return DualGeometry(geo, g, pencils, [tuple(groups[k]) for k in pencils])


def multi_line_pairs(geo: IncidenceGeometry) -> list[tuple[int, int, frozenset]]:
    """Unordered line pairs sharing two or more points, with the shared points."""
    out = []
    for i, j in itertools.combinations(range(len(geo.lines)), 2):
        shared = geo.meet(i, j)
        if len(shared) >= 2:
            out.append((i, j, shared))
    return out


def anti_flag_connection_numbers(geo: IncidenceGeometry) -> dict[tuple[int, int], int]:
    """For each point P off line l, the number of lines through P that meet l."""
    out = {}
    for p, through in enumerate(geo.lines_through):
        for l, line in enumerate(geo.line_sets):
            if p in line:
                continue
            out[p, l] = sum(1 for m in through if geo.line_sets[m] & line)
    return out


def is_hyperplane(geo: IncidenceGeometry, subset, conjugate_aware: bool = False) -> bool:
    """Closure test: a line holding two points of ``subset`` lies inside it.

    With ``conjugate_aware`` the two points must not be conjugate, i.e. must
    not lie on exactly the same lines. Conjugate points never single out a
    line, so in geometries with multi-lines they are not allowed to force
    closure.
    """
    H = frozenset(subset)
    for line in geo.line_sets:
        inside = line & H
        if len(inside) < 2 or line <= H:
            continue
        if not conjugate_aware:
            return False
        keys = {geo.lines_through[p] for p in inside}
        if len(keys) >= 2:
            return False
    return True


@dataclass(frozen=True)
class MultiLineFamily:
    """All lines through a common point set of size >= 2, pairwise meeting in exactly it."""

    lines: tuple[int, ...]
    shared: tuple[int, ...]

    def points(self, geo: IncidenceGeometry) -> frozenset:
        return frozenset().union(*(geo.line_sets[i] for i in self.lines))


def multi_line_families(geo: IncidenceGeometry) -> list[MultiLineFamily]:
    found: dict[frozenset, MultiLineFamily] = {}
    for _, _, shared in multi_line_pairs(geo):
        if shared in found:
            continue
        members = tuple(i for i, l in enumerate(geo.line_sets) if shared <= l)
        if all(geo.meet(i, j) == shared for i, j in itertools.combinations(members, 2)):
            found[shared] = MultiLineFamily(members, tuple(sorted(shared)))
    return sorted(found.values(), key=lambda f: (f.shared, f.lines))


def multi_line_hyperplanes(geo: IncidenceGeometry,
                           local_factor: int | None = None) -> list[MultiLineFamily]:
    """Multi-line families whose point union closes as a hyperplane.

    Closure is tested conjugate-aware (see ``is_hyperplane``). With
    ``local_factor`` only families whose shared operators act trivially on
    every other factor are kept.
    """
    out = []
    for fam in multi_line_families(geo):
        if local_factor is not None:
            supports = {geo.points[p].support() for p in fam.shared}
            if supports != {(local_factor,)}:
                continue
        if is_hyperplane(geo, fam.points(geo), conjugate_aware=True):
            out.append(fam)
    return out


# ---------------------------------------------------------------- dual point sets

def perp_set(dual: DualGeometry, v: int) -> frozenset:
    return frozenset({v}) | dual.graph.adjacency[v]


def find_ovoids(dual: DualGeometry, limit: int | None = None) -> list[list[int]]:
    """Maximum sets of pairwise non-collinear dual points."""
    return maximum_independent_sets(dual.graph, limit=limit)


def mub_line_sets(geo: IncidenceGeometry, limit: int | None = None) -> list[list[int]]:
    """Maximum sets of pairwise point-disjoint lines."""
    sets = geo.line_sets
    g = Graph.from_adjacency(len(sets), lambda i, j: bool(sets[i] & sets[j]))
    return maximum_independent_sets(g, limit=limit)


@dataclass(frozen=True)
class Grid:
    rows: tuple[tuple[int, ...], ...]

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    @property
    def cells(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)


def find_grids(dual: DualGeometry, rows: int, cols: int, weight: int | None = None,
               limit: int | None = None) -> list[Grid]:
    """rows x cols grids of dual points.

    Two cells in a common row or column must be "mates": adjacent, and with
    the given intersection weight if ``weight`` is set. Cells sharing neither
    row nor column must not be mates, so the grid is an induced rook graph
    in the mate graph. Each grid is reported once, with its smallest dual
    point in the corner and the first row and column sorted; square grids
    are also deduplicated under transposition.
    """
    if rows < 2 or cols < 2:
        raise ValueError("grids need at least two rows and two columns")
    g = dual.graph
    if weight is None:
        mates = [set(nb) for nb in g.adjacency]
    else:
        mates = [{u for u in g.adjacency[v] if g.weight(u, v) == weight} for v in range(g.n)]
    cells = [(i, j) for i in range(rows) for j in range(cols)]
    out: list[Grid] = []
    seen: set = set()

    def place(k, grid, used):
        if limit is not None and len(out) >= limit:
            return
        if k == len(cells):
            G = Grid(tuple(tuple(r) for r in grid))
            key = _grid_key(G)
            if key not in seen:
                seen.add(key)
                out.append(G)
            return
        i, j = cells[k]
        corner = grid[0][0]
        cand = None
        for (a, b) in cells[:k]:
            v = grid[a][b]
            if a == i or b == j:
                cand = set(mates[v]) if cand is None else cand & mates[v]
        cand = {c for c in cand if c > corner and c not in used}
        if i == 0 and j > 0:
            cand = {c for c in cand if c > grid[0][j - 1]}
        if j == 0 and i > 0:
            cand = {c for c in cand if c > grid[i - 1][0]}
        for (a, b) in cells[:k]:
            if a != i and b != j:
                cand -= mates[grid[a][b]]
        for c in sorted(cand):
            grid[i][j] = c
            used.add(c)
            place(k + 1, grid, used)
            used.discard(c)
            grid[i][j] = None

    for corner in range(g.n):
        grid = [[None] * cols for _ in range(rows)]
        grid[0][0] = corner
        place(1, grid, {corner})
        if limit is not None and len(out) >= limit:
            break
    return out


def _grid_key(grid: Grid):
    r = tuple(sorted(tuple(sorted(x)) for x in grid.rows))
    c = tuple(sorted(tuple(sorted(x)) for x in grid.columns))
    if len(grid.rows) == len(grid.columns):
        return tuple(sorted((r, c)))
    return r, c


def line_family_sharing(geo: IncidenceGeometry, lines) -> dict:
    """Intersection statistics of a family of lines (e.g. a grid row)."""
    sets = [geo.line_sets[i] for i in lines]
    pairwise = [a & b for a, b in itertools.combinations(sets, 2)]
    return {
        "pairwise": [len(s) for s in pairwise],
        "union_of_pairwise": len(frozenset().union(*pairwise)),
        "common": len(frozenset.intersection(*sets)),
        "points": len(frozenset().union(*sets)),
    }


def grid_sharing_report(geo: IncidenceGeometry, grid: Grid) -> dict:
    return {
        "rows": [line_family_sharing(geo, r) for r in grid.rows],
        "columns": [line_family_sharing(geo, c) for c in grid.columns],
    }
