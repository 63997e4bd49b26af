import itertools

import pytest

from pauligeo import geometry as G
from pauligeo.graphs import is_isomorphic, rook_graph, spectrum_exact
from pauligeo.labels import (REFERENCE_LINES, compare_reference_lines, conventional_labels,
                             label_table, line_names)
from pauligeo.pauli import PauliOperator, SystemSpec, commutes


@pytest.fixture(scope="module")
def g6():
    return G.build_geometry(SystemSpec((2, 3)))


@pytest.fixture(scope="module")
def g9():
    return G.build_geometry(SystemSpec((3, 3)))


@pytest.fixture(scope="module")
def g8():
    return G.build_geometry(SystemSpec((2, 2, 2)))


def named(geo):
    names = line_names(geo)
    return {n: i for i, n in enumerate(names)}


@pytest.mark.parametrize("dims, count, size", [((2, 3), 12, 5), ((3, 3), 40, 8),
                                               ((2, 2, 2), 135, 7), ((2, 2), 15, 3)])
def test_line_census(dims, count, size):
    geo = G.build_geometry(SystemSpec(dims))
    assert len(geo.lines) == count
    assert {len(l) for l in geo.lines} == {size}


@pytest.mark.parametrize("dims", [(2, 3), (3, 3), (2, 2)])
def test_lines_are_maximal_commuting_sets(dims):
    spec = SystemSpec(dims)
    geo = G.build_geometry(spec)
    for line in geo.lines:
        ops = [geo.points[p] for p in line]
        assert all(commutes(a, b, spec) for a, b in itertools.combinations(ops, 2))
        outside = [o for i, o in enumerate(geo.points) if i not in line]
        assert not any(all(commutes(o, a, spec) for a in ops) for o in outside)


def test_min_line_size_keeps_smaller_maximal_sets():
    geo = G.build_geometry(SystemSpec((2, 3)), min_line_size=2)
    assert len(geo.lines) >= 12
    assert all(len(l) >= 2 for l in geo.lines)


def test_max_points_guard():
    with pytest.raises(ValueError):
        G.build_geometry(SystemSpec((3, 3)), max_points=10)


def test_incidence_sums(g6, g9):
    assert sum(len(t) for t in g6.lines_through) == 60
    assert sum(len(t) for t in g9.lines_through) == 320


def test_labels(g6, g9):
    table = label_table((2, 3))
    assert table[PauliOperator(((0, 1), (0, 0)))] == "a"
    assert table[PauliOperator(((0, 0), (0, 1)))] == "1"
    assert len(table) == 35 and len(set(table.values())) == 35
    assert len(set(label_table((3, 3)).values())) == 80
    assert label_table((2, 2)) == {}
    lab = conventional_labels(g6)
    L1 = g6.lines[named(g6)["L1"]]
    assert {lab[p] for p in L1} == {"1", "5", "a", "9", "13"}
    assert not conventional_labels(G.build_geometry(SystemSpec((2, 2)))).conventional


def test_reference_table_diffs(g6, g9):
    diffs = compare_reference_lines(g6)
    assert [d.name for d in diffs] == ["M4"]
    assert diffs[0].unexpected == ("19",) and diffs[0].missing == ("20",)
    assert compare_reference_lines(g9) == []
    assert sorted(line_names(g9)) == sorted(REFERENCE_LINES[(3, 3)])


def test_dual_weights(g6):
    d = G.dual_graph(g6)
    ix = named(g6)
    assert d.graph.weight(ix["L1"], ix["M1"]) == 2
    assert d.graph.weight(ix["L1"], ix["L2"]) == 1
    assert not d.graph.has_edge(ix["L1"], ix["M2"])
    for u, v in d.graph.edges:
        assert d.graph.weight(u, v) == len(g6.meet(u, v))


def test_dual_six_is_rook_graph(g6):
    d = G.dual_graph(g6)
    assert spectrum_exact(d.graph).as_dict() == {-2: 6, 1: 3, 2: 2, 5: 1}
    assert is_isomorphic(d.graph.unweighted(), rook_graph(3, 4)) is not None
    assert len(d.graph.edges) == 30
    assert sorted(d.graph.weights.values()).count(2) == 12


def test_pencils(g6, g9):
    d9 = G.dual_graph(g9)
    assert len(d9.pencils) == 40
    assert all(len(p) == 4 for p in d9.pencils)
    assert all(len(p) == 2 for p in d9.pencil_points)
    d6 = G.dual_graph(g6)
    assert sorted(len(p) for p in d6.pencils) == [3, 3, 3, 3, 4, 4, 4]
    # every line through a point belongs to that point's pencil
    for pencil, pts in zip(d6.pencils, d6.pencil_points):
        for p in pts:
            assert g6.lines_through[p] == pencil


def test_multi_line_pairs(g6):
    ix = named(g6)
    lab = conventional_labels(g6)
    pairs = {(i, j): s for i, j, s in G.multi_line_pairs(g6)}
    shared = pairs[tuple(sorted((ix["L1"], ix["M1"])))]
    assert {lab[p] for p in shared} == {"1", "5"}
    assert G.multi_line_pairs(G.build_geometry(SystemSpec((2, 2)))) == []


def test_anti_flags(g6):
    ix = named(g6)
    lab = conventional_labels(g6)
    numbers = G.anti_flag_connection_numbers(g6)
    assert numbers[lab.index("a"), ix["M1"]] == 1
    assert (lab.index("a"), ix["L1"]) not in numbers  # a flag, not an anti-flag
    assert len(numbers) == 35 * 12 - 60


def test_is_hyperplane_examples(g6):
    ix = named(g6)
    L1, M1, N1 = (g6.line_sets[ix[n]] for n in ("L1", "M1", "N1"))
    assert not G.is_hyperplane(g6, L1)
    assert G.is_hyperplane(g6, L1 | M1 | N1)
    assert G.is_hyperplane(g6, frozenset())
    assert G.is_hyperplane(g6, frozenset(range(len(g6.points))))


def test_multi_line_hyperplanes_six(g6):
    fams = G.multi_line_hyperplanes(g6)
    names = line_names(g6)
    got = sorted(sorted(names[i] for i in f.lines) for f in fams)
    assert got == [[f"L{k}", f"M{k}", f"N{k}"] for k in "1234"]
    for f in fams:
        assert G.is_hyperplane(g6, f.points(g6))


def test_multi_line_hyperplanes_nine(g9):
    total = G.multi_line_hyperplanes(g9)
    local = G.multi_line_hyperplanes(g9, local_factor=1)
    assert len(local) == 4
    assert all(len(f.lines) == 4 and len(f.shared) == 2 for f in local)
    assert len(total) == len(G.multi_line_families(g9))
    # strict closure fails; the unions close only up to conjugate points
    for f in total:
        assert not G.is_hyperplane(g9, f.points(g9))
        assert G.is_hyperplane(g9, f.points(g9), conjugate_aware=True)


def test_perp_sets(g6, g9):
    d9 = G.dual_graph(g9)
    assert {len(G.perp_set(d9, v)) for v in range(d9.n)} == {13}
    d6 = G.dual_graph(g6)
    assert {len(G.perp_set(d6, v)) for v in range(d6.n)} == {6}


def test_ovoids(g9):
    d9 = G.dual_graph(g9)
    ovoids = G.find_ovoids(d9)
    assert len(ovoids) == 36 and {len(o) for o in ovoids} == {10}
    for o in ovoids:
        assert not any(d9.graph.has_edge(u, v) for u, v in itertools.combinations(o, 2))
    assert ovoids == G.mub_line_sets(g9)


def test_mub_line_sets(g6, g9):
    sets = G.mub_line_sets(g6)
    assert {len(s) for s in sets} == {3}
    everything = frozenset(range(80))
    for s in G.mub_line_sets(g9):
        assert frozenset().union(*(g9.line_sets[i] for i in s)) == everything


def test_grid_validation(g6):
    with pytest.raises(ValueError):
        G.find_grids(G.dual_graph(g6), 1, 4)


def test_w6_grid(g6):
    d6 = G.dual_graph(g6)
    grids = G.find_grids(d6, 3, 4)
    assert len(grids) == 1
    assert sorted(grids[0].cells) == list(range(12))


def test_w9_grids(g9):
    d9 = G.dual_graph(g9)
    names = line_names(g9)
    grids = G.find_grids(d9, 4, 4)
    want = {frozenset(f"{r}{c}" for c in "1234") for r in "LMNP"}
    hits = [g for g in grids if {frozenset(names[v] for v in r) for r in g.rows} == want
            or {frozenset(names[v] for v in c) for c in g.columns} == want]
    assert len(hits) == 1
    grid = hits[0]
    for u, v in itertools.combinations(grid.cells, 2):
        if d9.graph.has_edge(u, v):
            assert d9.graph.weight(u, v) == 2


def _check_grid(dual, grid, weight):
    g = dual.graph
    rows, cols = grid.rows, grid.columns
    pos = {v: (i, j) for i, r in enumerate(rows) for j, v in enumerate(r)}
    for u, v in itertools.combinations(grid.cells, 2):
        (a, b), (c, d) = pos[u], pos[v]
        mate = g.has_edge(u, v) and (weight is None or g.weight(u, v) == weight)
        assert mate == (a == c or b == d)


def test_w8_weight_three_grids(g8):
    d8 = G.dual_graph(g8)
    grids = G.find_grids(d8, 3, 3, weight=3)
    assert grids
    for grid in grids[:50]:
        _check_grid(d8, grid, 3)
        report = G.grid_sharing_report(g8, grid)
        for fam in report["rows"] + report["columns"]:
            assert fam["pairwise"] == [3, 3, 3]
    assert G.find_grids(d8, 3, 3, weight=3, limit=5) == grids[:5]


def test_grids_are_reported_once(g9):
    d9 = G.dual_graph(g9)
    keys = {G._grid_key(g) for g in G.find_grids(d9, 4, 4)}
    assert len(keys) == len(G.find_grids(d9, 4, 4))


def test_line_family_sharing(g6):
    ix = named(g6)
    fam = G.line_family_sharing(g6, [ix["L1"], ix["M1"], ix["N1"]])
    assert fam == {"pairwise": [2, 2, 2], "union_of_pairwise": 2, "common": 2, "points": 11}


def test_conjugacy_classes(g6):
    classes = g6.conjugacy_classes
    assert sum(len(c) for c in classes) == 35
    for c in classes:
        assert len({g6.lines_through[p] for p in c}) == 1
