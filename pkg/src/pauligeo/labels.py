"""
Conventional labels for the qubit-qutrit [2,3] and two-qutrit [3,3] systems.

Single-qudit operators are numbered sigma_1..sigma_9 as

    qubit:  I, sigma_x, sigma_y, sigma_z
    qutrit: I, Z, X, Y=XZ, V=XZ^2, Z^2, X^2, Y^2, V^2

Pure right-factor operators get the digits 1..8, pure left-factor operators
the letters a, b, ..., and mixed ones 8 t + j, where t is the letter's
position (a=1) and j the digit of the right factor. The qubit letters run
sigma_z, sigma_x, sigma_y. Other systems get exponent codes.

REFERENCE_LINES reproduces the published line tables for both systems,
including their misprints; ``compare_reference_lines`` reports the
differences instead of failing on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import IncidenceGeometry
from .pauli import PauliOperator

QUBIT = {1: (0, 0), 2: (1, 0), 3: (1, 1), 4: (0, 1)}
QUTRIT = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1), 5: (1, 2),
          6: (0, 2), 7: (2, 0), 8: (2, 2), 9: (2, 1)}

# exponent pairs in label order (digit / letter position 1, 2, ...)
_RIGHT = [QUTRIT[j] for j in range(2, 10)]
_LEFT = {
    (2, 3): [QUBIT[4], QUBIT[2], QUBIT[3]],
    (3, 3): [QUTRIT[j] for j in range(2, 10)],
}
LETTERS = "abcdefgh"


def _split(text: str) -> tuple[str, ...]:
    return tuple(text.split())


REFERENCE_LINES: dict[tuple[int, ...], dict[str, tuple[str, ...]]] = {
    (2, 3): {name: _split(pts) for name, pts in [
        ("L1", "1 5 a 9 13"), ("L2", "2 6 a 10 14"), ("L3", "3 7 a 11 15"), ("L4", "4 8 a 12 16"),
        ("M1", "1 5 b 17 21"), ("M2", "2 6 b 18 22"), ("M3", "3 7 b 19 23"), ("M4", "4 8 b 19 24"),
        ("N1", "1 5 c 25 29"), ("N2", "2 6 c 26 30"), ("N3", "3 7 c 27 31"), ("N4", "4 8 c 28 32"),
    ]},
    (3, 3): {name: _split(pts) for name, pts in [
        ("L1", "1 5 a 9 13 e 41 45"), ("L2", "2 6 a 10 14 e 42 46"),
        ("L3", "3 7 a 11 15 e 43 47"), ("L4", "4 8 a 12 16 e 44 48"),
        ("M1", "1 5 b 17 21 f 49 53"), ("M2", "2 6 b 18 22 f 50 54"),
        ("M3", "3 7 b 19 23 f 51 55"), ("M4", "4 8 b 20 24 f 52 56"),
        ("N1", "1 5 c 25 29 g 57 61"), ("N2", "2 6 c 26 30 g 58 62"),
        ("N3", "3 7 c 27 31 g 59 63"), ("N4", "4 8 c 28 32 g 60 64"),
        ("P1", "1 5 d 33 37 h 65 69"), ("P2", "2 6 d 34 38 h 66 70"),
        ("P3", "3 7 d 35 39 h 67 71"), ("P4", "4 8 d 36 40 h 68 72"),
        ("X1", "9 22 32 39 45 50 60 67"), ("X2", "10 17 27 40 46 53 63 68"),
        ("X3", "11 20 30 33 47 56 58 69"), ("X4", "12 23 25 34 48 51 61 70"),
        ("X5", "13 18 28 35 41 54 64 71"), ("X6", "14 21 31 36 42 49 59 72"),
        ("X7", "15 24 26 37 43 52 62 65"), ("X8", "16 19 29 38 44 55 57 66"),
        ("Y1", "9 23 30 40 45 51 58 68"), ("Y2", "10 19 32 33 46 55 60 69"),
        ("Y3", "11 22 25 36 47 50 61 72"), ("Y4", "12 17 26 39 48 53 62 67"),
        ("Y5", "13 20 27 34 41 56 63 70"), ("Y6", "14 23 28 37 42 51 64 65"),
        ("Y7", "15 18 29 40 43 54 57 68"), ("Y8", "16 21 30 35 44 49 58 71"),
        ("Z1", "9 24 31 38 45 52 59 66"), ("Z2", "10 24 25 35 46 52 61 71"),
        ("Z3", "11 17 28 38 47 53 64 66"), ("Z4", "12 18 31 33 48 54 59 69"),
        ("Z5", "13 19 26 36 41 55 62 72"), ("Z6", "14 20 29 39 42 56 57 67"),
        ("Z7", "15 21 32 34 43 49 60 70"), ("Z8", "16 22 27 37 44 50 63 65"),
    ]},
}


def has_conventional_labels(dims: tuple[int, ...]) -> bool:
    return tuple(dims) in _LEFT


def label_table(dims: tuple[int, ...]) -> dict[PauliOperator, str]:
    """Operator -> label for a labelled system; empty for other systems."""
    dims = tuple(dims)
    if dims not in _LEFT:
        return {}
    table = {}
    for j, right in enumerate(_RIGHT, start=1):
        table[PauliOperator(((0, 0), right))] = str(j)
    for t, left in enumerate(_LEFT[dims], start=1):
        table[PauliOperator((left, (0, 0)))] = LETTERS[t - 1]
        for j, right in enumerate(_RIGHT, start=1):
            table[PauliOperator((left, right))] = str(8 * t + j)
    return table


@dataclass(frozen=True)
class Labeling:
    labels: tuple[str, ...]
    conventional: bool

    def __getitem__(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def points(self, labels) -> frozenset:
        lookup = {l: i for i, l in enumerate(self.labels)}
        return frozenset(lookup[l] for l in labels)


def conventional_labels(geo: IncidenceGeometry) -> Labeling:
    table = label_table(geo.spec.factor_dims)
    if table:
        return Labeling(tuple(table[op] for op in geo.points), True)
    return Labeling(tuple(op.code() for op in geo.points), False)


def _line_label_sets(geo: IncidenceGeometry, labeling: Labeling) -> list[frozenset]:
    return [frozenset(labeling[p] for p in line) for line in geo.lines]


def line_names(geo: IncidenceGeometry) -> list[str]:
    """Reference names (L1, M2, ...) matched by largest overlap; ``l<i>`` otherwise."""
    ref = REFERENCE_LINES.get(geo.spec.factor_dims)
    fallback = [f"l{i}" for i in range(len(geo.lines))]
    if ref is None or len(ref) != len(geo.lines):
        return fallback
    computed = _line_label_sets(geo, conventional_labels(geo))
    names = []
    for line in computed:
        scores = sorted(((len(line & set(pts)), name) for name, pts in ref.items()), reverse=True)
        if scores[0][0] == scores[1][0]:
            return fallback
        names.append(scores[0][1])
    if len(set(names)) != len(names):
        return fallback
    return names


@dataclass(frozen=True)
class LineDiff:
    name: str
    printed: tuple[str, ...]
    computed: tuple[str, ...]
    missing: tuple[str, ...]
    unexpected: tuple[str, ...]


def _label_key(label: str):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def compare_reference_lines(geo: IncidenceGeometry) -> list[LineDiff]:
    """Reference lines that differ from the matched computed line."""
    ref = REFERENCE_LINES.get(geo.spec.factor_dims)
    if ref is None:
        return []
    names = line_names(geo)
    computed = _line_label_sets(geo, conventional_labels(geo))
    diffs = []
    for name, line in zip(names, computed):
        if name not in ref:
            continue
        printed = ref[name]
        if set(printed) == line and len(printed) == len(line):
            continue
        diffs.append(LineDiff(
            name, printed, tuple(sorted(line, key=_label_key)),
            tuple(sorted(line - set(printed), key=_label_key)),
            tuple(sorted(set(printed) - line, key=_label_key))))
    return sorted(diffs, key=lambda d: d.name)
