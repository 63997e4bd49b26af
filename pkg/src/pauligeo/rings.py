"""
Projective lines over finite commutative product rings Z_m1 x ... x Z_mk.

Points are unit-rescaling classes of admissible pairs. Admissibility is
decided by exhaustive search for a completion to an invertible 2x2 matrix,
which is cheap at the ring sizes used here (a few dozen elements).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph

Element = tuple  # tuple of residues, one per modulus


@dataclass(frozen=True)
class ProductRing:
    moduli: tuple[int, ...]

    def __post_init__(self):
        mods = tuple(int(m) for m in self.moduli)
        if not mods or any(m < 2 for m in mods):
            raise ValueError(f"moduli must be integers >= 2, got {list(self.moduli)}")
        object.__setattr__(self, "moduli", mods)

    @cached_property
    def elements(self) -> list[Element]:
        """All elements in lexicographic residue order (for Z2 x Z3: 0', 1', ..., 5')."""
        return list(itertools.product(*(range(m) for m in self.moduli)))

    @cached_property
    def index(self) -> dict[Element, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    @property
    def one(self) -> Element:
        return (1,) * len(self.moduli)

    def __len__(self):
        return math.prod(self.moduli)

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % m for a, b, m in zip(x, y, self.moduli))

    def mul(self, x: Element, y: Element) -> Element:
        return tuple((a * b) % m for a, b, m in zip(x, y, self.moduli))

    def is_unit(self, x: Element) -> bool:
        return all(math.gcd(a, m) == 1 for a, m in zip(x, self.moduli))

    @cached_property
    def units(self) -> list[Element]:
        return [x for x in self.elements if self.is_unit(x)]

    def det(self, a: Element, b: Element, c: Element, d: Element) -> Element:
        return self.sub(self.mul(a, d), self.mul(b, c))

    def prime_label(self, x: Element) -> str:
        """Primed index label such as 4' (element position in lexicographic order)."""
        return f"{self.index[x]}'"


def classify_elements(R: ProductRing) -> tuple[list[Element], list[Element]]:
    """(units, zero divisors); zero is filed with the zero divisors."""
    units = [x for x in R.elements if R.is_unit(x)]
    others = [x for x in R.elements if not R.is_unit(x)]
    return units, others


def ring_tables(R: ProductRing) -> tuple[list[list[Element]], list[list[Element]]]:
    els = R.elements
    add = [[R.add(x, y) for y in els] for x in els]
    mul = [[R.mul(x, y) for y in els] for x in els]
    return add, mul


def is_admissible(R: ProductRing, alpha: Element, beta: Element) -> bool:
    """True iff some (gamma, delta) makes [[alpha, beta], [gamma, delta]] invertible."""
    for gamma in R.elements:
        for delta in R.elements:
            if R.is_unit(R.det(alpha, beta, gamma, delta)):
                return True
    return False


def is_admissible_gcd(R: ProductRing, alpha: Element, beta: Element) -> bool:
    """Closed-form test: each component pair generates the unit ideal of Z_m."""
    return all(math.gcd(a, b, m) == 1 for a, b, m in zip(alpha, beta, R.moduli))


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A point of P(R), stored by its lexicographically least class member."""

    representative: tuple[Element, Element]

    @property
    def alpha(self) -> Element:
        return self.representative[0]

    @property
    def beta(self) -> Element:
        return self.representative[1]


def unit_class(R: ProductRing, alpha: Element, beta: Element) -> set[tuple[Element, Element]]:
    return {(R.mul(r, alpha), R.mul(r, beta)) for r in R.units}


def projective_line(R: ProductRing) -> list[ProjectivePoint]:
    """All points of P(R), sorted by canonical representative."""
    seen: set[tuple[Element, Element]] = set()
    points = []
    for alpha, beta in itertools.product(R.elements, repeat=2):
        if (alpha, beta) in seen or not is_admissible(R, alpha, beta):
            continue
        cls = unit_class(R, alpha, beta)
        seen |= cls
        points.append(ProjectivePoint(min(cls, key=lambda pair: (R.index[pair[0]], R.index[pair[1]]))))
    return sorted(points, key=lambda p: (R.index[p.alpha], R.index[p.beta]))


def point_type(R: ProductRing, point: ProjectivePoint) -> str:
    """'both-unit', 'one-unit' or 'both-zero-divisor'."""
    n_units = R.is_unit(point.alpha) + R.is_unit(point.beta)
    return ("both-zero-divisor", "one-unit", "both-unit")[n_units]


def point_type_counts(R: ProductRing, points=None) -> dict[str, int]:
    points = projective_line(R) if points is None else points
    counts = {"one-unit": 0, "both-unit": 0, "both-zero-divisor": 0}
    for pt in points:
        counts[point_type(R, pt)] += 1
    return counts


def neighbor(R: ProductRing, X: ProjectivePoint, Y: ProjectivePoint) -> bool:
    """Distinct points are neighbours iff their representative matrix is singular."""
    if X == Y:
        raise ValueError("the neighbour relation is defined on distinct points only")
    return not R.is_unit(R.det(X.alpha, X.beta, Y.alpha, Y.beta))


def point_label(R: ProductRing, point: ProjectivePoint) -> str:
    if R.moduli == (2, 3):
        return f"({R.prime_label(point.alpha)},{R.prime_label(point.beta)})"
    return f"({','.join(map(str, point.alpha))};{','.join(map(str, point.beta))})"


def neighbor_graph(R: ProductRing) -> Graph:
    points = projective_line(R)
    return Graph.from_adjacency(
        len(points), lambda u, v: neighbor(R, points[u], points[v]),
        labels=[point_label(R, p) for p in points])


def expected_line_size(R: ProductRing) -> int:
    """|P(Z_m)| = m * prod_{p | m} (1 + 1/p), multiplied over the factors."""
    total = 1
    for m in R.moduli:
        size = m
        for p in _prime_divisors(m):
            size = size // p * (p + 1)
        total *= size
    return total


def _prime_divisors(m: int) -> list[int]:
    out, f = [], 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out
