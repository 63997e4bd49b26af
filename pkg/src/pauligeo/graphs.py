"""
Finite undirected graphs with optional integer edge weights.

Spectra are computed exactly: the adjacency characteristic polynomial is
obtained by Hessenberg reduction modulo a set of word-sized primes and
lifted to Z by Chinese remaindering under a provable coefficient bound.
Integer roots are then split off by exact synthetic division.

Clique searches work on Python ints used as bitsets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_SPECTRUM_CAP = 512


@dataclass(eq=False)
class Graph:
    n: int
    edges: frozenset = frozenset()
    weights: dict | None = None
    labels: tuple | None = None

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        self.edges = frozenset(norm)
        if self.weights is not None:
            w = {(min(u, v), max(u, v)): int(k) for (u, v), k in self.weights.items()}
            if set(w) != self.edges:
                raise ValueError("weights must be defined exactly on the edge set")
            if any(k < 1 for k in w.values()):
                raise ValueError("edge weights must be >= 1")
            self.weights = w
        if self.labels is not None:
            self.labels = tuple(self.labels)
            if len(self.labels) != self.n:
                raise ValueError("one label per vertex required")

    @classmethod
    def from_adjacency(cls, n: int, adjacent, weight=None, labels=None) -> "Graph":
        """Build from a predicate on vertex pairs; ``weight`` maps a pair to its weight."""
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if adjacent(u, v)]
        weights = {e: weight(*e) for e in edges} if weight is not None else None
        return cls(n, frozenset(edges), weights, labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.weights) == (other.n, other.edges, other.weights)

    def __repr__(self):
        kind = "weighted " if self.weights else ""
        return f"<{kind}Graph n={self.n} m={len(self.edges)}>"

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    @cached_property
    def adjacency(self) -> list[frozenset]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return [frozenset(s) for s in nbrs]

    @cached_property
    def bits(self) -> list[int]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def weight(self, u: int, v: int) -> int:
        """Weight of an edge (1 for unweighted graphs), 0 for non-edges."""
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            return 0
        return self.weights[e] if self.weights is not None else 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1
        return A

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        weights = None
        if self.weights is not None:
            weights = {(index[u], index[v]): self.weights[(u, v)]
                       for u, v in self.edges if u in index and v in index}
        labels = [self.label(v) for v in vertices] if self.labels is not None else None
        return Graph(len(vertices), frozenset(edges), weights, labels)

    def unweighted(self) -> "Graph":
        return Graph(self.n, self.edges, None, self.labels)

    def complement(self) -> "Graph":
        edges = [e for e in itertools.combinations(range(self.n), 2) if e not in self.edges]
        return Graph(self.n, frozenset(edges), None, self.labels)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    """K(m, n) with parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise ValueError("both parts need at least one vertex")
    return Graph(m + n, frozenset((i, m + j) for i in range(m) for j in range(n)))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g in sorted order; adjacent iff they share an endpoint."""
    es = sorted(g.edges)
    edges = [(i, j) for (i, e), (j, f) in itertools.combinations(enumerate(es), 2)
             if set(e) & set(f)]
    return Graph(len(es), frozenset(edges), labels=[f"{u}-{v}" for u, v in es])


def rook_graph(rows: int, cols: int) -> Graph:
    """K_rows x K_cols, vertex r * cols + c."""
    def adj(u, v):
        return (u // cols == v // cols) or (u % cols == v % cols)
    return Graph.from_adjacency(rows * cols, adj)


# ---------------------------------------------------------------- degrees

def degree_sequence(g: Graph) -> list[int]:
    return [len(nb) for nb in g.adjacency]


def is_regular(g: Graph) -> int | None:
    """Common degree if g is regular, else None."""
    degs = set(degree_sequence(g))
    if len(degs) == 1:
        return degs.pop()
    if g.n == 0:
        return 0
    return None


def strongly_regular_parameters(g: Graph) -> tuple[int, int, int, int] | None:
    """(n, k, lambda, mu) if g is strongly regular, else None.

    Complete and edgeless graphs are accepted; mu (resp. lambda) is then 0.
    """
    k = is_regular(g)
    if k is None:
        return None
    lam = mu = None
    bits = g.bits
    for u, v in itertools.combinations(range(g.n), 2):
        common = (bits[u] & bits[v]).bit_count()
        if bits[u] >> v & 1:
            if lam is None:
                lam = common
            elif lam != common:
                return None
        else:
            if mu is None:
                mu = common
            elif mu != common:
                return None
    return g.n, k, lam or 0, mu or 0


# ---------------------------------------------------------------- spectra

@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues with multiplicities, ascending.

    ``residual_factor`` holds the ascending integer coefficients of whatever
    part of the characteristic polynomial has no integer roots (empty when
    the spectrum is fully integral).
    """

    eigenvalues: tuple[tuple[int, int], ...]
    residual_factor: tuple[int, ...] = ()

    def as_dict(self) -> dict[int, int]:
        return dict(self.eigenvalues)

    @property
    def is_integral(self) -> bool:
        return not self.residual_factor

    def __str__(self):
        body = ", ".join(f"{v}:{m}" for v, m in self.eigenvalues)
        s = "{" + body + "}"
        if self.residual_factor:
            s += f" residual {list(self.residual_factor)}"
        return s


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:  # deterministic for n < 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(start: int) -> Iterator[int]:
    q = start - 1
    while q > 2:
        if _is_probable_prime(q):
            yield q
        q -= 1


_MODULUS_START = 1 << 31


def _charpoly_mod(A: np.ndarray, p: int) -> list[int]:
    """Ascending coefficients of det(xI - A) over GF(p), via Hessenberg form."""
    n = A.shape[0]
    H = np.array(A % p, dtype=np.int64)
    for j in range(n - 2):
        m = j + 1
        nz = np.nonzero(H[m:, j])[0]
        if len(nz) == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m], :] = H[[m, i], :]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, j]), -1, p)
        for i in range(m + 1, n):
            if H[i, j] == 0:
                continue
            u = int(H[i, j]) * inv % p
            H[i, :] = (H[i, :] - u * H[m, :]) % p
            H[:, m] = (H[:, m] + u * H[:, i]) % p
    # p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}
    polys = [np.zeros(n + 1, dtype=np.int64)]
    polys[0][0] = 1
    for k in range(n):
        pk = np.zeros(n + 1, dtype=np.int64)
        prev = polys[k]
        pk[1:] = prev[:-1]
        pk = (pk - int(H[k, k]) * prev) % p
        t = 1
        for i in range(k - 1, -1, -1):
            t = t * int(H[i + 1, i]) % p
            if t == 0:
                break
            c = t * int(H[i, k]) % p
            if c:
                pk = (pk - c * polys[i]) % p
        polys.append(pk)
    return [int(x) for x in polys[n]]


def characteristic_polynomial(g: Graph) -> list[int]:
    """Ascending integer coefficients of det(xI - A) for the unweighted adjacency A."""
    n = g.n
    if n == 0:
        return [1]
    A = g.adjacency_matrix()
    rho = max(int(np.abs(A).sum(axis=1).max()), 1)
    # every coefficient is an elementary symmetric function of eigenvalues
    # bounded by rho, so |c_k| <= C(n, k) rho^k <= (1 + rho)^n
    bound = 2 * (1 + rho) ** n + 1
    residues, moduli, M = [], [], 1
    for q in _primes_below(_MODULUS_START):
        residues.append(_charpoly_mod(A, q))
        moduli.append(q)
        M *= q
        if M > bound:
            break
    coeffs = []
    for k in range(n + 1):
        x = 0
        for r, q in zip(residues, moduli):
            Mq = M // q
            x += r[k] * Mq * pow(Mq, -1, q)
        x %= M
        if x > M // 2:
            x -= M
        coeffs.append(x)
    return coeffs


def _divide_linear(coeffs: list[int], root: int) -> tuple[list[int], int]:
    """Divide ascending ``coeffs`` by (x - root); returns (quotient, remainder)."""
    deg = len(coeffs) - 1
    q = [0] * deg
    acc = coeffs[deg]
    for k in range(deg - 1, -1, -1):
        q[k] = acc
        acc = coeffs[k] + root * acc
    return q, acc


def spectrum_exact(g: Graph, cap: int = DEFAULT_SPECTRUM_CAP) -> Spectrum:
    if g.n > cap:
        raise ValueError(f"{g.n} vertices exceeds the spectrum cap {cap}")
    poly = characteristic_polynomial(g)
    maxdeg = max(degree_sequence(g), default=0)
    found = []
    for lam in range(-maxdeg, maxdeg + 1):
        mult = 0
        while len(poly) > 1:
            q, r = _divide_linear(poly, lam)
            if r != 0:
                break
            poly, mult = q, mult + 1
        if mult:
            found.append((lam, mult))
    residual = tuple(poly) if len(poly) > 1 else ()
    return Spectrum(tuple(found), residual)


# ---------------------------------------------------------------- cliques

def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _bits_to_list(x: int) -> list[int]:
    return list(_iter_bits(x))


def maximal_cliques(g: Graph, min_size: int = 1) -> list[list[int]]:
    """All inclusion-maximal cliques with at least ``min_size`` vertices.

    Bron-Kerbosch with Tomita pivoting over bitsets. Each clique is sorted,
    and the list is sorted lexicographically.
    """
    adj = g.bits
    out = []

    def expand(R, size, P, X):
        if not P and not X:
            if size >= min_size:
                out.append(R)
            return
        if size + P.bit_count() < min_size:
            return
        pivot = max(_iter_bits(P | X), key=lambda u: (P & adj[u]).bit_count())
        for v in _iter_bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, size + 1, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    if g.n:
        expand(0, 0, (1 << g.n) - 1, 0)
    return sorted(_bits_to_list(R) for R in out)


def _color_bound(P: int, adj: list[int]) -> int:
    colors = 0
    while P:
        colors += 1
        Q = P
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~adj[v] & ~(1 << v)
            P &= ~(1 << v)
    return colors


def maximum_cliques(g: Graph, limit: int | None = None) -> list[list[int]]:
    """Every clique of maximum size (or the first ``limit`` found), sorted.

    Branch and bound with a greedy colouring bound; the bound is compared
    strictly so that ties with the incumbent are still explored. When
    ``limit`` is given, the search runs to completion for the size but stops
    recording witnesses beyond the limit.
    """
    adj = g.bits
    n = g.n
    if n == 0:
        return [[]]
    order = sorted(range(n), key=lambda v: (-len(g.adjacency[v]), v))
    best = [0]
    found: list[int] = []

    def expand(R, size, P):
        if not P:
            if size > best[0]:
                best[0] = size
                found.clear()
                found.append(R)
            elif size == best[0] and (limit is None or len(found) < limit):
                found.append(R)
            return
        if size + _color_bound(P, adj) < best[0]:
            return
        for v in order:
            bit = 1 << v
            if not P & bit:
                continue
            if size + P.bit_count() < best[0]:
                return
            expand(R | bit, size + 1, P & adj[v])
            P &= ~bit

    expand(0, 0, (1 << n) - 1)
    return sorted(_bits_to_list(R) for R in found)


def maximum_independent_sets(g: Graph, limit: int | None = None) -> list[list[int]]:
    return maximum_cliques(g.complement(), limit=limit)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


# ---------------------------------------------------------------- isomorphism

def _refine(nbrs, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition finer than ``colors``."""
    n_classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted((colors[u], w) for u, w in nbrs[v])))
                for v in range(len(colors))]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(index) == n_classes:
            return new
        colors, n_classes = new, len(index)


def validate_isomorphism(g: Graph, h: Graph, mapping: Sequence[int],
                         use_weights: bool | None = None) -> bool:
    """Check edge by edge that ``mapping`` (g vertex -> h vertex) is an isomorphism."""
    if use_weights is None:
        use_weights = g.is_weighted and h.is_weighted
    if g.n != h.n or len(mapping) != g.n or sorted(mapping) != list(range(h.n)):
        return False
    if len(g.edges) != len(h.edges):
        return False
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if not h.has_edge(a, b):
            return False
        if use_weights and g.weight(u, v) != h.weight(a, b):
            return False
    return True


def is_isomorphic(g: Graph, h: Graph, use_weights: bool | None = None) -> list[int] | None:
    """A certified isomorphism g -> h as a list ``mapping[v_g] = v_h``, or None.

    Weights act as edge colours and are compared only when both graphs carry
    them (or when forced via ``use_weights``). The search individualises one
    vertex at a time and refines the joint colouring of the disjoint union.
    """
    if use_weights is None:
        use_weights = g.is_weighted and h.is_weighted
    n = g.n
    if n != h.n or len(g.edges) != len(h.edges):
        return None
    if n == 0:
        return []

    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(2 * n)]
    for graph, off in ((g, 0), (h, n)):
        for u, v in graph.edges:
            w = graph.weight(u, v) if use_weights else 1
            nbrs[u + off].append((v + off, w))
            nbrs[v + off].append((u + off, w))

    def balanced(colors):
        counts = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, [0, 0])[v >= n] += 1
        return all(a == b for a, b in counts.values())

    def search(colors):
        colors = _refine(nbrs, colors)
        if not balanced(colors):
            return None
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        if all(len(vs) == 1 for vs in classes.values()):
            by_color = {colors[v]: v - n for v in range(n, 2 * n)}
            mapping = [by_color[colors[v]] for v in range(n)]
            return mapping if validate_isomorphism(g, h, mapping, use_weights) else None
        target = min((c for c, vs in classes.items() if len(vs) > 1),
                     key=lambda c: (len(classes[c]), c))
        v = classes[target][0]
        fresh = max(colors) + 1
        for w in range(n, 2 * n):
            if colors[w] != target:
                continue
            trial = list(colors)
            trial[v] = trial[w] = fresh
            found = search(trial)
            if found is not None:
                return found
        return None

    return search([0] * (2 * n))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Copy of g with vertex v renamed perm[v]."""
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    weights = None
    if g.weights is not None:
        weights = {(perm[u], perm[v]): w for (u, v), w in g.weights.items()}
    labels = None
    if g.labels is not None:
        inv = [0] * g.n
        for v, p in enumerate(perm):
            inv[p] = v
        labels = [g.labels[inv[i]] for i in range(g.n)]
    return Graph(g.n, frozenset(edges), weights, labels)
