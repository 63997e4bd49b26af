"""
Generalized Pauli operators on multipartite systems of prime-dimensional factors.

An operator is stored as one exponent pair (a, b) per factor, standing for
X^a Z^b on that factor, where X is the cyclic shift and Z the clock matrix.
Global phases are discarded, so commutation reduces to an integer symplectic
residue. A dense-matrix path is kept alongside as an independent check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

ORACLE_TOLERANCE = 1e-9
DEFAULT_DIMENSION_CAP = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class SystemSpec:
    """Ordered prime factor dimensions of a multipartite Hilbert space."""

    factor_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.factor_dims)
        if not dims:
            raise ValueError("a system needs at least one factor")
        bad = [d for d in dims if not is_prime(d)]
        if bad:
            raise ValueError(f"factor dimensions must be prime, got {bad} in {list(dims)}")
        object.__setattr__(self, "factor_dims", dims)

    @classmethod
    def parse(cls, text: str) -> "SystemSpec":
        try:
            dims = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError:
            raise ValueError(f"cannot parse factor list {text!r}") from None
        return cls(dims)

    @property
    def n_factors(self) -> int:
        return len(self.factor_dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.factor_dims)

    @property
    def phase_lcm(self) -> int:
        return math.lcm(*self.factor_dims)

    def __str__(self):
        return ",".join(map(str, self.factor_dims))


@dataclass(frozen=True, order=True)
class PauliOperator:
    """Tensor product of X^a Z^b monomials, one exponent pair per factor."""

    exponents: tuple[tuple[int, int], ...] = field(compare=True)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], spec: SystemSpec | None = None):
        pairs = tuple((int(a), int(b)) for a, b in pairs)
        if spec is not None:
            if len(pairs) != spec.n_factors:
                raise ValueError(
                    f"operator has {len(pairs)} factors, system has {spec.n_factors}")
            pairs = tuple((a % d, b % d) for (a, b), d in zip(pairs, spec.factor_dims))
        return cls(pairs)

    @classmethod
    def identity(cls, spec: SystemSpec) -> "PauliOperator":
        return cls(((0, 0),) * spec.n_factors)

    @property
    def is_identity(self) -> bool:
        return all(a == 0 and b == 0 for a, b in self.exponents)

    def flat(self) -> tuple[int, ...]:
        return tuple(x for pair in self.exponents for x in pair)

    def support(self) -> tuple[int, ...]:
        """Indices of factors on which the operator acts non-trivially."""
        return tuple(k for k, (a, b) in enumerate(self.exponents) if a or b)

    def multiply(self, other: "PauliOperator", spec: SystemSpec) -> "PauliOperator":
        """Product modulo phase, i.e. componentwise exponent addition."""
        _check_conforms(self, spec)
        _check_conforms(other, spec)
        return PauliOperator(tuple(
            ((a + c) % d, (b + e) % d)
            for (a, b), (c, e), d in zip(self.exponents, other.exponents, spec.factor_dims)))

    def power(self, k: int, spec: SystemSpec) -> "PauliOperator":
        return PauliOperator(tuple(
            ((a * k) % d, (b * k) % d) for (a, b), d in zip(self.exponents, spec.factor_dims)))

    def code(self) -> str:
        """Compact exponent string, e.g. ``"01.10"`` for Z on factor 0, X on factor 1."""
        return ".".join(f"{a}{b}" for a, b in self.exponents)

    def __str__(self):
        return self.code()


def _check_conforms(op: PauliOperator, spec: SystemSpec):
    if len(op.exponents) != spec.n_factors:
        raise ValueError(
            f"operator {op.code()} has {len(op.exponents)} factors, system [{spec}] has {spec.n_factors}")
    for (a, b), d in zip(op.exponents, spec.factor_dims):
        if not (0 <= a < d and 0 <= b < d):
            raise ValueError(f"operator {op.code()} is not reduced modulo {list(spec.factor_dims)}")


def enumerate_operators(spec: SystemSpec) -> list[PauliOperator]:
    """All D^2 - 1 non-identity operators, lexicographic in (a1, b1, a2, b2, ...)."""
    ranges = [range(d) for d in spec.factor_dims for _ in (0, 1)]
    out = []
    for flat in itertools.product(*ranges):
        if any(flat):
            out.append(PauliOperator(tuple(zip(flat[0::2], flat[1::2]))))
    return out


def symplectic_residue(A: PauliOperator, B: PauliOperator, spec: SystemSpec) -> int:
    """Phase exponent s, modulo lcm(d_k), with A B = w_L^(-s) B A.

    Each factor contributes (a e - b c) scaled by L / d_k, so that factors of
    different (or equal) primes combine over the common L-th root of unity.
    A per-factor zero test would be wrong whenever two factors share a prime.
    """
    _check_conforms(A, spec)
    _check_conforms(B, spec)
    L = spec.phase_lcm
    s = 0
    for (a, b), (c, e), d in zip(A.exponents, B.exponents, spec.factor_dims):
        s += (a * e - b * c) * (L // d)
    return s % L


def commutes(A: PauliOperator, B: PauliOperator, spec: SystemSpec) -> bool:
    return symplectic_residue(A, B, spec) == 0


def mub_classes_prime(p: int) -> list[list[PauliOperator]]:
    """The p + 1 commuting classes {Z^k} and {(X Z^m)^k} of a single qudit.

    Operators are returned on the one-factor system [p]; the class order is
    the Z class first, then m = 0, ..., p - 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    classes = [[PauliOperator(((0, k),)) for k in range(1, p)]]
    for m in range(p):
        # (X Z^m)^k equals X^k Z^(m k) up to phase
        classes.append([PauliOperator(((k, (m * k) % p),)) for k in range(1, p)])
    return classes


def shift_matrix(d: int) -> np.ndarray:
    """X |n> = |n + 1 mod d>."""
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def clock_matrix(d: int) -> np.ndarray:
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def build_matrix(A: PauliOperator, spec: SystemSpec,
                 dimension_cap: int = DEFAULT_DIMENSION_CAP) -> np.ndarray:
    """Dense Kronecker product of X^a Z^b over the factors."""
    _check_conforms(A, spec)
    if spec.total_dim > dimension_cap:
        raise ValueError(f"dimension {spec.total_dim} exceeds the dense cap {dimension_cap}")
    M = np.ones((1, 1), dtype=complex)
    for (a, b), d in zip(A.exponents, spec.factor_dims):
        factor = np.linalg.matrix_power(shift_matrix(d), a) @ np.linalg.matrix_power(clock_matrix(d), b)
        M = np.kron(M, factor)
    return M


def matrix_commutes(A: PauliOperator, B: PauliOperator, spec: SystemSpec,
                    tol: float = ORACLE_TOLERANCE,
                    dimension_cap: int = DEFAULT_DIMENSION_CAP) -> bool:
    MA = build_matrix(A, spec, dimension_cap)
    MB = build_matrix(B, spec, dimension_cap)
    return bool(np.max(np.abs(MA @ MB - MB @ MA)) < tol)
