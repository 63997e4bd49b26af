import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pauligeo.pauli import (PauliOperator, SystemSpec, build_matrix, commutes,
                            enumerate_operators, matrix_commutes, mub_classes_prime,
                            symplectic_residue)

S23 = SystemSpec((2, 3))


def op(*pairs):
    return PauliOperator(tuple(pairs))


@pytest.mark.parametrize("dims, count", [((2, 3), 35), ((3, 3), 80), ((2, 2, 2), 63),
                                         ((2, 2), 15), ((5,), 24)])
def test_operator_counts(dims, count):
    ops = enumerate_operators(SystemSpec(dims))
    assert len(ops) == count
    assert len(set(ops)) == count
    assert all(not o.is_identity for o in ops)


def test_enumeration_is_lexicographic_and_repeatable():
    ops = enumerate_operators(S23)
    assert [o.flat() for o in ops] == sorted(o.flat() for o in ops)
    assert ops == enumerate_operators(SystemSpec((2, 3)))
    assert ops[0] == op((0, 0), (0, 1))


@pytest.mark.parametrize("dims", [(4,), (2, 6), (1,), ()])
def test_rejects_bad_specs(dims):
    with pytest.raises(ValueError):
        SystemSpec(dims)


def test_spec_derived_quantities():
    s = SystemSpec((2, 3, 3))
    assert s.total_dim == 18
    assert s.phase_lcm == 6
    assert SystemSpec.parse("2, 3") == S23


def test_residue_examples():
    sz_i = op((0, 1), (0, 0))
    i_z = op((0, 0), (0, 1))
    sx_i = op((1, 0), (0, 0))
    assert symplectic_residue(sz_i, sz_i, S23) == 0
    assert symplectic_residue(sz_i, i_z, S23) == 0
    assert symplectic_residue(sz_i, sx_i, S23) == 3
    # oracle agreement for the same examples
    assert matrix_commutes(sz_i, i_z, S23)
    assert not matrix_commutes(sz_i, sx_i, S23)


def test_commutes_examples():
    i_z = op((0, 0), (0, 1))
    sx_z = op((1, 0), (0, 1))
    i_x = op((0, 0), (1, 0))
    ident = PauliOperator.identity(S23)
    assert all(commutes(ident, o, S23) for o in enumerate_operators(S23))
    assert commutes(i_z, sx_z, S23) and matrix_commutes(i_z, sx_z, S23)
    assert not commutes(i_z, i_x, S23) and not matrix_commutes(i_z, i_x, S23)


def test_residue_rejects_mismatched_operators():
    with pytest.raises(ValueError):
        symplectic_residue(op((0, 1)), op((0, 1), (0, 0)), S23)
    with pytest.raises(ValueError):
        commutes(op((0, 2), (0, 0)), op((0, 1), (0, 0)), S23)


def test_per_factor_test_would_be_wrong_for_repeated_primes():
    s = SystemSpec((3, 3))
    a, b = op((0, 1), (0, 1)), op((1, 0), (2, 0))  # Z(x)Z and X(x)X^2
    assert commutes(a, b, s)
    assert matrix_commutes(a, b, s)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_mub_classes_partition(p):
    classes = mub_classes_prime(p)
    spec = SystemSpec((p,))
    assert len(classes) == p + 1
    assert all(len(c) == p - 1 for c in classes)
    flat = [o for c in classes for o in c]
    assert sorted(flat) == enumerate_operators(spec)
    for c in classes:
        assert all(commutes(a, b, spec) for a, b in itertools.combinations(c, 2))
    for c1, c2 in itertools.combinations(classes, 2):
        assert not any(commutes(a, b, spec) for a in c1 for b in c2)


def test_mub_classes_small_cases():
    assert mub_classes_prime(2) == [[op((0, 1))], [op((1, 0))], [op((1, 1))]]
    assert mub_classes_prime(3) == [
        [op((0, 1)), op((0, 2))], [op((1, 0)), op((2, 0))],
        [op((1, 1)), op((2, 2))], [op((1, 2)), op((2, 1))]]
    with pytest.raises(ValueError):
        mub_classes_prime(4)


def test_build_matrix_examples():
    assert np.allclose(build_matrix(op((0, 1)), SystemSpec((2,))), np.diag([1, -1]))
    X3 = build_matrix(op((1, 0)), SystemSpec((3,)))
    assert np.allclose(X3, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert np.allclose(build_matrix(PauliOperator.identity(S23), S23), np.eye(6))
    w = np.exp(2j * np.pi / 3)
    assert np.allclose(build_matrix(op((0, 1)), SystemSpec((3,))), np.diag([1, w, w * w]))


def test_dense_cap():
    s = SystemSpec((3, 3, 3, 3))
    with pytest.raises(ValueError):
        build_matrix(PauliOperator.identity(s), s)


@pytest.mark.parametrize("dims, pairs", [((2, 3), 595), ((3, 3), 3160), ((2, 2), 105),
                                         ((5,), 276), ((2, 2, 2), 1953)])
def test_oracle_equivalence_exhaustive(dims, pairs):
    spec = SystemSpec(dims)
    ops = enumerate_operators(spec)
    mats = {o: build_matrix(o, spec) for o in ops}
    n = 0
    for a, b in itertools.combinations(ops, 2):
        n += 1
        A, B = mats[a], mats[b]
        dense = np.max(np.abs(A @ B - B @ A)) < 1e-9
        assert dense == commutes(a, b, spec)
    assert n == pairs


specs = st.lists(st.sampled_from([2, 3, 5]), min_size=1, max_size=3).map(tuple).filter(
    lambda d: np.prod(d) <= 30).map(SystemSpec)


@st.composite
def spec_and_ops(draw, k=2):
    spec = draw(specs)
    ops = []
    for _ in range(k):
        pairs = [(draw(st.integers(0, d - 1)), draw(st.integers(0, d - 1))) for d in spec.factor_dims]
        ops.append(PauliOperator(tuple(pairs)))
    return spec, ops


@given(spec_and_ops())
def test_antisymmetry(data):
    spec, (a, b) = data
    L = spec.phase_lcm
    assert symplectic_residue(a, b, spec) == (-symplectic_residue(b, a, spec)) % L


@given(spec_and_ops(3))
def test_bilinearity(data):
    spec, (a, b, c) = data
    L = spec.phase_lcm
    lhs = symplectic_residue(a.multiply(c, spec), b, spec)
    assert lhs == (symplectic_residue(a, b, spec) + symplectic_residue(c, b, spec)) % L


@settings(max_examples=60)
@given(spec_and_ops())
def test_oracle_agrees_on_random_pairs(data):
    spec, (a, b) = data
    assert commutes(a, b, spec) == matrix_commutes(a, b, spec)


@settings(max_examples=40)
@given(spec_and_ops(1))
def test_matrices_are_unitary(data):
    spec, (a,) = data
    M = build_matrix(a, spec)
    assert np.max(np.abs(M @ M.conj().T - np.eye(spec.total_dim))) < 1e-9
