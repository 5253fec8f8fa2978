import random

import pytest
from hypothesis import given, settings, strategies as st

from doldpuppe.linalg import (
    HomologyGroup,
    ValidationError,
    check_complex,
    free_cokernel,
    homology,
    homology_mod_p,
    identity,
    invariant_factors,
    kernel_basis,
    matmul,
    rank,
    rank_mod_p,
    smith_normal_form,
    transpose,
    xgcd,
    zeros,
)

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def is_unimodular(u):
    n = len(u)
    return all(len(row) == n for row in u) and invariant_factors(u, n) == [1] * n


def test_identity_snf():
    U, D, V = smith_normal_form(identity(3))
    assert D == identity(3)
    assert matmul(matmul(U, D), V) == identity(3)


def test_two_three():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]


def test_zero_matrix():
    U, D, V = smith_normal_form(zeros(2, 3))
    assert D == zeros(2, 3)
    assert invariant_factors(zeros(3, 2)) == []


def test_xgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (-3, -9)]:
        x, y, g = xgcd(a, b)
        assert x * a + y * b == g >= 0


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_reconstructs(m):
    r, c = len(m), len(m[0])
    U, D, V = smith_normal_form(m)
    assert matmul(matmul(U, D), V) == m
    assert is_unimodular(U) and is_unimodular(V)
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[:len(nz)] == nz


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel_and_rank(m):
    c = len(m[0])
    ker = kernel_basis(m)
    assert len(ker) + rank(m) == c
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_rank_is_transpose_invariant():
    rng = random.Random(5)
    for _ in range(40):
        m = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(3)]
        assert rank(m) == rank(transpose(m))


def test_free_cokernel():
    m = [[1, 0], [1, 1], [0, 1], [0, 0]]
    P, L = free_cokernel(m, 4)
    assert len(P) == 2
    assert matmul(P, L) == identity(2)
    assert matmul(P, m) == zeros(2, 2)


def test_free_cokernel_refuses_torsion():
    with pytest.raises(ValidationError):
        free_cokernel([[2]], 1)


def test_homology_multiplication_by_two():
    ranks, diffs = [1, 1], [[[2]]]
    assert homology(ranks, diffs, 0) == HomologyGroup(0, (2,))
    assert homology(ranks, diffs, 1) == HomologyGroup(0)
    assert str(homology(ranks, diffs, 0)) == "Z/2"


def test_homology_zero_differentials():
    ranks = [2, 3, 1]
    diffs = [zeros(2, 3), zeros(3, 1)]
    assert [homology(ranks, diffs, n).free_rank for n in range(3)] == ranks


def test_exact_complex():
    ranks = [2, 2]
    assert homology(ranks, [identity(2)], 0) == HomologyGroup(0)
    assert homology(ranks, [identity(2)], 1) == HomologyGroup(0)


def test_homology_mod_p():
    ranks, diffs = [1, 1], [[[2]]]
    assert [homology_mod_p(ranks, diffs, n, 2) for n in range(2)] == [1, 1]
    assert [homology_mod_p(ranks, diffs, n, 3) for n in range(2)] == [0, 0]
    assert rank_mod_p([[2, 4], [1, 2]], 2) == 1


def test_check_complex_rejects():
    with pytest.raises(ValidationError, match="d_1 o d_2"):
        check_complex([1, 1, 1], [[[1]], [[1]]])
    with pytest.raises(ValidationError, match="differential 1"):
        check_complex([1, 2], [[[1]]])


def test_group_str():
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"


def test_matmul_shapes():
    assert matmul([], [], 0, 3) == []
    assert matmul([[], []], [], 0, 2) == zeros(2, 2)
    with pytest.raises(ValidationError):
        matmul([[1, 2]], [[1]])
