import random
from itertools import permutations

import pytest

from doldpuppe.functors import (
    PolynomialFunctor,
    apply_functor,
    cross_effect,
    decompose,
    deviation,
    embedding,
    induced_map,
    injection,
    projection,
    psi,
)
from doldpuppe.linalg import ValidationError, identity, mat_add, matmul, rank, transpose, zeros

FAMILIES = ["sym", "ext", "tensor"]


def rand_matrix(rng, r, c, bound=2):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def test_parse():
    F = PolynomialFunctor.parse("Sym:2")
    assert F == PolynomialFunctor("sym", 2)
    assert F.name == "Sym2" and str(F) == "sym:2"
    for bad in ["sym", "foo:2", "sym:0", "sym:x"]:
        with pytest.raises(ValueError):
            PolynomialFunctor.parse(bad)


def test_ranks():
    assert PolynomialFunctor("sym", 2).rank(3) == 6
    assert PolynomialFunctor("ext", 2).rank(3) == 3
    assert PolynomialFunctor("tensor", 2).rank(3) == 9
    assert PolynomialFunctor("ext", 3).rank(2) == 0


def test_known_matrices():
    assert apply_functor(PolynomialFunctor("sym", 2), [[1, 1], [0, 1]]) == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    assert apply_functor(PolynomialFunctor("ext", 2), [[2, 0], [0, 2]]) == [[4]]
    # Ext^2 of a 2x2 matrix is its determinant
    assert apply_functor(PolynomialFunctor("ext", 2), [[1, 2], [3, 4]]) == [[-2]]


@pytest.mark.parametrize("family", FAMILIES)
def test_functoriality(family):
    rng = random.Random(4)
    for d in (1, 2, 3):
        F = PolynomialFunctor(family, d)
        for _ in range(10):
            a, b, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
            g, h = rand_matrix(rng, a, b), rand_matrix(rng, b, c)
            lhs = apply_functor(F, matmul(g, h), a, c)
            rhs = matmul(apply_functor(F, g, a, b), apply_functor(F, h, b, c), F.rank(b), F.rank(c))
            assert lhs == rhs
        assert apply_functor(F, identity(3)) == identity(F.rank(3))


@pytest.mark.parametrize("family", FAMILIES)
def test_deviation_vanishes_above_degree(family):
    rng = random.Random(6)
    for d in (1, 2):
        F = PolynomialFunctor(family, d)
        for _ in range(5):
            fs = [rand_matrix(rng, 2, 2) for _ in range(d + 1)]
            assert deviation(F, fs) == zeros(F.rank(2), F.rank(2))


@pytest.mark.parametrize("family", FAMILIES)
def test_deviation_additivity(family):
    # F(f + f' | rest) = F(f | rest) + F(f' | rest) + F(f | f' | rest)
    rng = random.Random(9)
    F = PolynomialFunctor(family, 3)
    for m in (1, 2):
        for _ in range(4):
            f, f2 = rand_matrix(rng, 2, 2), rand_matrix(rng, 2, 2)
            rest = [rand_matrix(rng, 2, 2) for _ in range(m - 1)]
            lhs = deviation(F, [mat_add(f, f2), *rest])
            rhs = mat_add(mat_add(deviation(F, [f, *rest]), deviation(F, [f2, *rest])),
                          deviation(F, [f, f2, *rest]))
            assert lhs == rhs


@pytest.mark.parametrize("family", FAMILIES)
def test_deviation_is_multilinear_at_top_arity(family):
    rng = random.Random(10)
    F = PolynomialFunctor(family, 2)
    for _ in range(5):
        f, f2, g = (rand_matrix(rng, 2, 2) for _ in range(3))
        assert deviation(F, [mat_add(f, f2), g]) == mat_add(deviation(F, [f, g]), deviation(F, [f2, g]))


def test_injection_projection():
    ranks = (2, 1, 3)
    for alpha in [(1,), (2, 3), (1, 2, 3)]:
        w = sum(ranks[j - 1] for j in alpha)
        assert matmul(projection(ranks, alpha), injection(ranks, alpha), 6, w) == identity(w)
    assert psi(ranks, 2)[2][2] == 1


@pytest.mark.parametrize("family", FAMILIES)
def test_cross_effect_rank_symmetric(family):
    F = PolynomialFunctor(family, 3)
    for ranks in [(1, 2), (3, 1, 2), (2, 2)]:
        base = cross_effect(F, ranks).rank
        for perm in permutations(ranks):
            assert cross_effect(F, perm).rank == base


@pytest.mark.parametrize("family", FAMILIES)
def test_cross_effect_permutation_intertwiner(family):
    # swapping the two arguments is realised by F of the block swap
    F = PolynomialFunctor(family, 2)
    ranks = (2, 1)
    swap = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]  # A1 + A2 -> A2 + A1
    Fs = apply_functor(F, swap, 3, 3)
    src = embedding(F, ranks, (1, 2))
    tgt = embedding(F, (1, 2), (1, 2))
    image = matmul(Fs, src, F.rank(3), cross_effect(F, ranks).rank)
    # the image lies in the target cross-effect and is a signed permutation of its basis
    coords = matmul(transpose(tgt, cross_effect(F, (1, 2)).rank), image)
    assert matmul(tgt, coords) == image
    assert all(sorted(abs(x) for x in col) == [0] * (len(col) - 1) + [1] for col in transpose(coords))


def test_cross_effect_bases():
    S = PolynomialFunctor("sym", 2)
    assert cross_effect(S, (1, 1)).basis == (((0,), (0,)),)
    assert cross_effect(S, (2,)).rank == 3
    assert cross_effect(S, (1, 1, 1)).rank == 0
    T = PolynomialFunctor("tensor", 2)
    assert cross_effect(T, (1, 1)).rank == 2


@pytest.mark.parametrize("family", FAMILIES)
def test_decomposition(family):
    for d in (1, 2, 3):
        F = PolynomialFunctor(family, d)
        for ranks in [(1,), (2, 1), (1, 1, 1), (3, 2), (2, 3, 1)]:
            total = F.rank(sum(ranks))
            parts = decompose(F, ranks)
            assert sum(s.rank for _, s, _ in parts) == total
            acc = zeros(total, total)
            for alpha, s, emb in parts:
                fs = [psi(ranks, j) for j in alpha]
                P = deviation(F, fs)
                assert P == matmul(emb, transpose(emb, s.rank), s.rank, total)
                assert matmul(P, P) == P
                acc = mat_add(acc, P)
            assert acc == identity(total)


def test_induced_map_blocks():
    F = PolynomialFunctor("sym", 2)
    g = [[1, 0], [2, 1]]  # A1 + A2 -> A1 + A2, rank one each
    assert induced_map(F, g, (1, 1), (1, 1), (1,), (1,)) == [[1]]
    assert induced_map(F, g, (1, 1), (1, 1), (1,), (1, 2)) == [[4]]
    assert induced_map(F, g, (1, 1), (1, 1), (1,), (2,)) == [[4]]
    assert induced_map(F, g, (1, 1), (1, 1), (1, 2), (2,)) == [[2]]
    with pytest.raises(ValidationError):
        induced_map(F, [[1]], (1, 1), (1, 1), (1,), (1,))


def test_rank_of_ext_top():
    F = PolynomialFunctor("ext", 2)
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert rank(apply_functor(F, m)) == 1
