import math
import random

import numpy as np
import pytest
from conftest import mat, vec

import oracles
from sizedla import blas, matrix, vector
from sizedla.errors import BandBoundError
from sizedla.flags import NormKind, conjtr, left, lower, normal, right, trans, upper
from sizedla.size import Size, to_int


def rand_rows(rng, m, n):
    return [[rng.uniform(-1, 1) for _ in range(n)] for _ in range(m)]


# Level 1


def test_copy_scal_axpy_dot():
    x, y = vec([1, 2, 3]), vec([0, 0, 0])
    assert blas.copy(x, y) is y
    assert vector.to_list(y) == [1, 2, 3]
    z = blas.copy(x)
    assert z is not x and vector.to_list(z) == [1, 2, 3]
    blas.scal(2.0, y)
    assert vector.to_list(y) == [2, 4, 6]
    blas.axpy(x, y, alpha=-1.0)
    assert vector.to_list(y) == [1, 2, 3]
    assert blas.dot(x, y) == 14.0
    assert blas.dot(vec([]), vec([])) == 0.0


def test_level1_on_views():
    parent = vec([1, 2, 3, 4, 5, 6])
    odd = vector.subvec_dyn(Size(3), parent, inc=2)
    even = vector.subvec_dyn(Size(3), parent, ofs=2, inc=2)
    assert blas.dot(odd, even) == 1 * 2 + 3 * 4 + 5 * 6
    blas.scal(0.0, odd)
    assert vector.to_list(parent) == [0, 2, 0, 4, 0, 6]


# gemm


def test_gemm_ones():
    ones = mat([[1] * 3] * 2)
    c = blas.gemm(normal, ones, trans, ones)
    assert matrix.to_lists(c) == [[3, 3], [3, 3]]


def test_gemm_zero_inner_dimension():
    a = matrix.create(Size(2), Size(0))
    b = matrix.create(Size(0), Size(3))
    assert matrix.to_lists(blas.gemm(normal, a, normal, b)) == [[0.0] * 3] * 2


@pytest.mark.parametrize("ta", [normal, trans, conjtr])
@pytest.mark.parametrize("tb", [normal, trans, conjtr])
def test_gemm_against_oracle(ta, tb):
    rng = random.Random(7)
    m, n, k = 3, 4, 2
    ar = rand_rows(rng, k, m) if ta is not normal else rand_rows(rng, m, k)
    br = rand_rows(rng, n, k) if tb is not normal else rand_rows(rng, k, n)
    cr = rand_rows(rng, m, n)
    c = mat(cr)
    blas.gemm(ta, mat(ar), tb, mat(br), alpha=2.0, beta=-0.5, c=c)
    want = oracles.gemm("N" if ta is normal else "T", ar, "N" if tb is normal else "T", br, 2.0, -0.5, cr)
    assert oracles.max_rel_dev(matrix.to_lists(c), want) <= 1e-12


def test_gemm_beta_zero_ignores_nan():
    c = mat([[math.nan]])
    blas.gemm(normal, mat([[2]]), normal, mat([[3]]), beta=0.0, c=c)
    assert matrix.to_lists(c) == [[6.0]]


def test_gemm_into_view():
    big = mat([[0] * 4] * 4)
    view = matrix.submat_dyn(Size(2), Size(2), big, ar=2, ac=3)
    blas.gemm(normal, matrix.identity(Size(2)), normal, mat([[1, 2], [3, 4]]), c=view)
    assert matrix.to_lists(big) == [[0, 0, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4], [0, 0, 0, 0]]


# symm


def test_symm_right_scaled_identity():
    b = mat([[1, 2, 3], [4, 5, 6]])
    two = mat([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert matrix.to_lists(blas.symm(right, two, b)) == [[2, 4, 6], [8, 10, 12]]


@pytest.mark.parametrize("uplo,u", [(upper, "U"), (lower, "L")])
@pytest.mark.parametrize("side", [left, right])
def test_symm_reads_one_triangle(side, uplo, u):
    rng = random.Random(3)
    ar = rand_rows(rng, 3, 3)
    br = rand_rows(rng, 3, 2) if side is left else rand_rows(rng, 2, 3)
    s = oracles.symmetrize(ar, u)
    want = oracles.matmul(s, br) if side is left else oracles.matmul(br, s)
    got = blas.symm(side, mat(ar), mat(br), uplo=uplo)
    assert oracles.max_rel_dev(matrix.to_lists(got), want) <= 1e-12


def test_symm_accumulates():
    c = mat([[1, 1]])
    blas.symm(left, mat([[3]]), mat([[1, 2]]), alpha=1.0, beta=2.0, c=c)
    assert matrix.to_lists(c) == [[5.0, 8.0]]


# lange


def test_lange_examples():
    a = mat([[1, -2], [3, 4]])
    assert blas.lange(a) == 6.0
    assert blas.lange(a, norm=NormKind.INF) == 7.0
    assert blas.lange(a, norm=NormKind.MAX) == 4.0
    assert blas.lange(mat([[3], [4]]), norm=NormKind.FRO) == 5.0
    for k in NormKind:
        assert blas.lange(matrix.create(Size(0), Size(3)), norm=k) == 0.0


def test_lange_fro_is_scaled():
    big = mat([[1e200, 1e200]])
    assert blas.lange(big, norm=NormKind.FRO) == pytest.approx(math.sqrt(2) * 1e200)
    tiny = mat([[3e-200, 4e-200]])
    assert blas.lange(tiny, norm=NormKind.FRO) == pytest.approx(5e-200)


# band


def test_geband_shape_and_layout():
    rows = [[10 * i + j for j in range(1, 7)] for i in range(1, 6)]
    ab = blas.geband_dyn(Size(1), Size(2), mat(rows))
    assert (to_int(matrix.dim1(ab)), to_int(matrix.dim2(ab))) == (4, 6)
    got = matrix.to_lists(ab)
    for i in range(1, 6):
        for j in range(1, 7):
            if oracles.in_band(1, 2, i, j):
                assert got[oracles.band_source(1, 2, i, j) - 1][j - 1] == rows[i - 1][j - 1]


def test_geband_out_of_band_slots_are_zero():
    ab = blas.geband_dyn(Size(1), Size(1), mat([[1, 2], [3, 4]]))
    assert matrix.to_lists(ab) == [[0, 2], [1, 4], [3, 0]]


def test_geband_diagonal():
    ab = blas.geband_dyn(Size(0), Size(0), mat([[1, 2], [3, 4]]))
    assert matrix.to_lists(ab) == [[1, 4]]


def test_geband_bounds():
    with pytest.raises(BandBoundError):
        blas.geband_dyn(Size(5), Size(0), mat([[0] * 5] * 5))
    with pytest.raises(BandBoundError):
        blas.geband_dyn(Size(0), Size(2), mat([[0] * 2] * 3))


@pytest.mark.parametrize("t", [normal, trans])
def test_gbmv_against_dense(t):
    rng = random.Random(11)
    m, n, kl, ku = 5, 4, 2, 1
    dense = oracles.band_mask(rand_rows(rng, m, n), kl, ku)
    ab = blas.geband_dyn(Size(kl), Size(ku), mat(dense))
    xs = [rng.uniform(-1, 1) for _ in range(n if t is normal else m)]
    y = blas.gbmv(Size(m), ab, Size(kl), Size(ku), vec(xs), trans=t)
    op = dense if t is normal else oracles.transpose(dense)
    want = oracles.matvec(op, xs)
    assert np.max(np.abs(np.array(vector.to_list(y)) - want)) <= 1e-12


def test_gbmv_accumulates_into_y():
    ab = blas.geband_dyn(Size(0), Size(0), mat([[2, 0], [0, 3]]))
    y = vec([1, 1])
    blas.gbmv(Size(2), ab, Size(0), Size(0), vec([1, 1]), trans=normal, alpha=1.0, beta=10.0, y=y)
    assert vector.to_list(y) == [12.0, 13.0]
