import pytest
from conftest import mat, vec

from sizedla import matrix, vector
from sizedla.errors import EmptyList, IndexOutOfRange, LengthMismatch, SubRangeError
from sizedla.size import Size, to_int

NINE = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]


def test_init():
    eye = matrix.init(Size(2), Size(2), lambda i, j: 1.0 if i == j else 0.0)
    assert matrix.to_lists(eye) == [[1, 0], [0, 1]]
    assert matrix.to_lists(matrix.init(Size(2), Size(3), lambda i, j: 10 * i + j)) == [
        [11, 12, 13],
        [21, 22, 23],
    ]
    z = matrix.init(Size(0), Size(3), lambda i, j: 1.0)
    assert to_int(matrix.dim1(z)) == 0 and to_int(matrix.dim2(z)) == 3


def test_column_major_layout():
    a = mat([[1, 2], [3, 4]])
    assert list(a.data) == [1.0, 3.0, 2.0, 4.0]
    assert a.ld == 2


def test_identity():
    assert matrix.to_lists(matrix.identity(Size(1))) == [[1.0]]
    assert matrix.to_lists(matrix.identity(Size(0))) == []


def test_of_list_dyn_shape_check():
    with pytest.raises(LengthMismatch):
        matrix.of_list_dyn(Size(2), Size(2), [[1, 2]])
    with pytest.raises(LengthMismatch):
        matrix.of_list_dyn(Size(1), Size(2), [[1, 2, 3]])


def test_get_set():
    eye = matrix.identity(Size(2))
    assert matrix.get_dyn(eye, 1, 1) == 1.0
    assert matrix.get_dyn(eye, 1, 2) == 0.0
    with pytest.raises(IndexOutOfRange):
        matrix.get_dyn(mat([[1, 2, 3], [4, 5, 6]]), 3, 1)
    with pytest.raises(IndexOutOfRange):
        matrix.set_dyn(eye, 1, 3, 0.0)
    matrix.set_dyn(eye, 2, 1, 5.0)
    assert matrix.get_dyn(eye, 2, 1) == 5.0


def test_of_cols_dyn():
    def body(a):
        return matrix.to_lists(a)

    assert matrix.of_cols_dyn([vec([1, 2]), vec([3, 4])], body) == [[1, 3], [2, 4]]
    x = vec([1, 2])
    assert matrix.of_cols_dyn([x, x, x], lambda a: (to_int(matrix.dim1(a)), to_int(matrix.dim2(a)))) == (2, 3)
    with pytest.raises(EmptyList):
        matrix.of_cols_dyn([], body)


def test_of_cols_dyn_from_views():
    parent = vec([1, 2, 3, 4])
    cols = [vector.subvec_dyn(Size(2), parent, inc=2), vector.subvec_dyn(Size(2), parent, ofs=2, inc=2)]
    assert matrix.of_cols_dyn(cols, matrix.to_lists) == [[1, 2], [3, 4]]


def test_submat_examples():
    a = mat(NINE)
    assert matrix.to_lists(matrix.submat_dyn(Size(2), Size(2), a, ar=2, ac=2)) == [[5, 6], [8, 9]]
    with pytest.raises(SubRangeError):
        matrix.submat_dyn(Size(3), Size(1), a, ar=2)
    assert matrix.to_lists(matrix.submat_dyn(Size(3), Size(3), a)) == NINE


@pytest.mark.parametrize("ar,ac", [(0, 1), (1, 0), (1, 3)])
def test_submat_bounds(ar, ac):
    with pytest.raises(SubRangeError):
        matrix.submat_dyn(Size(2), Size(2), mat(NINE), ar=ar, ac=ac)


def test_submat_aliases_both_ways():
    a = mat(NINE)
    v = matrix.submat_dyn(Size(2), Size(2), a, ar=2, ac=1)
    matrix.set_dyn(v, 2, 2, 0.0)
    assert matrix.get_dyn(a, 3, 2) == 0.0
    matrix.set_dyn(a, 2, 1, -4.0)
    assert matrix.get_dyn(v, 1, 1) == -4.0
    assert v.ld == 3
    assert not matrix.is_contiguous(v)


def test_submat_of_submat():
    a = mat(NINE)
    v = matrix.submat_dyn(Size(2), Size(2), a, ar=2, ac=2)
    w = matrix.submat_dyn(Size(1), Size(1), v, ar=2, ac=2)
    assert matrix.to_lists(w) == [[9.0]]


def test_col_row_views():
    a = mat([[1, 3], [2, 4]])
    c = matrix.col_dyn(2, a)
    assert vector.to_list(c) == [3.0, 4.0] and c.stride == 1
    r = matrix.row_dyn(1, a)
    assert vector.to_list(r) == [1.0, 3.0] and r.stride == 2
    vector.set_dyn(r, 2, 0.0)
    assert matrix.get_dyn(a, 1, 2) == 0.0
    with pytest.raises(IndexOutOfRange):
        matrix.col_dyn(3, a)
    with pytest.raises(IndexOutOfRange):
        matrix.row_dyn(0, a)


def test_row_of_submatrix_uses_parent_ld():
    a = mat(NINE)
    v = matrix.submat_dyn(Size(2), Size(2), a, ar=2, ac=2)
    assert vector.to_list(matrix.row_dyn(2, v)) == [8.0, 9.0]
    assert vector.to_list(matrix.col_dyn(1, v)) == [5.0, 8.0]


def test_copy_and_transpose():
    a = mat([[1, 2, 3], [4, 5, 6]])
    v = matrix.submat_dyn(Size(2), Size(2), a, ac=2)
    c = matrix.copy(v)
    assert matrix.is_contiguous(c) and matrix.to_lists(c) == [[2, 3], [5, 6]]
    assert matrix.to_lists(matrix.transpose(a)) == [[1, 4], [2, 5], [3, 6]]


def test_identity_is_symmetric():
    e = matrix.identity(Size(4))
    assert matrix.to_lists(matrix.transpose(e)) == matrix.to_lists(e)
