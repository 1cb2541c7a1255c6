# case: AC-lange-views
# expect: accept
# cite: lange takes any matrix, including submatrix views
from typing import TypeVar

from sizedla import blas, matrix, vector
from sizedla.flags import NormKind
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        a = matrix.init(m, m, lambda i, j: float(3 * (i - 1) + j))
        view = matrix.submat_dyn(n, n, a, ar=2, ac=2)
        assert matrix.to_lists(view) == [[5.0, 6.0], [8.0, 9.0]]
        assert blas.lange(view, norm=NormKind.ONE) == 15.0
        assert blas.lange(view, norm=NormKind.INF) == 17.0
        assert blas.lange(view, norm=NormKind.MAX) == 9.0
        assert abs(blas.lange(view, norm=NormKind.FRO) - (25 + 36 + 64 + 81) ** 0.5) < 1e-12
        row = matrix.row_dyn(2, a)
        v = vector.subvec_dyn(n, row, ofs=2)
        vector.set_dyn(v, 1, -5.0)
        assert matrix.get_dyn(a, 2, 2) == -5.0

    of_int_dyn(2, inner)


of_int_dyn(3, outer)
