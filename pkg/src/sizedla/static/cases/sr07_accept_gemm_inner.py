# case: SR-7-twin
# expect: accept
# cite: with op(b) = b^T the shared dimension matches
from typing import TypeVar

from sizedla import blas, matrix
from sizedla.flags import normal, trans
from sizedla.size import Size, of_int_dyn

K = TypeVar("K")
M = TypeVar("M")


def outer(m: Size[M]) -> None:
    def inner(k: Size[K]) -> None:
        a = matrix.init(m, k, lambda i, j: 1.0)
        b = matrix.init(m, k, lambda i, j: 1.0)
        c = blas.gemm(normal, a, trans, b)
        assert matrix.to_lists(c) == [[3.0, 3.0], [3.0, 3.0]]

    of_int_dyn(3, inner)


of_int_dyn(2, outer)
