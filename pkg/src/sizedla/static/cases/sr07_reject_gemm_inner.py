# case: SR-7
# expect: reject
# cite: gemm shares the inner dimension k of op(a) and op(b)
from typing import TypeVar

from sizedla import blas, matrix
from sizedla.flags import normal
from sizedla.size import Size, of_int_dyn

K = TypeVar("K")
M = TypeVar("M")


def outer(m: Size[M]) -> None:
    def inner(k: Size[K]) -> None:
        a = matrix.create(m, k)
        b = matrix.create(m, k)
        blas.gemm(normal, a, normal, b)

    of_int_dyn(3, inner)


of_int_dyn(2, outer)
