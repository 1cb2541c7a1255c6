# case: SR-6
# expect: reject
# cite: the side flag right needs the order of a to equal the columns of b
from typing import TypeVar

from sizedla import blas, matrix
from sizedla.flags import right
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        a = matrix.identity(m)
        b = matrix.create(m, n)
        blas.symm(right, a, b)

    of_int_dyn(5, inner)


of_int_dyn(2, outer)
