# case: SR-6-twin
# expect: accept
# cite: the side flag left takes an m-by-m symmetric factor
from typing import TypeVar

from sizedla import blas, matrix
from sizedla.flags import left, lower, right
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        b = matrix.init(m, n, lambda i, j: float(i + j))
        c = blas.symm(left, matrix.identity(m), b)
        assert matrix.to_lists(c) == matrix.to_lists(b)
        twice = matrix.init(n, n, lambda i, j: 2.0 if i == j else 0.0)
        d = blas.symm(right, twice, b, uplo=lower, alpha=0.5, beta=1.0, c=c)
        assert d is c
        assert matrix.get_dyn(c, 2, 5) == 2.0 * 7.0

    of_int_dyn(5, inner)


of_int_dyn(2, outer)
