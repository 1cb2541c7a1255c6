# case: SR-7b-twin
# expect: accept
# cite: under trans, gbmv takes x of length m and returns length n
from typing import TypeVar

from sizedla import blas, matrix, vector
from sizedla.flags import trans
from sizedla.size import Size, of_int_dyn, zero

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        ab = blas.geband_dyn(zero, zero, matrix.init(m, n, lambda i, j: 1.0))
        y = blas.gbmv(m, ab, zero, zero, vector.init(m, float), trans=trans)
        assert vector.to_list(y) == [1.0, 2.0, 0.0]

    of_int_dyn(3, inner)


of_int_dyn(2, outer)
