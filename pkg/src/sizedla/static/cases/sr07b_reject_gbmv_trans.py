# case: SR-7b
# expect: reject
# cite: under trans, gbmv takes x of length m
from typing import TypeVar

from sizedla import blas, matrix, vector
from sizedla.flags import trans
from sizedla.size import Size, of_int_dyn, zero

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        ab = blas.geband_dyn(zero, zero, matrix.create(m, n))
        blas.gbmv(m, ab, zero, zero, vector.create(n), trans=trans)

    of_int_dyn(3, inner)


of_int_dyn(2, outer)
