# case: SR-5
# expect: reject
# cite: all columns of of_cols_dyn share one row brand
from typing import Any, TypeVar

from sizedla import blas, matrix, vector
from sizedla.matrix import Mat
from sizedla.size import Size, of_int_dyn

C = TypeVar("C")
M = TypeVar("M")
N = TypeVar("N")


def outer(n: Size[N]) -> None:
    def inner(m: Size[M]) -> None:
        x = vector.create(n)
        y = vector.create(m)

        def body(a: Mat[N, C, Any]) -> float:
            return blas.lange(a)

        matrix.of_cols_dyn([x, y], body)

    of_int_dyn(2, inner)


of_int_dyn(2, outer)
