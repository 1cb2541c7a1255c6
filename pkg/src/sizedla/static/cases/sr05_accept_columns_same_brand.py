# case: SR-5-twin
# expect: accept
# cite: columns with one row brand form a matrix with a fresh column brand
from typing import Any, TypeVar

from sizedla import blas, matrix, vector
from sizedla.flags import NormKind
from sizedla.matrix import Mat
from sizedla.size import Size, of_int_dyn

C = TypeVar("C")
N = TypeVar("N")


def outer(n: Size[N]) -> float:
    x = vector.init(n, float)
    y = vector.init(n, lambda i: -1.0)

    def body(a: Mat[N, C, Any]) -> float:
        assert matrix.dim2(a).value == 3
        return blas.lange(a, norm=NormKind.MAX)

    return matrix.of_cols_dyn([x, y, x], body)


assert of_int_dyn(3, outer) == 3.0
