# case: SR-1
# expect: reject
# cite: sizes from two generative introductions never unify
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def outer(n: Size[N]) -> float:
    def inner(m: Size[M]) -> float:
        x = vector.init(n, float)
        y = vector.init(m, float)
        return blas.dot(x, y)

    return of_int_dyn(3, inner)


of_int_dyn(3, outer)
