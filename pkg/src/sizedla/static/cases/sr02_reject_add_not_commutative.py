# case: SR-2
# expect: reject
# cite: Add[M, N] and Add[N, M] are different brands
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> float:
    def inner(n: Size[N]) -> float:
        x = vector.create(m)
        y = vector.create(n)
        return blas.dot(vector.append(x, y), vector.append(y, x))

    return of_int_dyn(2, inner)


of_int_dyn(3, outer)
