# case: SR-2-twin
# expect: accept
# cite: Add[M, N] unifies with itself
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, add, of_int_dyn, to_int

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> float:
    def inner(n: Size[N]) -> float:
        x = vector.init(m, float)
        y = vector.init(n, float)
        xy = vector.append(x, y)
        assert to_int(vector.dim(xy)) == to_int(add(m, n))
        return blas.dot(xy, vector.append(x, y))

    return of_int_dyn(2, inner)


assert of_int_dyn(3, outer) == 1 + 4 + 9 + 1 + 4
