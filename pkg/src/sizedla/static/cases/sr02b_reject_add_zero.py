# case: SR-2b
# expect: reject
# cite: no normalization: Add[Zero, N] is not N
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn, zero

N = TypeVar("N")


def body(n: Size[N]) -> float:
    x = vector.create(n)
    padded = vector.append(vector.create(zero), x)
    return blas.dot(padded, x)


of_int_dyn(3, body)
