# case: SR-1-twin
# expect: accept
# cite: vectors built from one witness share its brand
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def body(n: Size[N]) -> float:
    x = vector.init(n, float)
    y = vector.init(n, lambda i: 2.0 * i)
    return blas.dot(x, y)


assert of_int_dyn(3, body) == 28.0
