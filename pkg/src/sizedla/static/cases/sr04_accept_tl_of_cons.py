# case: SR-4-twin
# expect: accept
# cite: cons produces Succ[N], so tl and hd apply
from typing import TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def body(n: Size[N]) -> float:
    v = vector.init(n, float)
    w = vector.cons(0.0, v)
    assert vector.hd(w) == 0.0
    return blas.dot(vector.tl(w), v)


assert of_int_dyn(3, body) == 14.0
