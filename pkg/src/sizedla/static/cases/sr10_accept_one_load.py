# case: SR-10-twin
# expect: accept
# cite: a loaded vector combines with itself and with values sized from it
from typing import Any, TypeVar

from sizedla import blas, vector
from sizedla.matio import loadvec, savevec
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def make(n: Size[N]) -> None:
    savevec("v.txt", vector.init(n, float))


def use(x: vector.Vec[N, Any]) -> float:
    y = vector.init(vector.dim(x), lambda i: 1.0)
    return blas.dot(x, x) + blas.dot(x, y)


of_int_dyn(3, make)
assert loadvec("v.txt", use) == 14.0 + 6.0
