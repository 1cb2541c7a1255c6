# case: SR-10
# expect: reject
# cite: two loads of the same file get incompatible brands
from typing import Any, TypeVar

from sizedla import blas, vector
from sizedla.matio import loadvec, savevec
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def make(n: Size[N]) -> None:
    savevec("v.txt", vector.init(n, float))


of_int_dyn(3, make)


def first(x: vector.Vec[N, Any]) -> float:
    def second(y: vector.Vec[M, Any]) -> float:
        return blas.dot(x, y)

    return loadvec("v.txt", second)


loadvec("v.txt", first)
