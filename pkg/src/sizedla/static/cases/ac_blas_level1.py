# case: AC-blas-level1
# expect: accept
# cite: copy, scal, axpy and dot over one brand compute alpha x + beta y
from typing import Any, TypeVar

from sizedla import blas, vector
from sizedla.size import Size, of_int_dyn
from sizedla.vector import Vec

N = TypeVar("N")


def axby(alpha: float, x: Vec[N, Any], beta: float, y: Vec[N, Any]) -> Vec[N, Any]:
    z = blas.copy(y)
    blas.scal(beta, z)
    blas.axpy(x, z, alpha=alpha)
    return z


def body(n: Size[N]) -> None:
    x = vector.init(n, float)
    y = vector.init(n, lambda i: 10.0)
    z = axby(2.0, x, 0.5, y)
    assert vector.to_list(z) == [7.0, 9.0, 11.0]
    assert vector.to_list(vector.map2(lambda a, b: 2.0 * a + 0.5 * b, x, y)) == vector.to_list(z)
    assert blas.dot(x, z) == 7.0 + 18.0 + 33.0
    w = vector.create(n)
    assert blas.copy(x, w) is w


of_int_dyn(3, body)
