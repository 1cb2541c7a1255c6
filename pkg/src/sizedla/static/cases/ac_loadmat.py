# case: AC-loadmat
# expect: accept
# cite: a loaded matrix enters typed code under fresh brands
from typing import Any, TypeVar

from sizedla import blas, matrix
from sizedla.flags import normal, trans
from sizedla.matio import loadmat, savemat
from sizedla.matrix import Mat
from sizedla.size import Size, of_int_dyn

M = TypeVar("M")
N = TypeVar("N")


def make(m: Size[M]) -> None:
    def make_n(n: Size[N]) -> None:
        savemat("a.txt", matrix.init(m, n, lambda i, j: float(i * j)))

    of_int_dyn(3, make_n)


def gram(a: Mat[M, N, Any]) -> list[list[float]]:
    return matrix.to_lists(blas.gemm(trans, a, normal, a))


of_int_dyn(2, make)
assert loadmat("a.txt", gram) == [[5.0, 10.0, 15.0], [10.0, 20.0, 30.0], [15.0, 30.0, 45.0]]
