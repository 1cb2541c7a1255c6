# case: AC-gemm-flags
# expect: accept
# cite: every transpose flag combination of gemm
from typing import TypeVar

from sizedla import blas, matrix
from sizedla.flags import conjtr, normal, trans
from sizedla.size import Size, of_int_dyn

K = TypeVar("K")
M = TypeVar("M")
N = TypeVar("N")


def scope(m: Size[M]) -> None:
    def scope_k(k: Size[K]) -> None:
        def scope_n(n: Size[N]) -> None:
            a = matrix.init(m, k, lambda i, j: float(i + 2 * j))
            at = matrix.transpose(a)
            b = matrix.init(k, n, lambda i, j: float(i * j))
            bt = matrix.transpose(b)
            ref = matrix.to_lists(blas.gemm(normal, a, normal, b))
            assert matrix.to_lists(blas.gemm(trans, at, normal, b)) == ref
            assert matrix.to_lists(blas.gemm(normal, a, trans, bt)) == ref
            assert matrix.to_lists(blas.gemm(conjtr, at, conjtr, bt)) == ref
            assert matrix.to_lists(blas.gemm(trans, at, conjtr, bt)) == ref
            c = matrix.init(m, n, lambda i, j: 1.0)
            out = blas.gemm(normal, a, normal, b, alpha=2.0, beta=-1.0, c=c)
            assert out is c
            assert matrix.get_dyn(c, 1, 1) == 2.0 * ref[0][0] - 1.0

        of_int_dyn(4, scope_n)

    of_int_dyn(3, scope_k)


of_int_dyn(2, scope)
