# case: SR-8-twin
# expect: accept
# cite: with svd_top, an m-by-min(m, n) buffer is accepted
from typing import TypeVar

from sizedla import matrix
from sizedla.flags import svd_top
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        a = matrix.init(m, n, lambda i, j: float(i == j))
        u = matrix.create(m, min_size(m, n))
        r = gesdd(a, jobz=svd_top, u=u)
        assert r.u is u
        assert r.vt is not None and matrix.dim1(r.vt).value == 2

    of_int_dyn(2, inner)


of_int_dyn(3, outer)
