# case: AC-gesvd-jobs
# expect: accept
# cite: jobu and jobvt independently fix the shapes of u and vt
from typing import TypeVar

from sizedla import matrix
from sizedla.flags import svd_all, svd_no, svd_overwrite, svd_top
from sizedla.size import Size, min_size, of_int_dyn, zero
from sizedla.svd import gesvd

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        a = matrix.init(m, n, lambda i, j: float(i + j))
        k = min_size(m, n)
        r = gesvd(a, jobu=svd_all, jobvt=svd_top, u=matrix.create(m, m), vt=matrix.create(k, n))
        assert matrix.dim2(r.u).value == 3
        r2 = gesvd(a, jobu=svd_no, jobvt=svd_all, u=matrix.create(m, zero))
        assert matrix.dim2(r2.u).value == 0 and matrix.dim1(r2.vt).value == 2
        r3 = gesvd(matrix.copy(a), jobu=svd_overwrite, jobvt=svd_no, vt=matrix.create(zero, n))
        assert matrix.dim2(r3.u).value == 2
        r4 = gesvd(matrix.copy(a), jobu=svd_top, jobvt=svd_overwrite, u=matrix.create(m, k))
        assert matrix.dim1(r4.vt).value == 2

    of_int_dyn(2, inner)


of_int_dyn(3, outer)
