# case: AC-gesdd-jobs
# expect: accept
# cite: each jobz flag of gesdd fixes the factor shapes
from typing import TypeVar

from sizedla import matrix, vector
from sizedla.flags import svd_all, svd_no, svd_overwrite, svd_top
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        def fresh() -> "matrix.Mat[M, N, object]":
            return matrix.init(m, n, lambda i, j: float(i == j) * (4.0 - i))

        r = gesdd(fresh(), jobz=svd_all, u=matrix.create(m, m), vt=matrix.create(n, n))
        assert vector.to_list(r.s) == [3.0, 2.0]
        k = min_size(m, n)
        r2 = gesdd(fresh(), jobz=svd_top, u=matrix.create(m, k), vt=matrix.create(k, n))
        assert r2.u is not None and r2.vt is not None
        a = fresh()
        r3 = gesdd(a, jobz=svd_overwrite, u=matrix.create(m, m))
        assert r3.vt is None and r3.u is not None
        r4 = gesdd(fresh(), jobz=svd_no, s=vector.create(k))
        assert r4.u is None and r4.vt is None

    of_int_dyn(3, inner)


of_int_dyn(2, outer)
