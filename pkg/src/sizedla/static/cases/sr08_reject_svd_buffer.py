# case: SR-8
# expect: reject
# cite: with svd_top, u must be m-by-min(m, n)
from typing import TypeVar

from sizedla import matrix
from sizedla.flags import svd_top
from sizedla.size import Size, of_int_dyn
from sizedla.svd import gesdd

M = TypeVar("M")
N = TypeVar("N")


def outer(m: Size[M]) -> None:
    def inner(n: Size[N]) -> None:
        a = matrix.create(m, n)
        u = matrix.create(m, m)
        gesdd(a, jobz=svd_top, u=u)

    of_int_dyn(2, inner)


of_int_dyn(3, outer)
