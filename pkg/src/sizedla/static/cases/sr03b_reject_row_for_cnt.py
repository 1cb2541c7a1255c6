# case: SR-3b
# expect: reject
# cite: a matrix row is strided and cannot be a contiguous buffer
from typing import TypeVar

from sizedla import matrix
from sizedla.flags import svd_no
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

N = TypeVar("N")


def body(n: Size[N]) -> None:
    a = matrix.identity(n)
    store = matrix.create(n, min_size(n, n))
    gesdd(a, jobz=svd_no, s=matrix.row_dyn(1, store))


of_int_dyn(2, body)
