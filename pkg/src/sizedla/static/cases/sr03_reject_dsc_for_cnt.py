# case: SR-3
# expect: reject
# cite: a strided view is not accepted where contiguity is demanded
from typing import TypeVar

from sizedla import matrix, vector
from sizedla.flags import svd_no
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

N = TypeVar("N")


def body(n: Size[N]) -> None:
    a = matrix.identity(n)
    k = min_size(n, n)
    backing = vector.create(n)
    s = vector.subvec_dyn(k, backing)
    gesdd(a, jobz=svd_no, s=s)


of_int_dyn(2, body)
