# case: SR-3b-twin
# expect: accept
# cite: a matrix column is contiguous
from typing import TypeVar

from sizedla import matrix, vector
from sizedla.flags import svd_no
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

N = TypeVar("N")


def body(n: Size[N]) -> list[float]:
    a = matrix.init(n, n, lambda i, j: 2.0 if i == j else 0.0)
    store = matrix.create(min_size(n, n), n)
    gesdd(a, jobz=svd_no, s=matrix.col_dyn(1, store))
    return vector.to_list(matrix.col_dyn(1, store))


assert of_int_dyn(2, body) == [2.0, 2.0]
