# case: SR-3-twin
# expect: accept
# cite: a freshly allocated vector fits a contiguous parameter
from typing import TypeVar

from sizedla import matrix, vector
from sizedla.flags import svd_no
from sizedla.size import Size, min_size, of_int_dyn
from sizedla.svd import gesdd

N = TypeVar("N")


def body(n: Size[N]) -> list[float]:
    a = matrix.identity(n)
    s = vector.create(min_size(n, n))
    r = gesdd(a, jobz=svd_no, s=s)
    assert r.s is s
    return vector.to_list(s)


assert of_int_dyn(2, body) == [1.0, 1.0]
