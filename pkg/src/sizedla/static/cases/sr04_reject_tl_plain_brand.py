# case: SR-4
# expect: reject
# cite: tl needs a brand of the form Succ[N]
from typing import TypeVar

from sizedla import vector
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def body(n: Size[N]) -> None:
    v = vector.init(n, float)
    vector.tl(v)


of_int_dyn(3, body)
