# case: SR-11-twin
# expect: accept
# cite: results free of the brand may leave the scope
from typing import TypeVar

from sizedla import vector
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def keep(n: Size[N]) -> list[float]:
    return vector.to_list(vector.init(n, float))


xs = of_int_dyn(3, keep)
assert xs == [1.0, 2.0, 3.0]
