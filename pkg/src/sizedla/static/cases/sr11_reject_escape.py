# case: SR-11
# expect: reject
# cite: a fresh brand must not escape its introduction
from typing import Any, TypeVar

from sizedla import vector
from sizedla.size import Size, of_int_dyn

N = TypeVar("N")


def leak(n: Size[N]) -> vector.Vec[N, Any]:
    return vector.create(n)


v = of_int_dyn(3, leak)
