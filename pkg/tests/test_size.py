from typing import TypeVar

import pytest

from sizedla import size
from sizedla.errors import NegativeSize
from sizedla.size import Size, add, min_size, of_int_dyn, succ, to_int, zero

N = TypeVar("N")


def test_of_int_dyn_roundtrip():
    assert of_int_dyn(3, to_int) == 3
    assert of_int_dyn(0, to_int) == 0


def test_of_int_dyn_negative_does_not_call_body():
    called = []

    def body(n: Size[N]) -> None:
        called.append(n)

    with pytest.raises(NegativeSize):
        of_int_dyn(-1, body)
    assert called == []


def test_body_called_once_with_value():
    seen = []
    of_int_dyn(7, lambda n: seen.append(to_int(n)))
    assert seen == [7]


def test_arithmetic_values():
    w3, w4 = Size(3), Size(4)
    assert to_int(add(w3, w4)) == 7
    assert to_int(add(zero, w4)) == 4
    assert to_int(min_size(Size(5), w3)) == 3
    assert to_int(min_size(w4, w4)) == 4
    assert to_int(succ(w3)) == 4
    assert to_int(zero) == 0


def test_witnesses_are_immutable_values():
    w = Size(2)
    with pytest.raises(AttributeError):
        w.value = 5  # type: ignore[misc]
    assert repr(w) == "Size(2)"


def test_brand_classes_exist():
    for cls in (size.Zero, size.Succ, size.Add, size.Min, size.GeBand):
        assert isinstance(cls, type)
