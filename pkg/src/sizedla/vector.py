"""Sized, contiguity-tracked vectors of 64-bit floats.

``Vec[N, CD]`` has length brand ``N`` and contiguity parameter ``CD``.  The
contiguity parameter follows the two-point subtyping encoding:

* results known to be stride-1 are returned as ``Vec[N, CD]`` with ``CD``
  left free, so they fit wherever a vector is expected;
* results that may be strided (views) are returned as ``Vec[N, Dsc]``;
* parameters that need stride 1 are typed ``Vec[N, Cnt]``, everything else
  takes a free parameter.

A strided view therefore cannot be passed where a contiguous vector is
demanded, while a contiguous vector is accepted everywhere.

Indices are 1-based throughout.
"""

from __future__ import annotations

from typing import Any, Callable, Generic, Iterable, TypeVar

import numpy as np

from .errors import IndexOutOfRange, LengthMismatch, SubRangeError
from .size import Add, Size, Succ, _unsafe_size, add, succ

__all__ = [
    "Cnt",
    "Dsc",
    "Vec",
    "append",
    "cons",
    "create",
    "dim",
    "get_dyn",
    "hd",
    "init",
    "is_contiguous",
    "map",
    "map2",
    "of_array_dyn",
    "set_dyn",
    "subvec_dyn",
    "tl",
    "to_array",
    "to_list",
]

K = TypeVar("K")
M = TypeVar("M")
N = TypeVar("N")
CD = TypeVar("CD")


class Cnt:
    """Phantom tag: occupies a stride-1 region of its storage."""


class Dsc:
    """Phantom tag: possibly strided."""


class Vec(Generic[N, CD]):
    __slots__ = ("_dim", "_data", "_offset", "_stride")

    def __init__(self, n: Size[N], data: np.ndarray, offset: int = 0, stride: int = 1) -> None:
        self._dim = n
        self._data = data
        self._offset = offset
        self._stride = stride

    @property
    def data(self) -> np.ndarray:
        """The shared backing buffer (flat, float64)."""
        return self._data

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def stride(self) -> int:
        return self._stride

    def _pos(self, i: int) -> int:
        return self._offset + (i - 1) * self._stride

    def __repr__(self) -> str:
        return f"Vec({to_list(self)!r})"


def _fresh(n: Size[N]) -> Vec[N, CD]:
    return Vec(n, np.zeros(n.value, dtype=np.float64))


def dim(v: Vec[N, Any]) -> Size[N]:
    return v._dim


def is_contiguous(v: Vec[N, Any]) -> bool:
    return v._stride == 1 or v._dim.value <= 1


def create(n: Size[N]) -> Vec[N, CD]:
    """Fresh zero vector."""
    return _fresh(n)


def init(n: Size[N], f: Callable[[int], float]) -> Vec[N, CD]:
    """Vector whose ``i``-th element (1-based) is ``f(i)``."""
    v: Vec[N, CD] = _fresh(n)
    for i in range(1, n.value + 1):
        v._data[i - 1] = f(i)
    return v


def of_array_dyn(n: Size[N], a: Iterable[float]) -> Vec[N, CD]:
    """Copy ``a`` into a vector of length ``n``.

    The caller supplies the brand; the length is checked at runtime and
    :class:`LengthMismatch` is raised if it differs from ``n``.
    """
    arr = np.array(list(a), dtype=np.float64)
    if arr.shape[0] != n.value:
        raise LengthMismatch(f"array of length {arr.shape[0]} given for size {n.value}")
    return Vec(n, arr)


def to_list(v: Vec[N, Any]) -> list[float]:
    d, o, s = v._data, v._offset, v._stride
    return [float(d[o + k * s]) for k in range(v._dim.value)]


def to_array(v: Vec[N, Any]) -> np.ndarray:
    """A fresh contiguous numpy copy."""
    return np.array(to_list(v), dtype=np.float64)


def _check_index(v: Vec[N, Any], i: int) -> None:
    if not 1 <= i <= v._dim.value:
        raise IndexOutOfRange(f"index {i} out of range 1..{v._dim.value}")


def get_dyn(v: Vec[N, Any], i: int) -> float:
    _check_index(v, i)
    return float(v._data[v._pos(i)])


def set_dyn(v: Vec[N, Any], i: int, x: float) -> None:
    _check_index(v, i)
    v._data[v._pos(i)] = x


def map(f: Callable[[float], float], x: Vec[N, Any]) -> Vec[N, CD]:
    return init(x._dim, lambda i: f(get_dyn(x, i)))


def map2(f: Callable[[float, float], float], x: Vec[N, Any], y: Vec[N, Any]) -> Vec[N, CD]:
    """Element-wise ``f``; the lengths are equal by the shared brand."""
    out: Vec[N, CD] = _fresh(x._dim)
    xd, xo, xs = x._data, x._offset, x._stride
    yd, yo, ys = y._data, y._offset, y._stride
    for k in range(x._dim.value):
        out._data[k] = f(float(xd[xo + k * xs]), float(yd[yo + k * ys]))
    return out


def append(x: Vec[M, Any], y: Vec[N, Any]) -> Vec[Add[M, N], CD]:
    data = np.array(to_list(x) + to_list(y), dtype=np.float64)
    return Vec(add(x._dim, y._dim), data)


def cons(x: float, v: Vec[N, Any]) -> Vec[Succ[N], CD]:
    data = np.array([x] + to_list(v), dtype=np.float64)
    return Vec(succ(v._dim), data)


def hd(v: Vec[Succ[N], Any]) -> float:
    return float(v._data[v._offset])


def tl(v: Vec[Succ[N], Any]) -> Vec[N, Dsc]:
    """View of ``v`` without its head element (shares storage)."""
    n: Size[N] = _unsafe_size(v._dim.value - 1)
    return Vec(n, v._data, v._offset + v._stride, v._stride)


def subvec_dyn(n: Size[N], v: Vec[K, Any], *, ofs: int = 1, inc: int = 1) -> Vec[N, Dsc]:
    """View with element ``i`` mapped to ``v[ofs + (i-1)*inc]``.

    Raises :class:`SubRangeError` unless ``ofs >= 1``, ``inc >= 1`` and the
    last mapped index lies inside ``v``.
    """
    if ofs < 1 or inc < 1:
        raise SubRangeError(f"ofs={ofs} and inc={inc} must both be >= 1")
    if n.value > 0 and ofs + (n.value - 1) * inc > v._dim.value:
        raise SubRangeError(
            f"subvector of {n.value} elements from ofs={ofs} inc={inc} "
            f"exceeds length {v._dim.value}"
        )
    return Vec(n, v._data, v._pos(ofs), v._stride * inc)


def _np(v: Vec[N, Any]) -> np.ndarray:
    """Writable numpy view of the elements of ``v`` (aliases the buffer)."""
    n = v._dim.value
    if n == 0:
        return v._data[0:0]
    return v._data[v._offset : v._offset + (n - 1) * v._stride + 1 : v._stride]
