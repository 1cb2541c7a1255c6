"""Sized column-major matrices with views.

``Mat[M, N, CD]`` is an M-by-N matrix; element ``(i, j)`` (1-based) lives at
``offset + (i-1) + (j-1)*ld`` of a flat float64 buffer.  ``CD`` follows the
same contiguity encoding as :mod:`sizedla.vector`: freshly allocated
matrices leave it free, views from :func:`submat_dyn` and :func:`row_dyn` are
tagged ``Dsc``.
"""

from __future__ import annotations

from typing import Any, Callable, Generic, Protocol, Sequence, TypeVar

import numpy as np
from numpy.lib.stride_tricks import as_strided

from .errors import EmptyList, IndexOutOfRange, LengthMismatch, SubRangeError
from .size import Size, _unsafe_size
from .vector import Dsc, Vec, to_list

__all__ = [
    "ColsScope",
    "Mat",
    "col_dyn",
    "copy",
    "create",
    "dim1",
    "dim2",
    "get_dyn",
    "identity",
    "init",
    "is_contiguous",
    "of_cols_dyn",
    "of_list_dyn",
    "row_dyn",
    "set_dyn",
    "submat_dyn",
    "to_array",
    "to_lists",
    "transpose",
]

K = TypeVar("K")
L = TypeVar("L")
M = TypeVar("M")
N = TypeVar("N")
CD = TypeVar("CD")
R = TypeVar("R")
R_co = TypeVar("R_co", covariant=True)
_FreshCols = TypeVar("_FreshCols")


class Mat(Generic[M, N, CD]):
    __slots__ = ("_rows", "_cols", "_data", "_offset", "_ld")

    def __init__(
        self, m: Size[M], n: Size[N], data: np.ndarray, offset: int = 0, ld: int | None = None
    ) -> None:
        self._rows = m
        self._cols = n
        self._data = data
        self._offset = offset
        self._ld = max(m.value, 1) if ld is None else ld

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def ld(self) -> int:
        """Leading dimension: buffer distance between consecutive columns."""
        return self._ld

    def _pos(self, i: int, j: int) -> int:
        return self._offset + (i - 1) + (j - 1) * self._ld

    def __repr__(self) -> str:
        return f"Mat({to_lists(self)!r})"


def _fresh(m: Size[M], n: Size[N]) -> Mat[M, N, CD]:
    return Mat(m, n, np.zeros(m.value * n.value, dtype=np.float64))


def dim1(a: Mat[M, N, Any]) -> Size[M]:
    return a._rows


def dim2(a: Mat[M, N, Any]) -> Size[N]:
    return a._cols


def is_contiguous(a: Mat[M, N, Any]) -> bool:
    return a._ld == a._rows.value or a._cols.value <= 1


def create(m: Size[M], n: Size[N]) -> Mat[M, N, CD]:
    return _fresh(m, n)


def init(m: Size[M], n: Size[N], f: Callable[[int, int], float]) -> Mat[M, N, CD]:
    a: Mat[M, N, CD] = _fresh(m, n)
    d, ld = a._data, a._ld
    for j in range(1, n.value + 1):
        for i in range(1, m.value + 1):
            d[(i - 1) + (j - 1) * ld] = f(i, j)
    return a


def identity(n: Size[N]) -> Mat[N, N, CD]:
    return init(n, n, lambda i, j: 1.0 if i == j else 0.0)


def of_list_dyn(m: Size[M], n: Size[N], rows: Sequence[Sequence[float]]) -> Mat[M, N, CD]:
    """Copy a row-major nested list; shape is checked against ``m``/``n``."""
    if len(rows) != m.value or any(len(r) != n.value for r in rows):
        raise LengthMismatch(f"nested list does not have shape {m.value}x{n.value}")
    return init(m, n, lambda i, j: float(rows[i - 1][j - 1]))


class ColsScope(Protocol[M, R_co]):
    """A body generic in the column brand; the row brand ``M`` is fixed."""

    def __call__(self, a: Mat[M, _FreshCols, Any], /) -> R_co: ...


def of_cols_dyn(vs: Sequence[Vec[M, Any]], body: ColsScope[M, R]) -> R:
    """Concatenate column vectors and pass the matrix to ``body``.

    The row brand is shared with the inputs while the column count gets a
    fresh brand.  An empty list raises :class:`EmptyList`, since no row
    witness would be available.
    """
    if len(vs) == 0:
        raise EmptyList("of_cols_dyn needs at least one column")
    m = vs[0]._dim
    k: Size[Any] = _unsafe_size(len(vs))
    a: Mat[M, Any, Any] = _fresh(m, k)
    for j, v in enumerate(vs):
        base = j * a._ld
        for i, x in enumerate(to_list(v)):
            a._data[base + i] = x
    return body(a)


def to_lists(a: Mat[M, N, Any]) -> list[list[float]]:
    """Row-major nested list copy."""
    d = a._data
    return [
        [float(d[a._pos(i, j)]) for j in range(1, a._cols.value + 1)]
        for i in range(1, a._rows.value + 1)
    ]


def to_array(a: Mat[M, N, Any]) -> np.ndarray:
    return np.array(to_lists(a), dtype=np.float64).reshape(a._rows.value, a._cols.value)


def copy(a: Mat[M, N, Any]) -> Mat[M, N, CD]:
    """Materialize ``a`` (possibly a view) into fresh contiguous storage."""
    return init(a._rows, a._cols, lambda i, j: float(a._data[a._pos(i, j)]))


def transpose(a: Mat[M, N, Any]) -> Mat[N, M, CD]:
    return init(a._cols, a._rows, lambda i, j: float(a._data[a._pos(j, i)]))


def _check_index(a: Mat[M, N, Any], i: int, j: int) -> None:
    if not (1 <= i <= a._rows.value and 1 <= j <= a._cols.value):
        raise IndexOutOfRange(
            f"index ({i}, {j}) out of range for {a._rows.value}x{a._cols.value} matrix"
        )


def get_dyn(a: Mat[M, N, Any], i: int, j: int) -> float:
    _check_index(a, i, j)
    return float(a._data[a._pos(i, j)])


def set_dyn(a: Mat[M, N, Any], i: int, j: int, x: float) -> None:
    _check_index(a, i, j)
    a._data[a._pos(i, j)] = x


def submat_dyn(
    m: Size[M], n: Size[N], a: Mat[K, L, Any], *, ar: int = 1, ac: int = 1
) -> Mat[M, N, Dsc]:
    """View of the m-by-n block whose top-left corner is ``(ar, ac)``."""
    if ar < 1 or ac < 1:
        raise SubRangeError(f"ar={ar} and ac={ac} must both be >= 1")
    if ar + m.value - 1 > a._rows.value or ac + n.value - 1 > a._cols.value:
        raise SubRangeError(
            f"{m.value}x{n.value} block at ({ar}, {ac}) exceeds "
            f"{a._rows.value}x{a._cols.value} matrix"
        )
    return Mat(m, n, a._data, a._offset + (ar - 1) + (ac - 1) * a._ld, a._ld)


def col_dyn(j: int, a: Mat[M, N, Any]) -> Vec[M, CD]:
    """Column ``j`` as an aliasing view; columns are always stride 1."""
    if not 1 <= j <= a._cols.value:
        raise IndexOutOfRange(f"column {j} out of range 1..{a._cols.value}")
    return Vec(a._rows, a._data, a._offset + (j - 1) * a._ld, 1)


def row_dyn(i: int, a: Mat[M, N, Any]) -> Vec[N, Dsc]:
    """Row ``i`` as an aliasing view with stride ``ld``."""
    if not 1 <= i <= a._rows.value:
        raise IndexOutOfRange(f"row {i} out of range 1..{a._rows.value}")
    return Vec(a._cols, a._data, a._offset + (i - 1), a._ld)


def _np(a: Mat[M, N, Any]) -> np.ndarray:
    """Writable numpy (m, n) view of ``a`` that aliases its buffer."""
    m, n = a._rows.value, a._cols.value
    if m == 0 or n == 0:
        return np.zeros((m, n), dtype=np.float64)
    isz = a._data.itemsize
    return as_strided(a._data[a._offset :], shape=(m, n), strides=(isz, isz * a._ld))
