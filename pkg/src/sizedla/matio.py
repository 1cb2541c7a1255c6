"""Text files for vectors and matrices, loaded under fresh brands.

Vector file::

    3
    1.0 2.0 3.0

Matrix file (header ``m n``, then ``m * n`` values in row-major order)::

    2 2
    1 0
    0 1

Tokens may be split across lines in any way.  :func:`loadvec` and
:func:`loadmat` parse the file and hand the result to a body that is generic
in the size brands, so two loads, even of the same path, can never be mixed
statically: the file could have changed in between.

Errors: :class:`~sizedla.errors.ParseError` for malformed content, and the
usual :class:`OSError` subclasses for missing or unreadable files.
"""

from __future__ import annotations

import os
from typing import Any, Protocol, TypeVar, Union

import numpy as np

from . import matrix as _m
from . import vector as _v
from .errors import ParseError
from .matrix import Mat
from .size import Size
from .vector import Vec

__all__ = [
    "MatScope",
    "VecScope",
    "format_mat",
    "format_vec",
    "loadmat",
    "loadvec",
    "read_mat",
    "read_vec",
    "savemat",
    "savevec",
]

PathLike = Union[str, "os.PathLike[str]"]

N = TypeVar("N")
M = TypeVar("M")
R = TypeVar("R")
R_co = TypeVar("R_co", covariant=True)
_FreshLen = TypeVar("_FreshLen")
_FreshRows = TypeVar("_FreshRows")
_FreshCols = TypeVar("_FreshCols")

DEFAULT_PRECISION = 17


def _int_token(tok: str, what: str, path: object) -> int:
    try:
        k = int(tok)
    except ValueError:
        raise ParseError(f"{path}: {what} {tok!r} is not an integer") from None
    if k < 0:
        raise ParseError(f"{path}: {what} must be non-negative, got {k}")
    return k


def _float_tokens(toks: list[str], count: int, path: object) -> np.ndarray:
    if len(toks) != count:
        raise ParseError(f"{path}: expected {count} values, found {len(toks)}")
    try:
        return np.array([float(t) for t in toks], dtype=np.float64)
    except ValueError as e:
        raise ParseError(f"{path}: {e}") from None


def parse_vec(text: str, path: object = "<string>") -> np.ndarray:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(f"{path}: missing length header")
    head = lines[0].split()
    if len(head) != 1:
        raise ParseError(f"{path}: vector header must be a single length")
    n = _int_token(head[0], "length", path)
    return _float_tokens(" ".join(lines[1:]).split(), n, path)


def parse_mat(text: str, path: object = "<string>") -> np.ndarray:
    """Parse a matrix file into an (m, n) array."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(f"{path}: missing 'm n' header")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"{path}: matrix header must be 'm n'")
    m = _int_token(head[0], "row count", path)
    n = _int_token(head[1], "column count", path)
    vals = _float_tokens(" ".join(lines[1:]).split(), m * n, path)
    return vals.reshape(m, n)


def read_vec(path: PathLike) -> np.ndarray:
    with open(path, encoding="ascii", errors="replace") as f:
        return parse_vec(f.read(), path)


def read_mat(path: PathLike) -> np.ndarray:
    with open(path, encoding="ascii", errors="replace") as f:
        return parse_mat(f.read(), path)


class VecScope(Protocol[R_co]):
    def __call__(self, v: Vec[_FreshLen, Any], /) -> R_co: ...


class MatScope(Protocol[R_co]):
    def __call__(self, a: Mat[_FreshRows, _FreshCols, Any], /) -> R_co: ...


def loadvec(path: PathLike, body: VecScope[R]) -> R:
    """Read a vector file and run ``body`` on it under a fresh length brand."""
    arr = read_vec(path)
    n: Size[Any] = Size(arr.shape[0])
    return body(_v.of_array_dyn(n, arr))


def loadmat(path: PathLike, body: MatScope[R]) -> R:
    """Read a matrix file and run ``body`` on it under fresh brands."""
    arr = read_mat(path)
    m: Size[Any] = Size(arr.shape[0])
    n: Size[Any] = Size(arr.shape[1])
    return body(array_to_mat(m, n, arr))


def array_to_mat(m: Size[M], n: Size[N], arr: np.ndarray) -> Mat[M, N, Any]:
    a: Mat[M, N, Any] = _m.create(m, n)
    _m._np(a)[...] = arr
    return a


def _fmt(x: float, precision: int) -> str:
    return f"{x:.{precision}g}"


def format_vec(v: Vec[N, Any], precision: int = DEFAULT_PRECISION) -> str:
    xs = _v.to_list(v)
    body = " ".join(_fmt(x, precision) for x in xs)
    return f"{len(xs)}\n{body}\n" if xs else f"{len(xs)}\n"


def format_mat(a: Mat[M, N, Any], precision: int = DEFAULT_PRECISION) -> str:
    rows = _m.to_lists(a)
    out = [f"{_m.dim1(a).value} {_m.dim2(a).value}"]
    for r in rows:
        if r:
            out.append(" ".join(_fmt(x, precision) for x in r))
    return "\n".join(out) + "\n"


def savevec(path: PathLike, v: Vec[N, Any], precision: int = DEFAULT_PRECISION) -> None:
    """Write ``v``; with the default 17 significant digits the round trip is exact."""
    with open(path, "w", encoding="ascii") as f:
        f.write(format_vec(v, precision))


def savemat(path: PathLike, a: Mat[M, N, Any], precision: int = DEFAULT_PRECISION) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write(format_mat(a, precision))
