"""Flags whose static types encode the dimension changes they select.

Each flag family has a polymorphic type scheme, and each flag constant
instantiates it.  In Python the only polymorphic values are generic
functions, so every flag constant *is* a generic function whose signature is
its phantom instantiation; an operation receives the flag as a
``Callable`` parameter and the checker unifies the two.

Transpose flags map a matrix type to the type of ``op(A)``::

    normal : Mat[M, N] -> Mat[M, N]
    trans  : Mat[M, N] -> Mat[N, M]
    conjtr : Mat[M, N] -> Mat[N, M]      (same as trans over the reals)

Side flags map the dimensions ``(m, n)`` of ``B`` to ``(k, m, n)`` where ``k``
is the order of the symmetric factor: ``left`` gives ``(m, m, n)``, ``right``
gives ``(n, m, n)``.

SVD job flags take the four candidate shapes (all, top, overwrite, none) and
return the one they stand for, so ``svd_all`` unifies its result with its
first argument, ``svd_top`` with its second, and so on.

Calling a flag is meaningful at runtime as well: ``trans(a)`` is a transposed
copy of ``a``, ``left((m, n))`` returns the size witnesses ``(m, m, n)``, and
``svd_top(a, s, o, z)`` returns ``s``.  Operations identify the runtime tag of a
flag with :func:`trans_char`, :func:`side_char` or :func:`job_char`.
"""

from __future__ import annotations

from enum import Enum
from typing import Any, Callable, TypeVar

from .matrix import Mat, transpose
from .size import Size

__all__ = [
    "NormKind",
    "SideFlag",
    "SvdJob",
    "TransFlag",
    "UpLo",
    "conjtr",
    "job_char",
    "left",
    "lower",
    "normal",
    "right",
    "side_char",
    "svd_all",
    "svd_no",
    "svd_overwrite",
    "svd_top",
    "trans",
    "trans_char",
    "upper",
]

K = TypeVar("K")
M = TypeVar("M")
N = TypeVar("N")
AM = TypeVar("AM")
AN = TypeVar("AN")
CD = TypeVar("CD")
A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")
D = TypeVar("D")
E = TypeVar("E")

TransFlag = Callable[[Mat[AM, AN, Any]], Mat[M, N, Any]]
SideFlag = Callable[[tuple[Size[M], Size[N]]], tuple[Size[K], Size[M], Size[N]]]
SvdJob = Callable[[B, C, D, E], A]


def normal(a: Mat[M, N, CD]) -> Mat[M, N, CD]:
    """``N``: no transpose."""
    return a


def trans(a: Mat[M, N, Any]) -> Mat[N, M, CD]:
    """``T``: transpose."""
    return transpose(a)


def conjtr(a: Mat[M, N, Any]) -> Mat[N, M, CD]:
    """``C``: conjugate transpose, identical to :func:`trans` for real data."""
    return transpose(a)


def left(dims: tuple[Size[M], Size[N]]) -> tuple[Size[M], Size[M], Size[N]]:
    """``L``: the symmetric factor multiplies from the left (order m)."""
    m, n = dims
    return m, m, n


def right(dims: tuple[Size[M], Size[N]]) -> tuple[Size[N], Size[M], Size[N]]:
    """``R``: the symmetric factor multiplies from the right (order n)."""
    m, n = dims
    return n, m, n


def svd_all(all_: A, top: Any, overwrite: Any, none: Any) -> A:
    """``A``: every singular vector."""
    return all_


def svd_top(all_: Any, top: A, overwrite: Any, none: Any) -> A:
    """``S``: the leading min(m, n) singular vectors."""
    return top


def svd_overwrite(all_: Any, top: Any, overwrite: A, none: Any) -> A:
    """``O``: leading singular vectors overwrite the input matrix."""
    return overwrite


def svd_no(all_: Any, top: Any, overwrite: Any, none: A) -> A:
    """``N``: singular values only."""
    return none


_TRANS_CHARS: dict[Any, str] = {normal: "N", trans: "T", conjtr: "C"}
_SIDE_CHARS: dict[Any, str] = {left: "L", right: "R"}
_JOB_CHARS: dict[Any, str] = {svd_all: "A", svd_top: "S", svd_overwrite: "O", svd_no: "N"}


def _lookup(table: dict[Any, str], flag: object, family: str) -> str:
    try:
        return table[flag]
    except (KeyError, TypeError):
        raise TypeError(f"{flag!r} is not a {family} flag") from None


def trans_char(flag: object) -> str:
    return _lookup(_TRANS_CHARS, flag, "transpose")


def side_char(flag: object) -> str:
    return _lookup(_SIDE_CHARS, flag, "side")


def job_char(flag: object) -> str:
    return _lookup(_JOB_CHARS, flag, "SVD job")


def _by_char(table: dict[Any, str], c: str, family: str) -> Any:
    for flag, tag in table.items():
        if tag == c:
            return flag
    raise ValueError(f"unknown {family} flag {c!r}")


def trans_of_char(c: str) -> Any:
    """Flag for a BLAS character; the result is untyped (CLI use)."""
    return _by_char(_TRANS_CHARS, c.upper(), "transpose")


def side_of_char(c: str) -> Any:
    return _by_char(_SIDE_CHARS, c.upper(), "side")


def job_of_char(c: str) -> Any:
    return _by_char(_JOB_CHARS, c.upper(), "SVD job")


class UpLo(Enum):
    """Which triangle of a symmetric matrix is read."""

    UPPER = "U"
    LOWER = "L"


upper = UpLo.UPPER
lower = UpLo.LOWER


class NormKind(Enum):
    ONE = "one"
    INF = "inf"
    FRO = "fro"
    MAX = "max"
