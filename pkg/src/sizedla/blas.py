"""BLAS-style kernels typed by size brands and flags.

Shapes are never compared at runtime here: every constraint between
operands is a shared brand in the signature.  For ``gemm`` the transpose
flags pick how the brands of ``a`` and ``b`` map to those of ``op(a)`` and
``op(b)``::

    gemm(normal, a, normal, b)   # a: Mat[M, K], b: Mat[K, N]  -> Mat[M, N]
    gemm(trans, a, normal, b)    # a: Mat[K, M], b: Mat[K, N]  -> Mat[M, N]

Results that are freshly allocated have a free contiguity parameter.  When
an output buffer ``c`` (or ``y``) is supplied, it is updated in place and
returned with its own type.

The kernels use fixed sequential accumulation built from element-wise
numpy operations, so a view and a contiguous copy of the same data give
bit-identical results.
"""

from __future__ import annotations

import math
from typing import Any, Callable, Optional, TypeVar

import numpy as np

from . import matrix as _m
from . import vector as _v
from .errors import BandBoundError
from .flags import NormKind, UpLo, side_char, trans_char, upper
from .matrix import Mat
from .size import GeBand, Size, _unsafe_size
from .vector import Vec

__all__ = [
    "axpy",
    "copy",
    "dot",
    "gbmv",
    "geband_dyn",
    "gemm",
    "lange",
    "scal",
    "symm",
]

K = TypeVar("K")
M = TypeVar("M")
N = TypeVar("N")
AM = TypeVar("AM")
AN = TypeVar("AN")
AK = TypeVar("AK")
BK = TypeVar("BK")
BN = TypeVar("BN")
KL = TypeVar("KL")
KU = TypeVar("KU")
CD = TypeVar("CD")


# Level 1


def copy(x: Vec[N, Any], y: Optional[Vec[N, CD]] = None) -> Vec[N, CD]:
    """Copy ``x`` into ``y`` (or a fresh vector) and return the target."""
    out: Vec[N, CD] = _v.create(_v.dim(x)) if y is None else y
    _v._np(out)[:] = _v._np(x)
    return out


def scal(alpha: float, x: Vec[N, Any]) -> None:
    """``x := alpha * x``."""
    xs = _v._np(x)
    xs *= alpha


def axpy(x: Vec[N, Any], y: Vec[N, Any], *, alpha: float = 1.0) -> None:
    """``y := alpha * x + y``."""
    ys = _v._np(y)
    ys += alpha * _v._np(x)


def dot(x: Vec[N, Any], y: Vec[N, Any]) -> float:
    acc = 0.0
    for a, b in zip(_v._np(x).tolist(), _v._np(y).tolist()):
        acc += a * b
    return acc


# Level 3


def _op(flag: object, a: Mat[Any, Any, Any]) -> np.ndarray:
    t = trans_char(flag)
    arr = _m._np(a)
    return arr if t == "N" else arr.T


def _update(out: np.ndarray, prod: np.ndarray, alpha: float, beta: float, fresh: bool) -> None:
    # With beta = 0 the old contents are never read, so NaNs in c are dropped.
    if fresh or beta == 0.0:
        out[...] = alpha * prod
    else:
        out[...] = alpha * prod + beta * out


def _matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # Rank-1 accumulation in a fixed order; independent of memory layout.
    acc = np.zeros((x.shape[0], y.shape[1]), dtype=np.float64)
    for p in range(x.shape[1]):
        acc += x[:, p : p + 1] * y[p : p + 1, :]
    return acc


def gemm(
    transa: Callable[[Mat[AM, AK, Any]], Mat[M, K, Any]],
    a: Mat[AM, AK, Any],
    transb: Callable[[Mat[BK, BN, Any]], Mat[K, N, Any]],
    b: Mat[BK, BN, Any],
    *,
    alpha: float = 1.0,
    beta: float = 0.0,
    c: Optional[Mat[M, N, CD]] = None,
) -> Mat[M, N, CD]:
    """``c := alpha * op(a) * op(b) + beta * c``.

    Without ``c`` a fresh matrix is returned and ``beta`` is ignored.
    """
    x = _op(transa, a)
    y = _op(transb, b)
    if c is None:
        m: Size[M] = _unsafe_size(x.shape[0])
        n: Size[N] = _unsafe_size(y.shape[1])
        out: Mat[M, N, CD] = _m.create(m, n)
    else:
        out = c
    _update(_m._np(out), _matmul(x, y), alpha, beta, c is None)
    return out


def _symmetrize(a: Mat[Any, Any, Any], uplo: UpLo) -> np.ndarray:
    arr = _m._np(a)
    tri = np.triu(arr) if uplo is UpLo.UPPER else np.tril(arr)
    return tri + tri.T - np.diag(np.diag(arr))


def symm(
    side: Callable[[tuple[Size[M], Size[N]]], tuple[Size[K], Size[M], Size[N]]],
    a: Mat[K, K, Any],
    b: Mat[M, N, Any],
    *,
    uplo: UpLo = upper,
    alpha: float = 1.0,
    beta: float = 0.0,
    c: Optional[Mat[M, N, CD]] = None,
) -> Mat[M, N, CD]:
    """``c := alpha * a * b + beta * c`` (``left``) or ``alpha * b * a + beta * c`` (``right``).

    Only the ``uplo`` triangle of the symmetric matrix ``a`` is read.
    """
    s = _symmetrize(a, uplo)
    bs = _m._np(b)
    prod = _matmul(s, bs) if side_char(side) == "L" else _matmul(bs, s)
    out: Mat[M, N, CD] = _m.create(_m.dim1(b), _m.dim2(b)) if c is None else c
    _update(_m._np(out), prod, alpha, beta, c is None)
    return out


def lange(a: Mat[M, N, Any], *, norm: NormKind = NormKind.ONE) -> float:
    """Matrix norm of ``a``; 0 for an empty matrix."""
    arr = np.abs(_m._np(a))
    if arr.size == 0:
        return 0.0
    if norm is NormKind.ONE:
        return float(arr.sum(axis=0).max())
    if norm is NormKind.INF:
        return float(arr.sum(axis=1).max())
    if norm is NormKind.MAX:
        return float(arr.max())
    scale = float(arr.max())
    if scale == 0.0:
        return 0.0
    return scale * math.sqrt(float(((arr / scale) ** 2).sum()))


# Band storage


def geband_dyn(
    kl: Size[KL], ku: Size[KU], a: Mat[M, N, Any]
) -> Mat[GeBand[M, N, KL, KU], N, CD]:
    """Pack ``a`` into band storage with ``kl`` sub- and ``ku`` superdiagonals.

    Row ``ku + 1 + i - j`` of column ``j`` holds ``a(i, j)``; slots outside
    the band are zero.  Raises :class:`BandBoundError` unless ``kl < m`` and
    ``ku < n``.
    """
    m, n = _m.dim1(a).value, _m.dim2(a).value
    if not (kl.value < m and ku.value < n):
        raise BandBoundError(
            f"band widths kl={kl.value}, ku={ku.value} need kl < m={m} and ku < n={n}"
        )
    rows: Size[GeBand[M, N, KL, KU]] = _unsafe_size(kl.value + ku.value + 1)
    ab: Mat[GeBand[M, N, KL, KU], N, CD] = _m.create(rows, _m.dim2(a))
    src, dst = _m._np(a), _m._np(ab)
    for j in range(1, n + 1):
        for i in range(max(1, j - ku.value), min(m, j + kl.value) + 1):
            dst[ku.value + i - j, j - 1] = src[i - 1, j - 1]
    return ab


def gbmv(
    m: Size[AM],
    ab: Mat[GeBand[AM, AN, KL, KU], AN, Any],
    kl: Size[KL],
    ku: Size[KU],
    x: Vec[N, Any],
    *,
    trans: Callable[[Mat[AM, AN, Any]], Mat[M, N, Any]],
    alpha: float = 1.0,
    beta: float = 0.0,
    y: Optional[Vec[M, CD]] = None,
) -> Vec[M, CD]:
    """``y := alpha * op(A) * x + beta * y`` for the band matrix ``A`` in ``ab``.

    ``m`` is the row count of ``A``; the column count is that of ``ab``.
    """
    am, an = m.value, _m.dim2(ab).value
    band = _m._np(ab)
    xs = _v._np(x).tolist()
    t = trans_char(trans)
    out_len = am if t == "N" else an
    acc = [0.0] * out_len
    for j in range(1, an + 1):
        for i in range(max(1, j - ku.value), min(am, j + kl.value) + 1):
            aij = float(band[ku.value + i - j, j - 1])
            if t == "N":
                acc[i - 1] += aij * xs[j - 1]
            else:
                acc[j - 1] += aij * xs[i - 1]
    prod = np.array(acc, dtype=np.float64)
    if y is None:
        n_out: Size[M] = _unsafe_size(out_len)
        out: Vec[M, CD] = _v.create(n_out)
    else:
        out = y
    _update(_v._np(out), prod, alpha, beta, y is None)
    return out
