"""Singular value decomposition with job flags that determine output shapes.

Both drivers compute ``A = U diag(s) V^T`` with ``s`` non-increasing and
non-negative, of length ``min(m, n)``.  The job flag selects which singular
vectors are produced and, through its type, their shapes:

=============  ===========================  ==============================
job            ``gesdd`` (u, vt)            ``gesvd`` u / vt
=============  ===========================  ==============================
svd_all        m x m, n x n                 m x m / n x n
svd_top        m x min, min x n             m x min / min x n
svd_overwrite  written into ``a`` (*)       written into ``a``, view returned
svd_no         None, None                   m x 0 / 0 x n
=============  ===========================  ==============================

(*) for ``gesdd`` with m >= n the columns of U overwrite ``a`` and only
``vt`` (n x n) is returned; with m < n the rows of V^T overwrite ``a`` and
only ``u`` (m x m) is returned.

The numerics are a one-sided (Hestenes) Jacobi iteration on the taller of
``A`` and ``A^T``, which is accurate and simple at small sizes.  Each singular
vector pair is signed so that the largest-magnitude entry of the U column is
non-negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, TypeVar

import numpy as np

from . import matrix as _m
from . import vector as _v
from .errors import BothOverwrite, NonConvergence
from .flags import job_char
from .matrix import Mat
from .size import Min, Size, Zero, min_size, zero
from .vector import Cnt, Vec

__all__ = ["GesddResult", "GesvdResult", "MAX_SWEEPS", "ROTATION_TOL", "gesdd", "gesvd"]

M = TypeVar("M")
N = TypeVar("N")
UC = TypeVar("UC")
VR = TypeVar("VR")

MAX_SWEEPS = 30
ROTATION_TOL = 1e-14
# Columns below this fraction of the Frobenius norm count as zero.
NEGLIGIBLE = 1e-15


@dataclass
class GesddResult(Generic[M, N, UC, VR]):
    s: Vec[Min[M, N], Cnt]
    u: Optional[Mat[M, UC, Any]]
    vt: Optional[Mat[VR, N, Any]]


@dataclass
class GesvdResult(Generic[M, N, UC, VR]):
    s: Vec[Min[M, N], Cnt]
    u: Mat[M, UC, Any]
    vt: Mat[VR, N, Any]


# Numerical core on plain arrays


def _jacobi_tall(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonalize the columns of ``a`` (m >= n); returns (W, V) with A V = W."""
    w = np.array(a, dtype=np.float64)
    n = w.shape[1]
    v = np.eye(n)
    floor = (NEGLIGIBLE * float(np.linalg.norm(w))) ** 2
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                wp, wq = w[:, p], w[:, q]
                alpha = float(wp @ wp)
                beta = float(wq @ wq)
                gamma = float(wp @ wq)
                if min(alpha, beta) <= floor or abs(gamma) <= ROTATION_TOL * math.sqrt(alpha * beta):
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                w[:, [p, q]] = np.column_stack((c * wp - s * wq, s * wp + c * wq))
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        if not rotated:
            return w, v
    raise NonConvergence(f"Jacobi SVD did not converge in {MAX_SWEEPS} sweeps")


def _complete(q: np.ndarray, total: int) -> np.ndarray:
    """Extend orthonormal columns ``q`` to ``total`` columns.

    Candidates are standard basis vectors, orthogonalized twice against the
    current basis; the one with the largest residual is taken each step.
    """
    m = q.shape[0]
    basis = [q[:, j] for j in range(q.shape[1])]
    while len(basis) < total:
        best, best_norm = None, -1.0
        cur = np.column_stack(basis) if basis else np.zeros((m, 0))
        for i in range(m):
            r = np.zeros(m)
            r[i] = 1.0
            for _ in range(2):
                r = r - cur @ (cur.T @ r)
            nr = float(np.linalg.norm(r))
            if nr > best_norm:
                best, best_norm = r, nr
        assert best is not None
        basis.append(best / best_norm)
    return np.column_stack(basis) if basis else np.zeros((m, 0))


def _svd(a: np.ndarray, full_u: bool, full_v: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(s, U, V)``; U has min(m,n) or m columns, V min(m,n) or n."""
    m, n = a.shape
    k = min(m, n)
    flip = m < n
    w, v = _jacobi_tall(a.T if flip else a)
    s = np.linalg.norm(w, axis=0)
    order = np.argsort(-s, kind="stable")
    s, w, v = s[order], w[:, order], v[:, order]
    rows = w.shape[0]
    cut = NEGLIGIBLE * float(np.linalg.norm(a))
    good = [j for j in range(k) if s[j] > 0.0 and s[j] > cut]
    # Left vectors of the tall problem; columns with a zero value are filled in.
    left = np.zeros((rows, k))
    for j in good:
        left[:, j] = w[:, j] / s[j]
    if len(good) < k:
        filled = _complete(left[:, good], k)
        missing = [j for j in range(k) if j not in good]
        for idx, j in enumerate(missing):
            left[:, j] = filled[:, len(good) + idx]
    u, vv = (v, left) if flip else (left, v)
    for j in range(k):
        i = int(np.argmax(np.abs(u[:, j])))
        if u[i, j] < 0:
            u[:, j] = -u[:, j]
            vv[:, j] = -vv[:, j]
    if full_u and u.shape[1] < m:
        u = _complete(u[:, :k], m)
    elif not full_u:
        u = u[:, :k]
    if full_v and vv.shape[1] < n:
        vv = _complete(vv[:, :k], n)
    elif not full_v:
        vv = vv[:, :k]
    return s, u, vv


# Typed drivers


def _store_s(out: Optional[Vec[Min[M, N], Cnt]], k: Size[Min[M, N]], s: np.ndarray) -> Vec[Min[M, N], Cnt]:
    vec: Vec[Min[M, N], Cnt] = _v.create(k) if out is None else out
    _v._np(vec)[:] = s
    return vec


def _store(
    buf: Optional[Mat[Any, Any, Any]], rows: Size[Any], cols: Size[Any], x: np.ndarray
) -> Mat[Any, Any, Any]:
    out: Mat[Any, Any, Any] = _m.create(rows, cols) if buf is None else buf
    _m._np(out)[...] = x
    return out


def gesdd(
    a: Mat[M, N, Any],
    *,
    jobz: Callable[
        [
            tuple[Size[M], Size[N]],
            tuple[Size[Min[M, N]], Size[Min[M, N]]],
            tuple[Size[M], Size[N]],
            tuple[Size[Zero], Size[Zero]],
        ],
        tuple[Size[UC], Size[VR]],
    ],
    s: Optional[Vec[Min[M, N], Cnt]] = None,
    u: Optional[Mat[M, UC, Any]] = None,
    vt: Optional[Mat[VR, N, Any]] = None,
) -> GesddResult[M, N, UC, VR]:
    """SVD with a single job flag for both factors.

    ``s``, ``u`` and ``vt`` may be given as preallocated outputs.  With
    ``svd_overwrite`` the input ``a`` is modified.
    """
    m, n = _m.dim1(a), _m.dim2(a)
    k = min_size(m, n)
    job = job_char(jobz)
    ucols, vtrows = jobz((m, n), (k, k), (m, n), (zero, zero))
    arr = _m._np(a).copy()
    full = job == "A" or job == "O"
    sv, uu, vv = _svd(arr, full_u=full, full_v=full)
    s_out = _store_s(s, k, sv)
    if job == "N":
        return GesddResult(s_out, None, None)
    if job == "O":
        if m.value >= n.value:
            _m._np(a)[...] = uu[:, : n.value]
            return GesddResult(s_out, None, _store(vt, vtrows, n, vv.T))
        _m._np(a)[...] = vv[:, : m.value].T
        return GesddResult(s_out, _store(u, m, ucols, uu), None)
    return GesddResult(s_out, _store(u, m, ucols, uu), _store(vt, vtrows, n, vv.T))


def gesvd(
    a: Mat[M, N, Any],
    *,
    jobu: Callable[[Size[M], Size[Min[M, N]], Size[Min[M, N]], Size[Zero]], Size[UC]],
    jobvt: Callable[[Size[N], Size[Min[M, N]], Size[Min[M, N]], Size[Zero]], Size[VR]],
    s: Optional[Vec[Min[M, N], Cnt]] = None,
    u: Optional[Mat[M, UC, Any]] = None,
    vt: Optional[Mat[VR, N, Any]] = None,
) -> GesvdResult[M, N, UC, VR]:
    """SVD with independent job flags for U and V^T.

    ``svd_no`` yields a factor with a zero dimension.  ``svd_overwrite``
    writes the factor into the leading part of ``a`` and returns a view of
    it.  Raises :class:`BothOverwrite` if both flags are ``svd_overwrite``.
    """
    cu, cv = job_char(jobu), job_char(jobvt)
    if cu == "O" and cv == "O":
        raise BothOverwrite("jobu and jobvt cannot both be svd_overwrite")
    m, n = _m.dim1(a), _m.dim2(a)
    k = min_size(m, n)
    ucols = jobu(m, k, k, zero)
    vtrows = jobvt(n, k, k, zero)
    arr = _m._np(a).copy()
    sv, uu, vv = _svd(arr, full_u=cu == "A", full_v=cv == "A")
    s_out = _store_s(s, k, sv)

    u_out: Mat[M, UC, Any]
    vt_out: Mat[VR, N, Any]
    if cu == "O":
        _m._np(a)[:, : k.value] = uu[:, : k.value]
        u_out = _m.submat_dyn(m, ucols, a)
    else:
        u_out = _store(u, m, ucols, uu[:, : ucols.value])
    if cv == "O":
        _m._np(a)[: k.value, :] = vv[:, : k.value].T
        vt_out = _m.submat_dyn(vtrows, n, a)
    else:
        vt_out = _store(vt, vtrows, n, vv[:, : vtrows.value].T)
    return GesvdResult(s_out, u_out, vt_out)
