"""Batch command line front end.

Operands come from independent files, so their sizes are unrelated as far
as the type checker knows.  Each command therefore compares the loaded shapes
explicitly, reports :class:`DimensionMismatch` on failure and, on success,
introduces every size exactly once and builds all operands from those shared
witnesses before calling the typed library.

Exit status: 0 on success, 1 when a dimension, band, sub-range or SVD check
fails, 2 for unreadable or malformed input and usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Optional, Sequence, TypeVar

import numpy as np

from . import blas, matio
from . import matrix as _m
from . import vector as _v
from .errors import (
    BandBoundError,
    BothOverwrite,
    DimensionMismatch,
    NegativeSize,
    NonConvergence,
    ParseError,
    SubRangeError,
)
from .flags import (
    NormKind,
    UpLo,
    conjtr,
    left,
    normal,
    right,
    svd_all,
    svd_no,
    svd_overwrite,
    svd_top,
    trans,
)
from .matio import array_to_mat
from .size import Size, of_int_dyn
from .svd import gesdd, gesvd

K = TypeVar("K")
M = TypeVar("M")
N = TypeVar("N")

RUNTIME_FAILURES = (DimensionMismatch, BandBoundError, SubRangeError, NonConvergence, BothOverwrite)
INPUT_FAILURES = (ParseError, OSError, NegativeSize)


def _shape(arr: np.ndarray) -> str:
    return "x".join(str(d) for d in arr.shape)


def _mismatch(what: str, got: object, want: object) -> DimensionMismatch:
    return DimensionMismatch(f"{what}: got {got}, expected {want}")


def _vec(n: Size[N], arr: np.ndarray) -> _v.Vec[N, Any]:
    return _v.of_array_dyn(n, arr)


# gemm


def cmd_gemm(args: argparse.Namespace) -> str:
    a, b = matio.read_mat(args.a), matio.read_mat(args.b)
    c = matio.read_mat(args.c) if args.c else None
    ta, tb = args.transa, args.transb
    m, k = a.shape if ta == "N" else a.shape[::-1]
    kb, n = b.shape if tb == "N" else b.shape[::-1]
    if k != kb:
        raise _mismatch("inner dimensions of op(a) and op(b)", kb, k)
    if c is not None and c.shape != (m, n):
        raise _mismatch("shape of c", _shape(c), f"{m}x{n}")
    beta = args.beta if c is not None else 0.0

    def in_m(sm: Size[M]) -> str:
        def in_k(sk: Size[K]) -> str:
            def in_n(sn: Size[N]) -> str:
                cm = None if c is None else array_to_mat(sm, sn, c)
                if ta == "N":
                    am = array_to_mat(sm, sk, a)
                    if tb == "N":
                        r = blas.gemm(normal, am, normal, array_to_mat(sk, sn, b),
                                      alpha=args.alpha, beta=beta, c=cm)
                    else:
                        bt = array_to_mat(sn, sk, b)
                        fb = trans if tb == "T" else conjtr
                        r = blas.gemm(normal, am, fb, bt, alpha=args.alpha, beta=beta, c=cm)
                else:
                    at = array_to_mat(sk, sm, a)
                    fa = trans if ta == "T" else conjtr
                    if tb == "N":
                        r = blas.gemm(fa, at, normal, array_to_mat(sk, sn, b),
                                      alpha=args.alpha, beta=beta, c=cm)
                    else:
                        # Unions of generic flags are only solved next to a
                        # single flag, so both-transposed cases are spelled out.
                        bt2 = array_to_mat(sn, sk, b)
                        al = args.alpha
                        if ta == "T" and tb == "T":
                            r = blas.gemm(trans, at, trans, bt2, alpha=al, beta=beta, c=cm)
                        elif ta == "T":
                            r = blas.gemm(trans, at, conjtr, bt2, alpha=al, beta=beta, c=cm)
                        elif tb == "T":
                            r = blas.gemm(conjtr, at, trans, bt2, alpha=al, beta=beta, c=cm)
                        else:
                            r = blas.gemm(conjtr, at, conjtr, bt2, alpha=al, beta=beta, c=cm)
                return matio.format_mat(r, args.precision)

            return of_int_dyn(n, in_n)

        return of_int_dyn(k, in_k)

    return of_int_dyn(m, in_m)


# symm


def cmd_symm(args: argparse.Namespace) -> str:
    a, b = matio.read_mat(args.a), matio.read_mat(args.b)
    c = matio.read_mat(args.c) if args.c else None
    if a.shape[0] != a.shape[1]:
        raise _mismatch("a must be square", _shape(a), "k x k")
    m, n = b.shape
    order = m if args.side == "L" else n
    if a.shape[0] != order:
        raise _mismatch(f"order of a for side {args.side}", a.shape[0], order)
    if c is not None and c.shape != (m, n):
        raise _mismatch("shape of c", _shape(c), f"{m}x{n}")
    uplo = UpLo(args.uplo)
    beta = args.beta if c is not None else 0.0

    def in_m(sm: Size[M]) -> str:
        def in_n(sn: Size[N]) -> str:
            bm = array_to_mat(sm, sn, b)
            cm = None if c is None else array_to_mat(sm, sn, c)
            if args.side == "L":
                r = blas.symm(left, array_to_mat(sm, sm, a), bm, uplo=uplo,
                              alpha=args.alpha, beta=beta, c=cm)
            else:
                r = blas.symm(right, array_to_mat(sn, sn, a), bm, uplo=uplo,
                              alpha=args.alpha, beta=beta, c=cm)
            return matio.format_mat(r, args.precision)

        return of_int_dyn(n, in_n)

    return of_int_dyn(m, in_m)


# gbmv


def cmd_gbmv(args: argparse.Namespace) -> str:
    a, x = matio.read_mat(args.a), matio.read_vec(args.x)
    y = matio.read_vec(args.y) if args.y else None
    m, n = a.shape
    xlen, ylen = (n, m) if args.trans == "N" else (m, n)
    if x.shape[0] != xlen:
        raise _mismatch("length of x", x.shape[0], xlen)
    if y is not None and y.shape[0] != ylen:
        raise _mismatch("length of y", y.shape[0], ylen)
    beta = args.beta if y is not None else 0.0

    def in_m(sm: Size[M]) -> str:
        def in_n(sn: Size[N]) -> str:
            def in_kl(kl: Size[K]) -> str:
                def in_ku(ku: Size[Any]) -> str:
                    ab = blas.geband_dyn(kl, ku, array_to_mat(sm, sn, a))
                    if args.trans == "N":
                        yv = None if y is None else _vec(sm, y)
                        r = blas.gbmv(sm, ab, kl, ku, _vec(sn, x), trans=normal,
                                      alpha=args.alpha, beta=beta, y=yv)
                        return matio.format_vec(r, args.precision)
                    yt = None if y is None else _vec(sn, y)
                    ft = trans if args.trans == "T" else conjtr
                    rt = blas.gbmv(sm, ab, kl, ku, _vec(sm, x), trans=ft,
                                   alpha=args.alpha, beta=beta, y=yt)
                    return matio.format_vec(rt, args.precision)

                return of_int_dyn(args.ku, in_ku)

            return of_int_dyn(args.kl, in_kl)

        return of_int_dyn(n, in_n)

    return of_int_dyn(m, in_m)


# svd

_JOBS = {"A": svd_all, "S": svd_top, "O": svd_overwrite, "N": svd_no}


def cmd_svd(args: argparse.Namespace) -> str:
    a = matio.read_mat(args.a)
    jobvt = args.jobvt or args.job
    p = args.precision

    def in_m(sm: Size[M]) -> str:
        def in_n(sn: Size[N]) -> str:
            am = array_to_mat(sm, sn, a)
            u: Any
            vt: Any
            if args.driver == "dd":
                r = gesdd(am, jobz=_JOBS[args.job])
                s, u, vt = r.s, r.u, r.vt
                if args.job == "O":
                    # The factor that is not returned now lives in a.
                    if sm.value >= sn.value:
                        u = am
                    else:
                        vt = am
            else:
                rv = gesvd(am, jobu=_JOBS[args.job], jobvt=_JOBS[jobvt])
                s, u, vt = rv.s, rv.u, rv.vt
            for path, f in ((args.u_out, u), (args.vt_out, vt)):
                if path and f is not None:
                    matio.savemat(path, f, p)
            return matio.format_vec(s, p)

        return of_int_dyn(a.shape[1], in_n)

    return of_int_dyn(a.shape[0], in_m)


# norm, append, submat


def cmd_norm(args: argparse.Namespace) -> str:
    a = matio.read_mat(args.a)

    def in_m(sm: Size[M]) -> str:
        def in_n(sn: Size[N]) -> str:
            val = blas.lange(array_to_mat(sm, sn, a), norm=NormKind(args.kind))
            return f"{val:.{args.precision}g}\n"

        return of_int_dyn(a.shape[1], in_n)

    return of_int_dyn(a.shape[0], in_m)


def cmd_append(args: argparse.Namespace) -> str:
    x, y = matio.read_vec(args.x), matio.read_vec(args.y)

    def in_m(sm: Size[M]) -> str:
        def in_n(sn: Size[N]) -> str:
            return matio.format_vec(_v.append(_vec(sm, x), _vec(sn, y)), args.precision)

        return of_int_dyn(y.shape[0], in_n)

    return of_int_dyn(x.shape[0], in_m)


def cmd_submat(args: argparse.Namespace) -> str:
    a = matio.read_mat(args.a)

    def in_rows(sr: Size[K]) -> str:
        def in_cols(sc: Size[Any]) -> str:
            def in_m(sm: Size[M]) -> str:
                def in_n(sn: Size[N]) -> str:
                    view = _m.submat_dyn(sm, sn, array_to_mat(sr, sc, a), ar=args.ar, ac=args.ac)
                    return matio.format_mat(view, args.precision)

                return of_int_dyn(args.n, in_n)

            return of_int_dyn(args.m, in_m)

        return of_int_dyn(a.shape[1], in_cols)

    return of_int_dyn(a.shape[0], in_rows)


# argument parsing


def _trans_arg(p: argparse.ArgumentParser, name: str) -> None:
    p.add_argument(name, choices=["N", "T", "C"], default="N", type=str.upper,
                   help="transpose flag (default N)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sizedla", description="Dimension-checked linear algebra on text files.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--precision", type=int, default=matio.DEFAULT_PRECISION,
                        help="significant digits in the output (default 17)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gemm", parents=[common], help="C := alpha op(A) op(B) + beta C")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c")
    _trans_arg(p, "--transa")
    _trans_arg(p, "--transb")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.set_defaults(func=cmd_gemm)

    p = sub.add_parser("symm", parents=[common], help="C := alpha A B + beta C with A symmetric")
    p.add_argument("--side", choices=["L", "R"], required=True, type=str.upper)
    p.add_argument("--uplo", choices=["U", "L"], default="U", type=str.upper,
                   help="triangle of A that is read (default U)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.set_defaults(func=cmd_symm)

    p = sub.add_parser("gbmv", parents=[common],
                       help="band matrix-vector product; A is given dense")
    p.add_argument("--a", required=True)
    p.add_argument("--kl", type=int, required=True)
    p.add_argument("--ku", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    _trans_arg(p, "--trans")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.set_defaults(func=cmd_gbmv)

    p = sub.add_parser("svd", parents=[common], help="singular values (and vectors)")
    p.add_argument("--a", required=True)
    p.add_argument("--job", choices=list(_JOBS), default="N", type=str.upper)
    p.add_argument("--jobvt", choices=list(_JOBS), type=str.upper,
                   help="V^T job for the vd driver (default: same as --job)")
    p.add_argument("--driver", choices=["dd", "vd"], default="dd")
    p.add_argument("--u-out", help="file for U, when computed")
    p.add_argument("--vt-out", help="file for V^T, when computed")
    p.set_defaults(func=cmd_svd)

    p = sub.add_parser("norm", parents=[common], help="matrix norm")
    p.add_argument("--a", required=True)
    p.add_argument("--kind", choices=[k.value for k in NormKind], default="one")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("append", parents=[common], help="concatenate two vectors")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_append)

    p = sub.add_parser("submat", parents=[common], help="extract a submatrix")
    p.add_argument("--a", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ar", type=int, default=1)
    p.add_argument("--ac", type=int, default=1)
    p.set_defaults(func=cmd_submat)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
        if args.out:
            with open(args.out, "w", encoding="ascii") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    except RUNTIME_FAILURES as e:
        print(f"sizedla {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except INPUT_FAILURES as e:
        print(f"sizedla {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
