"""Linear algebra with dimensions checked by the type checker.

Sizes carry phantom brands (:mod:`sizedla.size`), vectors and matrices carry
the brands of their dimensions plus a contiguity tag, and BLAS/LAPACK-style
flags are typed so that the shapes they imply are checked statically.
"""

from . import blas, flags, lattice, matio, matrix, size, svd, vector
from .blas import axpy, copy, dot, gbmv, geband_dyn, gemm, lange, scal, symm
from .errors import (
    BandBoundError,
    BothOverwrite,
    DimensionMismatch,
    EmptyList,
    IndexOutOfRange,
    LengthMismatch,
    NegativeSize,
    NonConvergence,
    ParseError,
    SizedError,
    SubRangeError,
)
from .flags import (
    NormKind,
    UpLo,
    conjtr,
    left,
    lower,
    normal,
    right,
    svd_all,
    svd_no,
    svd_overwrite,
    svd_top,
    trans,
    upper,
)
from .matio import loadmat, loadvec, savemat, savevec
from .matrix import Mat, identity, of_cols_dyn, submat_dyn
from .size import (
    Add,
    GeBand,
    Min,
    Size,
    SizeWitness,
    Succ,
    Zero,
    add,
    min_size,
    of_int_dyn,
    succ,
    to_int,
    zero,
)
from .svd import GesddResult, GesvdResult, gesdd, gesvd
from .vector import Cnt, Dsc, Vec, append, cons, hd, map2, of_array_dyn, subvec_dyn, tl

vec_init = vector.init
mat_init = matrix.init

__version__ = "0.1.0"

__all__ = [
    "Add",
    "BandBoundError",
    "BothOverwrite",
    "Cnt",
    "DimensionMismatch",
    "Dsc",
    "EmptyList",
    "GeBand",
    "GesddResult",
    "GesvdResult",
    "IndexOutOfRange",
    "LengthMismatch",
    "Mat",
    "Min",
    "NegativeSize",
    "NonConvergence",
    "NormKind",
    "ParseError",
    "Size",
    "SizeWitness",
    "SizedError",
    "SubRangeError",
    "Succ",
    "UpLo",
    "Vec",
    "Zero",
    "add",
    "append",
    "axpy",
    "blas",
    "conjtr",
    "cons",
    "copy",
    "dot",
    "errors",
    "flags",
    "gbmv",
    "geband_dyn",
    "gemm",
    "gesdd",
    "gesvd",
    "hd",
    "identity",
    "lange",
    "lattice",
    "left",
    "loadmat",
    "loadvec",
    "lower",
    "map2",
    "mat_init",
    "matio",
    "matrix",
    "min_size",
    "normal",
    "of_array_dyn",
    "of_cols_dyn",
    "of_int_dyn",
    "right",
    "savemat",
    "savevec",
    "scal",
    "size",
    "submat_dyn",
    "subvec_dyn",
    "succ",
    "svd",
    "svd_all",
    "svd_no",
    "svd_overwrite",
    "svd_top",
    "symm",
    "tl",
    "to_int",
    "trans",
    "upper",
    "vec_init",
    "vector",
    "zero",
]
