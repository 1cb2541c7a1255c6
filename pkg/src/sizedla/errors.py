"""Exceptions raised by the dynamic (``_dyn``) checks and the I/O layer."""


class SizedError(Exception):
    """Base class for every error raised by sizedla."""


class NegativeSize(SizedError, ValueError):
    pass


class LengthMismatch(SizedError, ValueError):
    pass


class IndexOutOfRange(SizedError, IndexError):
    pass


class SubRangeError(SizedError, IndexError):
    """A requested subvector/submatrix does not fit inside its parent."""


class EmptyList(SizedError, ValueError):
    pass


class BandBoundError(SizedError, ValueError):
    """Band widths violate ``kl < m`` or ``ku < n``."""


class NonConvergence(SizedError, ArithmeticError):
    pass


class BothOverwrite(SizedError, ValueError):
    """``gesvd`` was asked to overwrite ``a`` with both U and V^T."""


class DimensionMismatch(SizedError, ValueError):
    """Runtime-loaded operands disagree on a dimension (CLI boundary only)."""


class ParseError(SizedError, ValueError):
    pass
