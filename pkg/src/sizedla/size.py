"""Size brands and singleton size witnesses.

A ``Size[N]`` is a non-negative integer whose type parameter ``N`` is a
phantom *brand*.  Brands are only ever introduced together with exactly one
value, so two witnesses sharing a brand always hold the same number and the
type checker can verify equality of dimensions by unifying brands.

Runtime-determined sizes get a fresh brand through :func:`of_int_dyn`, which
hands the witness to a caller-supplied *generic* body.  The body must be
polymorphic in the brand, so values built from two different introductions
never unify::

    def body(n: Size[N]) -> float:
        x = vector.init(n, float)
        return blas.dot(x, x)

    of_int_dyn(3, body)

The brand constructors below are free: ``Add[M, N]`` is a different type from
``Add[N, M]`` and from any fresh brand, and no arithmetic identities are
applied at the type level.
"""

from __future__ import annotations

from typing import Generic, Protocol, TypeVar

from .errors import NegativeSize

__all__ = [
    "Add",
    "GeBand",
    "Min",
    "Size",
    "SizeScope",
    "SizeWitness",
    "Succ",
    "Zero",
    "add",
    "min_size",
    "of_int_dyn",
    "succ",
    "to_int",
    "zero",
]

M = TypeVar("M")
N = TypeVar("N")
KL = TypeVar("KL")
KU = TypeVar("KU")
R = TypeVar("R")
R_co = TypeVar("R_co", covariant=True)

# Brand variables prefixed ``_Fresh`` are bound only inside scoped bodies.  The
# static escape check looks for them in the result type of a generative call.
_FreshN = TypeVar("_FreshN")


class Zero:
    """Brand of the size 0."""


class Succ(Generic[N]):
    """Brand of ``n + 1``."""


class Add(Generic[M, N]):
    """Brand of ``m + n``."""


class Min(Generic[M, N]):
    """Brand of ``min(m, n)``."""


class GeBand(Generic[M, N, KL, KU]):
    """Row count ``kl + ku + 1`` of the band storage of an m-by-n matrix.

    Only :func:`sizedla.blas.geband_dyn` produces this brand, after checking
    ``kl < m`` and ``ku < n``; holding it is evidence of both inequalities.
    """


class Size(Generic[N]):
    __slots__ = ("_value",)

    def __init__(self, value: int) -> None:
        # Callers outside the package must go through of_int_dyn or the
        # arithmetic constructors; this is what keeps brands singleton.
        self._value = value

    @property
    def value(self) -> int:
        return self._value

    def __repr__(self) -> str:
        return f"Size({self._value})"


SizeWitness = Size


def _unsafe_size(value: int) -> Size[N]:
    return Size(value)


zero: Size[Zero] = Size(0)


def to_int(s: Size[N]) -> int:
    return s.value


def succ(n: Size[N]) -> Size[Succ[N]]:
    return Size(n.value + 1)


def add(a: Size[M], b: Size[N]) -> Size[Add[M, N]]:
    return Size(a.value + b.value)


def min_size(a: Size[M], b: Size[N]) -> Size[Min[M, N]]:
    return Size(min(a.value, b.value))


class SizeScope(Protocol[R_co]):
    """A body that works for *every* size brand."""

    def __call__(self, n: Size[_FreshN], /) -> R_co: ...


def of_int_dyn(k: int, body: SizeScope[R]) -> R:
    """Introduce ``k`` under a fresh brand and run ``body`` with its witness.

    Raises :class:`NegativeSize` (without calling ``body``) when ``k < 0``.
    Write ``body`` as a generic ``def``: pyright does not check brands inside
    a lambda passed here.
    """
    k = int(k)
    if k < 0:
        raise NegativeSize(f"size must be non-negative, got {k}")
    return body(Size(k))
