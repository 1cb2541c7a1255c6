"""Encoding a finite subtype hierarchy with phantom type parameters.

Pick a ground set ``S = {s1, ..., sk}`` and assign every type ``T`` of the
hierarchy a subset ``S_T`` such that ``U <: T`` exactly when
``S_U <= S_T``.  A value of type ``T`` is then a token with ``k`` phantom
slots:

* positive encoding (what a producer returns): slot ``i`` is ``W`` when
  ``s_i`` is in ``S_T`` and a free type variable otherwise;
* negative encoding (what a consumer accepts): slot ``i`` is a free type
  variable when ``s_i`` is in ``S_T`` and ``Z`` otherwise.

The positive encoding of ``U`` unifies with the negative encoding of ``T``
iff no slot pairs ``W`` with ``Z``, i.e. iff ``S_U <= S_T``.  Only
unification is needed, so the scheme works in checkers without variance.

The contiguity tags of :mod:`sizedla.vector` are the smallest instance:
``S = {1}``, ``S_Dsc = {1}``, ``S_Cnt = {}``.  ``Dsc`` plays ``W`` and
``Cnt`` plays ``Z``; a contiguous result has a free slot, a parameter
demanding contiguity has ``Cnt``.

This module spells out the six-type example

    A = {1,2,3,4}, B = {1,2}, C = {1,3,4}, D = {2,3}, E = {4}, F = {1}

as ``make_<x>`` producers and ``use_as_<x>`` consumers, so that
``use_as_a(make_e())`` type-checks and ``use_as_b(make_e())`` does not.

With native subtyping a second form is available: a covariant token in which
every free slot is replaced by the bottom type ``Bot``.  Then the positive
encoding of ``U`` is a subtype of that of ``T``, and the negative encoding of
``U`` a supertype of that of ``T``, exactly when ``U <: T``.  Those are the
``Pos*`` and ``Neg*`` aliases below.
"""

from __future__ import annotations

from typing import Generic, NoReturn, TypeVar

__all__ = [
    "NAMES",
    "SETS",
    "Tok",
    "W",
    "Z",
    "includes",
    "make_a",
    "make_b",
    "make_c",
    "make_d",
    "make_e",
    "make_f",
    "use_as_a",
    "use_as_b",
    "use_as_c",
    "use_as_d",
    "use_as_e",
    "use_as_f",
    "use_list_a",
    "use_list_b",
    "use_list_c",
]

T1 = TypeVar("T1")
T2 = TypeVar("T2")
T3 = TypeVar("T3")
T4 = TypeVar("T4")
C1 = TypeVar("C1", covariant=True)
C2 = TypeVar("C2", covariant=True)
C3 = TypeVar("C3", covariant=True)
C4 = TypeVar("C4", covariant=True)

SETS: dict[str, frozenset[int]] = {
    "A": frozenset({1, 2, 3, 4}),
    "B": frozenset({1, 2}),
    "C": frozenset({1, 3, 4}),
    "D": frozenset({2, 3}),
    "E": frozenset({4}),
    "F": frozenset({1}),
}
NAMES = tuple(SETS)


def includes(x: str, y: str) -> bool:
    """Whether ``x <: y`` in the example hierarchy (subset inclusion)."""
    return SETS[x] <= SETS[y]


class W:
    """Phantom atom for a slot in the set, producer side."""


class Z:
    """Phantom atom for a slot outside the set, consumer side."""


class Tok(Generic[T1, T2, T3, T4]):
    """Zero-size token; all the content is in the type."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Tok()"


_TOKEN: Tok = Tok()


def make_a() -> Tok[W, W, W, W]:
    return _TOKEN


def make_b() -> Tok[W, W, T3, T4]:
    return _TOKEN


def make_c() -> Tok[W, T2, W, W]:
    return _TOKEN


def make_d() -> Tok[T1, W, W, T4]:
    return _TOKEN


def make_e() -> Tok[T1, T2, T3, W]:
    return _TOKEN


def make_f() -> Tok[W, T2, T3, T4]:
    return _TOKEN


def use_as_a(v: Tok[T1, T2, T3, T4]) -> None:
    pass


def use_as_b(v: Tok[T1, T2, Z, Z]) -> None:
    pass


def use_as_c(v: Tok[T1, Z, T3, T4]) -> None:
    pass


def use_as_d(v: Tok[Z, T2, T3, Z]) -> None:
    pass


def use_as_e(v: Tok[Z, Z, Z, T4]) -> None:
    pass


def use_as_f(v: Tok[T1, Z, Z, Z]) -> None:
    pass


# A list literal of producers is a common supertype of its elements when its
# element type unifies with every element.
def use_list_a(vs: list[Tok[T1, T2, T3, T4]]) -> int:
    return len(vs)


def use_list_b(vs: list[Tok[T1, T2, Z, Z]]) -> int:
    return len(vs)


def use_list_c(vs: list[Tok[T1, Z, T3, T4]]) -> int:
    return len(vs)


# Covariant form with Bot in the free slots.


class CoTok(Generic[C1, C2, C3, C4]):
    __slots__ = ()


Bot = NoReturn

PosA = CoTok[W, W, W, W]
PosB = CoTok[W, W, Bot, Bot]
PosC = CoTok[W, Bot, W, W]
PosD = CoTok[Bot, W, W, Bot]
PosE = CoTok[Bot, Bot, Bot, W]
PosF = CoTok[W, Bot, Bot, Bot]

NegA = CoTok[Bot, Bot, Bot, Bot]
NegB = CoTok[Bot, Bot, Z, Z]
NegC = CoTok[Bot, Z, Bot, Bot]
NegD = CoTok[Z, Bot, Bot, Z]
NegE = CoTok[Z, Z, Z, Bot]
NegF = CoTok[Bot, Z, Z, Z]
