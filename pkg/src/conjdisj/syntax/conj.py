"""Terms of the free category with strict finite products on letters ``p1, p2, ...``.

An object is a tuple of generator indices; the product of objects is
concatenation and the empty tuple is the terminal object ``I``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from ..errors import TypeMismatch

ConjObj = tuple[int, ...]


def conj_obj(indices: Iterable[int]) -> ConjObj:
    obj = tuple(indices)
    for i in obj:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"generator index {i!r} must be a positive integer")
    return obj


def format_obj(obj: ConjObj) -> str:
    return "*".join(f"p{i}" for i in obj) if obj else "I"


class ConjTerm:
    __slots__ = ()


@dataclasses.dataclass(frozen=True)
class Id(ConjTerm):
    obj: ConjObj

    def __post_init__(self):
        object.__setattr__(self, "obj", conj_obj(self.obj))

    def __str__(self) -> str:
        return f"id {format_obj(self.obj)}"


@dataclasses.dataclass(frozen=True)
class Bang(ConjTerm):
    obj: ConjObj

    def __post_init__(self):
        object.__setattr__(self, "obj", conj_obj(self.obj))

    def __str__(self) -> str:
        return f"bang {format_obj(self.obj)}"


@dataclasses.dataclass(frozen=True)
class Pr1(ConjTerm):
    left: ConjObj
    right: ConjObj

    def __post_init__(self):
        object.__setattr__(self, "left", conj_obj(self.left))
        object.__setattr__(self, "right", conj_obj(self.right))

    def __str__(self) -> str:
        return f"pr1 {format_obj(self.left)}|{format_obj(self.right)}"


@dataclasses.dataclass(frozen=True)
class Pr2(ConjTerm):
    left: ConjObj
    right: ConjObj

    def __post_init__(self):
        object.__setattr__(self, "left", conj_obj(self.left))
        object.__setattr__(self, "right", conj_obj(self.right))

    def __str__(self) -> str:
        return f"pr2 {format_obj(self.left)}|{format_obj(self.right)}"


@dataclasses.dataclass(frozen=True)
class Dup(ConjTerm):
    obj: ConjObj

    def __post_init__(self):
        object.__setattr__(self, "obj", conj_obj(self.obj))

    def __str__(self) -> str:
        return f"dup {format_obj(self.obj)}"


@dataclasses.dataclass(frozen=True)
class Seq(ConjTerm):
    """``first`` followed by ``second``."""

    first: ConjTerm
    second: ConjTerm

    def __str__(self) -> str:
        return f"({self.first} ; {self.second})"


@dataclasses.dataclass(frozen=True)
class Prod(ConjTerm):
    left: ConjTerm
    right: ConjTerm

    def __str__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclasses.dataclass(frozen=True)
class Pair(ConjTerm):
    left: ConjTerm
    right: ConjTerm

    def __str__(self) -> str:
        return f"<{self.left}, {self.right}>"


def infer_type_conj(t: ConjTerm) -> tuple[ConjObj, ConjObj]:
    """Source and target objects of ``t``."""
    if isinstance(t, Id):
        return t.obj, t.obj
    if isinstance(t, Bang):
        return t.obj, ()
    if isinstance(t, Pr1):
        return t.left + t.right, t.left
    if isinstance(t, Pr2):
        return t.left + t.right, t.right
    if isinstance(t, Dup):
        return t.obj, t.obj + t.obj
    if isinstance(t, Seq):
        a, b = infer_type_conj(t.first)
        b2, c = infer_type_conj(t.second)
        if b != b2:
            raise TypeMismatch(
                f"in {t}: {t.first} has target {format_obj(b)} but {t.second} has source {format_obj(b2)}"
            )
        return a, c
    if isinstance(t, Prod):
        a, b = infer_type_conj(t.left)
        a2, b2 = infer_type_conj(t.right)
        return a + a2, b + b2
    if isinstance(t, Pair):
        a, b = infer_type_conj(t.left)
        a2, c = infer_type_conj(t.right)
        if a != a2:
            raise TypeMismatch(
                f"in {t}: components have sources {format_obj(a)} and {format_obj(a2)}"
            )
        return a, b + c
    raise TypeError(f"not a conjunctive term: {t!r}")
