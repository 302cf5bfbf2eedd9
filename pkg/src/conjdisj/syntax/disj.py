"""Terms of the free category with strict finite coproducts on one letter.

Objects are ordinals: the disjunction of ``n`` copies of the letter is ``n``.
"""

from __future__ import annotations

import dataclasses

from ..errors import TypeMismatch


class DisjTerm:
    __slots__ = ()


def _nat(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"object label {v!r} must be a natural number")


@dataclasses.dataclass(frozen=True)
class Id(DisjTerm):
    n: int

    def __post_init__(self):
        _nat(self.n)

    def __str__(self) -> str:
        return f"id {self.n}"


@dataclasses.dataclass(frozen=True)
class Kappa(DisjTerm):
    n: int

    def __post_init__(self):
        _nat(self.n)

    def __str__(self) -> str:
        return f"kappa {self.n}"


@dataclasses.dataclass(frozen=True)
class In1(DisjTerm):
    n: int
    m: int

    def __post_init__(self):
        _nat(self.n, self.m)

    def __str__(self) -> str:
        return f"in1 {self.n} {self.m}"


@dataclasses.dataclass(frozen=True)
class In2(DisjTerm):
    n: int
    m: int

    def __post_init__(self):
        _nat(self.n, self.m)

    def __str__(self) -> str:
        return f"in2 {self.n} {self.m}"


@dataclasses.dataclass(frozen=True)
class Fold(DisjTerm):
    n: int

    def __post_init__(self):
        _nat(self.n)

    def __str__(self) -> str:
        return f"fold {self.n}"


@dataclasses.dataclass(frozen=True)
class Seq(DisjTerm):
    """``first`` followed by ``second``."""

    first: DisjTerm
    second: DisjTerm

    def __str__(self) -> str:
        return f"({self.first} ; {self.second})"


@dataclasses.dataclass(frozen=True)
class Sum(DisjTerm):
    left: DisjTerm
    right: DisjTerm

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


@dataclasses.dataclass(frozen=True)
class Case(DisjTerm):
    left: DisjTerm
    right: DisjTerm

    def __str__(self) -> str:
        return f"[{self.left}, {self.right}]"


def infer_type_disj(t: DisjTerm) -> tuple[int, int]:
    """Source and target of ``t``."""
    if isinstance(t, Id):
        return t.n, t.n
    if isinstance(t, Kappa):
        return 0, t.n
    if isinstance(t, In1):
        return t.n, t.n + t.m
    if isinstance(t, In2):
        return t.m, t.n + t.m
    if isinstance(t, Fold):
        return 2 * t.n, t.n
    if isinstance(t, Seq):
        a, b = infer_type_disj(t.first)
        b2, c = infer_type_disj(t.second)
        if b != b2:
            raise TypeMismatch(f"in {t}: {t.first} has target {b} but {t.second} has source {b2}")
        return a, c
    if isinstance(t, Sum):
        a, b = infer_type_disj(t.left)
        a2, b2 = infer_type_disj(t.right)
        return a + a2, b + b2
    if isinstance(t, Case):
        a, c = infer_type_disj(t.left)
        a2, c2 = infer_type_disj(t.right)
        if c != c2:
            raise TypeMismatch(f"in {t}: branch targets {c} and {c2} differ")
        return a + a2, c
    raise TypeError(f"not a disjunctive term: {t!r}")
