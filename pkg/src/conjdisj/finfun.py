"""Finite ordinals and the functions between them.

An arrow ``n -> m`` is stored as a dense table of length ``n`` whose entries
are below ``m``.  Two monoidal structures live on the same arrows: the
coproduct one (``sum``, unit ``0``) and the product one (``prod``, unit
``1``), the latter flattened through lexicographic mixed-radix positions.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Any, Iterable, Iterator, Sequence

from .errors import OutOfRange, TypeMismatch


@dataclasses.dataclass(frozen=True)
class FinFun:
    src: int
    tgt: int
    table: tuple[int, ...]

    def __init__(self, src: int, tgt: int, table: Iterable[int]):
        table = tuple(int(x) for x in table)
        if src < 0 or tgt < 0:
            raise ValueError(f"ordinals must be non-negative, got {src} -> {tgt}")
        if len(table) != src:
            raise ValueError(f"table has {len(table)} entries for source {src}")
        if tgt == 0 and src > 0:
            raise ValueError(f"no function from {src} into the empty ordinal")
        for i, x in enumerate(table):
            if not 0 <= x < tgt:
                raise ValueError(f"table[{i}] = {x} is outside target {tgt}")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "tgt", tgt)
        object.__setattr__(self, "table", table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __repr__(self) -> str:
        return f"FinFun({self.src}->{self.tgt}, {list(self.table)})"

    def to_dict(self) -> dict[str, Any]:
        return {"src": self.src, "tgt": self.tgt, "table": list(self.table)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FinFun:
        return cls(int(data["src"]), int(data["tgt"]), data["table"])


class Radices(tuple):
    """A sequence of radices, each at least 2, for the Brauerian representation."""

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(d) for d in entries)
        for d in entries:
            if d < 2:
                raise ValueError(f"radix {d} is below 2")
        return super().__new__(cls, entries)

    @property
    def product(self) -> int:
        return math.prod(self)


def all_functions(n: int, m: int) -> Iterator[FinFun]:
    """Every function ``n -> m``, in lexicographic order of tables."""
    for i in range(m ** n):
        yield FinFun(n, m, mr_decode([m] * n, i))


# -- category structure ------------------------------------------------------

def identity(n: int) -> FinFun:
    return FinFun(n, n, range(n))


def compose(g: FinFun, f: FinFun) -> FinFun:
    """``g . f``: apply ``f`` first."""
    if f.tgt != g.src:
        raise TypeMismatch(f"cannot compose {g!r} after {f!r}: {f.tgt} != {g.src}")
    return FinFun(f.src, g.tgt, (g.table[x] for x in f.table))


# -- coproducts --------------------------------------------------------------

def sum(f: FinFun, f2: FinFun) -> FinFun:  # noqa: A001 - the categorical name
    """Side-by-side coproduct of arrows ``f + f2``."""
    return FinFun(
        f.src + f2.src,
        f.tgt + f2.tgt,
        f.table + tuple(f.tgt + x for x in f2.table),
    )


def kappa(n: int) -> FinFun:
    """The empty function ``0 -> n``."""
    return FinFun(0, n, ())


def inj1(n: int, m: int) -> FinFun:
    return FinFun(n, n + m, range(n))


def inj2(n: int, m: int) -> FinFun:
    return FinFun(m, n + m, range(n, n + m))


def codiag(n: int) -> FinFun:
    return FinFun(2 * n, n, tuple(range(n)) * 2)


def bracket(f: FinFun, g: FinFun) -> FinFun:
    if f.tgt != g.tgt:
        raise TypeMismatch(f"bracket needs equal targets, got {f.tgt} and {g.tgt}")
    return compose(codiag(f.tgt), sum(f, g))


# -- mixed radix -------------------------------------------------------------

def mr_encode(d: Sequence[int], t: Sequence[int]) -> int:
    """Position of the tuple ``t`` in the lexicographic order of ``d[0] x ... x d[k-1]``."""
    if len(t) != len(d):
        raise OutOfRange(f"tuple {tuple(t)} has length {len(t)}, radices {tuple(d)} have {len(d)}")
    code = 0
    for digit, radix in zip(t, d):
        if not 0 <= digit < radix:
            raise OutOfRange(f"digit {digit} is outside radix {radix} in {tuple(t)}")
        code = code * radix + digit
    return code


def mr_decode(d: Sequence[int], i: int) -> tuple[int, ...]:
    """Inverse of :func:`mr_encode`."""
    if not 0 <= i < math.prod(d):
        raise OutOfRange(f"{i} is outside the product {math.prod(d)} of radices {tuple(d)}")
    digits = []
    for radix in reversed(d):
        i, digit = divmod(i, radix)
        digits.append(digit)
    return tuple(reversed(digits))


# -- products ----------------------------------------------------------------

def prod(f1: FinFun, f2: FinFun) -> FinFun:
    """Product of arrows ``f1 . f2``, conjugated by the lexicographic bijection."""
    src_shape = (f1.src, f2.src)
    tgt_shape = (f1.tgt, f2.tgt)
    table = []
    for i in range(f1.src * f2.src):
        a, b = mr_decode(src_shape, i)
        table.append(mr_encode(tgt_shape, (f1.table[a], f2.table[b])))
    return FinFun(f1.src * f2.src, f1.tgt * f2.tgt, table)


def bang(n: int) -> FinFun:
    """The unique function ``n -> 1``."""
    return FinFun(n, 1, (0,) * n)


def proj1(n: int, m: int) -> FinFun:
    return FinFun(n * m, n, (mr_decode((n, m), i)[0] for i in range(n * m)))


def proj2(n: int, m: int) -> FinFun:
    return FinFun(n * m, m, (mr_decode((n, m), i)[1] for i in range(n * m)))


def diag(n: int) -> FinFun:
    return FinFun(n, n * n, (mr_encode((n, n), (i, i)) for i in range(n)))


def pair(f: FinFun, g: FinFun) -> FinFun:
    """Pairing ``<f, g>``, equal to ``prod(f, g) . diag(f.src)``.

    Tabulated pointwise: going through ``prod`` would build a table with
    ``f.src ** 2`` entries.
    """
    if f.src != g.src:
        raise TypeMismatch(f"pair needs equal sources, got {f.src} and {g.src}")
    shape = (f.tgt, g.tgt)
    return FinFun(f.src, f.tgt * g.tgt, (mr_encode(shape, (x, y)) for x, y in zip(f.table, g.table)))
