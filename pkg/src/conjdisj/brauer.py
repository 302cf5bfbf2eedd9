"""Brauerian representation of split equivalences, and function spaces over finite sets.

A split equivalence ``R: n -> m`` together with radices ``a`` (one per source
position) and ``b`` (one per target position) yields a relation between the
ordinals ``prod(a)`` and ``prod(b)``: a source code and a target code are
related when their digit tuples, laid side by side, take a single value on
every class of ``R``.

Functions ``X -> p`` and subsets of ``X`` are coded as integers whose digits
list the values on ``0, 1, ..., |X|-1``, most significant digit first.  With
this convention the exponential functor at ``p = 2`` and the contravariant
power-set functor have literally the same tables.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Any, Iterable, Mapping, Sequence

from .errors import LengthMismatch, NotAFunction, OutOfRange, TypeMismatch
from .finfun import FinFun, Radices, mr_decode, mr_encode
from .gen import SplitEq, canonical_partition


@dataclasses.dataclass(frozen=True)
class BinRel:
    src: int
    tgt: int
    pairs: frozenset[tuple[int, int]]

    def __init__(self, src: int, tgt: int, pairs: Iterable[tuple[int, int]]):
        pairs = frozenset((int(i), int(j)) for i, j in pairs)
        for i, j in pairs:
            if not (0 <= i < src and 0 <= j < tgt):
                raise ValueError(f"pair ({i}, {j}) is outside {src} x {tgt}")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "tgt", tgt)
        object.__setattr__(self, "pairs", pairs)

    def images(self, i: int) -> list[int]:
        return sorted(j for s, j in self.pairs if s == i)

    def to_fun(self) -> FinFun:
        """The relation as a function, or :class:`NotAFunction` with a witness."""
        targets: list[list[int]] = [[] for _ in range(self.src)]
        for i, j in self.pairs:
            targets[i].append(j)
        for i, js in enumerate(targets):
            if len(js) != 1:
                raise NotAFunction(i, len(js))
        return FinFun(self.src, self.tgt, (js[0] for js in targets))

    def is_function(self) -> bool:
        try:
            self.to_fun()
        except NotAFunction:
            return False
        return True

    def to_dict(self) -> dict[str, Any]:
        return {"src": self.src, "tgt": self.tgt, "pairs": [list(p) for p in sorted(self.pairs)]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> BinRel:
        return cls(int(data["src"]), int(data["tgt"]), (tuple(p) for p in data["pairs"]))


def graph(f: FinFun) -> BinRel:
    return BinRel(f.src, f.tgt, enumerate(f.table))


def rel_compose(s: BinRel, r: BinRel) -> BinRel:
    """Relational composite ``s . r`` (``r`` first)."""
    if r.tgt != s.src:
        raise TypeMismatch(f"cannot compose relations: {r.tgt} != {s.src}")
    forward: dict[int, list[int]] = {}
    for j, k in s.pairs:
        forward.setdefault(j, []).append(k)
    return BinRel(r.src, s.tgt, ((i, k) for i, j in r.pairs for k in forward.get(j, ())))


# -- primes ------------------------------------------------------------------

_primes = [2]


def nth_prime(i: int) -> int:
    """The ``i``-th prime, counting from ``nth_prime(1) == 2``."""
    if i < 1:
        raise OutOfRange(f"prime index {i} must be at least 1")
    candidate = _primes[-1]
    while len(_primes) < i:
        candidate += 1
        if all(candidate % q for q in itertools.takewhile(lambda q: q * q <= candidate, _primes)):
            _primes.append(candidate)
    return _primes[i - 1]


# -- the representation ------------------------------------------------------

def _position_radices(a: Sequence[int], b: Sequence[int], r: SplitEq) -> tuple[int, ...]:
    if len(a) != r.src or len(b) != r.tgt:
        raise LengthMismatch(
            f"radices of lengths {len(a)} and {len(b)} do not fit {r.src} -> {r.tgt}"
        )
    return tuple(Radices(a)) + tuple(Radices(b))


def appropriate(a: Sequence[int], b: Sequence[int], r: SplitEq) -> bool:
    """True when every class of ``r`` carries a single radix."""
    radix = _position_radices(a, b, r)
    return all(len({radix[x] for x in c}) == 1 for c in r.classes)


def f_ab_rel(a: Sequence[int], b: Sequence[int], r: SplitEq) -> BinRel:
    radix = _position_radices(a, b, r)
    n = r.src
    # a class can only take values that fit every radix it touches
    ranges = [range(min(radix[x] for x in c)) for c in r.classes]
    pairs = []
    for values in itertools.product(*ranges):
        digits = [0] * r.size
        for c, v in zip(r.classes, values):
            for x in c:
                digits[x] = v
        pairs.append((mr_encode(a, digits[:n]), mr_encode(b, digits[n:])))
    return BinRel(math.prod(a), math.prod(b), pairs)


def f_ab_fun(a: Sequence[int], b: Sequence[int], r: SplitEq) -> FinFun:
    return f_ab_rel(a, b, r).to_fun()


def f_p(p: int, r: SplitEq) -> BinRel:
    return f_ab_rel((p,) * r.src, (p,) * r.tgt, r)


# -- equivalence relations and function sets ---------------------------------

@dataclasses.dataclass(frozen=True)
class EqRel:
    size: int
    classes: tuple[tuple[int, ...], ...]

    def __init__(self, size: int, classes: Iterable[Iterable[int]]):
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "classes", canonical_partition(classes, size))

    @classmethod
    def discrete(cls, size: int) -> EqRel:
        return cls(size, ([x] for x in range(size)))

    def related(self, x: int, y: int) -> bool:
        return any(x in c and y in c for c in self.classes)

    def to_dict(self) -> dict[str, Any]:
        return {"size": self.size, "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> EqRel:
        return cls(int(data["size"]), data["classes"])


@dataclasses.dataclass(frozen=True)
class RepChoice:
    reps: tuple[int, ...]
    others: tuple[int, ...]
    phi: Mapping[int, int]

    def phi_fun(self) -> FinFun:
        """``phi`` as an arrow ``|others| -> |reps|`` indexing both sets in increasing order."""
        position = {x: k for k, x in enumerate(self.reps)}
        return FinFun(len(self.others), len(self.reps), (position[self.phi[x]] for x in self.others))


def respecting_functions(r: EqRel, p: int) -> frozenset[int]:
    """Codes of the functions ``X -> p`` that are constant on every class of ``r``."""
    codes = set()
    for values in itertools.product(range(p), repeat=len(r.classes)):
        digits = [0] * r.size
        for c, v in zip(r.classes, values):
            for x in c:
                digits[x] = v
        codes.add(mr_encode([p] * r.size, digits))
    return frozenset(codes)


def choose_representatives(r: EqRel) -> RepChoice:
    reps = tuple(c[0] for c in r.classes)
    phi = {x: c[0] for c in r.classes for x in c[1:]}
    return RepChoice(reps, tuple(sorted(phi)), phi)


def split_pairs(r: EqRel, p: int, choice: RepChoice | None = None) -> BinRel:
    """Pairs ``(f1, f2)`` of codes on representatives and non-representatives
    whose union is constant on the classes of ``r``."""
    choice = choice or choose_representatives(r)
    k1, k2 = len(choice.reps), len(choice.others)
    pairs = []
    for code in respecting_functions(r, p):
        f = mr_decode([p] * r.size, code)
        f1 = mr_encode([p] * k1, [f[x] for x in choice.reps])
        f2 = mr_encode([p] * k2, [f[x] for x in choice.others])
        pairs.append((f1, f2))
    return BinRel(p ** k1, p ** k2, pairs)


def exp_functor(p: int, f: FinFun) -> FinFun:
    """``p^f``: sends the code of ``g: B -> p`` to the code of ``g . f: A -> p``."""
    if p < 1:
        raise OutOfRange(f"exponent base {p} must be at least 1")
    table = []
    for code in range(p ** f.tgt):
        g = mr_decode([p] * f.tgt, code)
        table.append(mr_encode([p] * f.src, [g[x] for x in f.table]))
    return FinFun(p ** f.tgt, p ** f.src, table)


def subset_code(size: int, elements: Iterable[int]) -> int:
    code = 0
    for x in set(elements):
        if not 0 <= x < size:
            raise OutOfRange(f"element {x} is outside {size}")
        code |= 1 << (size - 1 - x)
    return code


def subset_from_code(size: int, code: int) -> frozenset[int]:
    if not 0 <= code < 2 ** size:
        raise OutOfRange(f"subset code {code} is outside 2^{size}")
    return frozenset(x for x in range(size) if code >> (size - 1 - x) & 1)


def powerset_functor(f: FinFun) -> FinFun:
    """Inverse image under ``f``, acting on subset codes."""
    table = []
    for code in range(2 ** f.tgt):
        y = subset_from_code(f.tgt, code)
        table.append(subset_code(f.src, (a for a in range(f.src) if f(a) in y)))
    return FinFun(2 ** f.tgt, 2 ** f.src, table)


def direct_image(f: FinFun, subset: int) -> int:
    return subset_code(f.tgt, (f(a) for a in subset_from_code(f.src, subset)))
