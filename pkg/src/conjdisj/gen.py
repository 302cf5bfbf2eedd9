"""Split equivalences: partitions of a source ordinal stacked on a target ordinal.

Positions ``0..n-1`` are the source (drawn on top), ``n..n+m-1`` the target.
Composition glues the target of one arrow to the source of the next, closes
under equivalence and forgets the middle row.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Iterable, Iterator

from .errors import TypeMismatch
from .finfun import FinFun


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller element as root so roots are class minima
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def canonical_partition(classes: Iterable[Iterable[int]], size: int) -> tuple[tuple[int, ...], ...]:
    """Sort each class and order classes by least element; check it covers ``range(size)``."""
    result = sorted(tuple(sorted(c)) for c in classes)
    seen = [x for c in result for x in c]
    if any(not c for c in result):
        raise ValueError("partition has an empty class")
    if sorted(seen) != list(range(size)):
        raise ValueError(f"classes {result} do not partition {{0..{size - 1}}}")
    return tuple(result)


@dataclasses.dataclass(frozen=True)
class SplitEq:
    src: int
    tgt: int
    classes: tuple[tuple[int, ...], ...]

    def __init__(self, src: int, tgt: int, classes: Iterable[Iterable[int]]):
        if src < 0 or tgt < 0:
            raise ValueError(f"ordinals must be non-negative, got {src} -> {tgt}")
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "tgt", tgt)
        object.__setattr__(self, "classes", canonical_partition(classes, src + tgt))

    @property
    def size(self) -> int:
        return self.src + self.tgt

    def class_index(self) -> list[int]:
        """``class_index()[x]`` is the number of the class containing position ``x``."""
        index = [0] * self.size
        for k, c in enumerate(self.classes):
            for x in c:
                index[x] = k
        return index

    def related(self, x: int, y: int) -> bool:
        index = self.class_index()
        return index[x] == index[y]

    def __repr__(self) -> str:
        body = ",".join("{" + ",".join(map(str, c)) + "}" for c in self.classes)
        return f"SplitEq({self.src}->{self.tgt}, {{{body}}})"

    def to_dict(self) -> dict[str, Any]:
        return {"src": self.src, "tgt": self.tgt, "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SplitEq:
        return cls(int(data["src"]), int(data["tgt"]), data["classes"])


def se_identity(n: int) -> SplitEq:
    return SplitEq(n, n, ((i, i + n) for i in range(n)))


def se_compose(s: SplitEq, r: SplitEq) -> SplitEq:
    """``s . r`` for ``r: n -> m`` and ``s: m -> p``."""
    if r.tgt != s.src:
        raise TypeMismatch(f"cannot compose {s!r} after {r!r}: {r.tgt} != {s.src}")
    n, m, p = r.src, r.tgt, s.tgt
    uf = UnionFind(n + m + p)
    # r lives on 0..n+m-1; s is shifted by n so its source is r's target row
    for c in r.classes:
        for x in c[1:]:
            uf.union(c[0], x)
    for c in s.classes:
        for x in c[1:]:
            uf.union(c[0] + n, x + n)

    def outer(x: int) -> int | None:
        if x < n:
            return x
        if x >= n + m:
            return x - m
        return None

    classes = []
    for c in uf.classes():
        kept = [y for y in map(outer, c) if y is not None]
        if kept:
            classes.append(kept)
    return SplitEq(n, p, classes)


def j_of(f: FinFun) -> SplitEq:
    """Image of ``f: m -> n``, read as an arrow ``n -> m`` of the opposite category."""
    n = f.tgt
    classes = [[i] for i in range(n)]
    for j, i in enumerate(f.table):
        classes[i].append(n + j)
    return SplitEq(n, f.src, classes)


def set_partitions(size: int) -> Iterator[list[list[int]]]:
    """All partitions of ``range(size)`` (restricted growth strings)."""
    if size == 0:
        yield []
        return
    for rest in set_partitions(size - 1):
        last = size - 1
        for k in range(len(rest)):
            yield rest[:k] + [rest[k] + [last]] + rest[k + 1:]
        yield rest + [[last]]


def all_split_equivalences(n: int, m: int) -> Iterator[SplitEq]:
    for classes in set_partitions(n + m):
        yield SplitEq(n, m, classes)
