"""Seeded generators of well-typed random terms, for property sweeps."""

from __future__ import annotations

import random

from . import conj, disj
from .conj import ConjObj, ConjTerm, infer_type_conj
from .disj import DisjTerm, infer_type_disj


def random_conj_obj(rng: random.Random, max_len: int = 3, generators: int = 4) -> ConjObj:
    return tuple(rng.randint(1, generators) for _ in range(rng.randint(0, max_len)))


def _conj_leaf(rng: random.Random, src: ConjObj, max_len: int) -> ConjTerm:
    choices = ["id", "bang", "pr1", "pr2"]
    if 2 * len(src) <= max_len:
        choices.append("dup")
    kind = rng.choice(choices)
    if kind == "id":
        return conj.Id(src)
    if kind == "bang":
        return conj.Bang(src)
    if kind == "dup":
        return conj.Dup(src)
    k = rng.randint(0, len(src))
    cls = conj.Pr1 if kind == "pr1" else conj.Pr2
    return cls(src[:k], src[k:])


def random_conj_term(rng: random.Random, src: ConjObj, depth: int, max_len: int = 4) -> ConjTerm:
    """A random term with source ``src``, nesting depth at most ``depth``,
    and no intermediate object longer than ``max_len``."""
    if depth <= 0 or rng.random() < 0.25:
        return _conj_leaf(rng, src, max_len)
    kind = rng.choice(["seq", "prod", "pair"])
    if kind == "seq":
        first = random_conj_term(rng, src, depth - 1, max_len)
        _, mid = infer_type_conj(first)
        return conj.Seq(first, random_conj_term(rng, mid, depth - 1, max_len))
    if kind == "prod":
        k = rng.randint(0, len(src))
        left = random_conj_term(rng, src[:k], depth - 1, max_len)
        right = random_conj_term(rng, src[k:], depth - 1, max_len)
        term: ConjTerm = conj.Prod(left, right)
    else:
        term = conj.Pair(
            random_conj_term(rng, src, depth - 1, max_len),
            random_conj_term(rng, src, depth - 1, max_len),
        )
    if len(infer_type_conj(term)[1]) > max_len:
        return _conj_leaf(rng, src, max_len)
    return term


def conj_corpus(seed: int, count: int, depth: int = 4, generators: int = 4) -> list[ConjTerm]:
    rng = random.Random(seed)
    return [
        random_conj_term(rng, random_conj_obj(rng, 3, generators), depth)
        for _ in range(count)
    ]


def _disj_leaf(rng: random.Random, src: int, max_obj: int) -> DisjTerm:
    choices = ["id", "in1", "in2"]
    if src == 0:
        choices.append("kappa")
    if src % 2 == 0 and src > 0:
        choices.append("fold")
    kind = rng.choice(choices)
    extra = rng.randint(0, max(0, max_obj - src))
    if kind == "id":
        return disj.Id(src)
    if kind == "kappa":
        return disj.Kappa(rng.randint(0, max_obj))
    if kind == "fold":
        return disj.Fold(src // 2)
    if kind == "in1":
        return disj.In1(src, extra)
    return disj.In2(extra, src)


def _retarget(rng: random.Random, d: int, c: int) -> DisjTerm:
    """Some term ``d -> c`` (requires ``c > 0`` or ``d == 0``)."""
    if d == 0:
        return disj.Kappa(c)
    if c == 1:
        head = disj.Id(1)
    else:
        head = rng.choice([disj.In1(1, c - 1), disj.In2(c - 1, 1)])
    if d == 1:
        return head
    return disj.Case(_retarget(rng, d - 1, c), head)


def random_disj_term(rng: random.Random, src: int, depth: int, max_obj: int = 5) -> DisjTerm:
    """A random term with source ``src`` and objects no larger than ``max_obj``."""
    if depth <= 0 or rng.random() < 0.25:
        return _disj_leaf(rng, src, max_obj)
    kind = rng.choice(["seq", "sum", "case"])
    if kind == "seq":
        first = random_disj_term(rng, src, depth - 1, max_obj)
        _, mid = infer_type_disj(first)
        return disj.Seq(first, random_disj_term(rng, mid, depth - 1, max_obj))
    k = rng.randint(0, src)
    left = random_disj_term(rng, k, depth - 1, max_obj)
    right = random_disj_term(rng, src - k, depth - 1, max_obj)
    _, c = infer_type_disj(left)
    _, d = infer_type_disj(right)
    if kind == "case" and (c > 0 or d == 0):
        if d != c:
            right = disj.Seq(right, _retarget(rng, d, c))
        return disj.Case(left, right)
    term: DisjTerm = disj.Sum(left, right)
    if c + d > max_obj:
        return _disj_leaf(rng, src, max_obj)
    return term
