"""Semantic functors on terms, the fullness synthesis, and the translation.

* ``eval_F`` sends a disjunctive term to its finite function (letter -> 1).
* ``eval_H`` sends a conjunctive term to a finite function, the letter
  ``p_n`` going to the ``n``-th prime.
* ``eval_G`` sends a conjunctive term to the opposite category, every
  letter going to 1; ``jg`` pushes that on to split equivalences, and
  ``eval_H_via_gen`` recovers ``eval_H`` from it through the Brauerian
  representation with prime radices.

Equality of terms is decided by comparing these images.
"""

from __future__ import annotations

import math

from .. import finfun as ff
from ..brauer import appropriate, f_ab_fun, nth_prime
from ..errors import InternalInvariantViolation, TypeMismatch
from ..finfun import FinFun
from ..gen import SplitEq, j_of
from . import conj, disj
from .conj import ConjObj, ConjTerm, format_obj, infer_type_conj
from .disj import DisjTerm, infer_type_disj


def normalize_obj(obj: ConjObj) -> ConjObj:
    return tuple(sorted(obj))


def obj_code(obj: ConjObj) -> int:
    """Product of the primes indexed by ``obj`` (1 for the empty object)."""
    return math.prod(nth_prime(i) for i in obj)


# -- disjunctive side --------------------------------------------------------

def _eval_F(t: DisjTerm) -> FinFun:
    if isinstance(t, disj.Id):
        return ff.identity(t.n)
    if isinstance(t, disj.Kappa):
        return ff.kappa(t.n)
    if isinstance(t, disj.In1):
        return ff.inj1(t.n, t.m)
    if isinstance(t, disj.In2):
        return ff.inj2(t.n, t.m)
    if isinstance(t, disj.Fold):
        return ff.codiag(t.n)
    if isinstance(t, disj.Seq):
        return ff.compose(_eval_F(t.second), _eval_F(t.first))
    if isinstance(t, disj.Sum):
        return ff.sum(_eval_F(t.left), _eval_F(t.right))
    if isinstance(t, disj.Case):
        return ff.bracket(_eval_F(t.left), _eval_F(t.right))
    raise TypeError(f"not a disjunctive term: {t!r}")


def eval_F(t: DisjTerm) -> FinFun:
    infer_type_disj(t)
    return _eval_F(t)


def synth_disj(f: FinFun) -> DisjTerm:
    """A term built from identities, empty maps, injections, sequencing and
    case analysis whose image under ``eval_F`` is ``f``.

    Works by induction on the source, splitting off the last element.
    """
    n, m = f.src, f.tgt
    if n == 0:
        return disj.Kappa(m)
    if n == 1:
        i = f(0)
        if m == 1:
            return disj.Id(1)
        if i == 0:
            return disj.In1(1, m - 1)
        if i == m - 1:
            return disj.In2(m - 1, 1)
        # 1 -> m - i -> m, landing on i
        return disj.Seq(disj.In1(1, m - i - 1), disj.In2(i, m - i))
    head = FinFun(n - 1, m, f.table[:-1])
    last = FinFun(1, m, f.table[-1:])
    return disj.Case(synth_disj(head), synth_disj(last))


def eq_disj(t1: DisjTerm, t2: DisjTerm) -> bool:
    ty1, ty2 = infer_type_disj(t1), infer_type_disj(t2)
    if ty1 != ty2:
        raise TypeMismatch(f"cannot compare {t1}: {ty1[0]} -> {ty1[1]} with {t2}: {ty2[0]} -> {ty2[1]}")
    return _eval_F(t1) == _eval_F(t2)


# -- conjunctive side --------------------------------------------------------

def _eval_H(t: ConjTerm) -> FinFun:
    if isinstance(t, conj.Id):
        return ff.identity(obj_code(t.obj))
    if isinstance(t, conj.Bang):
        return ff.bang(obj_code(t.obj))
    if isinstance(t, conj.Pr1):
        return ff.proj1(obj_code(t.left), obj_code(t.right))
    if isinstance(t, conj.Pr2):
        return ff.proj2(obj_code(t.left), obj_code(t.right))
    if isinstance(t, conj.Dup):
        return ff.diag(obj_code(t.obj))
    if isinstance(t, conj.Seq):
        return ff.compose(_eval_H(t.second), _eval_H(t.first))
    if isinstance(t, conj.Prod):
        return ff.prod(_eval_H(t.left), _eval_H(t.right))
    if isinstance(t, conj.Pair):
        return ff.pair(_eval_H(t.left), _eval_H(t.right))
    raise TypeError(f"not a conjunctive term: {t!r}")


def eval_H(t: ConjTerm) -> FinFun:
    infer_type_conj(t)
    return _eval_H(t)


def _eval_G(t: ConjTerm) -> FinFun:
    # arrows land in the opposite category: the FinFun runs target -> source
    if isinstance(t, conj.Id):
        return ff.identity(len(t.obj))
    if isinstance(t, conj.Bang):
        return ff.kappa(len(t.obj))
    if isinstance(t, conj.Pr1):
        return ff.inj1(len(t.left), len(t.right))
    if isinstance(t, conj.Pr2):
        return ff.inj2(len(t.left), len(t.right))
    if isinstance(t, conj.Dup):
        return ff.codiag(len(t.obj))
    if isinstance(t, conj.Seq):
        return ff.compose(_eval_G(t.first), _eval_G(t.second))
    if isinstance(t, conj.Prod):
        return ff.sum(_eval_G(t.left), _eval_G(t.right))
    if isinstance(t, conj.Pair):
        return ff.bracket(_eval_G(t.left), _eval_G(t.right))
    raise TypeError(f"not a conjunctive term: {t!r}")


def eval_G(t: ConjTerm) -> FinFun:
    """The underlying function ``|target(t)| -> |source(t)|`` of the image of ``t``."""
    infer_type_conj(t)
    return _eval_G(t)


def jg(t: ConjTerm) -> SplitEq:
    return j_of(eval_G(t))


def eval_H_via_gen(t: ConjTerm) -> FinFun:
    src, tgt = infer_type_conj(t)
    a = [nth_prime(i) for i in src]
    b = [nth_prime(i) for i in tgt]
    r = j_of(_eval_G(t))
    if not appropriate(a, b, r):
        raise InternalInvariantViolation(
            f"prime radices {format_obj(src)} -> {format_obj(tgt)} are not appropriate for {r!r}"
        )
    return f_ab_fun(a, b, r)


def eq_conj(t1: ConjTerm, t2: ConjTerm) -> bool:
    ty1, ty2 = infer_type_conj(t1), infer_type_conj(t2)
    if ty1 != ty2:
        raise TypeMismatch(
            f"cannot compare {t1}: {format_obj(ty1[0])} -> {format_obj(ty1[1])} "
            f"with {t2}: {format_obj(ty2[0])} -> {format_obj(ty2[1])}"
        )
    return _eval_H(t1) == _eval_H(t2)


def conj_to_disj(t: ConjTerm) -> DisjTerm:
    """A disjunctive term denoting the same finite function as ``t`` under ``eval_H``."""
    return synth_disj(eval_H(t))
