"""Proof terms for disjunctive and conjunctive deductions, and their semantics."""

from . import conj, disj
from .conj import ConjObj, ConjTerm, format_obj, infer_type_conj
from .disj import DisjTerm, infer_type_disj
from .parser import parse_conj, parse_disj, parse_obj
from .semantics import (
    conj_to_disj,
    eq_conj,
    eq_disj,
    eval_F,
    eval_G,
    eval_H,
    eval_H_via_gen,
    jg,
    normalize_obj,
    obj_code,
    synth_disj,
)

__all__ = [
    "ConjObj", "ConjTerm", "DisjTerm", "conj", "conj_to_disj", "disj", "eq_conj",
    "eq_disj", "eval_F", "eval_G", "eval_H", "eval_H_via_gen", "format_obj",
    "infer_type_conj", "infer_type_disj", "jg", "normalize_obj", "obj_code",
    "parse_conj", "parse_disj", "parse_obj", "synth_disj",
]
