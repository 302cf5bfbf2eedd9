"""Batch command-line front end.

Exit status is 0 on success (including an "unequal" verdict), 1 on domain
errors such as ill-typed terms, parse errors or malformed input files, and 2
on usage errors.  Every term or JSON argument may also name a file, whose
contents are used instead.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence, TextIO

from . import render
from .brauer import BinRel, appropriate, f_ab_rel, nth_prime
from .errors import CalculusError, NotAFunction
from .finfun import FinFun
from .gen import SplitEq, se_compose
from .syntax import (
    conj_to_disj,
    eq_conj,
    eq_disj,
    eval_F,
    eval_H,
    format_obj,
    infer_type_conj,
    infer_type_disj,
    parse_conj,
    parse_disj,
)


class InputError(CalculusError):
    pass


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"))


def read_arg(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def load_json(arg: str, what: str) -> dict[str, Any]:
    text = read_arg(arg)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} {arg!r} is neither a file nor valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{what} {arg!r} must be a JSON object")
    return data


def load_finfun(arg: str) -> FinFun:
    data = load_json(arg, "function")
    try:
        return FinFun.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"function {arg!r} is malformed: {exc}") from None


def load_spliteq(arg: str) -> SplitEq:
    data = load_json(arg, "split equivalence")
    try:
        return SplitEq.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"split equivalence {arg!r} is malformed: {exc}") from None


def parse_radices(arg: str) -> list[int]:
    text = read_arg(arg).replace(",", " ")
    try:
        radices = [int(x) for x in text.split()]
    except ValueError:
        raise InputError(f"radices {arg!r} must be whitespace-separated integers") from None
    for d in radices:
        if d < 2:
            raise InputError(f"radix {d} in {arg!r} is below 2")
    return radices


def show_finfun(f: FinFun, fmt: str) -> str:
    if fmt == "json":
        return dumps(f.to_dict())
    if fmt == "dot":
        return render.finfun_dot(f).rstrip("\n")
    return f"{f.src} -> {f.tgt}: {list(f.table)}"


def show_spliteq(r: SplitEq, fmt: str) -> str:
    if fmt == "json":
        return dumps(r.to_dict())
    if fmt == "dot":
        return render.spliteq_dot(r).rstrip("\n")
    body = " ".join("{" + ",".join(map(str, c)) + "}" for c in r.classes)
    return f"{r.src} -> {r.tgt}: {body}"


def show_pairs(rel: BinRel) -> str:
    return " ".join(f"({i},{j})" for i, j in sorted(rel.pairs))


# -- subcommands -------------------------------------------------------------

def cmd_eval_disj(args, out: TextIO) -> int:
    f = eval_F(parse_disj(read_arg(args.term)))
    print(show_finfun(f, args.format), file=out)
    return 0


def cmd_eval_conj(args, out: TextIO) -> int:
    f = eval_H(parse_conj(read_arg(args.term)))
    print(show_finfun(f, args.format), file=out)
    return 0


def _verdict(equal: bool, fmt: str) -> str:
    word = "equal" if equal else "unequal"
    return dumps({"verdict": word}) if fmt == "json" else word


def cmd_eq_disj(args, out: TextIO) -> int:
    t1, t2 = parse_disj(read_arg(args.term1)), parse_disj(read_arg(args.term2))
    print(_verdict(eq_disj(t1, t2), args.format), file=out)
    return 0


def cmd_eq_conj(args, out: TextIO) -> int:
    t1, t2 = parse_conj(read_arg(args.term1)), parse_conj(read_arg(args.term2))
    print(_verdict(eq_conj(t1, t2), args.format), file=out)
    return 0


def cmd_synth(args, out: TextIO) -> int:
    from .syntax import synth_disj

    f = load_finfun(args.finfun)
    term = synth_disj(f)
    if args.format == "json":
        print(dumps({"term": str(term), "src": f.src, "tgt": f.tgt}), file=out)
    else:
        print(term, file=out)
    return 0


def cmd_translate(args, out: TextIO) -> int:
    term = parse_conj(read_arg(args.term))
    src, tgt = infer_type_conj(term)
    h = eval_H(term)
    image = conj_to_disj(term)
    f = eval_F(image)
    if f != h:
        raise CalculusError(f"translation of {term} denotes {f!r}, expected {h!r}")
    n, m = infer_type_disj(image)
    if args.format == "json":
        print(dumps({
            "term": str(term),
            "type": [format_obj(src), format_obj(tgt)],
            "disj": str(image),
            "disj_type": [n, m],
            "H": h.to_dict(),
            "F": f.to_dict(),
            "check": "OK",
        }), file=out)
    else:
        print(f"conjunctive: {term} : {format_obj(src)} -> {format_obj(tgt)}", file=out)
        print(f"disjunctive: {image} : {n} -> {m}", file=out)
        print(f"H(term)  = {show_finfun(h, 'text')}", file=out)
        print(f"F(image) = {show_finfun(f, 'text')}", file=out)
        print("F(image) = H(term): OK", file=out)
    return 0


def cmd_gen_compose(args, out: TextIO) -> int:
    r, s = load_spliteq(args.r), load_spliteq(args.s)
    print(show_spliteq(se_compose(s, r), args.format), file=out)
    return 0


def cmd_represent(args, out: TextIO) -> int:
    a, b = parse_radices(args.a), parse_radices(args.b)
    r = load_spliteq(args.r)
    ok = appropriate(a, b, r)
    rel = f_ab_rel(a, b, r)
    try:
        fun, problem = rel.to_fun(), None
    except NotAFunction as exc:
        fun, problem = None, exc
    if args.format == "json":
        data: dict[str, Any] = {
            "appropriate": ok,
            "function": fun.to_dict() if fun else None,
            "relation": rel.to_dict(),
        }
        if problem is not None:
            data["witness"] = {"source": problem.source, "images": problem.image_count}
        print(dumps(data), file=out)
        return 0
    head = "appropriate" if ok else "not appropriate"
    if fun is not None:
        print(f"{head}; function {show_finfun(fun, 'text')}", file=out)
    else:
        print(f"{head}; {problem}", file=out)
        print(f"pairs {rel.src} -> {rel.tgt}: {show_pairs(rel)}", file=out)
    return 0


def cmd_primes(args, out: TextIO) -> int:
    if args.count < 0:
        raise InputError(f"prime count {args.count} is negative")
    primes = [nth_prime(i) for i in range(1, args.count + 1)]
    if args.format == "json":
        print(dumps(primes), file=out)
    else:
        print(" ".join(map(str, primes)), file=out)
    return 0


def cmd_render(args, out: TextIO) -> int:
    fmt = "dot" if args.format == "dot" else "text"
    if args.kind == "finfun":
        f = load_finfun(args.file)
        text = render.finfun_dot(f) if fmt == "dot" else render.finfun_text(f) + "\n"
    else:
        r = load_spliteq(args.file)
        text = render.spliteq_dot(r) if fmt == "dot" else render.spliteq_text(r) + "\n"
    out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjdisj",
        description="Decide equality of proof terms and translate conjunctive deductions "
        "into one-letter disjunctive ones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "dot"), default="text")

    def add(name, func, help_, *positional):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        for arg, arg_help in positional:
            p.add_argument(arg, help=arg_help)
        p.set_defaults(func=func)
        return p

    add("eval-disj", cmd_eval_disj, "finite function of a disjunctive term", ("term", "term or file"))
    add("eval-conj", cmd_eval_conj, "finite function of a conjunctive term (letters to primes)",
        ("term", "term or file"))
    add("eq-disj", cmd_eq_disj, "compare two disjunctive terms",
        ("term1", "term or file"), ("term2", "term or file"))
    add("eq-conj", cmd_eq_conj, "compare two conjunctive terms",
        ("term1", "term or file"), ("term2", "term or file"))
    add("synth", cmd_synth, "disjunctive term denoting a function", ("finfun", "FinFun JSON or file"))
    add("translate", cmd_translate, "translate a conjunctive term to a disjunctive one",
        ("term", "term or file"))
    add("gen-compose", cmd_gen_compose, "compose split equivalences R then S",
        ("r", "SplitEq JSON or file"), ("s", "SplitEq JSON or file"))
    add("represent", cmd_represent, "Brauerian representation of a split equivalence",
        ("a", "source radices, e.g. '3 2 2'"), ("b", "target radices"),
        ("r", "SplitEq JSON or file"))
    p = add("primes", cmd_primes, "list the first N primes")
    p.add_argument("count", type=int, metavar="N")
    p = add("render", cmd_render, "draw a function or split equivalence")
    p.add_argument("kind", choices=("finfun", "spliteq"))
    p.add_argument("file", help="JSON or file")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CalculusError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
