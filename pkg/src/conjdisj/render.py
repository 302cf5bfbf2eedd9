"""Two-row pictures of functions and split equivalences, as text or Graphviz DOT.

Sources sit on the top row and targets on the bottom row, as in the usual
drawings of arrows between finite ordinals.
"""

from __future__ import annotations

import string

from .finfun import FinFun
from .gen import SplitEq


def _row(label: str, cells: list[str], width: int) -> str:
    return f"{label:<8}" + " ".join(c.rjust(width) for c in cells).rstrip()


def finfun_text(f: FinFun) -> str:
    width = len(str(max(f.src, f.tgt, 1) - 1))
    lines = [
        f"{f.src} -> {f.tgt}",
        _row("source", [str(i) for i in range(f.src)], width),
        _row("", ["|"] * f.src, width),
        _row("to", [str(x) for x in f.table], width),
        _row("target", [str(j) for j in range(f.tgt)], width),
    ]
    return "\n".join(line.rstrip() for line in lines)


def _class_names(count: int) -> list[str]:
    letters = string.ascii_lowercase
    if count <= len(letters):
        return list(letters[:count])
    return [f"c{k}" for k in range(count)]


def spliteq_text(r: SplitEq) -> str:
    """Each position shows the name of its class, so related positions share a name."""
    names = _class_names(len(r.classes))
    index = r.class_index()
    width = max(len(n) for n in names) if names else 1
    width = max(width, len(str(max(r.src, r.tgt, 1) - 1)))
    lines = [
        f"{r.src} -> {r.tgt}",
        _row("", [str(i) for i in range(r.src)], width),
        _row("source", [names[index[x]] for x in range(r.src)], width),
        _row("target", [names[index[r.src + j]] for j in range(r.tgt)], width),
        _row("", [str(j) for j in range(r.tgt)], width),
    ]
    return "\n".join(line.rstrip() for line in lines)


def _ranks(src: int, tgt: int) -> list[str]:
    lines = []
    if src:
        nodes = " ".join(f"s{i}" for i in range(src))
        lines.append(f"  {{ rank=source; {nodes}; }}")
    if tgt:
        nodes = " ".join(f"t{j}" for j in range(tgt))
        lines.append(f"  {{ rank=sink; {nodes}; }}")
    for i in range(src):
        lines.append(f'  s{i} [label="{i}"];')
    for j in range(tgt):
        lines.append(f'  t{j} [label="{j}"];')
    return lines


def finfun_dot(f: FinFun, name: str = "finfun") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    lines += _ranks(f.src, f.tgt)
    lines += [f"  s{i} -> t{x};" for i, x in enumerate(f.table)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def spliteq_dot(r: SplitEq, name: str = "spliteq") -> str:
    def node(x: int) -> str:
        return f"s{x}" if x < r.src else f"t{x - r.src}"

    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += _ranks(r.src, r.tgt)
    for c in r.classes:
        for x, y in zip(c, c[1:]):
            lines.append(f"  {node(x)} -- {node(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
