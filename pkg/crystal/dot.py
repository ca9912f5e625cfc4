"""Graphviz DOT export of B_μ restricted to chosen colors."""

from __future__ import annotations

from typing import List, Optional, Sequence

from models.exceptions import InvalidInputError

from .highest_weight import tensor_crystal
from .tensor import word_str


def crystal_dot(family: str, n: int, shape: Sequence[int], colors: Optional[Sequence[int]] = None) -> str:
    crystal = tensor_crystal(family, n)
    use = tuple(colors) if colors else crystal.colors
    for i in use:
        if i not in crystal.colors:
            raise InvalidInputError(f"Color {i} is not valid for {family}{n}; valid: {crystal.colors}")
    vertices = list(crystal.vertices(shape))
    lines: List[str] = [f'digraph "B_{",".join(map(str, shape))}^{family}{n}" {{']
    for v in vertices:
        lines.append(f'  "{word_str(v)}";')
    for v in vertices:
        for i in use:
            w = crystal.f(v, i)
            if w is not None:
                lines.append(f'  "{word_str(v)}" -> "{word_str(w)}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
