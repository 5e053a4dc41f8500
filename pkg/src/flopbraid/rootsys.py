"""Simply-laced Dynkin diagrams and their positive roots.

Vertex numbering used throughout the package:

* ``A_n``: the path ``0 - 1 - ... - (n-1)``.
* ``D_n``: the path ``0 - ... - (n-2)`` with vertex ``n-1`` hanging off
  vertex ``n-3``.  For ``D_4`` this is the star with centre 1.
* ``E_n``: the path ``0 - 1 - ... - (n-2)`` with vertex ``n-1`` hanging off
  vertex 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    edges: frozenset  # frozenset of (i, j) with i < j

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def neighbours(self, v: int) -> list[int]:
        return sorted({j for i, j in self.edges if i == v} | {i for i, j in self.edges if j == v})

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.neighbours(v)) for v in range(self.rank))

    def __str__(self) -> str:
        return self.name


def build_diagram(family: str, rank: int) -> DynkinDiagram:
    family = family.upper()
    if family == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif family == "D" and rank >= 4:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    elif family == "E" and rank in (6, 7, 8):
        edges = [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]
    else:
        raise DiagramError(f"no Dynkin diagram of type {family}{rank}")
    return DynkinDiagram(family, rank, frozenset(edges))


_NAME = re.compile(r"^\s*([ADEade])\s*_?\s*(\d+)\s*$")


def parse_type(name: str) -> DynkinDiagram:
    """``"E6"`` -> the E6 diagram."""
    m = _NAME.match(str(name))
    if not m:
        raise DiagramError(f"unknown diagram type {name!r}")
    return build_diagram(m.group(1), int(m.group(2)))


def all_diagrams(max_rank: int):
    """Every ADE diagram of rank <= max_rank, in a fixed order."""
    for r in range(1, max_rank + 1):
        yield build_diagram("A", r)
    for r in range(4, max_rank + 1):
        yield build_diagram("D", r)
    for r in (6, 7, 8):
        if r <= max_rank:
            yield build_diagram("E", r)


def reflect(diagram: DynkinDiagram, root: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Simple reflection s_i in simple-root coordinates (simply-laced Cartan matrix)."""
    pairing = 2 * root[i] - sum(root[j] for j in diagram.adjacency[i])
    out = list(root)
    out[i] -= pairing
    return tuple(out)


def positive_roots(diagram: DynkinDiagram) -> frozenset[tuple[int, ...]]:
    """Close the simple roots under simple reflections, keep the positive ones.

    The orbit is finite for ADE types, so the search terminates; the bound
    below only guards against a broken diagram.
    """
    n = diagram.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    limit = 10 * n * n + 10
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(n):
                r = reflect(diagram, root, i)
                if r in seen:
                    continue
                if max(abs(c) for c in r) > limit:
                    raise DiagramError(f"{diagram} does not have a finite root system")
                seen.add(r)
                nxt.append(r)
        frontier = nxt
    return frozenset(r for r in seen if all(c >= 0 for c in r))


def height(root) -> int:
    return sum(root)


def highest_root(diagram: DynkinDiagram) -> tuple[int, ...]:
    roots = positive_roots(diagram)
    top = max(roots, key=height)
    if not all(all(a >= b for a, b in zip(top, r)) for r in roots):
        raise DiagramError(f"{diagram} has no coefficientwise maximal root")
    return top


def render(diagram: DynkinDiagram) -> str:
    """ASCII picture of the diagram with vertex indices."""
    n = diagram.rank
    if diagram.family == "A":
        return " - ".join(str(i) for i in range(n))
    spine = n - 1
    hang_on = n - 3 if diagram.family == "D" else 2
    line = " - ".join(str(i) for i in range(spine))
    col = len(" - ".join(str(i) for i in range(hang_on))) + (3 if hang_on else 0)
    return "\n".join([line, " " * col + "|", " " * col + str(n - 1)])
