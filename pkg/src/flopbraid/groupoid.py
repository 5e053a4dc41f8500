"""The Deligne groupoid of a simplicial arrangement, by generators and relations.

Only the codimension-two relations are materialized: around each
codimension-two face the 2m chambers form a cycle, and from every chamber on
it the two ways round to the opposite chamber are identified.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import exact
from .arrangement import Arrangement, Chamber, adjacency, chambers, codim2_faces, separating


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    wall: int  # index of the hyperplane crossed


@dataclass
class X1Graph:
    arrangement: Arrangement
    chambers: list[Chamber]
    arrows: list[Arrow]

    def __post_init__(self):
        self._index = {(a.source, a.target): k for k, a in enumerate(self.arrows)}
        self._out: dict[int, list[int]] = {v: [] for v in range(len(self.chambers))}
        for k, a in enumerate(self.arrows):
            self._out[a.source].append(k)

    def arrow(self, source: int, target: int) -> int:
        return self._index[(source, target)]

    def out_arrows(self, v: int) -> list[int]:
        return self._out[v]

    def reverse(self, k: int) -> int:
        a = self.arrows[k]
        return self._index[(a.target, a.source)]


@dataclass(frozen=True)
class PositivePath:
    source: int
    target: int
    arrows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class RelationPair:
    left: PositivePath
    right: PositivePath
    members: tuple[int, ...]  # hyperplanes through the codimension-two face

    @property
    def length(self) -> int:
        return len(self.left)


def build_x1(a: Arrangement, chamber_list: Sequence[Chamber] | None = None) -> X1Graph:
    chamber_list = list(chamber_list) if chamber_list is not None else chambers(a)
    g = adjacency(a, chamber_list)
    arrows = []
    for u, v, data in g.edges(data=True):
        arrows.append(Arrow(u, v, data["wall"]))
        arrows.append(Arrow(v, u, data["wall"]))
    arrows.sort(key=lambda x: (x.source, x.target))
    return X1Graph(a, chamber_list, arrows)


def path_from_vertices(x1: X1Graph, vertices: Sequence[int]) -> PositivePath:
    arrows = tuple(x1.arrow(u, v) for u, v in zip(vertices, vertices[1:]))
    return PositivePath(vertices[0], vertices[-1], arrows)


def minimal_positive_paths(x1: X1Graph, c1: int, c2: int) -> list[PositivePath]:
    """Every positive path from c1 to c2 crossing each separating hyperplane once."""
    target = x1.chambers[c2]

    def dist(v):
        return len(separating(x1.chambers[v], target))

    out = []

    def walk(v, trail):
        if v == c2:
            out.append(PositivePath(c1, c2, tuple(trail)))
            return
        here = dist(v)
        for k in x1.out_arrows(v):
            w = x1.arrows[k].target
            if dist(w) == here - 1:
                trail.append(k)
                walk(w, trail)
                trail.pop()

    walk(c1, [])
    return out


def shortest_positive_length(x1: X1Graph, c1: int, c2: int) -> int:
    """Breadth-first search over positive paths; independent of the sign-vector count."""
    seen = {c1: 0}
    queue = deque([c1])
    while queue:
        v = queue.popleft()
        if v == c2:
            return seen[v]
        for k in x1.out_arrows(v):
            w = x1.arrows[k].target
            if w not in seen:
                seen[w] = seen[v] + 1
                queue.append(w)
    raise ValueError("chambers are not connected")


def codim2_relations(a: Arrangement, x1: X1Graph | None = None) -> list[RelationPair]:
    if x1 is None:
        x1 = build_x1(a)
    out = []
    for face in codim2_faces(a, x1.chambers):
        cyc = face.chambers
        size = len(cyc)
        m = face.wall.multiplicity
        if size != 2 * m:
            raise ValueError(f"face with {m} hyperplanes is surrounded by {size} chambers")
        for p in range(size):
            forward = [cyc[(p + s) % size] for s in range(m + 1)]
            backward = [cyc[(p - s) % size] for s in range(m + 1)]
            out.append(RelationPair(path_from_vertices(x1, forward),
                                    path_from_vertices(x1, backward),
                                    face.wall.members))
    return out


def _compose(assignment: Mapping[int, Sequence[Sequence]], path: PositivePath, n: int):
    m = exact.identity(n)
    for k in path.arrows:
        m = exact.matmul(m, assignment[k])
    return m


def check_representation(x1: X1Graph, relations: Sequence[RelationPair],
                         assignment: Mapping[int, Sequence[Sequence]]) -> bool:
    """Do both sides of every relation compose to the same matrix?

    Arrows compose left to right: the value of ``a1 a2`` is A(a1) @ A(a2).
    """
    if not assignment:
        return True
    n = len(next(iter(assignment.values())))
    for k in range(len(x1.arrows)):
        if k not in assignment:
            raise ValueError(f"arrow {k} has no assigned value")
        if exact.rank(assignment[k]) != n:
            raise ValueError(f"arrow {k} is assigned a non-invertible matrix")
    return all(_compose(assignment, r.left, n) == _compose(assignment, r.right, n)
               for r in relations)


def tracking_assignment(x1: X1Graph, atlas) -> dict[int, tuple]:
    """Arrow u -> v gets the involution crossing from u's frame into v's."""
    from .tracking import tracking_map

    n = x1.arrangement.dim
    where = {c.signs: i for i, c in enumerate(x1.chambers)}
    out = {}
    for chamber in atlas.chambers.values():
        u = where[chamber.signs]
        for target, data, _ in chamber.exits.values():
            out[x1.arrow(u, where[target])] = tracking_map(data, n).matrix
    return out


@dataclass
class Presentation:
    base: int
    generators: list[int]  # arrow indices
    tree: list[int]  # arrows trivialized by the spanning tree
    relators: list[tuple[tuple[int, int], ...]]  # (generator position, +-1) letters

    def abelianization_rank(self) -> int:
        rows = []
        for rel in self.relators:
            row = [0] * len(self.generators)
            for g, e in rel:
                row[g] += e
            rows.append(row)
        return len(self.generators) - (exact.rank(rows) if rows else 0)


def _free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def vertex_group_presentation(a: Arrangement, base: int = 0, x1: X1Graph | None = None,
                              relations: Sequence[RelationPair] | None = None) -> Presentation:
    if x1 is None:
        x1 = build_x1(a)
    if relations is None:
        relations = codim2_relations(a, x1)
    tree = []
    seen = {base}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for k in x1.out_arrows(v):
            w = x1.arrows[k].target
            if w not in seen:
                seen.add(w)
                tree.append(k)
                queue.append(w)
    tree_set = set(tree)
    generators = [k for k in range(len(x1.arrows)) if k not in tree_set]
    pos = {k: i for i, k in enumerate(generators)}

    def rewrite(path: PositivePath, sign: int):
        letters = [(pos[k], sign) for k in path.arrows if k in pos]
        return letters if sign > 0 else letters[::-1]

    relators = []
    for r in relations:
        word = _free_reduce(rewrite(r.left, 1) + rewrite(r.right, -1))
        if word:
            relators.append(word)
    return Presentation(base, generators, sorted(tree), relators)


# --------------------------------------------------------------------------
# export


def to_dot(x1: X1Graph, labels: Mapping[int, str] | None = None) -> str:
    lines = ["digraph X1 {", "  node [shape=circle];"]
    for v, c in enumerate(x1.chambers):
        label = labels.get(v, c.sign_string) if labels else c.sign_string
        lines.append(f'  c{v} [label="{label}", tooltip="{c.sign_string}"];')
    for k, arr in enumerate(x1.arrows):
        lines.append(f'  c{arr.source} -> c{arr.target} [label="{arr.wall}", id="a{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def relations_to_json(x1: X1Graph, relations: Sequence[RelationPair]) -> dict:
    return {
        "arrows": [{"index": k, "source": a.source, "target": a.target, "wall": a.wall}
                   for k, a in enumerate(x1.arrows)],
        "relations": [{"source": r.left.source, "target": r.left.target, "length": r.length,
                       "members": list(r.members), "left": list(r.left.arrows),
                       "right": list(r.right.arrows)} for r in relations],
    }
