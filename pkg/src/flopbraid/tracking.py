"""Moduli tracking: the integer wall-crossing involutions and the chamber atlas.

Conventions.  Curves are numbered 1..n.  A composite ``M`` attached to a
chamber maps that chamber's local stability coordinates to the global ones,
``theta = M @ phi``, and sends the local positive orthant onto the chamber.
Crossing local wall ``j`` applies the involution ``T`` on the right,
``M' = M @ T``; for the word ``[1, 2]`` this gives ``T1 @ T2``, i.e. the
parameter is first transformed by the last crossing, as when tracking the
positive chamber of an iterated mutation back to the original algebra.

The local arrangement of a chamber is the global one pulled back through its
composite, ``{l @ M}``.  It is carried along the walk one crossing at a time
and compared at every step with the pullback through the full composite.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import exact
from .arrangement import (
    Arrangement,
    Codim2Wall,
    _chamber_rays,
    chambers,
    codim2_walls,
    is_simplicial,
    restrict_roots,
)
from .contraction import ContractionPoint


class TrackingError(RuntimeError):
    """A runtime invariant of the tracking model failed; ``certificate`` says how."""

    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}


@dataclass(frozen=True)
class ExchangeData:
    J: tuple[int, ...]  # crossed curves, 1-based
    b: Mapping[tuple[int, int], int]  # (j, i) -> multiplicity, j in J, i not in J

    def __post_init__(self):
        if not self.J:
            raise ValueError("J must be nonempty")
        for (j, i), v in self.b.items():
            if j not in self.J or i in self.J:
                raise ValueError(f"b[{j},{i}] is not indexed by J x complement")
            if v < 0 or int(v) != v:
                raise ValueError(f"b[{j},{i}] = {v} is not a nonnegative integer")

    def to_json(self) -> dict:
        return {"J": list(self.J),
                "b": {f"{j},{i}": v for (j, i), v in sorted(self.b.items())}}


@dataclass(frozen=True)
class TrackingMap:
    matrix: tuple[tuple[int, ...], ...]
    J: tuple[int, ...] = ()

    def __call__(self, theta: Sequence) -> tuple:
        return exact.matvec(self.matrix, theta)

    def is_involution(self) -> bool:
        return exact.matmul(self.matrix, self.matrix) == exact.identity(len(self.matrix))


def tracking_map(data: ExchangeData, n: int) -> TrackingMap:
    rows = []
    for i in range(1, n + 1):
        if i in data.J:
            rows.append(tuple(-1 if k == i else 0 for k in range(1, n + 1)))
        else:
            rows.append(tuple(1 if k == i else data.b.get((k, i), 0) if k in data.J else 0
                              for k in range(1, n + 1)))
    return TrackingMap(tuple(rows), tuple(sorted(data.J)))


def pull_back(hyperplanes: Sequence[Sequence[int]], matrix) -> tuple[tuple[int, ...], ...]:
    """The arrangement {l @ matrix}, normalized and sorted."""
    return tuple(sorted({exact.primitive(exact.vecmat(h, matrix)) for h in hyperplanes}))


def derive_exchange_data(local: Sequence[Sequence[int]], j: int) -> ExchangeData:
    """Exchange data for crossing the coordinate wall ``phi_j = 0`` of the local
    positive orthant.

    The adjacent chamber shares the facet spanned by e_i (i != j); its remaining
    ray r has r_j < 0, and the involution must send e_j to r / |r_j|.  Those
    entries are the b_{j,i}; they have to be nonnegative integers.
    """
    local = tuple(tuple(h) for h in local)
    n = len(local[0])
    signs = tuple(-1 if _is_coordinate(h, j) else 1 for h in local)
    rays = _chamber_rays(local, n, signs)
    far = [r for r in rays if r[j - 1] < 0]
    if len(far) != 1 or len(rays) != n:
        raise TrackingError(f"the chamber across wall {j} is not a simplicial neighbour",
                            {"wall": j, "rays": [list(r) for r in rays]})
    (r,) = far
    depth = -r[j - 1]
    b = {}
    for i in range(1, n + 1):
        if i == j:
            continue
        if r[i - 1] % depth or r[i - 1] < 0:
            raise TrackingError(f"crossing wall {j} needs non-integral or negative exchange data",
                                {"wall": j, "ray": list(r)})
        if r[i - 1]:
            b[(j, i)] = r[i - 1] // depth
    return ExchangeData((j,), b)


def _is_coordinate(h, j) -> bool:
    return all((c == 1) if k == j - 1 else (c == 0) for k, c in enumerate(h))


@dataclass
class AtlasChamber:
    signs: tuple[int, ...]
    word: tuple[int, ...]
    composite: tuple[tuple[int, ...], ...]
    local: tuple[tuple[int, ...], ...]
    exits: dict = field(default_factory=dict)  # local wall -> (chamber signs, ExchangeData, global index)


@dataclass
class ChamberAtlas:
    arrangement: Arrangement
    chambers: dict  # signs -> AtlasChamber, in discovery order
    checks: dict

    @property
    def positive(self) -> AtlasChamber:
        return next(iter(self.chambers.values()))

    def by_word(self, word: Sequence[int]) -> AtlasChamber:
        cur = self.positive
        for j in word:
            if j not in cur.exits:
                raise TrackingError(f"wall {j} is not a wall of the chamber reached by {list(cur.word)}")
            cur = self.chambers[cur.exits[j][0]]
        return cur

    def to_json(self) -> dict:
        out = []
        for c in self.chambers.values():
            out.append({
                "signs": "".join("+" if s > 0 else "-" for s in c.signs),
                "word": list(c.word),
                "matrix": [list(r) for r in c.composite],
                "edges": [{"wall": j, "global_hyperplane": g, "to": "".join("+" if s > 0 else "-" for s in t),
                           "exchange": e.to_json()}
                          for j, (t, e, g) in sorted(c.exits.items())],
            })
        return {"arrangement": self.arrangement.to_json(), "chambers": out, "checks": self.checks}


def explore(a: Arrangement) -> ChamberAtlas:
    """Track the positive chamber across coordinate walls until every chamber is reached."""
    n = a.dim
    if not is_simplicial(a):
        raise TrackingError("arrangement is not simplicial")
    for i in range(n):
        if tuple(int(k == i) for k in range(n)) not in a.hyperplanes:
            raise TrackingError(f"coordinate hyperplane theta_{i + 1} missing")
    ident = exact.identity(n)
    start = AtlasChamber(a.sign_vector((1,) * n), (), ident, a.hyperplanes)
    atlas = {start.signs: start}
    queue = deque([start])
    involutions = 0
    while queue:
        cur = queue.popleft()
        for j in range(1, n + 1):
            data = derive_exchange_data(cur.local, j)
            t = tracking_map(data, n)
            if not t.is_involution():
                raise TrackingError("tracking map is not an involution", {"matrix": t.matrix})
            involutions += 1
            comp = exact.matmul(cur.composite, t.matrix)
            stepped = pull_back(cur.local, t.matrix)
            direct = pull_back(a.hyperplanes, comp)
            if stepped != direct:
                raise TrackingError("local arrangement disagrees with the pulled-back global one",
                                    {"word": list(cur.word) + [j], "stepped": stepped, "direct": direct})
            if any(c < 0 for h in direct for c in h):
                raise TrackingError("local positive orthant is not a chamber",
                                    {"word": list(cur.word) + [j]})
            target = a.sign_vector(exact.matvec(comp, (1,) * n))
            if 0 in target:
                raise TrackingError("tracked orthant lands on a wall", {"word": list(cur.word) + [j]})
            crossed = exact.primitive(tuple(exact.inverse(cur.composite)[j - 1]))
            cur.exits[j] = (target, data, a.hyperplanes.index(crossed))
            if target in atlas:
                known = atlas[target]
                if known.composite != comp:
                    raise TrackingError(
                        "composite depends on the path (groupoid representation fails)",
                        {"chamber": target, "word_a": list(known.word),
                         "word_b": list(cur.word) + [j],
                         "matrix_a": known.composite, "matrix_b": comp})
                continue
            nxt = AtlasChamber(target, cur.word + (j,), comp, direct)
            atlas[target] = nxt
            queue.append(nxt)
    expected = len(chambers(a))
    if len(atlas) != expected:
        raise TrackingError(f"tracking reached {len(atlas)} chambers, expected {expected}")
    checks = {
        "chambers": len(atlas),
        "involutions_checked": involutions,
        "path_independent": True,
        "local_arrangements_consistent": True,
        # informational: frames in which the pulled-back arrangement is literally A
        "local_equal_to_global": sum(c.local == a.hyperplanes for c in atlas.values()),
    }
    return ChamberAtlas(a, atlas, checks)


def compose_and_check(atlas: ChamberAtlas, word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Multiply the crossings along ``word`` starting from the positive chamber and
    confirm the result is the atlas composite of the chamber reached."""
    n = atlas.arrangement.dim
    cur = atlas.positive
    m = exact.identity(n)
    for j in word:
        if j not in cur.exits:
            raise TrackingError(f"{j} is not a wall of the chamber reached by {list(cur.word)}")
        target, data, _ = cur.exits[j]
        m = exact.matmul(m, tracking_map(data, n).matrix)
        cur = atlas.chambers[target]
    if m != cur.composite:
        raise TrackingError("composite along the word differs from the atlas",
                            {"word": list(word), "matrix": m, "atlas": cur.composite})
    return m


def check_face_braids(atlas: ChamberAtlas, faces, chamber_list) -> dict:
    """From every chamber around every codimension-two face, walk both ways round
    using that chamber's two local walls through the face.  Both composites of
    length m must agree and land in the same chamber.

    ``faces`` index into ``chamber_list`` (as returned by ``codim2_faces``).
    """
    n = atlas.arrangement.dim
    checked = 0
    failures = []
    for face in faces:
        members = set(face.wall.members)
        m = face.wall.multiplicity
        for idx in face.chambers:
            start = atlas.chambers[chamber_list[idx].signs]
            walls = [j for j, (_, _, g) in start.exits.items() if g in members]
            if len(walls) != 2:
                failures.append({"chamber": list(start.word), "walls": walls})
                continue
            ends = []
            for first, second in (walls, walls[::-1]):
                cur, prod = start, exact.identity(n)
                for j in alternating(first, second, m):
                    target, data, _ = cur.exits[j]
                    prod = exact.matmul(prod, tracking_map(data, n).matrix)
                    cur = atlas.chambers[target]
                ends.append((cur.signs, prod))
            checked += 1
            if ends[0] != ends[1]:
                failures.append({"chamber": list(start.word), "walls": walls, "m": m})
    return {"checked": checked, "failures": failures, "pass": not failures}


def braid_length(a: Arrangement, wall: Codim2Wall) -> int:
    return wall.multiplicity


def alternating(first: int, second: int, length: int) -> tuple[int, ...]:
    return tuple(first if k % 2 == 0 else second for k in range(length))


@dataclass
class TwoCurveReport:
    diagram: str
    white: tuple[int, ...]
    d: int
    words: tuple[tuple[int, ...], tuple[int, ...]]
    kind: str
    composites_agree: bool
    composite: tuple[tuple[int, ...], ...]

    def relation(self) -> str:
        left, right = (" ∘ ".join(f"F{j}" for j in w) for w in self.words)
        return f"{left} ≅ {right}"

    def to_json(self) -> dict:
        return {"diagram": self.diagram, "white": list(self.white), "d": self.d,
                "words": [list(w) for w in self.words], "kind": self.kind,
                "relation": self.relation(), "composites_agree": self.composites_agree,
                "composite": [list(r) for r in self.composite]}


def two_curve_report_for(a: Arrangement, diagram: str = "", white: tuple[int, ...] = ()) -> TwoCurveReport:
    if a.dim != 2:
        raise ValueError("two-curve report needs exactly two curves")
    (wall,) = codim2_walls(a)
    d = braid_length(a, wall)
    atlas = explore(a)
    w1, w2 = alternating(1, 2, d), alternating(2, 1, d)
    m1, m2 = compose_and_check(atlas, w1), compose_and_check(atlas, w2)
    return TwoCurveReport(diagram, white, d, (w1, w2), "product" if d == 2 else "intersecting",
                          m1 == m2, m1)


def two_curve_report(point: ContractionPoint) -> TwoCurveReport:
    if point.n_curves != 2:
        raise ValueError(f"point has {point.n_curves} curves, two expected")
    return two_curve_report_for(restrict_roots(point), point.diagram.name, point.white)


def d_bound_scan(max_rank: int = 8, bound: int = 8) -> dict:
    """Braid length over every 2-element white subset of every ADE diagram of
    rank <= max_rank; violations of d <= bound are reported, never raised."""
    import itertools

    from .contraction import make_point
    from .rootsys import all_diagrams

    if not 1 <= max_rank <= 8:
        raise ValueError("max_rank must lie in 1..8")
    entries = []
    for diagram in all_diagrams(max_rank):
        for pair in itertools.combinations(range(diagram.rank), 2):
            a = restrict_roots(make_point(diagram.name, list(pair)))
            entries.append({"diagram": diagram.name, "white": list(pair), "d": len(a)})
    top = max((e["d"] for e in entries), default=0)
    return {
        "max_rank": max_rank,
        "entries": entries,
        "max_d": top,
        "argmax": [e for e in entries if e["d"] == top],
        "bound": bound,
        "violations": [e for e in entries if e["d"] > bound],
    }
