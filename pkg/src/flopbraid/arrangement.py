"""Central hyperplane arrangements with exact arithmetic.

Hyperplanes are stored as primitive integer covectors whose first nonzero
entry is positive, sorted lexicographically; a hyperplane's *index* is its
position in that sorted tuple.  Chambers are sign vectors aligned with that
order, each carrying an integral interior witness.

Chambers are found by walking the chamber graph: every chamber is the cone
over the arrangement's rays (one-dimensional flats) it contains, a facet is a
hyperplane whose zero set meets the chamber's rays in codimension one, and
crossing a facet flips exactly one sign.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from . import exact
from .contraction import ContractionPoint, ContractionSpec
from .rootsys import positive_roots


class DegenerateArrangement(ValueError):
    """The functionals do not span the dual space, so chambers are not cones."""


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_functionals(cls, dim: int, functionals: Iterable[Sequence]) -> "Arrangement":
        hs = set()
        for f in functionals:
            if len(f) != dim:
                raise ValueError(f"functional {tuple(f)} does not live in dimension {dim}")
            if any(f):
                hs.add(exact.primitive(f))
        return cls(dim, tuple(sorted(hs)))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def index(self, functional: Sequence) -> int:
        return self.hyperplanes.index(exact.primitive(functional))

    def __contains__(self, functional) -> bool:
        try:
            return exact.primitive(functional) in self.hyperplanes
        except ValueError:
            return False

    def coordinate_indices(self) -> list[int]:
        """Index of the hyperplane x_i = 0 for each coordinate i."""
        return [self.index(tuple(int(i == j) for j in range(self.dim))) for i in range(self.dim)]

    def sign_vector(self, point: Sequence) -> tuple[int, ...]:
        return tuple(exact.sign(exact.dot(h, point)) for h in self.hyperplanes)

    def to_json(self) -> dict:
        return {"dim": self.dim, "hyperplanes": [list(h) for h in self.hyperplanes]}

    @classmethod
    def from_json(cls, doc: dict) -> "Arrangement":
        return cls.from_functionals(doc["dim"], doc["hyperplanes"])

    def pretty(self, names: str = "θ") -> list[str]:
        return [format_functional(h, names) for h in self.hyperplanes]


def format_functional(h: Sequence[int], name: str = "θ") -> str:
    terms = []
    for i, c in enumerate(h):
        if c == 0:
            continue
        var = f"{name}{i + 1}"
        mag = "" if abs(c) == 1 else str(abs(c))
        if not terms:
            terms.append(("-" if c < 0 else "") + mag + var)
        else:
            terms.append(("- " if c < 0 else "+ ") + mag + var)
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Chamber:
    signs: tuple[int, ...]
    witness: tuple[Q, ...]

    @property
    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_json(self) -> dict:
        return {"signs": self.sign_string, "witness": [str(Q(x)) for x in self.witness]}


@dataclass(frozen=True)
class Codim2Wall:
    stratum: tuple[tuple[Q, ...], ...]  # basis of the (n-2)-dimensional flat
    members: tuple[int, ...]  # indices of the hyperplanes containing it

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Codim2Face:
    """A cell of a codimension-two flat cut out by the remaining hyperplanes."""
    wall: Codim2Wall
    point: tuple[Q, ...]  # relative interior point
    chambers: tuple[int, ...]  # indices of the 2m chambers around it, in cyclic order


# --------------------------------------------------------------------------
# construction


def restrict_roots(point: ContractionPoint) -> Arrangement:
    """Positive roots projected onto the white coordinates, made primitive."""
    roots = positive_roots(point.diagram)
    projected = (tuple(r[v] for v in point.white) for r in roots)
    return Arrangement.from_functionals(point.n_curves, projected)


def product(a: Arrangement, b: Arrangement) -> Arrangement:
    left = (tuple(h) + (0,) * b.dim for h in a.hyperplanes)
    right = ((0,) * a.dim + tuple(h) for h in b.hyperplanes)
    return Arrangement.from_functionals(a.dim + b.dim, itertools.chain(left, right))


def build_arrangement(spec: ContractionSpec) -> Arrangement:
    out = Arrangement(0, ())
    for p in spec.points:
        out = product(out, restrict_roots(p))
    return out


# --------------------------------------------------------------------------
# rays and chambers


def _moment_point(functionals: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """(1, N, N^2, ...) with N beyond every coefficient: off every hyperplane."""
    m = max((abs(c) for f in functionals for c in f), default=1)
    big = m + 1
    return tuple(big ** i for i in range(dim))


@lru_cache(maxsize=4096)
def _rays(functionals: tuple[tuple[int, ...], ...], dim: int) -> tuple[tuple[int, ...], ...]:
    """Both orientations of every one-dimensional flat of an essential arrangement."""
    found = set()
    for subset in itertools.combinations(functionals, dim - 1):
        if exact.rank(subset) != dim - 1:
            continue
        (line,) = exact.kernel(subset, dim)
        r = exact.primitive(line)
        found.add(r)
        found.add(tuple(-x for x in r))
    return tuple(sorted(found))


def _chamber_rays(functionals, dim, signs) -> list[tuple[int, ...]]:
    return [r for r in _rays(functionals, dim)
            if all(s * exact.dot(f, r) >= 0 for f, s in zip(functionals, signs))]


def _facets(functionals, dim, signs) -> list[int]:
    rays = _chamber_rays(functionals, dim, signs)
    out = []
    for k, f in enumerate(functionals):
        on = [r for r in rays if exact.dot(f, r) == 0]
        if exact.rank(on) == dim - 1:
            out.append(k)
    return out


def _essential_regions(functionals: tuple[tuple[int, ...], ...], dim: int):
    """Regions of an essential arrangement of distinct hyperplanes."""
    start = _moment_point(functionals, dim)
    first = tuple(exact.sign(exact.dot(f, start)) for f in functionals)
    seen = {first}
    queue = deque([first])
    while queue:
        signs = queue.popleft()
        for k in _facets(functionals, dim, signs):
            nxt = signs[:k] + (-signs[k],) + signs[k + 1:]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    out = []
    for signs in seen:
        rays = _chamber_rays(functionals, dim, signs)
        witness = tuple(sum(col) for col in zip(*rays))
        out.append((signs, witness))
    return out


def regions(functionals: Sequence[Sequence[int]], dim: int) -> list[tuple[tuple[int, ...], tuple[Q, ...]]]:
    """All regions of a (possibly non-essential) central arrangement.

    Returns (sign vector aligned with ``functionals``, witness) pairs sorted by
    sign vector.  Parallel functionals are allowed.
    """
    functionals = [tuple(f) for f in functionals]
    if not functionals:
        return [((), tuple(Q(0) for _ in range(dim)))]
    canon = sorted({exact.primitive(f) for f in functionals})
    # f = lam * primitive(f) with sign(lam) = sign of the leading entry of f
    orient = [(canon.index(exact.primitive(f)), exact.sign(next(x for x in f if x)))
              for f in functionals]
    # essentialize through an independent subset of the hyperplanes
    basis: list[tuple[int, ...]] = []
    for f in canon:
        if exact.rank(basis + [f]) > len(basis):
            basis.append(f)
    s = len(basis)
    cols = list(zip(*basis))  # dim x s
    coords = [_positive_integral(exact.solve(cols, f)) for f in canon]
    out = []
    for signs, y in _essential_regions(tuple(coords), s):
        x = exact.solve(basis, y)
        full = tuple(sg * signs[ci] for ci, sg in orient)
        out.append((full, x))
    out.sort(key=lambda item: tuple(-s for s in item[0]))
    return out


def _positive_integral(vec) -> tuple[int, ...]:
    """Clear denominators by a positive factor (keeps every sign)."""
    p = exact.primitive(vec)
    lead = next(x for x in vec if x)
    return p if lead > 0 else tuple(-x for x in p)


def chambers(a: Arrangement) -> list[Chamber]:
    """Every chamber once, all-positive first, ordered by sign string."""
    if exact.rank(a.hyperplanes) != a.dim:
        raise DegenerateArrangement(
            f"hyperplanes span only a rank-{exact.rank(a.hyperplanes)} space in dimension {a.dim}")
    if a.dim == 0:
        return [Chamber((), ())]
    found = _essential_regions(a.hyperplanes, a.dim)
    found.sort(key=lambda item: tuple(-s for s in item[0]))
    return [Chamber(s, tuple(Q(x) for x in w)) for s, w in found]


def chamber_rays(a: Arrangement, chamber: Chamber) -> list[tuple[int, ...]]:
    return _chamber_rays(a.hyperplanes, a.dim, chamber.signs)


def facets(a: Arrangement, chamber: Chamber) -> list[int]:
    return _facets(a.hyperplanes, a.dim, chamber.signs)


def adjacency(a: Arrangement, chamber_list: Sequence[Chamber]) -> nx.Graph:
    """Chamber graph; the edge attribute ``wall`` is the crossed hyperplane index."""
    where = {c.signs: i for i, c in enumerate(chamber_list)}
    g = nx.Graph()
    g.add_nodes_from(range(len(chamber_list)))
    for i, c in enumerate(chamber_list):
        for k in facets(a, c):
            flipped = c.signs[:k] + (-c.signs[k],) + c.signs[k + 1:]
            j = where[flipped]
            g.add_edge(i, j, wall=k)
    return g


def separating(c1: Chamber, c2: Chamber) -> list[int]:
    return [k for k, (s, t) in enumerate(zip(c1.signs, c2.signs)) if s != t]


def is_simplicial(a: Arrangement) -> bool:
    if exact.rank(a.hyperplanes) != a.dim:
        return False
    for c in chambers(a):
        fs = facets(a, c)
        if len(fs) != a.dim or exact.rank([a.hyperplanes[k] for k in fs]) != a.dim:
            return False
    return True


def positive_chamber_index(a: Arrangement, chamber_list: Sequence[Chamber]) -> int:
    target = a.sign_vector((1,) * a.dim)
    for i, c in enumerate(chamber_list):
        if c.signs == target:
            return i
    raise ValueError("positive orthant is not a chamber")


# --------------------------------------------------------------------------
# codimension two


def codim2_walls(a: Arrangement) -> list[Codim2Wall]:
    hs = a.hyperplanes
    seen = {}
    for i, j in itertools.combinations(range(len(hs)), 2):
        pair = [hs[i], hs[j]]
        if exact.rank(pair) != 2:
            continue
        members = tuple(k for k, h in enumerate(hs) if exact.rank(pair + [h]) == 2)
        if members not in seen:
            seen[members] = Codim2Wall(tuple(exact.kernel(pair, a.dim)), members)
    return [seen[k] for k in sorted(seen)]


def codim2_faces(a: Arrangement, chamber_list: Sequence[Chamber] | None = None) -> list[Codim2Face]:
    """Codimension-two faces together with the chambers around each, cyclically ordered."""
    if chamber_list is None:
        chamber_list = chambers(a)
    graph = adjacency(a, chamber_list)
    out = []
    for wall in codim2_walls(a):
        others = [k for k in range(len(a)) if k not in wall.members]
        basis = wall.stratum
        restricted = [tuple(exact.dot(a.hyperplanes[k], b) for b in basis) for k in others]
        for _, y in regions(restricted, len(basis)):
            point = tuple(sum((yi * b[j] for yi, b in zip(y, basis)), Q(0)) for j in range(a.dim))
            sv = a.sign_vector(point)
            around = [i for i, c in enumerate(chamber_list)
                      if all(c.signs[k] == sv[k] for k in others)]
            out.append(Codim2Face(wall, point, _cycle_order(graph, around)))
    return out


def _cycle_order(graph: nx.Graph, nodes: list[int]) -> tuple[int, ...]:
    sub = graph.subgraph(nodes)
    start = min(nodes)
    order = [start]
    prev = None
    cur = start
    while True:
        nbrs = sorted(n for n in sub.neighbors(cur) if n != prev)
        if not nbrs or nbrs[0] == start:
            break
        prev, cur = cur, nbrs[0]
        if cur in order:
            break
        order.append(cur)
    if len(order) != len(nodes):
        raise ValueError("chambers around a codimension-two face do not form a cycle")
    return tuple(order)


# --------------------------------------------------------------------------
# independent chamber count


def _bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free integer elimination; deliberately separate from exact.rref."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def intersection_lattice(a: Arrangement) -> dict[frozenset, int]:
    """Flats, keyed by the set of hyperplanes containing them, mapped to their rank."""
    hs = a.hyperplanes

    def closure(subset: frozenset) -> tuple[frozenset, int]:
        rk = _bareiss_rank([hs[k] for k in subset])
        full = frozenset(k for k in range(len(hs))
                         if k in subset or _bareiss_rank([hs[i] for i in subset] + [hs[k]]) == rk)
        return full, rk

    flats = {frozenset(): 0}
    layer = [frozenset()]
    while layer:
        nxt = []
        for flat in layer:
            for k in range(len(hs)):
                if k in flat:
                    continue
                g, rk = closure(flat | {k})
                if g not in flats:
                    flats[g] = rk
                    nxt.append(g)
        layer = nxt
    return flats


def mobius(a: Arrangement) -> dict[frozenset, int]:
    flats = intersection_lattice(a)
    mu = {}
    for flat in sorted(flats, key=lambda f: (flats[f], sorted(f))):
        if not flat:
            mu[flat] = 1
        else:
            mu[flat] = -sum(v for y, v in mu.items() if y < flat)
    return mu


def characteristic_polynomial(a: Arrangement) -> dict[int, int]:
    """Coefficients of chi(t) keyed by the power of t."""
    flats = intersection_lattice(a)
    coeffs: dict[int, int] = {}
    for flat, m in mobius(a).items():
        d = a.dim - flats[flat]
        coeffs[d] = coeffs.get(d, 0) + m
    return coeffs


def chamber_count_zaslavsky(a: Arrangement) -> int:
    return sum(abs(m) for m in mobius(a).values())
