"""Small exact linear algebra over the rationals.

Everything here works on plain nested sequences of ints or Fractions.  The
matrices involved in this package are tiny (at most a handful of rows and
columns), so Gaussian elimination over ``Fraction`` is both fast enough and
bit-exact.
"""
from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Sequence

Vector = tuple
Matrix = tuple  # tuple of row tuples


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        for i in range(r, len(m)):
            if m[i][c] != 0:
                break
        else:
            continue
        m[r], m[i] = m[i], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def kernel(rows: Sequence[Sequence], ncols: int) -> list[tuple[Q, ...]]:
    """Basis of the right null space {x : row.x = 0 for every row}."""
    if not rows:
        return [tuple(Q(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Q, ...] | None:
    """One particular solution of rows @ x = rhs, or None if inconsistent."""
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Q(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = m[r][ncols]
    return tuple(x)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in a)


def vecmat(v: Sequence, a: Sequence[Sequence]) -> tuple:
    """Row vector times matrix: the pullback of a covector."""
    return tuple(dot(v, col) for col in zip(*a))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Exact inverse; entries come back as ints when they are integral."""
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(_demote(x) for x in row[n:]) for row in m)


def _demote(x: Q):
    return int(x) if x.denominator == 1 else x


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector whose
    first nonzero entry is positive."""
    qs = [Q(x) for x in vec]
    den = 1
    for x in qs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in qs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive normalization")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def sign(x) -> int:
    return (x > 0) - (x < 0)
