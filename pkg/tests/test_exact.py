from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flopbraid import exact
from flopbraid.arrangement import _bareiss_rank

small = st.integers(-6, 6)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


@given(matrices())
def test_rank_agrees_with_bareiss(m):
    assert exact.rank(m) == _bareiss_rank(m)


@given(matrices())
def test_kernel_is_annihilated(m):
    ncols = len(m[0])
    basis = exact.kernel(m, ncols)
    assert len(basis) == ncols - exact.rank(m)
    for v in basis:
        assert all(exact.dot(row, v) == 0 for row in m)


@given(st.lists(small, min_size=1, max_size=5).filter(any))
def test_primitive_is_idempotent_and_normalized(v):
    p = exact.primitive(v)
    assert exact.primitive(p) == p
    assert next(x for x in p if x) > 0
    # parallel to v
    assert exact.rank([v, p]) == 1


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        exact.primitive((0, 0))


def test_primitive_fractions():
    assert exact.primitive((Fraction(-1, 2), Fraction(3, 4))) == (2, -3)


@given(matrices(st.just(3), st.just(3)))
def test_inverse_roundtrip(m):
    if exact.rank(m) < 3:
        return
    inv = exact.inverse(m)
    assert exact.matmul(m, inv) == exact.identity(3)


def test_solve():
    x = exact.solve([[2, 1], [1, 3]], [3, 5])
    assert list(x) == [Fraction(4, 5), Fraction(7, 5)]


def test_vecmat_is_pullback():
    assert tuple(exact.vecmat((1, 2), [[-1, 0], [1, 1]])) == (1, 2)
