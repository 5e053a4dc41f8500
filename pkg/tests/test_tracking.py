import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flopbraid import exact
from flopbraid.arrangement import Arrangement, chamber_rays, chambers, codim2_faces
from flopbraid.contraction import make_point
from flopbraid.tracking import (
    ExchangeData,
    TrackingError,
    alternating,
    check_face_braids,
    compose_and_check,
    d_bound_scan,
    derive_exchange_data,
    explore,
    tracking_map,
    two_curve_report,
    two_curve_report_for,
)

from conftest import SPECS, arrangement_of

def _reduced(v):
    g = math.gcd(*v)
    return tuple(x // g for x in v)


ATLASES = {name: explore(arrangement_of(name)) for name in SPECS}


def test_d4_two_exchange_data():
    atlas = ATLASES["d4_two"]
    pos = atlas.positive
    assert pos.exits[1][1].b == {(1, 2): 1}
    after_one = atlas.by_word((1,))
    assert after_one.exits[2][1].b == {(2, 1): 2}


@pytest.mark.parametrize("word, matrix", [
    ((), ((1, 0), (0, 1))),
    ((1,), ((-1, 0), (1, 1))),
    ((2,), ((1, 2), (0, -1))),
    ((1, 2), ((-1, -2), (1, 1))),
    ((1, 2, 1), ((-1, -2), (0, 1))),
])
def test_d4_two_tracked_maps(word, matrix):
    assert compose_and_check(ATLASES["d4_two"], word) == matrix


def test_d4_two_full_cycle_is_identity():
    atlas = ATLASES["d4_two"]
    assert compose_and_check(atlas, (1, 2, 1, 2)) == ((-1, 0), (0, -1))
    assert compose_and_check(atlas, (1, 2) * 4) == exact.identity(2)


def test_e6_crossing():
    assert compose_and_check(ATLASES["e6"], (2,)) == ((1, 3), (0, -1))


def test_tracking_map_shape():
    t = tracking_map(ExchangeData((1,), {(1, 2): 3}), 3)
    assert t.matrix == ((-1, 0, 0), (3, 1, 0), (0, 0, 1))
    assert t.is_involution()
    assert t((1, 0, 0)) == (-1, 3, 0)


@pytest.mark.parametrize("name", sorted(SPECS))
def test_composite_columns_are_chamber_rays(name):
    """Independent of the exchange data: the tracked orthant must be the
    geometric chamber, so the composite's columns are its extreme rays."""
    atlas = ATLASES[name]
    a = atlas.arrangement
    by_signs = {c.signs: c for c in chambers(a)}
    for ch in atlas.chambers.values():
        cols = {_reduced(col) for col in zip(*ch.composite)}
        assert cols == set(chamber_rays(a, by_signs[ch.signs]))


@pytest.mark.parametrize("name", sorted(SPECS))
def test_every_chamber_reached(name):
    atlas = ATLASES[name]
    assert set(atlas.chambers) == {c.signs for c in chambers(atlas.arrangement)}
    assert atlas.checks["path_independent"]


@pytest.mark.parametrize("name", sorted(SPECS))
def test_exchange_nonnegative_and_involutive(name):
    n = ATLASES[name].arrangement.dim
    for ch in ATLASES[name].chambers.values():
        for j, (_, data, _) in ch.exits.items():
            assert all(v >= 0 for v in data.b.values())
            assert tracking_map(data, n).is_involution()
            assert derive_exchange_data(ch.local, j) == data


@pytest.mark.parametrize("name", sorted(SPECS))
def test_face_braids(name):
    a = ATLASES[name].arrangement
    cs = chambers(a)
    result = check_face_braids(ATLASES[name], codim2_faces(a, cs), cs)
    assert result["pass"]
    assert result["checked"] == sum(len(f.chambers) for f in codim2_faces(a, cs))


def test_e6_local_arrangement_moves():
    atlas = ATLASES["e6"]
    assert (2, 3) in atlas.by_word((1,)).local
    assert atlas.checks["local_equal_to_global"] < atlas.checks["chambers"]


def test_non_simplicial_rejected():
    a = Arrangement.from_functionals(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    with pytest.raises(TrackingError, match="not simplicial"):
        explore(a)


def test_missing_coordinate_hyperplane():
    a = Arrangement.from_functionals(2, [(1, 1), (1, -1)])
    with pytest.raises(TrackingError, match="coordinate"):
        explore(a)


def test_bad_word():
    with pytest.raises(TrackingError):
        compose_and_check(ATLASES["e6"], (3,))


def test_two_curve_reports():
    e6 = two_curve_report(make_point("E6", [0, 2]))
    assert e6.d == 5 and e6.composites_agree
    assert e6.relation() == "F1 ∘ F2 ∘ F1 ∘ F2 ∘ F1 ≅ F2 ∘ F1 ∘ F2 ∘ F1 ∘ F2"
    cross = two_curve_report_for(arrangement_of("cross"))
    assert cross.d == 2 and cross.kind == "product"
    with pytest.raises(ValueError):
        two_curve_report(make_point("D4", [0, 2, 3]))


def test_alternating():
    assert alternating(1, 2, 5) == (1, 2, 1, 2, 1)


def test_d_bound_scan_small():
    out = d_bound_scan(6)
    assert {"diagram": "E6", "white": [0, 2], "d": 5} in out["entries"]
    assert out["max_d"] == 6 and not out["violations"]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["e6", "d4_two", "d4_three", "e6_a1"]),
       st.lists(st.integers(1, 3), max_size=12))
def test_random_walks_backtrack(name, raw):
    atlas = ATLASES[name]
    n = atlas.arrangement.dim
    word = tuple((j - 1) % n + 1 for j in raw)
    m = compose_and_check(atlas, word)
    assert m == atlas.by_word(word).composite
    # crossing back the same walls in reverse order undoes the walk
    back = compose_and_check(atlas, word + word[::-1])
    assert back == exact.identity(n)


def test_three_curve_first_wall():
    data = ATLASES["d4_three"].positive.exits[1][1]
    assert data.b == {(1, 2): 1, (1, 3): 1}
