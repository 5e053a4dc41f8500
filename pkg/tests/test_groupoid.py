import itertools

import pytest

from flopbraid.arrangement import chambers, codim2_walls, restrict_roots, separating
from flopbraid.contraction import make_point
from flopbraid.groupoid import (
    build_x1,
    check_representation,
    codim2_relations,
    minimal_positive_paths,
    relations_to_json,
    shortest_positive_length,
    to_dot,
    tracking_assignment,
    vertex_group_presentation,
)
from flopbraid.tracking import explore

from conftest import SPECS, arrangement_of


@pytest.mark.parametrize("name", sorted(SPECS))
def test_tracking_assignment_is_a_representation(name):
    a = arrangement_of(name)
    x1 = build_x1(a)
    rels = codim2_relations(a, x1)
    assert check_representation(x1, rels, tracking_assignment(x1, explore(a)))


def test_broken_assignment_is_caught():
    a = arrangement_of("e6")
    x1 = build_x1(a)
    rels = codim2_relations(a, x1)
    good = tracking_assignment(x1, explore(a))
    bad = dict(good)
    bad[0] = ((1, 1), (0, 1))
    assert not check_representation(x1, rels, bad)
    missing = dict(good)
    del missing[0]
    with pytest.raises(ValueError, match="no assigned value"):
        check_representation(x1, rels, missing)
    singular = dict(good)
    singular[0] = ((1, 1), (1, 1))
    with pytest.raises(ValueError, match="non-invertible"):
        check_representation(x1, rels, singular)


@pytest.mark.parametrize("white", [(0, 2), (0, 1), (1, 2), (2, 3)])
def test_rank_two_relations(white):
    a = restrict_roots(make_point("E6", list(white)))
    d = len(a)
    rels = codim2_relations(a)
    assert len(rels) == 2 * d
    assert {r.length for r in rels} == {d}


def test_coordinate_cross_commuting_squares():
    for name in ("cross", "cube"):
        rels = codim2_relations(arrangement_of(name))
        assert {r.length for r in rels} == {2}


def test_relation_endpoints():
    a = arrangement_of("d4_three")
    x1 = build_x1(a)
    for r in codim2_relations(a, x1):
        assert r.left.source == r.right.source and r.left.target == r.right.target
        assert r.left.arrows != r.right.arrows
        walls = sorted(x1.arrows[k].wall for k in r.left.arrows)
        assert walls == sorted(x1.arrows[k].wall for k in r.right.arrows) == sorted(r.members)


@pytest.mark.parametrize("name", ["e6", "d4_two", "a2", "d4_three"])
def test_minimal_paths_cross_each_separating_wall_once(name):
    a = arrangement_of(name)
    x1 = build_x1(a)
    cs = x1.chambers
    for c1, c2 in itertools.product(range(len(cs)), repeat=2):
        k = len(separating(cs[c1], cs[c2]))
        assert shortest_positive_length(x1, c1, c2) == k
        paths = minimal_positive_paths(x1, c1, c2)
        assert paths
        for p in paths:
            walls = [x1.arrows[i].wall for i in p.arrows]
            assert sorted(walls) == separating(cs[c1], cs[c2])


def test_rank_two_opposite_chambers_have_two_minimal_paths():
    a = arrangement_of("e6")
    x1 = build_x1(a)
    cs = x1.chambers
    opposite = next(i for i, c in enumerate(cs) if all(s < 0 for s in c.signs))
    assert len(minimal_positive_paths(x1, 0, opposite)) == 2


@pytest.mark.parametrize("name", sorted(SPECS))
def test_abelianization_counts_hyperplanes(name):
    a = arrangement_of(name)
    pres = vertex_group_presentation(a)
    x1 = build_x1(a)
    assert len(pres.generators) == len(x1.arrows) - (len(x1.chambers) - 1)
    assert pres.abelianization_rank() == len(a)


def test_x1_arrows_pair_up():
    a = arrangement_of("d4_three")
    x1 = build_x1(a)
    assert len(x1.arrows) == 96
    for k, arr in enumerate(x1.arrows):
        back = x1.arrows[x1.reverse(k)]
        assert (back.source, back.target, back.wall) == (arr.target, arr.source, arr.wall)


def test_dot_and_json():
    a = arrangement_of("cross")
    x1 = build_x1(a)
    dot = to_dot(x1)
    assert dot.startswith("digraph X1 {") and dot.count("->") == 8
    doc = relations_to_json(x1, codim2_relations(a, x1))
    assert len(doc["arrows"]) == 8 and len(doc["relations"]) == 4
    assert to_dot(x1, {0: "C+"}).count('label="C+"') == 1
