import itertools

import pytest

from flopbraid.rootsys import (
    DiagramError,
    all_diagrams,
    build_diagram,
    highest_root,
    parse_type,
    positive_roots,
    reflect,
    render,
)

# highest roots from the standard tables, rewritten in this package's numbering
HIGHEST = {
    "E6": (1, 2, 3, 2, 1, 2),
    "E7": (2, 3, 4, 3, 2, 1, 2),
    "E8": (2, 4, 6, 5, 4, 3, 2, 3),
    "D4": (1, 2, 1, 1),
    "D5": (1, 2, 2, 1, 1),
    "A4": (1, 1, 1, 1),
}


def roots_by_quadratic_form(diagram, bound):
    """Positive roots as the nonnegative integer vectors of norm 2."""
    edges = list(diagram.edges)
    out = set()
    for x in itertools.product(*(range(b + 1) for b in bound)):
        q = sum(c * c for c in x) - sum(x[i] * x[j] for i, j in edges)
        if q == 1:
            out.add(x)
    return out


def expected_count(family, n):
    return {"A": n * (n + 1) // 2, "D": n * (n - 1)}.get(family) or {6: 36, 7: 63, 8: 120}[n]


@pytest.mark.parametrize("diagram", list(all_diagrams(8)), ids=lambda d: d.name)
def test_root_counts(diagram):
    assert len(positive_roots(diagram)) == expected_count(diagram.family, diagram.rank)


@pytest.mark.parametrize("name", sorted(HIGHEST))
def test_roots_match_quadratic_form_oracle(name):
    d = parse_type(name)
    assert positive_roots(d) == roots_by_quadratic_form(d, HIGHEST[name])


@pytest.mark.parametrize("name", sorted(HIGHEST))
def test_highest_root(name):
    assert highest_root(parse_type(name)) == HIGHEST[name]


@pytest.mark.parametrize("name", ["A3", "D5", "E6", "E8"])
def test_reflections_permute_roots(name):
    d = parse_type(name)
    roots = positive_roots(d)
    full = roots | {tuple(-c for c in r) for r in roots}
    for i in range(d.rank):
        assert {reflect(d, r, i) for r in full} == full
        simple = tuple(int(k == i) for k in range(d.rank))
        assert reflect(d, simple, i) == tuple(-c for c in simple)


def test_numbering():
    assert parse_type("D5").neighbours(2) == [1, 3, 4]
    assert parse_type("E7").neighbours(2) == [1, 3, 6]
    assert parse_type("A3").neighbours(1) == [0, 2]


@pytest.mark.parametrize("bad", ["E9", "D3", "B4", "A0", "", "E"])
def test_bad_types(bad):
    with pytest.raises(DiagramError):
        parse_type(bad)


def test_build_diagram_matches_parse():
    assert build_diagram("E", 6) == parse_type("E6")


def test_render_shows_every_index():
    for d in all_diagrams(8):
        text = render(d)
        for v in range(d.rank):
            assert str(v) in text
    assert render(parse_type("D4")).splitlines() == ["0 - 1 - 2", "    |", "    3"]
