import pytest

from flopbraid.arrangement import build_arrangement
from flopbraid.contraction import parse_spec

SPECS = {
    "e6": {"points": [{"type": "E6", "white": [0, 2]}]},
    "d4_two": {"points": [{"type": "D4", "white": [0, 1]}]},
    "d4_three": {"points": [{"type": "D4", "white": [0, 2, 3]}]},
    "cross": {"points": [{"type": "A1", "white": [0]}, {"type": "A1", "white": [0]}]},
    "a2": {"points": [{"type": "A2", "white": [0, 1]}]},
    "cube": {"points": [{"type": "A1", "white": [0]}] * 3},
    "e6_a1": {"points": [{"type": "E6", "white": [0, 2]}, {"type": "A1", "white": [0]}]},
}


def arrangement_of(name):
    return build_arrangement(parse_spec(SPECS[name]))


@pytest.fixture(params=sorted(SPECS))
def named_arrangement(request):
    return request.param, arrangement_of(request.param)
