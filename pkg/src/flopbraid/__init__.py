"""Flop braiding combinatorics for marked ADE Dynkin diagrams."""
from .arrangement import Arrangement, build_arrangement, chambers, codim2_walls, is_simplicial
from .contraction import ContractionSpec, SpecError, load_spec, parse_spec
from .rootsys import parse_type, positive_roots
from .tracking import explore

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "ContractionSpec",
    "SpecError",
    "build_arrangement",
    "chambers",
    "codim2_walls",
    "explore",
    "is_simplicial",
    "load_spec",
    "parse_spec",
    "parse_type",
    "positive_roots",
]
