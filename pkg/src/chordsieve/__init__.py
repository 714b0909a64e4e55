"""Chord matchings with k crossings under rotation, and their sieving polynomials."""

from .kernel import BACKEND
from .matchcore import (
    CrossingTypeClass,
    LabelSubset,
    Matching,
    PartialMatching,
    classify,
    count_fixed,
    crossing_number,
    enumerate_matchings,
    make_matching,
    make_subset,
    parse_matching,
    period,
    reduce_to_skeleton,
    rotate,
)

__all__ = [
    "BACKEND",
    "CrossingTypeClass",
    "LabelSubset",
    "Matching",
    "PartialMatching",
    "classify",
    "count_fixed",
    "crossing_number",
    "enumerate_matchings",
    "make_matching",
    "make_subset",
    "parse_matching",
    "period",
    "reduce_to_skeleton",
    "rotate",
]
