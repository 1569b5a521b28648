"""Independent set and colorable subgraph algorithms on cluster/chordal overlays."""

from ._core import (
    ArgumentError,
    ParseError,
    SizeCapError,
    WitnessError,
    brute_mwccs,
    brute_mwis,
    colorful_is,
    construction,
    hamiltonian_cubic_triangle_free,
    is_chordal,
    is_cluster,
    is_k_mino,
    mwccs,
    mwis_chordal,
    random_chordal,
    random_overlay,
    two_simplicial_ordering,
)

__all__ = [
    "ArgumentError",
    "ParseError",
    "SizeCapError",
    "WitnessError",
    "brute_mwccs",
    "brute_mwis",
    "colorful_is",
    "construction",
    "hamiltonian_cubic_triangle_free",
    "is_chordal",
    "is_cluster",
    "is_k_mino",
    "mwccs",
    "mwis_chordal",
    "random_chordal",
    "random_overlay",
    "two_simplicial_ordering",
]
