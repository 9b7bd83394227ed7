"""Unimodular lattices assembled from standard summands."""

from swobstruct.lattice.base import (
    E8_GRAM,
    H_GRAM,
    Block,
    Lattice,
    Parity,
    Summand,
    SummandKind,
    inner,
    is_characteristic,
    make_lattice,
    square,
    vector,
)

__all__ = [
    "E8_GRAM",
    "H_GRAM",
    "Block",
    "Lattice",
    "Parity",
    "Summand",
    "SummandKind",
    "inner",
    "is_characteristic",
    "make_lattice",
    "square",
    "vector",
]
