"""Mod-2 cohomology rings of the base spaces and Stiefel-Whitney classes."""

from swobstruct.cohomology.rings import (
    BiProjective,
    CohomClass,
    LensSpace,
    RealProjective,
    RingDescriptor,
    Torus,
    multiply,
    top_component,
)
from swobstruct.cohomology.stiefel_whitney import splits, sw_biproj, sw_lens, sw_rp, sw_torus

__all__ = [
    "BiProjective",
    "CohomClass",
    "LensSpace",
    "RealProjective",
    "RingDescriptor",
    "Torus",
    "multiply",
    "top_component",
    "splits",
    "sw_biproj",
    "sw_lens",
    "sw_rp",
    "sw_torus",
]
