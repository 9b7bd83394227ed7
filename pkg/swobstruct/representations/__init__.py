"""Invariant positive subspaces and the representations acting on them."""

from swobstruct.representations.decomposition import (
    CyclicMults,
    EpsMatrix,
    InvolutionUV,
    KleinPQRS,
    decompose_cyclic,
    decompose_diagonal_commuting,
    decompose_involution,
    decompose_klein,
)
from swobstruct.representations.subspace import PositiveSubspace, invariant_positive_subspace

__all__ = [
    "CyclicMults",
    "EpsMatrix",
    "InvolutionUV",
    "KleinPQRS",
    "decompose_cyclic",
    "decompose_diagonal_commuting",
    "decompose_involution",
    "decompose_klein",
    "PositiveSubspace",
    "invariant_positive_subspace",
]
