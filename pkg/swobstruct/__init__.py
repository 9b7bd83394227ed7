"""swobstruct - families Seiberg-Witten obstructions to realising lattice isometries.

Given the intersection lattice of a closed 4-manifold, a finite group of
isometries and an invariant characteristic vector, decide whether the
Stiefel-Whitney obstruction rules out realising the action by diffeomorphisms.
"""

__version__ = "0.1.0"
__description__ = "Families Seiberg-Witten obstruction toolkit for lattice isometries"

from swobstruct.utils.config import Settings, get_settings
from swobstruct.utils.logger import get_logger
from swobstruct.lattice import Lattice, Summand, make_lattice
from swobstruct.isometry import GroupAction, Isometry, block_builder, make_action
from swobstruct.obstruction import (
    Conclusion,
    ManifoldData,
    Verdict,
    check_action,
    check_commuting,
    check_cyclic,
    check_involution,
    check_klein,
)

__all__ = [
    "__version__",
    "__description__",
    "Settings",
    "get_settings",
    "get_logger",
    "Lattice",
    "Summand",
    "make_lattice",
    "GroupAction",
    "Isometry",
    "block_builder",
    "make_action",
    "Conclusion",
    "ManifoldData",
    "Verdict",
    "check_action",
    "check_commuting",
    "check_cyclic",
    "check_involution",
    "check_klein",
]
