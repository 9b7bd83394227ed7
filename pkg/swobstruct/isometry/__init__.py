"""Isometries of lattices and the finite groups they generate."""

from swobstruct.isometry.base import (
    ActionShape,
    GroupAction,
    Isometry,
    commute,
    fixed_sublattice,
    identity,
    is_involution,
    make_action,
    order,
    reflection,
    verify_isometry,
)
from swobstruct.isometry.blocks import (
    ActOn,
    BlockOp,
    Cycle,
    MatrixOp,
    MinusIdOn,
    ReflectionOp,
    Swap,
    act_on,
    block_builder,
    blocks_of_kind,
    cycle,
    minus_id_on,
)

__all__ = [
    "ActionShape",
    "GroupAction",
    "Isometry",
    "commute",
    "fixed_sublattice",
    "identity",
    "is_involution",
    "make_action",
    "order",
    "reflection",
    "verify_isometry",
    "ActOn",
    "BlockOp",
    "Cycle",
    "MatrixOp",
    "MinusIdOn",
    "ReflectionOp",
    "Swap",
    "act_on",
    "block_builder",
    "blocks_of_kind",
    "cycle",
    "minus_id_on",
]
