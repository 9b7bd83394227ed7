"""Assemble isometries from operations on the diagonal blocks of a lattice.

Block indices refer to ``Lattice.blocks``: one block per H, E8 or Gram copy
and one rank-one block per Diag entry. Operations are applied in list order,
so the resulting matrix is ``M_n ... M_2 M_1``.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from swobstruct.errors import IncompatibleBlocksError
from swobstruct.isometry.base import Isometry, reflection, verify_isometry
from swobstruct.lattice.base import Block, Lattice
from swobstruct.utils.exact import as_int_matrix, int_matmul


@dataclass(frozen=True)
class MinusIdOn:
    """Negate every listed block."""

    blocks: Tuple[int, ...]


@dataclass(frozen=True)
class Swap:
    """Exchange two isomorphic blocks coordinate-wise."""

    first: int
    second: int


@dataclass(frozen=True)
class Cycle:
    """Send block ``blocks[i]`` to ``blocks[i + 1]``, the last back to the first."""

    blocks: Tuple[int, ...]


@dataclass(frozen=True)
class ReflectionOp:
    vector: Tuple[int, ...]


@dataclass(frozen=True)
class MatrixOp:
    rows: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ActOn:
    """Apply the same local matrix on each listed block."""

    blocks: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]


BlockOp = Union[MinusIdOn, Swap, Cycle, ReflectionOp, MatrixOp, ActOn]


def _block(l: Lattice, index: int) -> Block:
    if not 0 <= index < len(l.blocks):
        raise IncompatibleBlocksError(
            f"Block {index} does not exist (lattice has {len(l.blocks)} blocks)",
            "block_builder",
            details={"block": index},
        )
    return l.blocks[index]


def _require_isomorphic(blocks: Sequence[Block]) -> None:
    first = blocks[0]
    for other in blocks[1:]:
        if other.size != first.size or not np.array_equal(other.gram, first.gram):
            raise IncompatibleBlocksError(
                f"Blocks {first.index} ({first.label}) and {other.index} ({other.label}) "
                "are not isomorphic",
                "block_builder",
                details={"blocks": [first.index, other.index]},
            )


def _op_matrix(l: Lattice, op: BlockOp) -> np.ndarray:
    n = l.rank
    m = np.eye(n, dtype=np.int64)
    if isinstance(op, MinusIdOn):
        for index in op.blocks:
            b = _block(l, index)
            m[b.offset : b.stop, b.offset : b.stop] *= -1
    elif isinstance(op, Swap):
        op = Cycle((op.first, op.second))
        return _op_matrix(l, op)
    elif isinstance(op, Cycle):
        blocks = [_block(l, index) for index in op.blocks]
        if len(set(op.blocks)) != len(op.blocks):
            raise IncompatibleBlocksError(
                f"Repeated block in cycle {list(op.blocks)}", "block_builder"
            )
        if len(blocks) < 2:
            return m
        _require_isomorphic(blocks)
        for b in blocks:
            m[b.offset : b.stop, b.offset : b.stop] = 0
        for source, target in zip(blocks, blocks[1:] + blocks[:1]):
            m[target.offset : target.stop, source.offset : source.stop] = np.eye(
                source.size, dtype=np.int64
            )
    elif isinstance(op, ActOn):
        local = np.array(op.rows, dtype=np.int64)
        for index in op.blocks:
            b = _block(l, index)
            if local.shape != (b.size, b.size):
                raise IncompatibleBlocksError(
                    f"Local matrix of shape {local.shape} does not fit block {index} "
                    f"of size {b.size}",
                    "block_builder",
                )
            m[b.offset : b.stop, b.offset : b.stop] = local
    elif isinstance(op, ReflectionOp):
        return reflection(l, op.vector).matrix
    elif isinstance(op, MatrixOp):
        return verify_isometry(l, op.rows).matrix
    else:  # pragma: no cover
        raise TypeError(f"Unknown block op {op!r}")
    return m


def block_builder(l: Lattice, ops: Sequence[BlockOp]) -> Isometry:
    """Compose block operations into one verified isometry.

    Args:
        l: Lattice whose blocks the operations refer to
        ops: Operations in application order; empty gives the identity

    Returns:
        Isometry

    Raises:
        IncompatibleBlocksError: Missing, repeated or non-isomorphic blocks
        NotAnIsometryError: If the assembled matrix does not preserve the form
    """
    total = np.eye(l.rank, dtype=np.int64)
    for op in ops:
        total = as_int_matrix(int_matmul(_op_matrix(l, op), total))
    return verify_isometry(l, total)


def minus_id_on(*blocks: int) -> MinusIdOn:
    return MinusIdOn(tuple(blocks))


def cycle(blocks: Sequence[int]) -> Cycle:
    return Cycle(tuple(blocks))


def act_on(blocks: Sequence[int], rows: Sequence[Sequence[int]]) -> ActOn:
    return ActOn(tuple(blocks), tuple(tuple(r) for r in rows))


def blocks_of_kind(l: Lattice, label: str) -> List[int]:
    """Indices of blocks with the given label (``"H"``, ``"-E8"``, ``"<-1>"``...)."""
    return [b.index for b in l.blocks if b.label == label]
