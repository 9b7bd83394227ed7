"""Integral unimodular lattices assembled from named summands."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from swobstruct.errors import (
    DimensionMismatchError,
    InvalidSummandError,
    NonSymmetricError,
    NonUnimodularError,
)
from swobstruct.utils.exact import inertia, qq_matrix, to_fractions
from swobstruct.utils.gf2 import gf2_solve
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)

# Cartan matrix of E8: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
E8_GRAM = np.array(
    [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ],
    dtype=np.int64,
)

H_GRAM = np.array([[0, 1], [1, 0]], dtype=np.int64)


class SummandKind(str, Enum):
    """Kinds of orthogonal summands."""

    DIAG = "diag"
    H = "H"
    E8 = "E8"
    GRAM = "gram"


class Parity(str, Enum):
    """Type of a unimodular form."""

    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Summand:
    """One named summand, repeated ``count`` times.

    ``entries`` is used by DIAG, ``sign`` by E8 and ``matrix`` by GRAM.
    """

    kind: SummandKind
    count: int = 1
    entries: Tuple[int, ...] = ()
    sign: int = 1
    matrix: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        """Validate summand data."""
        if self.count < 1:
            raise InvalidSummandError(
                f"Summand count must be positive, got {self.count}", "make_summand"
            )
        if self.kind == SummandKind.DIAG:
            if not self.entries:
                raise InvalidSummandError("Diag summand needs entries", "make_summand")
            bad = [e for e in self.entries if e not in (1, -1)]
            if bad:
                raise InvalidSummandError(
                    f"Diag entries must be +1 or -1, got {bad[0]}", "make_summand"
                )
        elif self.kind == SummandKind.E8:
            if self.sign not in (1, -1):
                raise InvalidSummandError(
                    f"E8 sign must be +1 or -1, got {self.sign}", "make_summand"
                )
        elif self.kind == SummandKind.GRAM:
            _validate_gram(self.matrix)

    @classmethod
    def diag(cls, entries: Sequence[int], count: int = 1) -> "Summand":
        return cls(SummandKind.DIAG, count=count, entries=tuple(int(e) for e in entries))

    @classmethod
    def hyperbolic(cls, count: int = 1) -> "Summand":
        return cls(SummandKind.H, count=count)

    @classmethod
    def e8(cls, sign: int = 1, count: int = 1) -> "Summand":
        return cls(SummandKind.E8, count=count, sign=sign)

    @classmethod
    def gram(cls, matrix: Sequence[Sequence[int]], count: int = 1) -> "Summand":
        return cls(
            SummandKind.GRAM,
            count=count,
            matrix=tuple(tuple(int(x) for x in row) for row in matrix),
        )

    def block_grams(self) -> List[Tuple[str, np.ndarray]]:
        """Labelled Gram matrices of the blocks this summand expands to.

        Every copy is one block, except that each Diag entry is its own
        rank-one block.
        """
        if self.kind == SummandKind.DIAG:
            one_copy = [(f"<{e:+d}>", np.array([[e]], dtype=np.int64)) for e in self.entries]
        elif self.kind == SummandKind.H:
            one_copy = [("H", H_GRAM.copy())]
        elif self.kind == SummandKind.E8:
            label = "E8" if self.sign == 1 else "-E8"
            one_copy = [(label, self.sign * E8_GRAM)]
        else:
            one_copy = [("Gram", np.array(self.matrix, dtype=np.int64))]
        return one_copy * self.count

    def to_dict(self) -> Dict[str, object]:
        """Document form of this summand."""
        data: Dict[str, object] = {"kind": self.kind.value}
        if self.kind == SummandKind.DIAG:
            data["entries"] = list(self.entries)
        elif self.kind == SummandKind.E8:
            data["sign"] = self.sign
        elif self.kind == SummandKind.GRAM:
            data["matrix"] = [list(row) for row in self.matrix]
        data["count"] = self.count
        return data


def _validate_gram(matrix: Tuple[Tuple[int, ...], ...]) -> None:
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise InvalidSummandError("Gram matrix must be square and non-empty", "make_summand")
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise NonSymmetricError(
                    f"Gram matrix not symmetric at ({i}, {j})",
                    "make_summand",
                    details={"row": i, "column": j},
                )
    det = DomainMatrix.from_list([list(row) for row in matrix], ZZ).det()
    if abs(int(det)) != 1:
        raise NonUnimodularError(
            f"Gram matrix has determinant {det}, expected +1 or -1",
            "make_summand",
            details={"determinant": int(det)},
        )


@dataclass(frozen=True, eq=False)
class Block:
    """A diagonal block of the assembled Gram matrix."""

    index: int
    offset: int
    size: int
    label: str
    gram: np.ndarray

    @property
    def stop(self) -> int:
        return self.offset + self.size


@dataclass(frozen=True, eq=False)
class Lattice:
    """Unimodular lattice with its assembled Gram matrix and signature data."""

    summands: Tuple[Summand, ...]
    gram: np.ndarray
    blocks: Tuple[Block, ...]
    b_plus: int
    b_minus: int
    parity: Parity

    @property
    def rank(self) -> int:
        return int(self.gram.shape[0])

    @property
    def sigma(self) -> int:
        return self.b_plus - self.b_minus

    @cached_property
    def gram_inverse(self) -> np.ndarray:
        """Exact inverse of the Gram matrix (integral by unimodularity)."""
        inverse = np.zeros_like(self.gram)
        for block in self.blocks:
            rows = to_fractions(qq_matrix(block.gram).inv())
            inverse[block.offset : block.stop, block.offset : block.stop] = [
                [int(x) for x in row] for row in rows
            ]
        return inverse

    @cached_property
    def characteristic_class_mod2(self) -> np.ndarray:
        """The class w in F2^n such that c is characteristic iff c = w mod 2."""
        w = np.zeros(self.rank, dtype=np.uint8)
        for block in self.blocks:
            solution = gf2_solve(block.gram, np.diag(block.gram))
            if solution is None:  # pragma: no cover - unimodular blocks are invertible mod 2
                raise NonUnimodularError("Block is singular mod 2", "characteristic_class_mod2")
            w[block.offset : block.stop] = solution
        return w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def describe(self) -> str:
        """Short human-readable description, e.g. ``3H + -E8 + <-1>``."""
        parts = []
        for s in self.summands:
            if s.kind == SummandKind.DIAG:
                name = "Diag(" + ",".join(f"{e:+d}" for e in s.entries) + ")"
            elif s.kind == SummandKind.E8:
                name = "E8" if s.sign == 1 else "-E8"
            elif s.kind == SummandKind.H:
                name = "H"
            else:
                name = f"Gram[{len(s.matrix)}]"
            parts.append(f"{s.count}{name}" if s.count > 1 else name)
        return " + ".join(parts)


def make_lattice(summands: Sequence[Summand]) -> Lattice:
    """Assemble a block-diagonal unimodular lattice.

    The signature is computed exactly per block and summed.

    Args:
        summands: Ordered summands; their order fixes the basis

    Returns:
        Lattice

    Raises:
        InvalidSummandError: If no summands are given
    """
    if not summands:
        raise InvalidSummandError("A lattice needs at least one summand", "make_lattice")

    labelled = [bg for s in summands for bg in s.block_grams()]
    rank = sum(g.shape[0] for _, g in labelled)
    gram = np.zeros((rank, rank), dtype=np.int64)
    blocks = []
    offset = 0
    inertia_cache: Dict[Tuple[int, bytes], Tuple[int, int, int]] = {}
    b_plus = b_minus = 0
    for index, (label, g) in enumerate(labelled):
        size = g.shape[0]
        gram[offset : offset + size, offset : offset + size] = g
        blocks.append(Block(index, offset, size, label, g))
        key = (size, g.tobytes())
        if key not in inertia_cache:
            inertia_cache[key] = inertia(g.tolist())
        pos, neg, _ = inertia_cache[key]
        b_plus += pos
        b_minus += neg
        offset += size

    gram.flags.writeable = False
    parity = Parity.EVEN if all(int(x) % 2 == 0 for x in np.diag(gram)) else Parity.ODD
    lattice = Lattice(
        summands=tuple(summands),
        gram=gram,
        blocks=tuple(blocks),
        b_plus=b_plus,
        b_minus=b_minus,
        parity=parity,
    )
    logger.debug(
        "Lattice assembled",
        rank=rank,
        b_plus=b_plus,
        b_minus=b_minus,
        parity=parity.value,
    )
    return lattice


def vector(l: Lattice, coords: Sequence[int]) -> np.ndarray:
    """Validated, read-only integer coordinate vector of ``l``."""
    v = np.array([int(x) for x in coords], dtype=np.int64)
    if v.shape != (l.rank,):
        raise DimensionMismatchError(
            f"Vector has length {v.shape[0] if v.ndim else 0}, lattice rank is {l.rank}",
            "vector",
        )
    v.flags.writeable = False
    return v


def _check_dim(l: Lattice, v: Sequence[int], operation: str) -> np.ndarray:
    arr = np.asarray(v, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] != l.rank:
        raise DimensionMismatchError(
            f"Vector of length {arr.size} does not match lattice rank {l.rank}",
            operation,
        )
    return arr


def inner(l: Lattice, u: Sequence[int], v: Sequence[int]) -> int:
    """Exact pairing ``u^T G v``."""
    a = _check_dim(l, u, "inner")
    b = _check_dim(l, v, "inner")
    return int(sum(int(x) * int(y) for x, y in zip(a, l.gram @ b)))


def square(l: Lattice, v: Sequence[int]) -> int:
    """Exact square ``v^T G v``."""
    return inner(l, v, v)


def is_characteristic(l: Lattice, c: Sequence[int]) -> bool:
    """Whether ``<c, b_i> = <b_i, b_i> mod 2`` for every basis vector ``b_i``."""
    arr = _check_dim(l, c, "is_characteristic")
    return bool(np.all((l.gram @ arr - np.diag(l.gram)) % 2 == 0))
