"""Integer isometries of a lattice and finite group actions built from them."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from swobstruct.errors import (
    DimensionMismatchError,
    InvalidActionError,
    NonIntegralReflectionError,
    NotAnIsometryError,
    NotCommutingError,
    NotFiniteOrderError,
    NotInvolutionError,
    OrderExceedsBoundError,
    WrongOrderError,
    ZeroNormVectorError,
)
from swobstruct.lattice.base import Lattice, inner
from swobstruct.utils.config import get_settings
from swobstruct.utils.exact import RationalVector, as_int_matrix, int_matmul, kernel
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Isometry:
    """Integer matrix acting on coordinate columns and preserving the form.

    Build instances through ``verify_isometry`` (or the constructors in this
    package); the constructor itself does not re-check the Gram identity.
    """

    lattice: Lattice
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.matrix.flags.writeable = False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.lattice == other.lattice and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.lattice, tuple(int(x) for x in self.matrix.flat)))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        """Composition ``self o other`` (apply ``other`` first)."""
        _same_lattice(self, other, "compose")
        return Isometry(self.lattice, as_int_matrix(int_matmul(self.matrix, other.matrix)))

    compose = __matmul__

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.lattice.rank, dtype=np.int64)))

    def apply(self, v: Sequence[int]) -> np.ndarray:
        """Image of a coordinate vector."""
        arr = np.asarray(v, dtype=np.int64)
        if arr.shape != (self.lattice.rank,):
            raise DimensionMismatchError(
                f"Vector of length {arr.size} does not match rank {self.lattice.rank}",
                "apply",
            )
        return as_int_matrix(int_matmul(self.matrix, arr.reshape(-1, 1))).reshape(-1)

    def power(self, n: int) -> "Isometry":
        """``self`` composed with itself ``n`` times (``n >= 0``)."""
        if n < 0:
            return self.inverse().power(-n)
        result = identity(self.lattice)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def inverse(self) -> "Isometry":
        """Inverse isometry ``G^-1 M^T G``."""
        l = self.lattice
        m = int_matmul(int_matmul(l.gram_inverse, self.matrix.T.copy()), l.gram)
        return Isometry(l, as_int_matrix(m))

    def minus_identity(self) -> np.ndarray:
        return self.matrix - np.eye(self.lattice.rank, dtype=np.int64)


def _same_lattice(f: Isometry, g: Isometry, operation: str) -> None:
    if f.lattice.rank != g.lattice.rank or f.lattice != g.lattice:
        raise DimensionMismatchError("Isometries act on different lattices", operation)


def identity(l: Lattice) -> Isometry:
    """Identity isometry of ``l``."""
    return Isometry(l, np.eye(l.rank, dtype=np.int64))


def verify_isometry(l: Lattice, m: Sequence[Sequence[int]]) -> Isometry:
    """Wrap ``m`` as an isometry of ``l`` after checking ``m^T G m = G``.

    Args:
        l: Lattice
        m: Square integer matrix of size rank x rank

    Returns:
        Isometry

    Raises:
        DimensionMismatchError: If the matrix is not rank x rank
        NotAnIsometryError: With the first entry where the Gram identity fails
    """
    arr = np.array(m, dtype=object) if not isinstance(m, np.ndarray) else m
    if arr.ndim != 2 or arr.shape != (l.rank, l.rank):
        raise DimensionMismatchError(
            f"Matrix shape {arr.shape} does not match lattice rank {l.rank}",
            "verify_isometry",
        )
    arr = as_int_matrix(np.array([[int(x) for x in row] for row in arr.tolist()], dtype=object))
    pulled_back = int_matmul(int_matmul(arr.T.copy(), l.gram), arr)
    diff = np.argwhere(pulled_back != l.gram)
    if diff.size:
        i, j = (int(x) for x in diff[0])
        raise NotAnIsometryError(
            f"Matrix does not preserve the form: entry ({i}, {j}) of M^T G M is "
            f"{int(pulled_back[i, j])}, expected {int(l.gram[i, j])}",
            "verify_isometry",
            row=i,
            column=j,
            expected=int(l.gram[i, j]),
            actual=int(pulled_back[i, j]),
        )
    return Isometry(l, arr)


def reflection(l: Lattice, e: Sequence[int]) -> Isometry:
    """Reflection ``x -> x - (2<x,e>/e^2) e``.

    Raises:
        ZeroNormVectorError: If ``e^2 = 0``
        NonIntegralReflectionError: If the map is not integral on the basis
    """
    ev = np.asarray(e, dtype=np.int64)
    norm = inner(l, ev, ev)
    if norm == 0:
        raise ZeroNormVectorError("Cannot reflect in a vector of square zero", "reflection")
    numerator = 2 * np.outer(ev, l.gram @ ev).astype(object)
    if any(int(x) % norm for x in numerator.flat):
        raise NonIntegralReflectionError(
            f"Reflection in a vector of square {norm} is not integral",
            "reflection",
            details={"square": norm},
        )
    m = np.eye(l.rank, dtype=object) - numerator // norm
    return Isometry(l, as_int_matrix(m))


def order(f: Isometry, max_order: Optional[int] = None) -> int:
    """Least ``n >= 1`` with ``f^n = I``.

    Raises:
        OrderExceedsBoundError: If no such ``n <= max_order`` exists
    """
    bound = max_order if max_order is not None else get_settings().max_isometry_order
    if bound < 1:
        raise ValueError(f"max_order must be >= 1, got {bound}")
    eye = np.eye(f.lattice.rank, dtype=np.int64)
    current = f.matrix
    for n in range(1, bound + 1):
        if np.array_equal(current, eye):
            return n
        current = as_int_matrix(int_matmul(current, f.matrix))
    raise OrderExceedsBoundError(
        f"Isometry has no finite order up to {bound}",
        "order",
        details={"max_order": bound},
    )


def commute(f: Isometry, g: Isometry) -> bool:
    """Whether ``fg = gf`` entrywise."""
    _same_lattice(f, g, "commute")
    return bool(np.array_equal(int_matmul(f.matrix, g.matrix), int_matmul(g.matrix, f.matrix)))


def is_involution(f: Isometry) -> bool:
    """Whether ``f^2 = I`` (the identity counts)."""
    return (f @ f).is_identity


def fixed_sublattice(f: Isometry) -> List[RationalVector]:
    """Exact rational basis of ``ker(f - I)``; empty when only 0 is fixed."""
    return kernel(f.minus_identity(), ncols=f.lattice.rank)


class ActionShape(str, Enum):
    """Declared shape of the acting group."""

    Z2 = "Z2"
    CYCLIC = "cyclic"
    FREE_ABELIAN = "free-abelian"
    KLEIN = "klein"


@dataclass(frozen=True)
class GroupAction:
    """Finite generator list together with the declared group shape."""

    shape: ActionShape
    generators: Tuple[Isometry, ...]
    k: Optional[int] = None

    @property
    def lattice(self) -> Lattice:
        return self.generators[0].lattice

    @property
    def d(self) -> int:
        return len(self.generators)

    def problems(self) -> List[str]:
        """Violations of the shape invariants, empty when the action is valid."""
        found = []
        gens = self.generators
        if self.shape == ActionShape.Z2:
            if not is_involution(gens[0]):
                found.append("generator does not square to the identity")
            elif gens[0].is_identity:
                found.append("generator is the identity")
        elif self.shape == ActionShape.CYCLIC:
            if self.k is not None and (self.k < 4 or self.k % 2):
                found.append(f"declared k = {self.k} is not an even integer >= 4")
            try:
                n = order(gens[0])
            except OrderExceedsBoundError:
                found.append("generator has no finite order within the bound")
            else:
                if n != self.k:
                    found.append(f"generator has order {n}, declared {self.k}")
        elif self.shape == ActionShape.KLEIN:
            for i, g in enumerate(gens):
                if not is_involution(g):
                    found.append(f"generator {i} does not square to the identity")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not commute(gens[i], gens[j]):
                    found.append(f"generators {i} and {j} do not commute")
        return found

    def elements(self, max_elements: Optional[int] = None) -> List[Isometry]:
        """All elements of the generated group, identity first.

        Raises:
            NotFiniteOrderError: If the closure exceeds ``max_elements``
        """
        bound = max_elements if max_elements is not None else get_settings().max_group_elements
        seen = {identity(self.lattice)}
        ordered = [identity(self.lattice)]
        frontier = list(ordered)
        while frontier:
            new_frontier = []
            for element in frontier:
                for g in self.generators:
                    candidate = g @ element
                    if candidate not in seen:
                        seen.add(candidate)
                        ordered.append(candidate)
                        new_frontier.append(candidate)
                        if len(ordered) > bound:
                            raise NotFiniteOrderError(
                                f"Generated group has more than {bound} elements",
                                "group_elements",
                                details={"max_elements": bound},
                            )
            frontier = new_frontier
        return ordered


_GENERATOR_COUNTS = {ActionShape.Z2: 1, ActionShape.CYCLIC: 1, ActionShape.KLEIN: 2}


def make_action(
    shape: ActionShape,
    generators: Sequence[Isometry],
    k: Optional[int] = None,
    strict: bool = True,
) -> GroupAction:
    """Build a group action, validating the generator count always and the
    shape invariants when ``strict``.

    Raises:
        InvalidActionError: Wrong generator count, missing ``k``, an odd or
            small ``k`` in strict mode, or a strict-mode violation not
            covered below
        WrongOrderError: Strict mode, cyclic generator of the wrong order
        NotInvolutionError: Strict mode, non-involutive Z2/Klein generator
        NotCommutingError: Strict mode, non-commuting generators
    """
    shape = ActionShape(shape)
    gens = tuple(generators)
    if not gens:
        raise InvalidActionError("An action needs at least one generator", "make_action")
    expected = _GENERATOR_COUNTS.get(shape)
    if expected is not None and len(gens) != expected:
        raise InvalidActionError(
            f"Shape {shape.value} takes {expected} generator(s), got {len(gens)}",
            "make_action",
        )
    for g in gens[1:]:
        _same_lattice(gens[0], g, "make_action")
    if shape == ActionShape.CYCLIC:
        if k is None or k < 1:
            raise InvalidActionError(f"Cyclic actions need an order k >= 1, got {k}", "make_action")
        if strict and (k < 4 or k % 2):
            raise InvalidActionError(
                f"Cyclic actions need an even order k >= 4, got {k}", "make_action"
            )
    action = GroupAction(shape=shape, generators=gens, k=k if shape == ActionShape.CYCLIC else None)
    if strict:
        problems = action.problems()
        if problems:
            detail = "; ".join(problems)
            if "commute" in detail:
                raise NotCommutingError(detail, "make_action")
            if "order" in detail:
                raise WrongOrderError(detail, "make_action")
            if "square" in detail:
                raise NotInvolutionError(detail, "make_action")
            raise InvalidActionError(detail, "make_action")
    return action
