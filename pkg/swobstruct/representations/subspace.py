"""Group-invariant maximal positive-definite subspaces.

Actions whose generators are commuting involutions get an exact answer: the
simultaneous +-1 eigenspaces are pairwise orthogonal and nondegenerate, so
the positive parts of the eigenspaces add up to a maximal positive subspace.
Every other finite action goes through the numeric path: average a
positive-definite auxiliary form over the group and keep the positive
generalized eigenvectors of the lattice form against it.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from swobstruct.errors import (
    DimensionMismatchError,
    InputError,
    InternalToleranceFailureError,
)
from swobstruct.isometry.base import GroupAction, Isometry, is_involution
from swobstruct.lattice.base import Lattice
from swobstruct.utils.config import get_settings
from swobstruct.utils.exact import (
    RationalMatrix,
    RationalVector,
    inertia,
    int_matmul,
    kernel,
    positive_part,
    restricted_form,
    solve_in_span,
)
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class PositiveSubspace:
    """Basis of a maximal positive-definite subspace V of H^2 (x) R.

    ``basis`` holds the vectors as rows (float); ``rational_basis`` is set when
    V was computed exactly.
    """

    lattice: Lattice
    basis: np.ndarray
    rational_basis: Optional[Tuple[Tuple[Fraction, ...], ...]] = None

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def exact(self) -> bool:
        return self.rational_basis is not None

    @classmethod
    def from_rational(cls, l: Lattice, vectors: Sequence[Sequence[Fraction]]) -> "PositiveSubspace":
        rational = tuple(tuple(Fraction(x) for x in v) for v in vectors)
        floats = np.array([[float(x) for x in v] for v in rational], dtype=float).reshape(
            len(rational), l.rank
        )
        return cls(l, floats, rational)

    @classmethod
    def from_vectors(cls, l: Lattice, vectors: Sequence[Sequence[int]]) -> "PositiveSubspace":
        """Wrap explicitly given vectors after checking they span a maximal
        positive-definite subspace.

        Raises:
            DimensionMismatchError: Wrong vector length or count
            InputError: If the span is not positive definite
        """
        vs = [[Fraction(int(x)) for x in v] for v in vectors]
        if any(len(v) != l.rank for v in vs):
            raise DimensionMismatchError("Basis vector length differs from rank", "positive_subspace")
        if len(vs) != l.b_plus:
            raise DimensionMismatchError(
                f"Need {l.b_plus} vectors for a maximal positive subspace, got {len(vs)}",
                "positive_subspace",
            )
        pos, _, _ = inertia(restricted_form(l.gram, vs))
        if pos != len(vs):
            raise InputError("Vectors do not span a positive-definite subspace", "positive_subspace")
        return cls.from_rational(l, vs)

    def restricted_gram(self) -> np.ndarray:
        """Float Gram matrix of the form on V."""
        g = self.lattice.gram.astype(float)
        return self.basis @ g @ self.basis.T

    def rational_restriction(self, f: Isometry) -> Optional[RationalMatrix]:
        """Exact matrix of ``f|V`` in the rational basis, or None if V is not
        exact or not invariant under ``f``."""
        if self.rational_basis is None:
            return None
        rows = f.matrix.tolist()
        images = [
            [sum((Fraction(int(a)) * x for a, x in zip(row, v) if a), Fraction(0)) for row in rows]
            for v in self.rational_basis
        ]
        return solve_in_span(self.rational_basis, images)

    def restriction(self, f: Isometry) -> np.ndarray:
        """Matrix of ``f|V`` in this basis (columns are images of basis vectors).

        Raises:
            InternalToleranceFailureError: If V is not invariant under ``f``
        """
        exact = self.rational_restriction(f)
        if exact is not None:
            return np.array([[float(x) for x in row] for row in exact], dtype=float)
        if self.rational_basis is not None:
            raise InternalToleranceFailureError(
                "Subspace is not invariant under the isometry", "restriction"
            )
        b = self.basis.T
        image = f.matrix.astype(float) @ b
        coeffs, _, _, _ = np.linalg.lstsq(b, image, rcond=None)
        residual = float(np.abs(b @ coeffs - image).max(initial=0.0))
        scale = max(1.0, float(np.abs(image).max(initial=0.0)))
        tol = get_settings().root_match_tolerance
        logger.debug("Restriction residual", residual=residual, scale=scale)
        if residual > tol * scale:
            raise InternalToleranceFailureError(
                f"Subspace not invariant within tolerance (residual {residual:.3e})",
                "restriction",
                details={"residual": residual},
            )
        return coeffs

    def is_invariant_under(self, f: Isometry) -> bool:
        try:
            self.restriction(f)
        except InternalToleranceFailureError:
            return False
        return True


def simultaneous_eigenspaces(
    generators: Sequence[Isometry],
) -> List[Tuple[Tuple[int, ...], List[RationalVector]]]:
    """Nonzero simultaneous eigenspaces of commuting involutions.

    Sign patterns are visited in the order of ``itertools.product((1, -1))``.
    """
    l = generators[0].lattice
    eye = np.eye(l.rank, dtype=np.int64)
    spaces = []
    for signs in itertools.product((1, -1), repeat=len(generators)):
        rows = np.vstack([g.matrix - s * eye for g, s in zip(generators, signs)])
        basis = kernel(rows, ncols=l.rank)
        if basis:
            spaces.append((signs, basis))
    return spaces


def positive_index_on(l: Lattice, basis: Sequence[Sequence[Fraction]]) -> int:
    """Positive index of the form restricted to span(basis)."""
    if not basis:
        return 0
    return inertia(restricted_form(l.gram, basis))[0]


def _exact_subspace(l: Lattice, generators: Sequence[Isometry]) -> PositiveSubspace:
    vectors: List[RationalVector] = []
    for _, basis in simultaneous_eigenspaces(generators):
        vectors.extend(positive_part(l.gram, basis))
    if len(vectors) != l.b_plus:
        raise InternalToleranceFailureError(
            f"Eigenspace positive parts have total dimension {len(vectors)}, "
            f"expected b_plus = {l.b_plus}",
            "invariant_positive_subspace",
        )
    return PositiveSubspace.from_rational(l, vectors)


def averaged_form(action: GroupAction, seed: Optional[int] = None) -> np.ndarray:
    """Group average of a positive-definite auxiliary form.

    With no seed the auxiliary form is the identity and the sum is exact.
    """
    l = action.lattice
    elements = action.elements()
    if seed is None:
        total = np.zeros((l.rank, l.rank), dtype=object)
        for element in elements:
            total = total + int_matmul(element.matrix.T.copy(), element.matrix)
        return np.array(total, dtype=float) / len(elements)
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((l.rank, l.rank))
    g0 = a @ a.T + l.rank * np.eye(l.rank)
    total = np.zeros((l.rank, l.rank))
    for element in elements:
        m = element.matrix.astype(float)
        total += m.T @ g0 @ m
    return total / len(elements)


def _numeric_subspace(l: Lattice, action: GroupAction, seed: Optional[int]) -> PositiveSubspace:
    tol = get_settings().eigen_split_tolerance
    g = averaged_form(action, seed)
    eigenvalues, vectors = scipy.linalg.eigh(l.gram.astype(float), g)
    smallest = float(np.abs(eigenvalues).min(initial=np.inf))
    if smallest < tol:
        raise InternalToleranceFailureError(
            f"Generalized eigenvalue {smallest:.3e} too close to zero",
            "invariant_positive_subspace",
            details={"smallest": smallest},
        )
    positive = vectors[:, eigenvalues > tol]
    if positive.shape[1] != l.b_plus:
        raise InternalToleranceFailureError(
            f"Found {positive.shape[1]} positive directions, expected {l.b_plus}",
            "invariant_positive_subspace",
        )
    subspace = PositiveSubspace(l, positive.T.copy())
    for generator in action.generators:
        subspace.restriction(generator)
    return subspace


def invariant_positive_subspace(
    l: Lattice, action: GroupAction, seed: Optional[int] = None
) -> PositiveSubspace:
    """Compute a maximal positive-definite subspace preserved by ``action``.

    Args:
        l: Lattice with ``b_plus >= 1``
        action: Finite group action on ``l``
        seed: Optional seed for a random auxiliary form on the numeric path;
            the exact path ignores it

    Returns:
        PositiveSubspace of dimension ``b_plus``

    Raises:
        InputError: If ``b_plus = 0``
        NotFiniteOrderError: If the generated group is not finite
        InternalToleranceFailureError: On a numeric-path tolerance breach
    """
    if l.b_plus < 1:
        raise InputError("Lattice has b_plus = 0", "invariant_positive_subspace")
    if all(is_involution(g) for g in action.generators):
        logger.debug("Exact invariant subspace", shape=action.shape.value)
        return _exact_subspace(l, action.generators)
    logger.debug("Numeric invariant subspace", shape=action.shape.value, seed=seed)
    return _numeric_subspace(l, action, seed)
