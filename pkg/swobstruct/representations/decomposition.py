"""Decomposition of the action on V into real irreducibles."""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from swobstruct.errors import (
    EigenvalueNotPlusMinusOneError,
    InternalToleranceFailureError,
    MultiplicityNotIntegralError,
    NotCommutingError,
    NotInvolutionError,
    NotSimultaneouslyDiagonalizableError,
    OrderExceedsBoundError,
    WrongOrderError,
)
from swobstruct.isometry.base import Isometry, commute, is_involution, order
from swobstruct.lattice.base import Lattice
from swobstruct.representations.subspace import (
    PositiveSubspace,
    positive_index_on,
    simultaneous_eigenspaces,
)
from swobstruct.utils.config import get_settings
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class InvolutionUV:
    """Multiplicities of the trivial (u) and sign (v) representations."""

    u: int
    v: int

    @property
    def dim(self) -> int:
        return self.u + self.v

    def to_dict(self) -> Dict[str, int]:
        return {"u": self.u, "v": self.v}


@dataclass(frozen=True)
class CyclicMults:
    """Multiplicities of R, R_- and C_d (0 < d < k/2) for an order-k action."""

    k: int
    m_triv: int
    m_sign: int
    m_d: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        """Validate multiplicities."""
        if self.k < 2 or self.k % 2:
            raise ValueError(f"k must be even and >= 2, got {self.k}")
        values = [self.m_triv, self.m_sign] + [m for _, m in self.m_d]
        if any(v < 0 for v in values):
            raise ValueError("Multiplicities must be non-negative")
        half = self.k // 2
        if any(not 0 < d < half for d, _ in self.m_d):
            raise ValueError(f"Complex summands need 0 < d < {half}")

    @classmethod
    def build(cls, k: int, m_triv: int, m_sign: int, m_d: Dict[int, int]) -> "CyclicMults":
        return cls(k, m_triv, m_sign, tuple(sorted((d, m) for d, m in m_d.items() if m)))

    @property
    def dim(self) -> int:
        return self.m_triv + self.m_sign + 2 * sum(m for _, m in self.m_d)

    def to_dict(self) -> Dict[str, object]:
        return {
            "k": self.k,
            "m_triv": self.m_triv,
            "m_sign": self.m_sign,
            "m_d": {str(d): m for d, m in self.m_d},
        }

    def describe(self) -> str:
        """Representation written as a sum, e.g. ``R_- + C_1``."""
        parts = []
        for name, mult in (("R", self.m_triv), ("R_-", self.m_sign)):
            if mult:
                parts.append(name if mult == 1 else f"{mult}{name}")
        for d, mult in self.m_d:
            parts.append(f"C_{d}" if mult == 1 else f"{mult}C_{d}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class EpsMatrix:
    """Sign exponents: ``eps[i][j] = 1`` iff f_i negates the j-th common eigenvector."""

    eps: Tuple[Tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.eps)

    def to_dict(self) -> Dict[str, object]:
        return {"eps": [list(row) for row in self.eps]}


@dataclass(frozen=True)
class KleinPQRS:
    """Positive indices on E(+,+), E(-,+), E(+,-), E(-,-) (signs of f1, f2)."""

    p: int
    q: int
    r: int
    s: int

    @property
    def dim(self) -> int:
        return self.p + self.q + self.r + self.s

    def to_dict(self) -> Dict[str, int]:
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}


def _positive_indices(l: Lattice, generators: Sequence[Isometry]) -> Dict[Tuple[int, ...], int]:
    return {
        signs: positive_index_on(l, basis) for signs, basis in simultaneous_eigenspaces(generators)
    }


def _check_dim(total: int, subspace: PositiveSubspace, operation: str) -> None:
    if total != subspace.dim:
        raise InternalToleranceFailureError(
            f"Decomposition has dimension {total}, V has dimension {subspace.dim}",
            operation,
        )


def decompose_involution(l: Lattice, f: Isometry, subspace: PositiveSubspace) -> InvolutionUV:
    """Positive indices of the form on ``ker(f - I)`` and ``ker(f + I)``.

    Raises:
        NotInvolutionError: If ``f^2 != I``
    """
    if not is_involution(f):
        raise NotInvolutionError("Isometry does not square to the identity", "decompose_involution")
    indices = _positive_indices(l, [f])
    result = InvolutionUV(u=indices.get((1,), 0), v=indices.get((-1,), 0))
    _check_dim(result.dim, subspace, "decompose_involution")
    return result


def decompose_klein(
    l: Lattice, f1: Isometry, f2: Isometry, subspace: PositiveSubspace
) -> KleinPQRS:
    """Positive indices on the four simultaneous eigenspaces of two commuting involutions.

    Raises:
        NotInvolutionError: If either map does not square to the identity
        NotCommutingError: If the maps do not commute
    """
    for name, f in (("f1", f1), ("f2", f2)):
        if not is_involution(f):
            raise NotInvolutionError(f"{name} does not square to the identity", "decompose_klein")
    if not commute(f1, f2):
        raise NotCommutingError("f1 and f2 do not commute", "decompose_klein")
    indices = _positive_indices(l, [f1, f2])
    result = KleinPQRS(
        p=indices.get((1, 1), 0),
        q=indices.get((-1, 1), 0),
        r=indices.get((1, -1), 0),
        s=indices.get((-1, -1), 0),
    )
    _check_dim(result.dim, subspace, "decompose_klein")
    return result


def count_root_multiplicities(fv: np.ndarray, k: int) -> List[int]:
    """Number of eigenvalues of ``fv`` at each k-th root of unity.

    Entry ``d`` counts eigenvalues equal to ``exp(2 pi i d / k)``. The
    clustering is cross-checked against the character inner products
    ``(1/k) sum_j tr(fv^j) zeta^(-dj)``.

    Raises:
        MultiplicityNotIntegralError: If an eigenvalue is not within tolerance
            of a k-th root of unity, or the two counts disagree
    """
    settings = get_settings()
    dim = fv.shape[0]
    roots = np.exp(2j * np.pi * np.arange(k) / k)
    counts = [0] * k
    for eigenvalue in np.linalg.eigvals(fv) if dim else []:
        distances = np.abs(roots - eigenvalue)
        d = int(np.argmin(distances))
        if distances[d] > settings.root_match_tolerance:
            raise MultiplicityNotIntegralError(
                f"Eigenvalue {eigenvalue:.6g} is not a {k}-th root of unity",
                "decompose_cyclic",
                details={"distance": float(distances[d])},
            )
        counts[d] += 1

    traces = []
    power = np.eye(dim)
    for _ in range(k):
        traces.append(np.trace(power))
        power = power @ fv
    for d in range(k):
        character = sum(traces[j] * np.conj(roots[(d * j) % k]) for j in range(k)) / k
        nearest = round(character.real)
        off = max(abs(character.real - nearest), abs(character.imag))
        if off > settings.multiplicity_tolerance or nearest != counts[d]:
            raise MultiplicityNotIntegralError(
                f"Multiplicity of exp(2 pi i {d}/{k}) is {character:.6g}, "
                f"eigenvalue count is {counts[d]}",
                "decompose_cyclic",
                details={"d": d, "character": [character.real, character.imag]},
            )
    logger.debug("Root multiplicities", k=k, counts=counts)
    return counts


def mults_from_root_counts(counts: Sequence[int], k: int) -> CyclicMults:
    """Fold k-th root counts into real irreducible multiplicities."""
    half = k // 2
    for d in range(1, half):
        if counts[d] != counts[k - d]:
            raise MultiplicityNotIntegralError(
                f"Conjugate eigenvalue counts differ for d = {d}: {counts[d]} vs {counts[k - d]}",
                "decompose_cyclic",
            )
    return CyclicMults.build(k, counts[0], counts[half], {d: counts[d] for d in range(1, half)})


def decompose_cyclic(l: Lattice, f: Isometry, k: int, subspace: PositiveSubspace) -> CyclicMults:
    """Multiplicities of R, R_- and C_d of ``<f>`` on V.

    Raises:
        WrongOrderError: If ``f`` does not have order exactly ``k``
        MultiplicityNotIntegralError: On a validation failure
    """
    if k < 2 or k % 2:
        raise WrongOrderError(f"k must be even and >= 2, got {k}", "decompose_cyclic")
    try:
        n = order(f, max_order=k)
    except OrderExceedsBoundError as e:
        raise WrongOrderError(f"Isometry does not have order {k}", "decompose_cyclic", original_error=e) from e
    if n != k:
        raise WrongOrderError(f"Isometry has order {n}, expected {k}", "decompose_cyclic")
    fv = subspace.restriction(f)
    result = mults_from_root_counts(count_root_multiplicities(fv, k), k)
    if result.dim != subspace.dim:
        raise MultiplicityNotIntegralError(
            f"Multiplicities sum to {result.dim}, V has dimension {subspace.dim}",
            "decompose_cyclic",
        )
    return result


def _exact_signs(matrices: Sequence[Sequence[Sequence[object]]]) -> List[Tuple[int, ...]]:
    """Sign patterns when every restriction is diagonal, else empty."""
    dim = len(matrices[0])
    for m in matrices:
        if any(m[i][j] != 0 for i in range(dim) for j in range(dim) if i != j):
            return []
    return [tuple(int(m[j][j]) for m in matrices) for j in range(dim)]


def _decoded_signs(matrices: Sequence[np.ndarray]) -> List[Tuple[int, ...]]:
    """Sign patterns read off the spectrum of ``sum_i 2^i A_i``.

    On a common eigenvector with signs ``s_i`` the sum acts by
    ``sum_i 2^i s_i``, and distinct patterns give distinct values.
    """
    d = len(matrices)
    combined = sum((2**i) * m for i, m in enumerate(matrices))
    offset = 2**d - 1
    tol = get_settings().root_match_tolerance
    patterns = []
    for eigenvalue in np.linalg.eigvals(combined):
        if abs(eigenvalue.imag) > tol or abs(eigenvalue.real - round(eigenvalue.real)) > tol:
            raise NotSimultaneouslyDiagonalizableError(
                f"Unexpected eigenvalue {eigenvalue:.6g} of the combined restriction",
                "decompose_diagonal_commuting",
            )
        code = round(eigenvalue.real) + offset
        if code % 2 or not 0 <= code <= 2 * offset:
            raise NotSimultaneouslyDiagonalizableError(
                f"Eigenvalue {eigenvalue.real:.6g} is not a signed sum of powers of two",
                "decompose_diagonal_commuting",
            )
        bits = code // 2
        patterns.append(tuple(1 if (bits >> i) & 1 else -1 for i in range(d)))
    return patterns


def decompose_diagonal_commuting(
    l: Lattice, fs: Sequence[Isometry], subspace: PositiveSubspace
) -> EpsMatrix:
    """Common eigenbasis signs of commuting maps acting on V by +-1.

    Columns are listed in descending lexicographic order.

    Raises:
        EigenvalueNotPlusMinusOneError: If some ``f_i|V`` does not square to I
        NotSimultaneouslyDiagonalizableError: If the restrictions do not commute
    """
    if not fs:
        return EpsMatrix(())
    dim = subspace.dim
    tol = get_settings().root_match_tolerance
    exact = [subspace.rational_restriction(f) for f in fs]
    if all(m is not None for m in exact):
        patterns = _exact_signs(exact)  # type: ignore[arg-type]
    else:
        patterns = []
    restrictions = [subspace.restriction(f) for f in fs]
    eye = np.eye(dim)
    for i, a in enumerate(restrictions):
        if np.abs(a @ a - eye).max(initial=0.0) > tol:
            raise EigenvalueNotPlusMinusOneError(
                f"Generator {i} has an eigenvalue other than +-1 on V",
                "decompose_diagonal_commuting",
                details={"generator": i},
            )
    for i in range(len(restrictions)):
        for j in range(i + 1, len(restrictions)):
            a, b = restrictions[i], restrictions[j]
            if np.abs(a @ b - b @ a).max(initial=0.0) > tol:
                raise NotSimultaneouslyDiagonalizableError(
                    f"Generators {i} and {j} do not commute on V",
                    "decompose_diagonal_commuting",
                    details={"generators": [i, j]},
                )
    if not patterns:
        patterns = _decoded_signs(restrictions)
    columns = sorted((tuple(0 if s == 1 else 1 for s in p) for p in patterns), reverse=True)
    eps = tuple(tuple(col[i] for col in columns) for i in range(len(fs)))
    return EpsMatrix(eps)
