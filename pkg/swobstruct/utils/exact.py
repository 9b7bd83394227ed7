"""Exact rational and integer linear algebra helpers.

Rational work goes through sympy's ``DomainMatrix`` over ``QQ``; results are
handed back as ``fractions.Fraction`` lists so callers never see domain
elements. Integer matrix products stay in numpy and fall back to Python
integers when int64 could overflow.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = Union[int, Fraction]
RationalVector = List[Fraction]
RationalMatrix = List[List[Fraction]]

_INT64_SAFE = 2**62


def _to_qq(x: object) -> object:
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, (int, np.integer)):
        return QQ(int(x))
    raise TypeError(f"Cannot convert {type(x).__name__} to an exact rational")


def _from_qq(x: object) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))  # type: ignore[attr-defined]


def qq_matrix(rows: Union[np.ndarray, Sequence[Sequence[Scalar]]]) -> DomainMatrix:
    """Build a DomainMatrix over QQ from integer or Fraction rows."""
    rows_list = rows.tolist() if isinstance(rows, np.ndarray) else rows
    return DomainMatrix.from_list([[_to_qq(x) for x in row] for row in rows_list], QQ)


def to_fractions(matrix: DomainMatrix) -> RationalMatrix:
    """Convert a QQ DomainMatrix back to nested Fraction lists."""
    return [[_from_qq(x) for x in row] for row in matrix.to_list()]


def kernel(rows: Union[np.ndarray, Sequence[Sequence[Scalar]]], ncols: Optional[int] = None) -> List[RationalVector]:
    """Exact basis of ``{x : rows @ x = 0}``.

    Args:
        rows: Matrix rows (integers or Fractions)
        ncols: Column count, needed only when ``rows`` is empty

    Returns:
        List of basis vectors; empty when the kernel is trivial
    """
    if len(rows) == 0:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return to_fractions(qq_matrix(rows).nullspace())


def rank(rows: Union[np.ndarray, Sequence[Sequence[Scalar]]]) -> int:
    """Exact rank over QQ."""
    if len(rows) == 0:
        return 0
    return int(qq_matrix(rows).rank())


def columns_to_matrix(vectors: Sequence[Sequence[Scalar]], dim: int) -> DomainMatrix:
    """Stack vectors as the columns of a ``dim x len(vectors)`` QQ matrix."""
    if not vectors:
        return DomainMatrix.zeros((dim, 0), QQ)
    return qq_matrix(vectors).transpose()


def restricted_form(gram: np.ndarray, basis: Sequence[Sequence[Scalar]]) -> RationalMatrix:
    """Gram matrix ``B^T G B`` of the form restricted to span(basis)."""
    if not basis:
        return []
    b = columns_to_matrix(basis, gram.shape[0])
    g = qq_matrix(gram)
    return to_fractions(b.transpose() * g * b)


def congruence_diagonalize(
    form: Sequence[Sequence[Scalar]],
) -> Tuple[List[Fraction], RationalMatrix]:
    """Diagonalize a symmetric rational form by congruence.

    Symmetric Gaussian elimination. Zero pivots are repaired either by a
    symmetric swap with a later nonzero diagonal entry or, when the remaining
    diagonal vanishes, by adding a later coordinate with a nonzero coupling
    (the new pivot is then twice that coupling).

    Args:
        form: Symmetric square matrix

    Returns:
        ``(diagonal, columns)`` where ``columns[i]`` are coordinates of
        pairwise orthogonal vectors with ``columns[i]^T A columns[i] = diagonal[i]``
        and together they form a basis
    """
    n = len(form)
    a = [[Fraction(x) for x in row] for row in form]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]  # p[i] = i-th basis vector

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        p[i], p[j] = p[j], p[i]

    def add(target: int, source: int, factor: Fraction) -> None:
        # e_target += factor * e_source, applied on both sides
        for col in range(n):
            a[target][col] += factor * a[source][col]
        for row in range(n):
            a[row][target] += factor * a[row][source]
        p[target] = [x + factor * y for x, y in zip(p[target], p[source])]

    for i in range(n):
        if a[i][i] == 0:
            pivot_row = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if pivot_row is not None:
                swap(i, pivot_row)
            else:
                partner = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if partner is None:
                    continue
                add(i, partner, Fraction(1))
        pivot = a[i][i]
        for j in range(i + 1, n):
            if a[j][i] != 0:
                add(j, i, -a[j][i] / pivot)

    return [a[i][i] for i in range(n)], p


def inertia(form: Sequence[Sequence[Scalar]]) -> Tuple[int, int, int]:
    """Exact ``(positive, negative, zero)`` counts of a symmetric form."""
    diagonal, _ = congruence_diagonalize(form)
    pos = sum(1 for d in diagonal if d > 0)
    neg = sum(1 for d in diagonal if d < 0)
    return pos, neg, len(diagonal) - pos - neg


def positive_part(gram: np.ndarray, basis: Sequence[Sequence[Scalar]]) -> List[RationalVector]:
    """Basis of a maximal positive subspace of the form restricted to span(basis).

    Returns lattice-coordinate vectors that are pairwise orthogonal and of
    positive square.
    """
    if not basis:
        return []
    diagonal, columns = congruence_diagonalize(restricted_form(gram, basis))
    dim = gram.shape[0]
    result = []
    for d, coeffs in zip(diagonal, columns):
        if d > 0:
            result.append(
                [sum((c * b[k] for c, b in zip(coeffs, basis)), Fraction(0)) for k in range(dim)]
            )
    return result


def solve_in_span(
    basis: Sequence[Sequence[Scalar]], targets: Sequence[Sequence[Scalar]]
) -> Optional[RationalMatrix]:
    """Coefficients expressing each target in terms of ``basis``.

    Returns:
        Matrix ``C`` (len(basis) x len(targets)) with ``B C = T``, or None if
        some target leaves the span
    """
    if not targets:
        return []
    dim = len(targets[0])
    if not basis:
        return None if any(any(x != 0 for x in t) for t in targets) else []
    b = columns_to_matrix(basis, dim)
    t = columns_to_matrix(targets, dim)
    augmented = b.hstack(t)
    if augmented.rank() != b.rank():
        return None
    rref, pivots = augmented.rref()
    rows = to_fractions(rref)
    nb = len(basis)
    coeffs = [[Fraction(0)] * len(targets) for _ in range(nb)]
    for row_index, col in enumerate(pivots):
        if col >= nb:
            break
        for j in range(len(targets)):
            coeffs[col][j] = rows[row_index][nb + j]
    return coeffs


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product that never overflows silently."""
    if a.dtype == object or b.dtype == object:
        return np.dot(a.astype(object), b.astype(object))
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * max(a.shape[-1], 1)
    if bound < _INT64_SAFE:
        return a.astype(np.int64) @ b.astype(np.int64)
    return np.dot(a.astype(object), b.astype(object))


def as_int_matrix(m: np.ndarray) -> np.ndarray:
    """Downcast an object-dtype integer matrix to int64 when it fits."""
    if m.dtype != object:
        return m.astype(np.int64)
    if m.size == 0 or int(np.abs(m).max()) < _INT64_SAFE:
        return m.astype(np.int64)
    return m
