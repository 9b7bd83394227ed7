"""Linear algebra over GF(2) on numpy uint8 arrays."""

from typing import Optional, Tuple

import numpy as np


def _reduce(a: np.ndarray) -> Tuple[np.ndarray, list]:
    """Row-reduce a copy of ``a`` over GF(2); return it with its pivot columns."""
    work = (np.asarray(a, dtype=np.int64) & 1).astype(np.uint8, copy=True)
    m, n = work.shape
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        rows = np.where(work[r:, c] == 1)[0]
        if rows.size == 0:
            continue
        p = r + int(rows[0])
        if p != r:
            work[[r, p], :] = work[[p, r], :]
        ones = np.where(work[:, c] == 1)[0]
        ones = ones[ones != r]
        if ones.size:
            work[ones, :] ^= work[r, :]
        pivots.append(c)
        r += 1
    return work, pivots


def gf2_rank(a: np.ndarray) -> int:
    """Rank over GF(2)."""
    if np.asarray(a).size == 0:
        return 0
    return len(_reduce(a)[1])


def gf2_det(a: np.ndarray) -> int:
    """Determinant over GF(2) of a square matrix (1 for the empty matrix)."""
    a = np.asarray(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"Square matrix required, got shape {a.shape}")
    if a.shape[0] == 0:
        return 1
    return int(gf2_rank(a) == a.shape[0])


def gf2_solve(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """One solution of ``a x = b`` over GF(2), or None if inconsistent."""
    a = np.asarray(a)
    m, n = a.shape
    augmented = np.concatenate([np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64).reshape(m, 1)], axis=1)
    reduced, pivots = _reduce(augmented)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for row, col in enumerate(pivots):
        x[col] = reduced[row, n]
    return x
