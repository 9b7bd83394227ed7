"""Tests for the exact representation oracle against the numeric decomposition."""

from math import lcm

import numpy as np
import pytest

from swobstruct.errors import NotFiniteOrderError
from swobstruct.isometry.base import ActionShape, make_action, verify_isometry
from swobstruct.lattice.base import Summand, make_lattice
from swobstruct.representations.decomposition import (
    CyclicMults,
    count_root_multiplicities,
    decompose_cyclic,
    mults_from_root_counts,
)
from swobstruct.representations.subspace import PositiveSubspace, invariant_positive_subspace
from swobstruct.search.oracle import oracle_rep_decomposition

# Signed cycles (length, sign product) whose order divides k; order is the
# length when the sign product is +1 and twice the length otherwise.
CYCLES_DIVIDING = {
    2: [(1, 1), (1, -1), (2, 1)],
    4: [(1, 1), (1, -1), (2, 1), (2, -1), (4, 1)],
    6: [(1, 1), (1, -1), (2, 1), (3, 1), (3, -1)],
    8: [(1, 1), (1, -1), (2, 1), (2, -1), (4, 1), (4, -1)],
}


def _signed_permutation(rng, n):
    m = np.zeros((n, n), dtype=np.int64)
    m[rng.permutation(n), np.arange(n)] = rng.choice([-1, 1], size=n)
    return m


def _matrix_order(m):
    eye = np.eye(m.shape[0], dtype=np.int64)
    power = m.copy()
    n = 1
    while not np.array_equal(power, eye):
        power = power @ m
        n += 1
    return n


def _signed_cycles(rng, n, k):
    """Block-diagonal signed cycles on n coordinates, each of order dividing k."""
    m = np.zeros((n, n), dtype=np.int64)
    i = 0
    while i < n:
        options = [c for c in CYCLES_DIVIDING[k] if i + c[0] <= n]
        length, sign = options[int(rng.integers(len(options)))]
        for j in range(length - 1):
            m[i + j + 1, i + j] = 1
        m[i, i + length - 1] = sign
        i += length
    return m


def _conjugated_seed(rng, k, unimodular):
    """A block-diagonal order-k seed on Diag(1^p, (-1)^q), written in a random basis.

    Returns the lattice, the conjugated map, and the seed's block on the
    positive coordinates, whose representation is the one on V.
    """
    while True:
        n = int(rng.integers(1, 11))
        p = int(rng.integers(1, n + 1))
        positive = _signed_cycles(rng, p, k)
        negative = _signed_cycles(rng, n - p, k)
        seed = np.zeros((n, n), dtype=np.int64)
        seed[:p, :p] = positive
        seed[p:, p:] = negative
        if _matrix_order(seed) == k:
            break
    u, inv = unimodular(n)
    gram = np.diag([1] * p + [-1] * (n - p)).astype(np.int64)
    l = make_lattice([Summand.gram((u.T @ gram @ u).tolist())])
    f = verify_isometry(l, (inv @ seed @ u).tolist())
    return l, f, positive


class TestOracle:
    """Test decompositions read off the characteristic polynomial."""

    def test_quarter_turn(self):
        """Test a rotation by 90 degrees is C_1."""
        assert oracle_rep_decomposition([[0, -1], [1, 0]], 4) == CyclicMults.build(4, 0, 0, {1: 1})

    def test_minus_identity(self):
        """Test -I is three sign lines."""
        assert oracle_rep_decomposition(-np.eye(3, dtype=int), 2) == CyclicMults.build(2, 0, 3, {})

    def test_order_six_rotation(self):
        """Test a rotation of order 6 folds into C_1 for k = 6 and C_2 for k = 12."""
        rotation = [[1, -1], [1, 0]]
        assert oracle_rep_decomposition(rotation, 6) == CyclicMults.build(6, 0, 0, {1: 1})
        assert oracle_rep_decomposition(rotation, 12) == CyclicMults.build(12, 0, 0, {2: 1})

    def test_primitive_fifth_roots(self):
        """Test primitive fifth roots land in C_2 + C_4 when k = 10."""
        companion = [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]
        assert oracle_rep_decomposition(companion, 10) == CyclicMults.build(10, 0, 0, {2: 1, 4: 1})

    def test_empty(self):
        """Test the zero-dimensional representation."""
        assert oracle_rep_decomposition([], 4).dim == 0

    def test_not_finite_order(self):
        """Test a unipotent matrix."""
        with pytest.raises(NotFiniteOrderError):
            oracle_rep_decomposition([[1, 1], [0, 1]], 4)

    def test_order4_on_v(self, order4_example):
        """Test the exact restriction of the order-4 map to an explicit V."""
        l = order4_example.lattice
        f = order4_example.action.generators[0]
        positive = []
        for h in range(3):
            v = [0] * l.rank
            v[2 * h] = v[2 * h + 1] = 1
            positive.append(v)
        subspace = PositiveSubspace.from_vectors(l, positive)
        restriction = subspace.rational_restriction(f)

        assert oracle_rep_decomposition(restriction, 4).describe() == "R_- + C_1"

    def test_agrees_with_root_counts(self, rng):
        """Test the oracle against eigenvalue counting on random signed permutations."""
        for _ in range(25):
            n = int(rng.integers(1, 7))
            m = _signed_permutation(rng, n)
            k = lcm(_matrix_order(m), 2)
            numeric = mults_from_root_counts(count_root_multiplicities(m.astype(float), k), k)
            assert oracle_rep_decomposition(m, k) == numeric

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [2, 4, 6, 8])
    def test_agrees_with_numeric(self, k, rng, unimodular):
        """Test invariant V and the cyclic decomposition on conjugated block seeds."""
        for _ in range(50):
            l, f, positive = _conjugated_seed(rng, k, unimodular)
            action = make_action(ActionShape.CYCLIC, [f], k=k, strict=False)
            subspace = invariant_positive_subspace(l, action)

            assert subspace.dim == positive.shape[0]
            assert decompose_cyclic(l, f, k, subspace) == oracle_rep_decomposition(positive, k)
