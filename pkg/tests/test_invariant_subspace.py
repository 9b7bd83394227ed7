"""Tests for invariant positive subspaces and representation decompositions."""

import numpy as np
import pytest

from swobstruct.errors import (
    DimensionMismatchError,
    InputError,
    MultiplicityNotIntegralError,
    WrongOrderError,
)
from swobstruct.isometry.base import ActionShape, fixed_sublattice, make_action
from swobstruct.isometry.blocks import block_builder, minus_id_on
from swobstruct.lattice.base import Summand, make_lattice
from swobstruct.representations.decomposition import (
    CyclicMults,
    InvolutionUV,
    KleinPQRS,
    count_root_multiplicities,
    decompose_cyclic,
    decompose_diagonal_commuting,
    decompose_involution,
    decompose_klein,
    mults_from_root_counts,
)
from swobstruct.representations.subspace import (
    PositiveSubspace,
    averaged_form,
    invariant_positive_subspace,
)
from swobstruct.search.fixtures import E1E2_E1, E1E2_E2, build_example


class TestPositiveSubspace:
    """Test explicitly given subspaces."""

    def test_from_vectors(self, odd_13):
        """Test e1, e2 span a maximal positive subspace."""
        v = PositiveSubspace.from_vectors(odd_13, [E1E2_E1, E1E2_E2])

        assert v.dim == 2
        assert v.exact
        assert np.allclose(v.restricted_gram(), 2 * np.eye(2))

    def test_wrong_count(self, odd_13):
        """Test the vector count must equal b_plus."""
        with pytest.raises(DimensionMismatchError):
            PositiveSubspace.from_vectors(odd_13, [E1E2_E1])

    def test_not_positive(self, odd_13):
        """Test a span containing a negative vector."""
        negative = [0] * 12 + [1]
        with pytest.raises(InputError, match="positive-definite"):
            PositiveSubspace.from_vectors(odd_13, [E1E2_E1, negative])

    def test_rational_restriction(self, odd_13, reflections_e1e2):
        """Test the exact restriction of a reflection."""
        v = PositiveSubspace.from_vectors(odd_13, [E1E2_E1, E1E2_E2])
        restriction = v.rational_restriction(reflections_e1e2["e1"])
        assert restriction == [[-1, 0], [0, 1]]


class TestInvariantSubspace:
    """Test the exact and numeric paths."""

    def test_exact_path(self, z2_spin_example):
        """Test an involution gives an exact invariant subspace."""
        l = z2_spin_example.lattice
        f = z2_spin_example.action.generators[0]
        v = invariant_positive_subspace(l, z2_spin_example.action)

        assert v.exact
        assert v.dim == l.b_plus == 4
        assert v.is_invariant_under(f)

    def test_numeric_path(self, order4_example):
        """Test an order-4 action goes through the averaged form."""
        l = order4_example.lattice
        v = invariant_positive_subspace(l, order4_example.action)

        assert not v.exact
        assert v.dim == 3
        assert v.is_invariant_under(order4_example.action.generators[0])
        assert np.all(np.linalg.eigvalsh(v.restricted_gram()) > 0)

    def test_numeric_path_seeded(self, order4_example):
        """Test a random auxiliary form gives the same dimension."""
        v = invariant_positive_subspace(order4_example.lattice, order4_example.action, seed=7)
        assert v.dim == 3

    @pytest.mark.parametrize("example_id", ["order4", "z2k"])
    def test_decomposition_independent_of_seed(self, example_id):
        """Test random auxiliary forms give the same cyclic decomposition."""
        fixture = build_example(example_id)
        l, action = fixture.lattice, fixture.action
        f = action.generators[0]
        expected = decompose_cyclic(l, f, action.k, invariant_positive_subspace(l, action))

        for seed in (1, 7, 2024, 99991):
            subspace = invariant_positive_subspace(l, action, seed=seed)
            assert decompose_cyclic(l, f, action.k, subspace) == expected

    def test_averaged_form_invariant(self, order4_example):
        """Test the averaged form is symmetric, positive and invariant."""
        form = averaged_form(order4_example.action, seed=3)
        m = order4_example.action.generators[0].matrix.astype(float)

        assert np.allclose(form, form.T)
        assert np.all(np.linalg.eigvalsh(form) > 0)
        assert np.allclose(m.T @ form @ m, form)

    def test_b_plus_zero(self):
        """Test a negative definite lattice."""
        l = make_lattice([Summand.e8(sign=-1)])
        action = make_action(ActionShape.Z2, [block_builder(l, [minus_id_on(0)])])
        with pytest.raises(InputError, match="b_plus = 0"):
            invariant_positive_subspace(l, action)


class TestDecompositions:
    """Test representation decompositions on V."""

    def test_involution_spin(self, z2_spin_example):
        """Test -Id on H and the E8 swap act by -1 on V."""
        l = z2_spin_example.lattice
        f = z2_spin_example.action.generators[0]
        v = invariant_positive_subspace(l, z2_spin_example.action)

        assert decompose_involution(l, f, v) == InvolutionUV(u=0, v=4)
        assert len(fixed_sublattice(f)) == 8

    def test_involution_fixed_grows_with_b(self):
        """Test the fixed sublattice is one diagonal E8 per swapped pair."""
        fixture = build_example("z2-spin", {"a": 1, "b": 2})
        assert len(fixed_sublattice(fixture.action.generators[0])) == 16

    def test_klein(self, klein_example):
        """Test (p, q, r, s) of the Klein example."""
        l = klein_example.lattice
        f1, f2 = klein_example.action.generators
        v = invariant_positive_subspace(l, klein_example.action)

        assert decompose_klein(l, f1, f2, v) == KleinPQRS(p=0, q=3, r=3, s=6)

    def test_cyclic_order4(self, order4_example):
        """Test V = R_- + C_1 for the order-4 example."""
        l = order4_example.lattice
        f = order4_example.action.generators[0]
        v = invariant_positive_subspace(l, order4_example.action)
        mults = decompose_cyclic(l, f, 4, v)

        assert mults == CyclicMults.build(4, 0, 1, {1: 1})
        assert mults.describe() == "R_- + C_1"

    def test_cyclic_wrong_order(self, order4_example):
        """Test a k that is not the order of f."""
        l = order4_example.lattice
        f = order4_example.action.generators[0]
        v = invariant_positive_subspace(l, order4_example.action)
        with pytest.raises(WrongOrderError):
            decompose_cyclic(l, f, 6, v)

    def test_cyclic_z2k(self):
        """Test the antidiagonal flip on 3H gives 3 R_-."""
        fixture = build_example("z2k")
        l = fixture.lattice
        f = fixture.action.generators[0]
        v = invariant_positive_subspace(l, fixture.action)

        assert l.rank == 54
        assert decompose_cyclic(l, f, 6, v) == CyclicMults.build(6, 0, 3, {})

    def test_diagonal_commuting(self, odd_13, reflections_e1e2):
        """Test eps = I for the two reflections."""
        fs = [reflections_e1e2["e1"], reflections_e1e2["e2"]]
        action = make_action(ActionShape.FREE_ABELIAN, fs)
        v = invariant_positive_subspace(odd_13, action)

        assert decompose_diagonal_commuting(odd_13, fs, v).eps == ((1, 0), (0, 1))

    def test_diagonal_commuting_degenerate(self, odd_13, reflections_e1e2):
        """Test the same reflection twice gives a singular eps."""
        fs = [reflections_e1e2["e1"], reflections_e1e2["e1"]]
        action = make_action(ActionShape.FREE_ABELIAN, fs)
        v = invariant_positive_subspace(odd_13, action)

        assert decompose_diagonal_commuting(odd_13, fs, v).eps == ((1, 0), (1, 0))

    def test_diagonal_commuting_numeric(self, odd_13, reflections_e1e2):
        """Test signs decoded from an inexact basis of the same V."""
        fs = [reflections_e1e2["e1"], reflections_e1e2["e2"]]
        basis = np.array([E1E2_E1, E1E2_E2], dtype=float)
        v = PositiveSubspace(odd_13, np.array([basis[0] + basis[1], basis[0] - basis[1]]))

        assert decompose_diagonal_commuting(odd_13, fs, v).eps == ((1, 0), (0, 1))


class TestRootMultiplicities:
    """Test the numeric eigenvalue bookkeeping."""

    def test_rotation(self):
        """Test a quarter turn has eigenvalues +-i."""
        counts = count_root_multiplicities(np.array([[0.0, -1.0], [1.0, 0.0]]), 4)
        assert counts == [0, 1, 0, 1]
        assert mults_from_root_counts(counts, 4) == CyclicMults.build(4, 0, 0, {1: 1})

    def test_not_a_root(self):
        """Test an eigenvalue off the unit circle."""
        with pytest.raises(MultiplicityNotIntegralError):
            count_root_multiplicities(np.array([[2.0]]), 4)

    def test_conjugates_must_match(self):
        """Test unpaired complex eigenvalue counts."""
        with pytest.raises(MultiplicityNotIntegralError):
            mults_from_root_counts([0, 1, 0, 0], 4)


class TestCyclicMults:
    """Test the multiplicity record."""

    def test_validation(self):
        """Test k and d ranges."""
        with pytest.raises(ValueError):
            CyclicMults(3, 1, 0)
        with pytest.raises(ValueError):
            CyclicMults(4, 0, 0, ((2, 1),))
        with pytest.raises(ValueError):
            CyclicMults(4, -1, 0)

    def test_describe_and_dict(self):
        """Test the printed and document forms."""
        mults = CyclicMults.build(6, 1, 2, {1: 1, 2: 0})

        assert mults.describe() == "R + 2R_- + C_1"
        assert mults.dim == 5
        assert mults.to_dict() == {"k": 6, "m_triv": 1, "m_sign": 2, "m_d": {"1": 1}}
        assert CyclicMults.build(4, 0, 0, {}).describe() == "0"
