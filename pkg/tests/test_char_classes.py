"""Tests for the cohomology rings and Stiefel-Whitney classes."""

import itertools
from collections import Counter
from math import comb, prod

import numpy as np
import pytest
from sympy import Poly, symbols

from swobstruct.cohomology.rings import (
    BiProjective,
    CohomClass,
    LensSpace,
    RealProjective,
    Torus,
    top_component,
)
from swobstruct.cohomology.stiefel_whitney import splits, sw_biproj, sw_lens, sw_rp, sw_torus
from swobstruct.errors import BadDimensionsError, RingMismatchError
from swobstruct.representations.decomposition import CyclicMults, EpsMatrix, KleinPQRS
from swobstruct.utils.gf2 import gf2_det


class TestRings:
    """Test ring tables and products."""

    def test_real_projective_truncation(self):
        """Test x^(d+1) = 0."""
        ring = RealProjective(3)
        assert (ring.x() ** 3).terms() == ["x^3"]
        assert (ring.x() ** 4).is_zero
        assert ring.describe() == "RP^3"

    def test_lens_alpha_squared(self):
        """Test alpha^2 = beta iff k/2 is odd."""
        odd_half = LensSpace(1, 6)
        even_half = LensSpace(1, 4)

        assert odd_half.alpha() * odd_half.alpha() == odd_half.beta()
        assert (even_half.alpha() * even_half.alpha()).is_zero
        assert even_half.name(even_half.top) == "alpha*beta"
        assert even_half.describe() == "L^3(4)"
        assert even_half.dimension == 3

    def test_lens_beta_truncation(self):
        """Test beta^(u+1) = 0."""
        ring = LensSpace(2, 4)
        assert (ring.beta() ** 2).terms() == ["beta^2"]
        assert (ring.beta() ** 3).is_zero

    def test_torus_exterior(self):
        """Test x_i^2 = 0 and the top monomial."""
        ring = Torus(3)
        x1, x2, x3 = ring.x(1), ring.x(2), ring.x(3)

        assert (x1 * x1).is_zero
        assert str(x1 * x2 * x3) == "x1*x2*x3"
        assert top_component(x1 * x2 * x3) == 1
        assert ring.basis[0] == ring.unit

    def test_biprojective(self):
        """Test the product ring."""
        ring = BiProjective(1, 2)
        x, y = ring.x(), ring.y()

        assert str(x * y ** 2) == "x*y^2"
        assert (x * x).is_zero
        assert ring.describe() == "RP^1 x RP^2"

    def test_bad_dimensions(self):
        """Test negative dimensions and odd k."""
        with pytest.raises(BadDimensionsError):
            RealProjective(-1)
        with pytest.raises(BadDimensionsError):
            LensSpace(1, 3)
        with pytest.raises(BadDimensionsError):
            BiProjective(1, -2)

    def test_ring_mismatch(self):
        """Test adding classes of different rings."""
        with pytest.raises(RingMismatchError):
            RealProjective(2).x() + RealProjective(3).x()

    def test_component(self):
        """Test homogeneous parts."""
        ring = RealProjective(3)
        total = (ring.one() + ring.x()) ** 3
        assert total.component(2).terms() == ["x^2"]
        assert str(ring.zero()) == "0"


class TestStiefelWhitney:
    """Test the classes of the flat bundles."""

    def test_rp_sign_lines(self):
        """Test (1 + x)^v."""
        w = sw_rp(3, 1, 2)
        assert w.terms() == ["1", "x^2"]
        assert top_component(w) == 0
        assert top_component(sw_rp(3, 0, 3)) == 1

    @pytest.mark.parametrize("d", range(1, 9))
    def test_rp_minus_identity(self, d):
        """Test -1 on V always has nonzero top class."""
        assert top_component(sw_rp(d, 0, d)) == 1
        assert top_component(sw_rp(d, 1, d - 1)) == 0

    def test_rp_dimensions(self):
        """Test u + v must equal d."""
        with pytest.raises(BadDimensionsError):
            sw_rp(3, 1, 1)

    def test_lens_r_minus_c1(self):
        """Test R_- + C_1 over L^3(4)."""
        w = sw_lens(1, 4, CyclicMults.build(4, 0, 1, {1: 1}))
        assert w.terms() == ["1", "alpha", "beta", "alpha*beta"]
        assert top_component(w) == 1

    def test_lens_three_sign(self):
        """Test 3 R_- over L^3(6), using alpha^2 = beta."""
        assert top_component(sw_lens(1, 6, CyclicMults.build(6, 0, 3, {}))) == 1

    def test_lens_even_d(self):
        """Test even d contributes nothing."""
        w = sw_lens(1, 8, CyclicMults.build(8, 0, 1, {2: 1}))
        assert w.terms() == ["1", "alpha"]
        assert top_component(w) == 0

    def test_lens_dimension_checks(self):
        """Test representation dimension and k must match the base."""
        with pytest.raises(BadDimensionsError):
            sw_lens(2, 4, CyclicMults.build(4, 0, 1, {1: 1}))
        with pytest.raises(BadDimensionsError):
            sw_lens(1, 8, CyclicMults.build(4, 0, 1, {1: 1}))

    def test_torus_identity(self):
        """Test eps = I gives x1 x2."""
        eps = EpsMatrix(((1, 0), (0, 1)))
        assert top_component(sw_torus(eps)) == 1
        assert sw_torus(eps, total=True).terms() == ["1", "x1", "x2", "x1*x2"]

    def test_torus_singular(self):
        """Test a singular eps."""
        assert top_component(sw_torus(EpsMatrix(((1, 1), (1, 1))))) == 0

    def test_torus_matches_determinant(self, rng):
        """Test the top class equals det(eps) over F2."""
        for _ in range(40):
            d = int(rng.integers(1, 5))
            eps = rng.integers(0, 2, size=(d, d))
            w = sw_torus(EpsMatrix(tuple(tuple(int(x) for x in row) for row in eps)))
            assert top_component(w) == gf2_det(eps)

    def test_biproj(self):
        """Test one sign line in each factor."""
        w = sw_biproj(1, 1, KleinPQRS(0, 1, 1, 0))
        assert w.terms() == ["1", "x", "y", "x*y"]
        assert top_component(w) == 1

    def test_biproj_klein_witness(self):
        """Test the first nonzero split for (q, r, s) = (3, 3, 6)."""
        pqrs = KleinPQRS(0, 3, 3, 6)
        tops = {d1: top_component(sw_biproj(d1, d2, pqrs)) for d1, d2 in splits(12)}

        assert tops[1] == tops[2] == 0
        assert tops[3] == 1

    def test_biproj_dimensions(self):
        """Test p + q + r + s must equal d1 + d2."""
        with pytest.raises(BadDimensionsError):
            sw_biproj(1, 1, KleinPQRS(1, 1, 1, 0))

    def test_splits(self):
        """Test the enumeration of splits."""
        assert splits(4) == [(1, 3), (2, 2), (3, 1)]
        assert splits(1) == []


class TestGf2:
    """Test the GF(2) helpers used for cross-checks."""

    def test_det(self):
        """Test determinants mod 2."""
        assert gf2_det(np.eye(3, dtype=int)) == 1
        assert gf2_det(np.array([[1, 1], [1, 1]])) == 0
        assert gf2_det(np.array([[2, 1], [1, 1]])) == 1
        assert gf2_det(np.zeros((0, 0), dtype=int)) == 1


def _lens_reps(u, k):
    """Every representation of dimension 2u + 1 built from R, R_- and C_d for k."""
    dim = 2 * u + 1
    ds = list(range(1, k // 2))
    for counts in itertools.product(range(u + 1), repeat=len(ds)):
        complex_dim = 2 * sum(counts)
        if complex_dim > dim:
            continue
        for m_sign in range(dim - complex_dim + 1):
            yield CyclicMults.build(k, dim - complex_dim - m_sign, m_sign, dict(zip(ds, counts)))


def _lens_top_closed_form(u, k, mults):
    """Coefficient of alpha*beta^u in (1 + alpha)^m_sign (1 + beta)^(odd C_d count)."""
    odd = sum(m for d, m in mults.m_d if d % 2)
    s = mults.m_sign
    if (k // 2) % 2 == 0:
        return s * comb(odd, u) % 2
    # alpha^j = alpha * beta^((j - 1) / 2) for odd j
    terms = (comb(s, j) * comb(odd, u - (j - 1) // 2) for j in range(1, s + 1, 2) if (j - 1) // 2 <= u)
    return sum(terms) % 2


def _pqrs_up_to(total):
    for p, q, r, s in itertools.product(range(total + 1), repeat=4):
        if 2 <= p + q + r + s <= total:
            yield KleinPQRS(p, q, r, s)


class TestGoldenClasses:
    """Test top classes against closed forms over every small case."""

    @pytest.mark.parametrize("k", [4, 6, 8])
    @pytest.mark.parametrize("u", range(4))
    def test_lens_listed_forms(self, u, k):
        """Test R_- + C_d1 + ... + C_du has top class d1 ... du mod 2."""
        for ds in itertools.combinations_with_replacement(range(1, k // 2), u):
            w = sw_lens(u, k, CyclicMults.build(k, 0, 1, dict(Counter(ds))))
            assert top_component(w) == prod(ds) % 2

    @pytest.mark.parametrize("k", [4, 6, 8])
    @pytest.mark.parametrize("u", range(4))
    def test_lens_every_representation(self, u, k):
        """Test every representation of dimension 2u + 1 against the binomial closed form."""
        reps = list(_lens_reps(u, k))
        assert reps
        for mults in reps:
            assert top_component(sw_lens(u, k, mults)) == _lens_top_closed_form(u, k, mults)

    @pytest.mark.slow
    def test_biproj_top_degree_part(self):
        """Test the top class is the x^d1 y^d2 coefficient of x^q y^r (x + y)^s."""
        x, y = symbols("x y")
        for pqrs in _pqrs_up_to(8):
            if pqrs.p:
                continue
            top_part = Poly(x**pqrs.q * y**pqrs.r * (x + y) ** pqrs.s, x, y)
            for d1, d2 in splits(pqrs.dim):
                expected = int(top_part.coeff_monomial(x**d1 * y**d2)) % 2
                assert top_component(sw_biproj(d1, d2, pqrs)) == expected

    @pytest.mark.slow
    def test_biproj_trivial_line_kills_top(self):
        """Test p >= 1 gives a zero top class for every split."""
        for pqrs in _pqrs_up_to(8):
            if not pqrs.p:
                continue
            for d1, d2 in splits(pqrs.dim):
                assert top_component(sw_biproj(d1, d2, pqrs)) == 0

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_torus_every_matrix(self, d):
        """Test the top class equals det(eps) over F2 for every 0/1 matrix."""
        for bits in itertools.product((0, 1), repeat=d * d):
            eps = np.array(bits, dtype=int).reshape(d, d)
            w = sw_torus(EpsMatrix(tuple(tuple(int(v) for v in row) for row in eps)))
            assert top_component(w) == gf2_det(eps)


class TestWhitneyProduct:
    """Test the class of a direct sum is the product of the classes."""

    @pytest.mark.parametrize("d", range(1, 7))
    def test_rp(self, d):
        """Test (1 + x)^(v1 + v2) splits."""
        for v1 in range(d + 1):
            for v2 in range(d + 1 - v1):
                whole = sw_rp(d, d - v1 - v2, v1 + v2)
                assert whole == sw_rp(d, d - v1, v1) * sw_rp(d, d - v2, v2)

    @pytest.mark.parametrize("k", [4, 6, 8])
    @pytest.mark.parametrize("u", range(3))
    def test_lens(self, u, k):
        """Test every split of every representation, pieces padded with trivial lines."""
        dim = 2 * u + 1

        def padded(m_triv, m_sign, m_d):
            used = m_triv + m_sign + 2 * sum(m_d.values())
            return CyclicMults.build(k, m_triv + dim - used, m_sign, m_d)

        for whole in _lens_reps(u, k):
            ds = [d for d, _ in whole.m_d]
            ranges = [range(whole.m_triv + 1), range(whole.m_sign + 1)]
            ranges += [range(m + 1) for _, m in whole.m_d]
            for a_triv, a_sign, *a_ms in itertools.product(*ranges):
                a_md = dict(zip(ds, a_ms))
                b_md = {d: m - a_md[d] for d, m in whole.m_d}
                first = padded(a_triv, a_sign, a_md)
                second = padded(whole.m_triv - a_triv, whole.m_sign - a_sign, b_md)
                assert sw_lens(u, k, whole) == sw_lens(u, k, first) * sw_lens(u, k, second)

    def test_biproj(self):
        """Test (p, q, r, s) sums split for every split of the base."""
        for whole in _pqrs_up_to(4):
            counts = (whole.q, whole.r, whole.s)
            for part in itertools.product(*(range(n + 1) for n in counts)):
                rest = [n - a for n, a in zip(counts, part)]
                first = KleinPQRS(whole.dim - sum(part), *part)
                second = KleinPQRS(whole.dim - sum(rest), *rest)
                for d1, d2 in splits(whole.dim):
                    assert sw_biproj(d1, d2, whole) == sw_biproj(d1, d2, first) * sw_biproj(
                        d1, d2, second
                    )

    def test_torus_columns(self, rng):
        """Test the total class of a column block matrix is the product over the blocks."""
        for _ in range(30):
            d = int(rng.integers(1, 5))
            columns = int(rng.integers(2, 6))
            eps = rng.integers(0, 2, size=(d, columns))
            cut = int(rng.integers(1, columns))

            def total(block):
                rows = tuple(tuple(int(v) for v in row) for row in block)
                return sw_torus(EpsMatrix(rows), total=True)

            assert total(eps) == total(eps[:, :cut]) * total(eps[:, cut:])


RINGS = [
    RealProjective(0),
    RealProjective(4),
    LensSpace(0, 4),
    LensSpace(2, 4),
    LensSpace(2, 6),
    LensSpace(1, 8),
    Torus(0),
    Torus(3),
    Torus(4),
    BiProjective(1, 1),
    BiProjective(2, 3),
]


class TestRingAxioms:
    """Test the product tables define commutative, associative rings."""

    @pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.describe())
    def test_axioms(self, ring, rng):
        """Test unit, commutativity, associativity and distributivity on random classes."""

        def draw():
            return CohomClass(ring, rng.integers(0, 2, size=ring.size).astype(np.uint8))

        for _ in range(20):
            a, b, c = draw(), draw(), draw()

            assert a * ring.one() == a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
