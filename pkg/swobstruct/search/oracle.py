"""Exact representation decomposition from the characteristic polynomial.

An independent check of the numeric cyclic decomposition: a rational matrix
of finite order k is diagonalisable over C, its characteristic polynomial is
a product of cyclotomic polynomials Phi_n with n | k, and the exponent of
Phi_n is the multiplicity of each primitive n-th root of unity. Galois
conjugate roots share a multiplicity, so the exponents alone fix every C_d.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, Sequence, Tuple, Union

import numpy as np
from sympy import Poly, QQ, cyclotomic_poly, divisors, symbols
from sympy.polys.matrices import DomainMatrix

from swobstruct.errors import NotFiniteOrderError
from swobstruct.representations.decomposition import CyclicMults
from swobstruct.utils.exact import qq_matrix
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)

_t = symbols("t")

MatrixLike = Union[np.ndarray, Sequence[Sequence[Union[int, Fraction]]]]


def _coefficient_key(p: Poly) -> Tuple[object, ...]:
    return tuple(p.monic().all_coeffs())


def _cyclotomic_exponents(charpoly: Poly, k: int) -> Dict[int, int]:
    """Exponent of Phi_n in ``charpoly`` for every n | k."""
    _, factors = charpoly.factor_list()
    by_poly = {_coefficient_key(Poly(cyclotomic_poly(n, _t), _t)): n for n in divisors(k)}
    exponents: Dict[int, int] = {}
    for factor, mult in factors:
        monic = factor.monic()
        n = by_poly.get(_coefficient_key(factor))
        if n is None:
            raise NotFiniteOrderError(
                f"Characteristic polynomial has a non-cyclotomic factor {monic.as_expr()}",
                "oracle_rep_decomposition",
            )
        exponents[n] = exponents.get(n, 0) + mult
    return exponents


def oracle_rep_decomposition(matrix: MatrixLike, k: int) -> CyclicMults:
    """Multiplicities of R, R_- and C_d of a rational matrix with ``A^k = I``.

    Args:
        matrix: Square rational matrix, e.g. an exact restriction ``f|V``
        k: Even order to decompose for (``A^k = I`` is required, not that
            k is the exact order)

    Returns:
        CyclicMults

    Raises:
        NotFiniteOrderError: If ``A^k != I``
    """
    rows = matrix.tolist() if isinstance(matrix, np.ndarray) else [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return CyclicMults.build(k, 0, 0, {})
    a = qq_matrix(rows)
    if a.pow(k) != DomainMatrix.eye(n, QQ):
        raise NotFiniteOrderError(
            f"Matrix does not satisfy A^{k} = I", "oracle_rep_decomposition", details={"k": k}
        )
    charpoly = Poly([QQ.to_sympy(c) for c in a.charpoly()], _t)
    exponents = _cyclotomic_exponents(charpoly, k)
    m_triv = exponents.pop(1, 0)
    m_sign = exponents.pop(2, 0)
    m_d: Dict[int, int] = {}
    for order_n, mult in exponents.items():
        step = k // order_n
        for j in range(1, (order_n + 1) // 2):
            if gcd(j, order_n) == 1:
                m_d[j * step] = m_d.get(j * step, 0) + mult
    result = CyclicMults.build(k, m_triv, m_sign, m_d)
    logger.debug("Oracle decomposition", k=k, exponents=exponents, result=result.describe())
    return result
