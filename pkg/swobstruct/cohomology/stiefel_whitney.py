"""Total Stiefel-Whitney classes of the flat bundles H^+ over each base."""

from typing import Sequence

from swobstruct.cohomology.rings import (
    BiProjective,
    CohomClass,
    LensSpace,
    RealProjective,
    Torus,
)
from swobstruct.errors import BadDimensionsError
from swobstruct.representations.decomposition import CyclicMults, EpsMatrix, KleinPQRS


def sw_rp(d: int, u: int, v: int) -> CohomClass:
    """``(1 + x)^v`` in H*(RP^d), the class of ``u`` trivial plus ``v`` sign lines."""
    if u < 0 or v < 0 or u + v != d:
        raise BadDimensionsError(f"Need u + v = d, got u={u}, v={v}, d={d}", "sw_rp")
    ring = RealProjective(d)
    return (ring.one() + ring.x()) ** v


def sw_lens(u: int, k: int, mults: CyclicMults) -> CohomClass:
    """``(1 + alpha)^m_sign * prod_d (1 + d beta)^m_d`` in H*(L^(2u+1)(k)).

    Raises:
        BadDimensionsError: If the representation does not have dimension 2u+1
            or was computed for another k
    """
    if mults.k != k:
        raise BadDimensionsError(f"Multiplicities are for k={mults.k}, not {k}", "sw_lens")
    if mults.dim != 2 * u + 1:
        raise BadDimensionsError(
            f"Representation has dimension {mults.dim}, base has dimension {2 * u + 1}",
            "sw_lens",
        )
    ring = LensSpace(u, k)
    result = (ring.one() + ring.alpha()) ** mults.m_sign
    for d, m in mults.m_d:
        if d % 2:
            result = result * (ring.one() + ring.beta()) ** m
    return result


def sw_torus(eps: EpsMatrix, total: bool = False) -> CohomClass:
    """Class of the diagonal flat bundle on T^d.

    By default the top class ``prod_j (sum_i eps[i][j] x_i)``; with ``total``
    the full ``prod_j (1 + sum_i eps[i][j] x_i)``. Columns beyond d are allowed.
    """
    ring = Torus(eps.d)
    result = ring.one()
    columns = len(eps.eps[0]) if eps.eps else 0
    for j in range(columns):
        line = ring.one() if total else ring.zero()
        for i in range(eps.d):
            if eps.eps[i][j]:
                line = line + ring.x(i + 1)
        result = result * line
    return result


def sw_biproj(d1: int, d2: int, pqrs: KleinPQRS) -> CohomClass:
    """``(1 + x)^q (1 + y)^r (1 + x + y)^s`` in H*(RP^d1 x RP^d2)."""
    if pqrs.dim != d1 + d2:
        raise BadDimensionsError(
            f"p+q+r+s = {pqrs.dim} differs from d1+d2 = {d1 + d2}", "sw_biproj"
        )
    ring = BiProjective(d1, d2)
    one, x, y = ring.one(), ring.x(), ring.y()
    return (one + x) ** pqrs.q * (one + y) ** pqrs.r * (one + x + y) ** pqrs.s


def splits(d: int) -> Sequence[tuple]:
    """All ``(d1, d2)`` with ``d1 + d2 = d`` and both positive, d1 ascending."""
    return [(d1, d - d1) for d1 in range(1, d)]
