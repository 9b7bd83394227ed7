"""Search for pairwise orthogonal square-2 systems orthogonal to a characteristic.

Reflections in such vectors are isometries fixing c; a system of ``b_plus``
of them spans a maximal positive subspace on which the reflections act
diagonally with eps = I.
"""

from typing import List, Optional, Sequence

import numpy as np

from swobstruct.errors import InvalidParamsError
from swobstruct.lattice.base import Lattice, inner, vector
from swobstruct.search.enumeration import Coords, SearchProblem, enumerate_vectors
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


def _extend(
    l: Lattice,
    candidates: List[Coords],
    count: int,
    start: int,
    chosen: List[Coords],
    out: List[List[Coords]],
    find_all: bool,
    limit: Optional[int],
) -> bool:
    """Backtrack over increasing candidate indices; returns True to stop."""
    if len(chosen) == count:
        out.append(list(chosen))
        return not find_all or (limit is not None and len(out) >= limit)
    for i in range(start, len(candidates)):
        e = candidates[i]
        if all(inner(l, e, other) == 0 for other in chosen):
            chosen.append(e)
            if _extend(l, candidates, count, i + 1, chosen, out, find_all, limit):
                return True
            chosen.pop()
    return False


def find_orthogonal_square2_system(
    l: Lattice,
    c: Sequence[int],
    count: int,
    coeff_bound: int,
    find_all: bool = False,
    fixed: Sequence[Sequence[int]] = (),
    coordinate_bounds: Optional[Sequence[int]] = None,
    limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[List[Coords]]:
    """Systems of ``count`` vectors e_i with ``e_i^2 = 2``, ``<e_i, e_j> = 0`` and
    ``<e_i, c> = 0``.

    Each vector is sign-canonical and each system lists its vectors in
    lexicographic order; systems come in lexicographic order too.

    Args:
        l: Lattice to search
        c: Vector every e_i must be orthogonal to
        count: Number of vectors per system; 0 gives ``[[]]``
        coeff_bound: Uniform coordinate bound
        find_all: Return every system instead of the first one
        fixed: Vectors already chosen; new vectors are also orthogonal to
            them, and only the new vectors are returned
        coordinate_bounds: Per-coordinate bounds overriding ``coeff_bound``
        limit: Maximum number of systems when ``find_all`` is set
        workers: Process count for the candidate enumeration

    Returns:
        List of systems, empty when none exists within the bounds
    """
    if count < 0:
        raise InvalidParamsError(f"count must be >= 0, got {count}", "find_orthogonal_square2_system")
    if count == 0:
        return [[]]
    if count + len(fixed) > l.b_plus:
        logger.warning(
            "System larger than b_plus cannot exist",
            count=count,
            fixed=len(fixed),
            b_plus=l.b_plus,
        )
        return []

    c_vec = vector(l, c)
    fixed_vecs = [vector(l, f) for f in fixed]
    bounds = list(coordinate_bounds) if coordinate_bounds is not None else [coeff_bound] * l.rank
    forms = [l.gram @ c_vec] + [l.gram @ f for f in fixed_vecs]
    problem = SearchProblem.build(l.gram, bounds, (2, 2), forms=[np.asarray(f) for f in forms])
    candidates = enumerate_vectors(problem, workers=workers)
    logger.debug("Square-2 candidates enumerated", candidates=len(candidates))

    systems: List[List[Coords]] = []
    _extend(l, candidates, count, 0, [], systems, find_all, limit)
    logger.info(
        "Orthogonal system search finished",
        rank=l.rank,
        count=count,
        candidates=len(candidates),
        systems=len(systems),
    )
    return systems
