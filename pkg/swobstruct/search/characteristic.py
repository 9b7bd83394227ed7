"""Search for characteristic vectors with square in a given range."""

from typing import List, Optional, Tuple

from swobstruct.errors import InvalidParamsError
from swobstruct.lattice.base import Lattice
from swobstruct.search.enumeration import Coords, SearchProblem, enumerate_vectors
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


def find_characteristic(
    l: Lattice,
    coeff_bound: int,
    square_range: Tuple[int, int],
    limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[Coords]:
    """All characteristic vectors of ``l`` in the box ``[-coeff_bound, coeff_bound]^n``
    whose square lies in ``square_range`` (inclusive).

    A vector is characteristic iff it reduces mod 2 to the lattice's
    characteristic class, so the enumeration only visits coordinates of the
    right parity.

    Args:
        l: Lattice to search
        coeff_bound: Uniform coordinate bound, at least 1
        square_range: Inclusive ``(lo, hi)``
        limit: Optional cap on the number of results
        workers: Process count for the parallel split

    Returns:
        Vectors up to global sign, in lexicographic order

    Raises:
        InvalidParamsError: If ``coeff_bound < 1`` or the range is empty
    """
    if coeff_bound < 1:
        raise InvalidParamsError(f"coeff_bound must be >= 1, got {coeff_bound}", "find_characteristic")
    lo, hi = square_range
    if lo > hi:
        raise InvalidParamsError(f"Empty square range {lo}..{hi}", "find_characteristic")

    problem = SearchProblem.build(
        l.gram,
        [coeff_bound] * l.rank,
        (lo, hi),
        parity=[int(x) for x in l.characteristic_class_mod2],
    )
    results = enumerate_vectors(problem, limit=limit, workers=workers)
    logger.info(
        "Characteristic search finished",
        rank=l.rank,
        bound=coeff_bound,
        square_range=[lo, hi],
        found=len(results),
    )
    return results
