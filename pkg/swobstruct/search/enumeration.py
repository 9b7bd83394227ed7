"""Bounded enumeration of lattice vectors with quadratic and linear constraints.

Vectors are produced in lexicographic order of their coordinate tuples, one
representative per pair ``{x, -x}`` (the one whose first nonzero coordinate
is positive). Branches are cut with sound interval bounds on the square and
on every linear form, and optionally with a fixed parity pattern.
"""

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from swobstruct.errors import InvalidParamsError
from swobstruct.utils.config import get_settings
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)

Coords = Tuple[int, ...]


@dataclass(frozen=True)
class SearchProblem:
    """Integer vectors x with ``|x_i| <= bounds[i]`` and

    - ``lo <= x^T G x <= hi``
    - ``<forms[k], x> = 0`` for every linear form
    - ``x_i = parity[i] mod 2`` when a parity pattern is given
    """

    gram: Tuple[Tuple[int, ...], ...]
    bounds: Tuple[int, ...]
    lo: int
    hi: int
    forms: Tuple[Tuple[int, ...], ...] = ()
    parity: Optional[Tuple[int, ...]] = None

    @classmethod
    def build(
        cls,
        gram: np.ndarray,
        bounds: Sequence[int],
        square_range: Tuple[int, int],
        forms: Sequence[Sequence[int]] = (),
        parity: Optional[Sequence[int]] = None,
    ) -> "SearchProblem":
        n = gram.shape[0]
        if len(bounds) != n:
            raise InvalidParamsError(
                f"Got {len(bounds)} coordinate bounds for rank {n}", "search"
            )
        if any(int(b) < 0 for b in bounds):
            raise InvalidParamsError("Coordinate bounds must be non-negative", "search")
        lo, hi = square_range
        return cls(
            gram=tuple(tuple(int(x) for x in row) for row in gram),
            bounds=tuple(int(b) for b in bounds),
            lo=int(lo),
            hi=int(hi),
            forms=tuple(
                tuple(int(x) for x in form) for form in forms if any(int(x) for x in form)
            ),
            parity=None if parity is None else tuple(int(p) % 2 for p in parity),
        )

    @property
    def rank(self) -> int:
        return len(self.bounds)

    def values(self, i: int, nonnegative: bool) -> List[int]:
        """Admissible values of coordinate i in ascending order."""
        b = self.bounds[i]
        start = 0 if nonnegative else -b
        vals = range(start, b + 1)
        if self.parity is None:
            return list(vals)
        return [v for v in vals if v % 2 == self.parity[i]]


class _Walker:
    """Depth-first walk with interval pruning; state is plain Python ints."""

    def __init__(self, problem: SearchProblem):
        self.p = problem
        n = problem.rank
        g = problem.gram
        b = problem.bounds
        smallest = [
            1 if problem.parity is not None and problem.parity[j] else 0 for j in range(n)
        ]
        # Range of sum_{i,j >= t} G_ij x_i x_j over the box, for every suffix t.
        self.qmin = [0] * (n + 1)
        self.qmax = [0] * (n + 1)
        for t in range(n - 1, -1, -1):
            d = g[t][t]
            lo_d = d * (smallest[t] ** 2 if d > 0 else b[t] ** 2)
            hi_d = d * (b[t] ** 2 if d > 0 else smallest[t] ** 2)
            cross = sum(2 * abs(g[t][j]) * b[t] * b[j] for j in range(t + 1, n))
            self.qmin[t] = self.qmin[t + 1] + lo_d - cross
            self.qmax[t] = self.qmax[t + 1] + hi_d + cross
        # Reach of each linear form over a suffix of coordinates.
        self.reach = [[0] * (n + 1) for _ in problem.forms]
        for k, form in enumerate(problem.forms):
            for t in range(n - 1, -1, -1):
                self.reach[k][t] = self.reach[k][t + 1] + abs(form[t]) * b[t]

    def _feasible(self, t: int, sq: int, h: List[int], partial: List[int]) -> bool:
        for k, s in enumerate(partial):
            if abs(s) > self.reach[k][t]:
                return False
        slack = sum(2 * abs(h[j]) * self.p.bounds[j] for j in range(t, self.p.rank))
        return sq + self.qmin[t] - slack <= self.p.hi and sq + self.qmax[t] + slack >= self.p.lo

    def walk(self, prefix: Coords = ()) -> Iterator[Coords]:
        """All solutions extending ``prefix``, in lexicographic order."""
        p = self.p
        n = p.rank
        h = [0] * n
        sq = 0
        partial = [0] * len(p.forms)
        x: List[int] = []
        for v in prefix:
            sq, partial = self._place(x, h, sq, partial, v)
        yield from self._descend(x, h, sq, partial)

    def _place(
        self, x: List[int], h: List[int], sq: int, partial: List[int], v: int
    ) -> Tuple[int, List[int]]:
        t = len(x)
        g = self.p.gram
        sq = sq + 2 * v * h[t] + g[t][t] * v * v
        for j in range(self.p.rank):
            h[j] += g[j][t] * v
        partial = [s + form[t] * v for s, form in zip(partial, self.p.forms)]
        x.append(v)
        return sq, partial

    def _descend(
        self, x: List[int], h: List[int], sq: int, partial: List[int]
    ) -> Iterator[Coords]:
        t = len(x)
        if t == self.p.rank:
            if self.p.lo <= sq <= self.p.hi and not any(partial):
                yield tuple(x)
            return
        if not self._feasible(t, sq, h, partial):
            return
        leading = not any(x)
        for v in self.p.values(t, nonnegative=leading):
            h_next = list(h)
            x_next = list(x)
            sq_next, partial_next = self._place(x_next, h_next, sq, partial, v)
            yield from self._descend(x_next, h_next, sq_next, partial_next)


def _branch(task: Tuple[SearchProblem, int, Optional[int]]) -> List[Coords]:
    problem, first, limit = task
    found: List[Coords] = []
    for sol in _Walker(problem).walk((first,)):
        found.append(sol)
        if limit is not None and len(found) >= limit:
            break
    return found


def enumerate_vectors(
    problem: SearchProblem,
    limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[Coords]:
    """Solve a search problem.

    Args:
        problem: Constraints and coordinate box
        limit: Maximum number of results, in canonical order
        workers: Process count; more than one splits the work on the first
            coordinate and merges the branches back in order

    Returns:
        Sign-canonical solutions in lexicographic order
    """
    settings = get_settings()
    limit = limit if limit is not None else settings.search_result_limit
    workers = workers if workers is not None else settings.search_workers
    if problem.rank == 0:
        return [()] if problem.lo <= 0 <= problem.hi else []

    if workers > 1:
        tasks = [(problem, v, limit) for v in problem.values(0, nonnegative=True)]
        with Pool(processes=workers) as pool:
            branches = pool.map(_branch, tasks)
        results = [sol for branch in branches for sol in branch]
    else:
        results = []
        for sol in _Walker(problem).walk():
            results.append(sol)
            if limit is not None and len(results) >= limit:
                break
    if limit is not None:
        results = results[:limit]
    logger.debug("Enumeration finished", rank=problem.rank, found=len(results), workers=workers)
    return results
