"""Hypotheses shared by every obstruction check."""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from swobstruct.isometry.base import GroupAction, Isometry
from swobstruct.lattice.base import Lattice, is_characteristic, square
from swobstruct.obstruction.verdict import HypothesisCheck, HypothesisStatus


@dataclass(frozen=True)
class ManifoldData:
    """Intersection lattice of a closed oriented 4-manifold with b1 = 0.

    H^2 is modelled as torsion-free; ``assume_simply_connected`` must be set
    for the theorems to apply.
    """

    lattice: Lattice
    assume_simply_connected: bool = True


def hypothesis(name: str, passed: bool, detail: str, required: bool = True) -> HypothesisCheck:
    return HypothesisCheck(
        name=name,
        status=HypothesisStatus.PASS if passed else HypothesisStatus.FAIL,
        detail=detail,
        required=required,
    )


def _fmt(v: Sequence[int]) -> str:
    return "(" + ",".join(str(int(x)) for x in v) + ")"


def shared_hypotheses(
    X: ManifoldData, action: GroupAction, c: Sequence[int]
) -> List[HypothesisCheck]:
    """Evaluate the hypotheses common to every check.

    Failures are recorded, never raised. The ``non_vacuous`` entry is
    informational: it fails exactly when c != 0 and c^2 >= 0, in which case
    the bundle H^+ has a nowhere-zero section and the top class vanishes.
    """
    l = X.lattice
    c_arr = np.asarray(c, dtype=np.int64)
    c_sq = square(l, c_arr)
    checks = [
        hypothesis(
            "simply_connected",
            X.assume_simply_connected,
            "b1 = 0 with torsion-free H^2 assumed"
            if X.assume_simply_connected
            else "manifold not flagged as simply connected",
        ),
        hypothesis("b_plus_positive", l.b_plus > 0, f"b_plus = {l.b_plus}"),
        hypothesis(
            "characteristic",
            is_characteristic(l, c_arr),
            f"c = {_fmt(c_arr)} "
            + ("satisfies" if is_characteristic(l, c_arr) else "violates")
            + " <c,b_i> = <b_i,b_i> mod 2",
        ),
    ]
    moved = [i for i, g in enumerate(action.generators) if not _fixes(g, c_arr)]
    checks.append(
        hypothesis(
            "c_invariant",
            not moved,
            "every generator fixes c"
            if not moved
            else "generator(s) " + ", ".join(str(i) for i in moved) + " move c",
        )
    )
    checks.append(
        hypothesis(
            "c_squared_exceeds_signature",
            c_sq > l.sigma,
            f"c^2 = {c_sq} {'>' if c_sq > l.sigma else '<='} sigma = {l.sigma}",
        )
    )
    vacuous = bool(c_arr.any()) and c_sq >= 0
    checks.append(
        hypothesis(
            "non_vacuous",
            not vacuous,
            f"c != 0 and c^2 = {c_sq} >= 0: the family has a non-vanishing section"
            if vacuous
            else "c = 0 or c^2 < 0",
            required=False,
        )
    )
    return checks


def mod16_hypothesis(X: ManifoldData, c: Sequence[int]) -> HypothesisCheck:
    """``c^2 - sigma = 8 mod 16``, which makes the Spin^c structure extend."""
    diff = square(X.lattice, c) - X.lattice.sigma
    return hypothesis(
        "c_squared_minus_sigma_mod16",
        diff % 16 == 8,
        f"c^2 - sigma = {diff} = {diff % 16} mod 16",
    )


def _fixes(g: Isometry, c: np.ndarray) -> bool:
    return bool(np.array_equal(g.apply(c), c))
