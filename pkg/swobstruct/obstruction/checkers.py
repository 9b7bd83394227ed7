"""Obstruction checkers for involutions, cyclic groups, commuting maps and Z2 x Z2.

Each checker evaluates the hypotheses of the families Seiberg-Witten
obstruction as specialised to one base space, decomposes the action on an
invariant maximal positive subspace V, and reads the top Stiefel-Whitney
class of the induced flat bundle. A nonzero top class means the action
cannot be realised by diffeomorphisms (for any smooth structure); a zero
class is reported as inconclusive, never as realisable.
"""

from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from swobstruct.cohomology.rings import CohomClass, top_component
from swobstruct.cohomology.stiefel_whitney import splits, sw_biproj, sw_lens, sw_rp, sw_torus
from swobstruct.errors import (
    EigenvalueNotPlusMinusOneError,
    NotCommutingError,
    NotFiniteOrderError,
    NotInvolutionError,
    NotSimultaneouslyDiagonalizableError,
    OrderExceedsBoundError,
)
from swobstruct.isometry.base import (
    ActionShape,
    GroupAction,
    Isometry,
    commute,
    is_involution,
    make_action,
    order,
)
from swobstruct.lattice.base import square
from swobstruct.obstruction.hypotheses import (
    ManifoldData,
    hypothesis,
    mod16_hypothesis,
    shared_hypotheses,
)
from swobstruct.obstruction.verdict import (
    Conclusion,
    HypothesisCheck,
    Verdict,
    VerdictInvariants,
    decide,
)
from swobstruct.representations.decomposition import (
    CyclicMults,
    decompose_cyclic,
    decompose_diagonal_commuting,
    decompose_involution,
    decompose_klein,
)
from swobstruct.representations.subspace import invariant_positive_subspace
from swobstruct.utils.logger import get_logger

logger = get_logger(__name__)


class _Trace:
    """Accumulates the certificate and the optional invariants of a verdict."""

    def __init__(self, X: ManifoldData, c: Sequence[int]):
        self.X = X
        self.c = np.asarray(c, dtype=np.int64)
        self.c_squared = square(X.lattice, self.c)
        self.lines: List[str] = [
            f"lattice {X.lattice.describe()}: rank {X.lattice.rank}, "
            f"b_plus {X.lattice.b_plus}, sigma {X.lattice.sigma}, c^2 {self.c_squared}"
        ]
        self.extra: Dict[str, Any] = {}

    def note(self, line: str) -> None:
        self.lines.append(line)

    def record_class(self, w: CohomClass) -> int:
        top = top_component(w)
        self.extra["sw_class"] = w.terms()
        self.extra["base"] = w.ring.describe()
        self.note(f"w(H^+) = {w} in H*({w.ring.describe()}; F2)")
        self.note(f"w_{w.ring.dimension} coefficient of {w.ring.name(w.ring.top)} = {top}")
        return top

    def finish(
        self,
        checker: str,
        hypotheses: List[HypothesisCheck],
        decomposition: Optional[Dict[str, Any]],
        w_top: Optional[int],
    ) -> Verdict:
        conclusion = decide(hypotheses, w_top)
        failed = [h.name for h in hypotheses if h.required and not h.passed]
        if failed:
            self.note("failed hypotheses: " + ", ".join(failed))
        self.note(f"conclusion: {conclusion.value}")
        l = self.X.lattice
        invariants = VerdictInvariants(
            sigma=l.sigma,
            b_plus=l.b_plus,
            c_squared=self.c_squared,
            decomposition=decomposition,
            w_top=w_top,
            **self.extra,
        )
        logger.info(
            "Verdict computed",
            checker=checker,
            conclusion=conclusion.value,
            b_plus=l.b_plus,
            sigma=l.sigma,
        )
        return Verdict(
            conclusion=conclusion,
            hypotheses=hypotheses,
            invariants=invariants,
            certificate="\n".join(self.lines),
        )


def _blocking(hypotheses: List[HypothesisCheck]) -> bool:
    return any(h.required and not h.passed for h in hypotheses)


def check_involution(X: ManifoldData, f: Isometry, c: Sequence[int]) -> Verdict:
    """Involution over RP^d, d = b_plus: obstructed iff f acts as -1 on V.

    Raises:
        NotInvolutionError: If ``f^2 != I``
    """
    if not is_involution(f):
        raise NotInvolutionError("Isometry does not square to the identity", "check_involution")
    l = X.lattice
    trace = _Trace(X, c)
    action = make_action(ActionShape.Z2, [f], strict=False)
    hypotheses = shared_hypotheses(X, action, c)
    hypotheses.append(hypothesis("order_two", True, "f^2 = I"))
    hypotheses.append(
        hypothesis("spinc_extends", True, f"automatic over RP^{l.b_plus} (embedding into a larger family)")
    )
    if _blocking(hypotheses):
        return trace.finish("involution", hypotheses, None, None)

    subspace = invariant_positive_subspace(l, action)
    uv = decompose_involution(l, f, subspace)
    trace.note(f"V: f acts with u = {uv.u} eigenvalues +1 and v = {uv.v} eigenvalues -1")
    w_top = trace.record_class(sw_rp(l.b_plus, uv.u, uv.v))
    return trace.finish("involution", hypotheses, {"type": "involution", **uv.to_dict()}, w_top)


def matches_forbidden_pattern(mults: CyclicMults) -> bool:
    """Whether the representation has one of the literally listed forbidden forms.

    ``R_- + C_d1 + ... + C_du`` with every d_i odd, and when k/2 is odd also
    ``R_-^(2a+1) + C_d1 + ... + C_db`` with every d_i odd.
    """
    if mults.m_triv or any(d % 2 == 0 for d, _ in mults.m_d):
        return False
    if mults.m_sign == 1:
        return True
    return (mults.k // 2) % 2 == 1 and mults.m_sign % 2 == 1


def check_cyclic(X: ManifoldData, f: Isometry, k: int, c: Sequence[int]) -> Verdict:
    """Order-k action over the lens space L^(2u+1)(k), b_plus = 2u + 1.

    The verdict uses the general top-class criterion; whether the
    decomposition is one of the literally listed forbidden forms is reported
    separately as ``pattern_match``.
    """
    l = X.lattice
    trace = _Trace(X, c)
    diff = trace.c_squared - l.sigma
    trace.note(f"c^2 - sigma = {diff} = {diff % 16} mod 16")
    action = GroupAction(shape=ActionShape.CYCLIC, generators=(f,), k=k)
    hypotheses = shared_hypotheses(X, action, c)
    k_ok = k >= 4 and k % 2 == 0
    hypotheses.append(hypothesis("k_even", k_ok, f"k = {k}" + ("" if k_ok else " is not an even integer >= 4")))
    try:
        n = order(f)
        order_detail = f"order(f) = {n}, k = {k}"
    except OrderExceedsBoundError as e:
        n = None
        order_detail = f"f has no finite order within {e.details['max_order']}"
    hypotheses.append(hypothesis("order_k", n == k, order_detail))
    hypotheses.append(hypothesis("b_plus_odd", l.b_plus % 2 == 1, f"b_plus = {l.b_plus}"))
    hypotheses.append(
        hypothesis("spinc_extends", True, "automatic over lens spaces (embedding into a larger family)")
    )
    if _blocking(hypotheses):
        return trace.finish("cyclic", hypotheses, None, None)

    u = (l.b_plus - 1) // 2
    subspace = invariant_positive_subspace(l, action)
    mults = decompose_cyclic(l, f, k, subspace)
    trace.note(f"V: <f> acts as {mults.describe()}")
    w_top = trace.record_class(sw_lens(u, k, mults))
    pattern = matches_forbidden_pattern(mults)
    trace.extra["pattern_match"] = pattern
    trace.note(
        "decomposition is one of the listed forbidden forms"
        if pattern
        else "decomposition is not one of the listed forbidden forms"
    )
    decomposition = {"type": "cyclic", **mults.to_dict(), "description": mults.describe()}
    return trace.finish("cyclic", hypotheses, decomposition, w_top)


def check_commuting(X: ManifoldData, fs: Sequence[Isometry], c: Sequence[int]) -> Verdict:
    """d = b_plus commuting maps over T^d: obstructed iff det(eps) = 1 over F2.

    Never raises for hypothesis failures, including when the maps cannot be
    simultaneously diagonalised with signs on V.
    """
    l = X.lattice
    d = len(fs)
    trace = _Trace(X, c)
    action = make_action(ActionShape.FREE_ABELIAN, fs, strict=False)
    hypotheses = shared_hypotheses(X, action, c)
    hypotheses.append(hypothesis("generator_count", d == l.b_plus, f"d = {d}, b_plus = {l.b_plus}"))
    bad_pairs = [
        f"({i},{j})" for i in range(d) for j in range(i + 1, d) if not commute(fs[i], fs[j])
    ]
    hypotheses.append(
        hypothesis(
            "commuting",
            not bad_pairs,
            "all pairs commute" if not bad_pairs else "non-commuting pairs " + " ".join(bad_pairs),
        )
    )
    if d >= 3:
        hypotheses.append(mod16_hypothesis(X, c))
    else:
        hypotheses.append(hypothesis("spinc_extends", True, f"automatic since H^3(T^{d}; Z) = 0"))
    if _blocking(hypotheses):
        return trace.finish("commuting", hypotheses, None, None)

    try:
        subspace = invariant_positive_subspace(l, action)
        eps = decompose_diagonal_commuting(l, fs, subspace)
    except (
        NotFiniteOrderError,
        EigenvalueNotPlusMinusOneError,
        NotSimultaneouslyDiagonalizableError,
    ) as e:
        hypotheses.append(hypothesis("diagonal_on_V", False, e.message))
        return trace.finish("commuting", hypotheses, None, None)
    hypotheses.append(hypothesis("diagonal_on_V", True, "each f_i acts on V by +-1 in a common basis"))
    trace.note("eps = " + str([list(row) for row in eps.eps]))
    w_top = trace.record_class(sw_torus(eps))
    return trace.finish("commuting", hypotheses, {"type": "diagonal", **eps.to_dict()}, w_top)


def _proof_split(d: int, q: int, p: int) -> tuple:
    if p == 0 and 1 <= q <= d - 1:
        return (q, d - q)
    return (1, d - 1)


def check_klein(
    X: ManifoldData,
    f1: Isometry,
    f2: Isometry,
    c: Sequence[int],
    all_splits: bool = True,
) -> Verdict:
    """Commuting involutions over RP^d1 x RP^d2.

    For b_plus = 1 the verdict is the involution criterion applied to f1
    and f2 separately. Otherwise every split d1 + d2 = b_plus is evaluated
    (or only the split d1 = q when ``all_splits`` is off) and the first
    nonzero one is the witness.

    Raises:
        NotInvolutionError: If f1 or f2 does not square to the identity
        NotCommutingError: If f1 and f2 do not commute
    """
    for name, f in (("f1", f1), ("f2", f2)):
        if not is_involution(f):
            raise NotInvolutionError(f"{name} does not square to the identity", "check_klein")
    if not commute(f1, f2):
        raise NotCommutingError("f1 and f2 do not commute", "check_klein")
    l = X.lattice
    trace = _Trace(X, c)
    action = make_action(ActionShape.KLEIN, [f1, f2], strict=False)
    hypotheses = shared_hypotheses(X, action, c)
    hypotheses.append(hypothesis("commuting_involutions", True, "f1^2 = f2^2 = I and f1 f2 = f2 f1"))
    hypotheses.append(mod16_hypothesis(X, c))
    if _blocking(hypotheses):
        return trace.finish("klein", hypotheses, None, None)

    subspace = invariant_positive_subspace(l, action)
    pqrs = decompose_klein(l, f1, f2, subspace)
    trace.note(f"V: (p, q, r, s) = ({pqrs.p}, {pqrs.q}, {pqrs.r}, {pqrs.s})")
    decomposition: Dict[str, Any] = {"type": "klein", **pqrs.to_dict()}

    if l.b_plus == 1:
        decomposition["delegated"] = True
        tops = []
        for name, f in (("f1", f1), ("f2", f2)):
            uv = decompose_involution(l, f, subspace)
            w = sw_rp(1, uv.u, uv.v)
            tops.append(top_component(w))
            trace.note(f"{name}: (u, v) = ({uv.u}, {uv.v}), w_1 coefficient {top_component(w)}")
        w_top = max(tops)
        trace.extra["base"] = "RP^1"
        return trace.finish("klein", hypotheses, decomposition, w_top)

    candidates = splits(l.b_plus) if all_splits else [_proof_split(l.b_plus, pqrs.q, pqrs.p)]
    split_tops = []
    witness = None
    for d1, d2 in candidates:
        w = sw_biproj(d1, d2, pqrs)
        top = top_component(w)
        split_tops.append([d1, d2, top])
        if top and witness is None:
            witness = (d1, d2, w)
    trace.extra["split_tops"] = split_tops
    if witness is not None:
        d1, d2, w = witness
        trace.note(f"witness split (d1, d2) = ({d1}, {d2})")
        trace.extra["witness_split"] = [d1, d2]
        w_top = trace.record_class(w)
    else:
        trace.note(f"no split among {len(candidates)} gives a nonzero top class")
        w_top = 0
        trace.extra["base"] = f"RP^d1 x RP^d2, d1 + d2 = {l.b_plus}"
    return trace.finish("klein", hypotheses, decomposition, w_top)


def check_action(
    X: ManifoldData, action: GroupAction, c: Sequence[int], all_splits: bool = True
) -> Verdict:
    """Dispatch on the action shape to the matching checker."""
    gens = action.generators
    if action.shape == ActionShape.Z2:
        return check_involution(X, gens[0], c)
    if action.shape == ActionShape.CYCLIC:
        return check_cyclic(X, gens[0], action.k or 0, c)
    if action.shape == ActionShape.FREE_ABELIAN:
        return check_commuting(X, gens, c)
    return check_klein(X, gens[0], gens[1], c, all_splits=all_splits)


__all__ = [
    "Conclusion",
    "check_action",
    "check_commuting",
    "check_cyclic",
    "check_involution",
    "check_klein",
    "matches_forbidden_pattern",
]
