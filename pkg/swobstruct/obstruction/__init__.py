"""Obstruction checkers and their verdicts."""

from swobstruct.obstruction.checkers import (
    check_action,
    check_commuting,
    check_cyclic,
    check_involution,
    check_klein,
)
from swobstruct.obstruction.hypotheses import ManifoldData, shared_hypotheses
from swobstruct.obstruction.verdict import Conclusion, HypothesisCheck, Verdict, verdict_schema

__all__ = [
    "check_action",
    "check_commuting",
    "check_cyclic",
    "check_involution",
    "check_klein",
    "ManifoldData",
    "shared_hypotheses",
    "Conclusion",
    "HypothesisCheck",
    "Verdict",
    "verdict_schema",
]
