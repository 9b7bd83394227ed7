"""Verdict models: hypothesis checklist, invariants, conclusion and certificate."""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Conclusion(str, Enum):
    """Outcome of an obstruction check."""

    OBSTRUCTED = "obstructed"
    INCONCLUSIVE = "inconclusive"
    VACUOUS = "vacuous"
    HYPOTHESIS_FAILED = "hypothesis-failed"


class HypothesisStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class HypothesisCheck(BaseModel):
    """One evaluated hypothesis."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Hypothesis identifier")
    status: HypothesisStatus = Field(..., description="pass or fail")
    detail: str = Field(..., description="Values the decision was based on")
    required: bool = Field(True, description="Whether a failure blocks the theorem")

    @property
    def passed(self) -> bool:
        return self.status == HypothesisStatus.PASS


class VerdictInvariants(BaseModel):
    """Computed invariants reported with every verdict."""

    model_config = ConfigDict(frozen=True)

    sigma: int = Field(..., description="Signature of the form")
    b_plus: int = Field(..., description="Maximal positive-definite dimension")
    c_squared: int = Field(..., description="Square of the characteristic vector")
    decomposition: Optional[Dict[str, Any]] = Field(
        None, description="Representation on V; absent when a hypothesis failed"
    )
    w_top: Optional[int] = Field(None, description="Top Stiefel-Whitney coefficient")
    base: Optional[str] = Field(None, description="Base space of the family")
    sw_class: Optional[List[str]] = Field(None, description="Monomials of the class")
    witness_split: Optional[List[int]] = Field(
        None, description="Split (d1, d2) whose top class is nonzero"
    )
    split_tops: Optional[List[List[int]]] = Field(
        None, description="Evaluated splits as [d1, d2, top coefficient]"
    )
    pattern_match: Optional[bool] = Field(
        None, description="Whether a literally listed forbidden form matches"
    )


class Verdict(BaseModel):
    """Structured result of an obstruction check."""

    model_config = ConfigDict(frozen=True)

    conclusion: Conclusion
    hypotheses: List[HypothesisCheck]
    invariants: VerdictInvariants
    certificate: str

    @property
    def failed_hypotheses(self) -> List[HypothesisCheck]:
        return [h for h in self.hypotheses if h.required and not h.passed]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def to_text(self) -> str:
        """Human-readable report mirroring the certificate."""
        lines = [f"conclusion: {self.conclusion.value}", "hypotheses:"]
        for h in self.hypotheses:
            flag = "" if h.required else " (informational)"
            lines.append(f"  [{h.status.value}] {h.name}{flag}: {h.detail}")
        inv = self.invariants
        lines.append(
            f"invariants: sigma={inv.sigma} b_plus={inv.b_plus} c^2={inv.c_squared}"
            + (f" base={inv.base}" if inv.base else "")
            + (f" w_top={inv.w_top}" if inv.w_top is not None else "")
        )
        lines.append("certificate:")
        lines.extend(f"  {line}" for line in self.certificate.splitlines())
        return "\n".join(lines)


def decide(hypotheses: List[HypothesisCheck], w_top: Optional[int]) -> Conclusion:
    """Conclusion with precedence HypothesisFailed > Vacuous > Obstructed > Inconclusive."""
    if any(h.required and not h.passed for h in hypotheses):
        return Conclusion.HYPOTHESIS_FAILED
    if any(h.name == "non_vacuous" and not h.passed for h in hypotheses):
        return Conclusion.VACUOUS
    if w_top == 1:
        return Conclusion.OBSTRUCTED
    return Conclusion.INCONCLUSIVE


def verdict_schema() -> Dict[str, Any]:
    """JSON Schema of the Verdict report."""
    return Verdict.model_json_schema()
