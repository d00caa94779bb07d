# series/theorem.py
"""
Closed form (1 + z)^d / (1 - h z + z^2) and its symbolic derivation through
the chain S -> S/V -> S/L -> R/K -> A -> lift along a regular sequence.
"""
import logging
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

from models.enums import ProofStage, Variant
from models.errors import SeriesError
from series.change_of_rings import regular_ring, rule_a, rule_a_inverse, rule_b, rule_c, rule_c_inverse
from series.rational_series import RationalSeries

logger = logging.getLogger(__name__)


class ProofStep(BaseModel):
    stage: ProofStage
    rule: str
    series: RationalSeries


class ProofTrace(BaseModel):
    d: int
    h: int
    steps: List[ProofStep] = Field(default_factory=list)
    checkpoints: Dict[ProofStage, RationalSeries] = Field(default_factory=dict)

    def record(self, stage: ProofStage, rule: str, series: RationalSeries) -> RationalSeries:
        self.steps.append(ProofStep(stage=stage, rule=rule, series=series))
        return series

    def steps_at(self, stage: ProofStage) -> List[ProofStep]:
        return [s for s in self.steps if s.stage == stage]

    def __getitem__(self, stage: ProofStage) -> RationalSeries:
        return self.checkpoints[stage]


def _check(d: int, h: int) -> None:
    if d < 0 or h < 2:
        raise SeriesError(f"need d >= 0 and h >= 2, got d={d}, h={h}")


def closed_form_theorem(d: int, h: int) -> RationalSeries:
    _check(d, h)
    return regular_ring(d) / RationalSeries.of([1, -h, 1])


def derive_via_proof_chain(d: int, h: int) -> Tuple[RationalSeries, ProofTrace]:
    _check(d, h)
    trace = ProofTrace(d=d, h=h)

    # S = k[[x1, x2]]; V is cut out by two regular elements of n^2
    p = trace.record(ProofStage.REGULAR, "regular local ring of dimension 2", regular_ring(2))
    p = trace.record(ProofStage.FIRST_REGULAR_ELEMENT, "a^-1: x2^2 - a*x1*x2 - x1^(s-t+1) in n^2", rule_a_inverse(p, True))
    p = trace.record(ProofStage.SV, "a^-1: x1^t*x2 in n^2", rule_a_inverse(p, True))
    trace.checkpoints[ProofStage.SV] = p

    # S/V Gorenstein with socle x1^s, S/L = (S/V)/(0:m)
    p = trace.record(ProofStage.SL, "c^-1: S/L = (S/V)/(0:m)", rule_c_inverse(p))
    trace.checkpoints[ProofStage.SL] = p

    # x3..xh are socle elements of R/K outside m^2
    for j in range(3, h + 1):
        p = trace.record(ProofStage.SOCLE_PEEL, f"b: x{j} in (0:m) of R/K", rule_b(p))
    trace.checkpoints[ProofStage.RK] = p

    p = trace.record(ProofStage.ARTINIAN, "c: A/(0:m) = R/K", rule_c(p))
    trace.checkpoints[ProofStage.ARTINIAN] = p

    for i in range(1, d + 1):
        p = trace.record(ProofStage.LIFT, f"a: a_{i} of a minimal reduction, in m \\ m^2", rule_a(p, False))
    trace.checkpoints[ProofStage.FINAL] = p

    logger.debug("proof chain d=%d h=%d → %s (%d steps)", d, h, p, len(trace.steps))
    return p, trace


# ----------------------------------------
# Expected series of the four rings, read off the replayed chain
VARIANT_STAGE = {
    Variant.A: ProofStage.ARTINIAN,
    Variant.RK: ProofStage.RK,
    Variant.SL: ProofStage.SL,
    Variant.SV: ProofStage.SV,
}


def variant_series(variant: Variant, h: int) -> RationalSeries:
    if variant not in VARIANT_STAGE:
        raise KeyError(f"No closed-form series for variant {variant}")
    _, trace = derive_via_proof_chain(0, h)
    return trace[VARIANT_STAGE[variant]]
