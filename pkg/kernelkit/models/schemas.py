from collections import Counter
from typing import List, Optional
from pydantic import BaseModel

from kernelkit.models.entities import KernelOutcome


# ------- JSON contract -------


class RuleCount(BaseModel):
    rule: str
    count: int


class KernelStats(BaseModel):
    kind: str
    c: int
    k_in: int
    k_out: int
    n_in: int
    m_in: int
    n_out: int
    m_out: int
    deletion_set_size: int
    bound: Optional[int] = None
    edge_bound: Optional[int] = None
    bound_holds: bool
    decision: str
    rules: List[RuleCount]


class SuiteRecord(BaseModel):
    """One JSON line of a harness report."""

    suite: str
    seed: int
    kind: str
    c: int
    n: int
    m: int
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    # verbatim instance text for replay, only on failures
    instance: Optional[str] = None


class SuiteSummary(BaseModel):
    suite: str
    total: int
    passed: int
    failed: int
    skipped: int


def stats_of(outcome: KernelOutcome) -> KernelStats:
    counts = Counter(step.rule for step in outcome.trace)
    rules = [RuleCount(rule=r, count=counts[r]) for r in sorted(counts)]
    g = outcome.reduced.graph
    return KernelStats(
        kind=outcome.reduced.kind,
        c=outcome.reduced.c,
        k_in=outcome.k_in,
        k_out=outcome.k_out,
        n_in=outcome.n_in,
        m_in=outcome.m_in,
        n_out=g.n,
        m_out=g.m,
        deletion_set_size=outcome.deletion_set_size,
        bound=outcome.bound,
        edge_bound=outcome.edge_bound,
        bound_holds=outcome.bound_holds,
        decision=outcome.decision,
        rules=rules,
    )
