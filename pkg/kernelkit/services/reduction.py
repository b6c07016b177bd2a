"""Shared plumbing for kernels: kind checks, trivial instances and outcome assembly."""

from typing import Dict, List, Optional
import logging

from kernelkit.core.errors import InputError
from kernelkit.models.entities import (
    EdgeLists,
    Graph,
    Instance,
    KernelOutcome,
    TraceStep,
    new_instance,
)

logger = logging.getLogger(__name__)


def require_kind(inst: Instance, *kinds: str) -> None:
    if inst.kind not in kinds:
        raise InputError(f"expected kind {' or '.join(kinds)}, got '{inst.kind}'")


def trivial_no_instance(kind: str, c: int) -> Instance:
    """Star K_{1,c+1} with k = 0: pairwise conflicting edges, one must stay weak."""
    g = Graph(c + 2, [(0, i) for i in range(1, c + 2)])
    psi = EdgeLists(c=c) if kind in ("el-ecs", "el-mstc") else None
    return new_instance(g, c, 0, kind, psi)


def empty_instance(kind: str, c: int, k: int) -> Instance:
    psi = EdgeLists(c=c) if kind in ("el-ecs", "el-mstc") else None
    return new_instance(Graph(0), c, k, kind, psi)


def finish(
    inst: Instance,
    graph: Graph,
    k_out: int,
    trace: List[TraceStep],
    remap: Dict[int, int],
    psi: Optional[EdgeLists] = None,
    deletion_set_size: int = 0,
    bound: Optional[int] = None,
    edge_bound: Optional[int] = None,
    bound_holds: bool = True,
    decision: Optional[str] = None,
) -> KernelOutcome:
    """Turn the final state of a reduction into a KernelOutcome with its decision."""
    if decision is None:
        if k_out < 0:
            decision = "no"
        elif graph.m == 0:
            decision = "yes"
        else:
            decision = "open"
    if decision == "no":
        reduced = trivial_no_instance(inst.kind, inst.c)
        remap = {}
        bound_holds = True
    elif decision == "yes":
        reduced = empty_instance(inst.kind, inst.c, max(k_out, 0))
        remap = {}
    else:
        reduced = new_instance(graph, inst.c, k_out, inst.kind, psi)
    outcome = KernelOutcome(
        reduced=reduced,
        decision=decision,
        k_out=k_out,
        trace=trace,
        remap=remap,
        deletion_set_size=deletion_set_size,
        bound=bound,
        edge_bound=edge_bound,
        bound_holds=bound_holds,
        n_in=inst.graph.n,
        m_in=inst.graph.m,
        k_in=inst.k,
    )
    logger.info(
        "%s c=%d: n %d->%d, m %d->%d, k %d->%d, decision=%s",
        inst.kind, inst.c, inst.graph.n, reduced.graph.n, inst.graph.m, reduced.graph.m,
        inst.k, k_out, decision,
    )
    return outcome


def compose(remap: Dict[int, int], step: Dict[int, int]) -> Dict[int, int]:
    """Original -> current ids after one more vertex-deleting step."""
    return {orig: step[cur] for orig, cur in remap.items() if cur in step}
