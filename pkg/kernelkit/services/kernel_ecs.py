from typing import Dict, List, Tuple
import logging
import networkx as nx

from kernelkit.core.errors import InputError
from kernelkit.models.entities import (
    ComponentCover,
    DeletionSet,
    Graph,
    Instance,
    KernelOutcome,
    TraceStep,
)
from kernelkit.services.graph import connected_components, remove_vertices
from kernelkit.services.params import (
    approx_component_cover,
    core_neighborhood,
    core_periphery,
    ecs_expansion,
    greedy_deletion_set,
    saturate,
)
from kernelkit.services.reduction import compose, finish, require_kind

logger = logging.getLogger(__name__)


def maximum_matching_size(g: Graph) -> int:
    return len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))


def _matching_outcome(inst: Instance) -> KernelOutcome:
    """c = 1: the strong edges form a matching, so min weak = m - ν(G)."""
    g = inst.graph
    weak = g.m - maximum_matching_size(g)
    step = TraceStep(rule="maximum-matching", edges=g.edges, k_delta=-weak)
    return finish(inst, Graph(0), inst.k - weak, [step], {})


def keep_core_neighborhood(g: Graph, t: int) -> Tuple[Graph, Dict[int, int], DeletionSet, List[int]]:
    """Keep G[C ∪ N(C)] for the greedy deletion set D'_t; returns (graph, remap, D', removed)."""
    d = greedy_deletion_set(g, t)
    keep = set(core_neighborhood(g, core_periphery(g, d)))
    removed = [v for v in g.vertices() if v not in keep]
    reduced, remap = remove_vertices(g, removed)
    return reduced, remap, d, removed


def kernel_ecs_xi(inst: Instance) -> KernelOutcome:
    """ECS kernel for the edge-deletion distance to maximum degree c-1."""
    require_kind(inst, "ecs")
    if inst.c == 1:
        return _matching_outcome(inst)
    c = inst.c
    reduced, remap, d, removed = keep_core_neighborhood(inst.graph, c - 1)
    trace = []
    if removed:
        trace.append(TraceStep(rule="keep-core-neighborhood", vertices=tuple(removed)))
    bound = 2 * len(d) * c
    edge_bound = len(d) + reduced.n * (c - 1)
    holds = reduced.n <= bound and reduced.m <= edge_bound
    return finish(
        inst, reduced, inst.k, trace, remap,
        deletion_set_size=len(d), bound=bound, edge_bound=edge_bound, bound_holds=holds,
    )


def kernel_edge_coloring(inst: Instance) -> KernelOutcome:
    """Is G c-edge-colorable? (ECS with k = 0)."""
    require_kind(inst, "ecs")
    if inst.k != 0:
        raise InputError(f"edge coloring mode needs k = 0, got k = {inst.k}")
    g, c = inst.graph, inst.c
    if g.max_degree() > c:
        too_high = tuple(v for v in g.vertices() if g.degree(v) > c)
        step = TraceStep(rule="degree-reject", vertices=too_high)
        return finish(inst, g, 0, [step], {}, decision="no")
    if c == 1:
        return _matching_outcome(inst)
    reduced, remap, d, removed = keep_core_neighborhood(g, c - 1)
    trace = []
    if removed:
        trace.append(TraceStep(rule="keep-core-neighborhood", vertices=tuple(removed)))
    h_c = sum(1 for v in g.vertices() if g.degree(v) == c)
    bound = 2 * h_c * c
    return finish(
        inst, reduced, 0, trace, remap,
        deletion_set_size=len(d), bound=bound, bound_holds=reduced.n <= bound,
    )


def kernel_ecs_coc(inst: Instance) -> KernelOutcome:
    """ECS kernel for component order connectivity: small-component removal plus expansions."""
    require_kind(inst, "ecs")
    if inst.c == 1:
        return _matching_outcome(inst)
    c = inst.c
    g = inst.graph
    k = inst.k
    remap = {v: v for v in g.vertices()}
    origin = list(g.vertices())
    trace: List[TraceStep] = []
    cover = approx_component_cover(g, c)

    while True:
        cover = saturate(g, cover)
        D = set(cover.vertices)
        # components of G lying entirely in I
        drop = [v for comp in connected_components(g) if not D.intersection(comp) for v in comp]
        if drop:
            trace.append(TraceStep(rule="drop-small-component", vertices=tuple(origin[v] for v in drop)))
            g, step = remove_vertices(g, drop)
            remap = compose(remap, step)
            origin = [o for v, o in enumerate(origin) if v in step]
            cover = ComponentCover(t=c, vertices=tuple(sorted(step[v] for v in D)), saturated=True)

        res = ecs_expansion(g, cover, c)
        if res is None:
            break
        X = set(res.X)
        incident = sum(1 for u, v in g.edges if u in X or v in X)
        delta = incident - c * len(X)
        k -= delta
        gone = sorted(X | set(res.Y))
        trace.append(
            TraceStep(rule="expansion", vertices=tuple(origin[v] for v in gone), k_delta=-delta)
        )
        logger.debug("expansion removed %d vertices, k -= %d", len(gone), delta)
        g, step = remove_vertices(g, gone)
        remap = compose(remap, step)
        origin = [o for v, o in enumerate(origin) if v in step]
        cover = ComponentCover(
            t=c, vertices=tuple(sorted(step[v] for v in cover.vertices if v not in X)), saturated=False
        )
        if k < 0:
            break

    size = len(cover.vertices)
    bound = (c * c + 1) * size
    holds = g.n == 0 or g.n < bound
    return finish(inst, g, k, trace, remap, deletion_set_size=size, bound=bound, bound_holds=holds)
