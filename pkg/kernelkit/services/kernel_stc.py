from typing import Dict, List, Optional, Sequence, Set, Tuple
import logging

from kernelkit.core.errors import ContractError
from kernelkit.models.entities import (
    Edge,
    Graph,
    Instance,
    KernelOutcome,
    Labeling,
    Path,
    PeripheryComponent,
    TraceStep,
    norm_edge,
)
from kernelkit.services.graph import (
    connected_components,
    edge_in_triangle,
    has_cycle,
    induced_subgraph,
    is_tree,
    remove_vertices,
    validate_path,
)
from kernelkit.services.labeling import check_stc, color_sequence
from kernelkit.services.params import (
    core_neighborhood,
    core_periphery,
    greedy_deletion_set,
)
from kernelkit.services.reduction import compose, finish, require_kind

logger = logging.getLogger(__name__)


def stc_degree_bound(c: int) -> int:
    return c // 2 + 1


# ------- Periphery components against a fixed core -------


def periphery_components(g: Graph, core: Set[int]) -> List[PeripheryComponent]:
    periphery = [v for v in g.vertices() if v not in core]
    sub, remap = induced_subgraph(g, periphery)
    back = {new: old for old, new in remap.items()}
    out = []
    for comp in connected_components(sub):
        vs = tuple(back[x] for x in comp)
        close = tuple(v for v in vs if any(w in core for w in g.neighbors(v)))
        out.append(PeripheryComponent(vertices=vs, close=close))
    return out


def _low_degree(g: Graph, comp: PeripheryComponent, t: int) -> bool:
    return any(g.degree(v) < t for v in comp.vertices)


def _triangle_inside(g: Graph, comp: PeripheryComponent, t: int) -> bool:
    members = set(comp.vertices)
    return any(
        edge_in_triangle(g, norm_edge(v, w))
        for v in comp.vertices
        for w in g.neighbors(v)
        if w in members and v < w
    )


def _cyclic(g: Graph, comp: PeripheryComponent, t: int) -> bool:
    return has_cycle(g, comp.vertices)


# rule name, predicate; each deletes A∖A*
_EVEN_RULES = (
    ("low-degree-periphery", _low_degree),
    ("triangle-periphery", _triangle_inside),
    ("cyclic-periphery", _cyclic),
)


def _even_pipeline(
    g: Graph, core: Set[int], t: int, origin: List[int], remap: Dict[int, int], trace: List[TraceStep]
) -> Tuple[Graph, Dict[int, int]]:
    while True:
        comps = periphery_components(g, core)
        drop: Optional[Tuple[str, Sequence[int]]] = None
        for comp in comps:
            if not comp.close:
                drop = ("drop-isolated-periphery", comp.vertices)
                break
        if drop is None:
            for name, applies in _EVEN_RULES:
                for comp in comps:
                    if comp.far and applies(g, comp, t):
                        drop = (name, comp.far)
                        break
                if drop is not None:
                    break
        if drop is None:
            return g, remap
        name, vs = drop
        trace.append(TraceStep(rule=name, vertices=tuple(origin[v] for v in vs)))
        logger.debug("%s: removing %d vertices", name, len(vs))
        g, step = remove_vertices(g, vs)
        remap = compose(remap, step)
        origin[:] = [o for v, o in enumerate(origin) if v in step]
        moved = {step[v] for v in core if v in step}
        core.clear()
        core.update(moved)


def kernel_stc(inst: Instance) -> KernelOutcome:
    """Multi-STC kernel for the edge-deletion distance to maximum degree ⌊c/2⌋+1."""
    require_kind(inst, "mstc")
    g, c, k = inst.graph, inst.c, inst.k
    identity = {v: v for v in g.vertices()}
    if c == 1:
        return finish(inst, g, k, [], identity)

    trace: List[TraceStep] = []
    if c == 2:
        d = greedy_deletion_set(g, 1)
        core = {v for e in d.edges for v in e}
        drop = [v for comp in connected_components(g) if not core.intersection(comp) for v in comp]
        if drop:
            trace.append(TraceStep(rule="drop-coreless-component", vertices=tuple(drop)))
        reduced, remap = remove_vertices(g, drop)
        bound = 4 * len(d)
        return finish(
            inst, reduced, k, trace, remap,
            deletion_set_size=len(d), bound=bound, bound_holds=reduced.n <= bound,
        )

    t = stc_degree_bound(c)
    d = greedy_deletion_set(g, t)
    if c % 2 == 1:
        keep = set(core_neighborhood(g, core_periphery(g, d)))
        removed = [v for v in g.vertices() if v not in keep]
        if removed:
            trace.append(TraceStep(rule="drop-far-periphery", vertices=tuple(removed)))
        reduced, remap = remove_vertices(g, removed)
        # core vertices plus at most t non-deleted neighbours each
        bound = 2 * len(d) * (t + 1)
        return finish(
            inst, reduced, k, trace, remap,
            deletion_set_size=len(d), bound=bound, bound_holds=reduced.n <= bound,
        )

    core = {v for e in d.edges for v in e}
    origin = list(g.vertices())
    reduced, remap = _even_pipeline(g, core, t, origin, identity, trace)
    bound = (c + 7) * len(d)
    return finish(
        inst, reduced, k, trace, remap,
        deletion_set_size=len(d), bound=bound, bound_holds=reduced.n <= bound,
    )


def even_periphery_shape_ok(g: Graph, core: Set[int], t: int) -> bool:
    """Every periphery component with far vertices is a tree whose vertices all have degree t."""
    for comp in periphery_components(g, core):
        if not comp.far:
            continue
        if not is_tree(g, comp.vertices):
            return False
        if any(g.degree(v) != t for v in comp.vertices):
            return False
    return True


# ------- Constructive lemmas on periphery labelings -------


def _free_strong_color(g: Graph, L: Labeling, e: Edge) -> Optional[int]:
    u, v = e
    used = {L.colors[norm_edge(x, w)] for x in (u, v) for w in g.neighbors(x) if norm_edge(x, w) != e}
    return next((x for x in range(1, L.c + 1) if x not in used), None)


def _check_lemma_input(g: Graph, L: Labeling, p: Path, t: int) -> None:
    validate_path(g, p)
    if not check_stc(g, L):
        raise ContractError("labeling is not an STC-labeling")
    for v in p.vertices:
        if g.degree(v) > t:
            raise ContractError(f"vertex {v} has degree {g.degree(v)} > {t}")


def _move_weak(g: Graph, L: Labeling, vs: Tuple[int, ...]) -> Labeling:
    if len(vs) <= 2:
        return L
    before = L.weak_count
    L = _move_weak(g, L, vs[:-1])
    if L.weak_count < before:
        return L
    f = norm_edge(vs[-3], vs[-2])
    last = norm_edge(vs[-2], vs[-1])
    q = L.colors[last]
    if q == 0:
        return L
    other = any(
        L.colors[norm_edge(x, w)] == q and norm_edge(x, w) not in (f, last)
        for x in f
        for w in g.neighbors(x)
    )
    if other:
        free = _free_strong_color(g, L, f)
        if free is None:
            raise ContractError(f"no free color for edge {f}")
        return L.recolored({f: free})
    return L.recolored({f: q, last: 0})


def move_weak_edge_along_path(g: Graph, L: Labeling, p: Path) -> Labeling:
    """
    Shift the weak first edge of an edge-simple path to its end: the color sequence
    (0, q2, ..., q_{r-1}) becomes (q2, ..., q_{r-1}, 0), unless a weak edge could be
    recolored on the way (then the result has fewer weak edges).
    """
    _check_lemma_input(g, L, p, stc_degree_bound(L.c))
    if not p.edges or L.colors[p.edges[0]] != 0:
        raise ContractError("path must start with a weak edge")
    return _move_weak(g, L, p.vertices)


def rotate_cycle(g: Graph, L: Labeling, cycle: Path, i: int) -> Labeling:
    """Rotate the color sequence of a cycle by i positions (or lose a weak edge)."""
    if cycle.kind != "cycle":
        raise ContractError("rotate_cycle needs a cycle")
    _check_lemma_input(g, L, cycle, stc_degree_bound(L.c))
    vs = cycle.vertices[:-1]
    r = len(vs)
    if all(L.colors[e] != 0 for e in cycle.edges):
        raise ContractError("cycle has no weak edge")
    start = L.weak_count
    for _ in range(i % r):
        es = cycle.edges
        j = next(idx for idx, e in enumerate(es) if L.colors[e] == 0)
        walk = vs[j:] + vs[:j] + (vs[j],)
        L = _move_weak(g, L, walk)
        if L.weak_count < start:
            return L
    return L


def move_strong_color_in_cycle(g: Graph, L: Labeling, cycle: Path, e1: Edge, e2: Edge) -> Labeling:
    """Give e1 the strong color of e2 by rotating the cycle (or lose a weak edge)."""
    es = cycle.edges
    e1, e2 = norm_edge(*e1), norm_edge(*e2)
    if e1 not in es or e2 not in es:
        raise ContractError("both edges must lie on the cycle")
    if L.colors.get(e2, 0) == 0:
        raise ContractError(f"edge {e2} is not strong")
    a, b = es.index(e1), es.index(e2)
    return rotate_cycle(g, L, cycle, (b - a) % len(es))


def cycle_sequence(g: Graph, L: Labeling, cycle: Path) -> Tuple[int, ...]:
    return color_sequence(g, L, cycle)
