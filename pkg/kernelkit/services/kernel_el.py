"""
Edge-list kernel: every rule works on bounded-degree paths (BDPs) or isolated cycles,
so the deletion set only enters through the size bound.

The working graph keeps input ids for input vertices; split vertices get fresh ids
n, n+1, ... Removed vertices simply lose their edges and disappear in the final
compaction together with every other degree-0 vertex.
"""

from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

from kernelkit.core.config import settings
from kernelkit.core.errors import ContractError
from kernelkit.models.entities import (
    BoundedDegreePath,
    Edge,
    EdgeLists,
    Graph,
    Instance,
    KernelOutcome,
    Path,
    TraceStep,
    new_edge_lists,
    norm_edge,
)
from kernelkit.services.graph import (
    connected_components,
    cycle_order,
    edge_in_triangle,
    enumerate_bdps_and_isolated_cycles,
    induced_subgraph,
)
from kernelkit.services.params import greedy_deletion_set
from kernelkit.services.reduction import finish, require_kind

logger = logging.getLogger(__name__)

Lists = Dict[Edge, FrozenSet[int]]


class _Work:
    """Mutable reduction state: edge lists (keys are the edges), budget and trace."""

    def __init__(self, g: Graph, lists: Lists, k: int, c: int):
        self.n = g.n
        self.c = c
        self.lists: Lists = dict(lists)
        self.k = k
        self.trace: List[TraceStep] = []
        self._graph: Optional[Graph] = None

    @property
    def graph(self) -> Graph:
        if self._graph is None:
            self._graph = Graph(self.n, self.lists.keys())
        return self._graph

    def _changed(self) -> None:
        self._graph = None

    def drop_edges(self, es: Iterable[Edge]) -> None:
        for e in es:
            del self.lists[norm_edge(*e)]
        self._changed()

    def drop_vertices(self, vs: Iterable[int]) -> None:
        g = self.graph
        self.drop_edges({e for v in vs for e in g.incident_edges(v)})

    def fresh(self, count: int) -> List[int]:
        ids = list(range(self.n, self.n + count))
        self.n += count
        self._changed()
        return ids

    def add_edge(self, u: int, v: int, lst: Iterable[int]) -> None:
        self.lists[norm_edge(u, v)] = frozenset(lst)
        self._changed()

    def set_list(self, e: Edge, lst: Iterable[int]) -> None:
        self.lists[norm_edge(*e)] = frozenset(lst)

    def note(self, rule: str, vertices: Sequence[int] = (), edges: Sequence[Edge] = (), k_delta: int = 0) -> None:
        self.trace.append(TraceStep(rule=rule, vertices=tuple(vertices), edges=tuple(edges), k_delta=k_delta))
        logger.debug("%s at %s%s k=%d", rule, tuple(vertices), tuple(edges), self.k)


# ------- Orientation -------


def ordered_bdp(g: Graph, p: BoundedDegreePath) -> Path:
    """Orient a BDP so that deg(first) >= deg(last); on equal degrees the lower id comes first."""
    vs = p.vertices
    a, b = vs[0], vs[-1]
    da, db = g.degree(a), g.degree(b)
    if da < db or (da == db and b < a):
        vs = tuple(reversed(vs))
    return Path(vertices=vs, kind="simple")


def _windows(vs: Sequence[int], size: int) -> Iterable[Tuple[int, ...]]:
    for i in range(len(vs) - size + 1):
        yield tuple(vs[i:i + size])


def _e(a: int, b: int) -> Edge:
    return norm_edge(a, b)


# ------- Rules -------


def _isolated_triangle(w: _Work) -> bool:
    g = w.graph
    for comp in connected_components(g):
        if len(comp) != 3:
            continue
        a, b, c = comp
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            es = [_e(a, b), _e(a, c), _e(b, c)]
            empty = sum(1 for e in es if not w.lists[e])
            w.k -= empty
            w.drop_edges(es)
            w.note("isolated-triangle", comp, es, -empty)
            return True
    return False


def _eligible(bdps: List[BoundedDegreePath]) -> List[BoundedDegreePath]:
    return [p for p in bdps if p.length >= 3 or p.open]


def _remove_bdp_edges(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    g = w.graph
    for p in _eligible(bdps):
        for e in p.edges:
            lst = w.lists[e]
            if not lst:
                w.k -= 1
                w.drop_edges([e])
                w.note("bdp-empty-list", edges=[e], k_delta=-1)
                return True
            incident = [f for x in e for f in g.incident_edges(x) if f != e]
            if len(lst) > len(incident):
                w.drop_edges([e])
                w.note("bdp-slack-list", edges=[e])
                return True
    for p in _eligible(bdps):
        ends = {p.vertices[0], p.vertices[-1]}
        for e in p.edges:
            if ends.intersection(e):
                continue
            others = set()
            for x in e:
                for f in g.incident_edges(x):
                    if f != e:
                        others |= w.lists[f]
            if w.lists[e] - others:
                w.drop_edges([e])
                w.note("bdp-private-color", edges=[e])
                return True
    return False


def _split_disjoint(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    for p in bdps:
        for v1, v2, v3 in _windows(p.vertices, 3):
            l1, l2 = w.lists[_e(v1, v2)], w.lists[_e(v2, v3)]
            if l1 & l2:
                continue
            u, x = w.fresh(2)
            w.drop_edges([_e(v1, v2), _e(v2, v3)])
            w.add_edge(v1, u, l1)
            w.add_edge(x, v3, l2)
            w.note("split-disjoint-lists", (v2, u, x))
            return True
    return False


def _push_singletons(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    g = w.graph
    for p in bdps:
        vs = ordered_bdp(g, p).vertices
        for v1, v2, v3 in _windows(vs, 3):
            e1, e2 = _e(v1, v2), _e(v2, v3)
            l1, l2 = w.lists[e1], w.lists[e2]
            if len(l1) == 2 and len(l2) == 1 and l2 <= l1:
                w.set_list(e1, l1 - l2)
                w.set_list(e2, l1)
                w.note("push-singleton-lists", edges=[e1, e2])
                return True
    return False


def _trim_open_end(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    g = w.graph
    for p in bdps:
        vs = p.vertices
        if len(vs) < 3:
            continue
        for v3, v2, v1 in (vs[:3], tuple(reversed(vs[-3:]))):
            if g.degree(v3) != 1:
                continue
            l1, l2 = w.lists[_e(v1, v2)], w.lists[_e(v2, v3)]
            if len(l1) == 1 and l1 == l2:
                w.k -= 1
                w.drop_vertices([v2, v3])
                w.note("trim-open-end", (v2, v3), k_delta=-1)
                return True
    return False


def _cycles(w: _Work, cycles: List[Path]) -> bool:
    if not cycles:
        return False
    cyc = cycles[0]
    es = cyc.edges
    sub = Graph(w.n, es)
    weak = optimal_weak_on_cycle(sub, EdgeLists(c=w.c, allowed={e: w.lists[e] for e in es}))
    w.k -= weak
    w.drop_edges(es)
    w.note("isolated-cycle", cyc.vertices[:-1], es, -weak)
    return True


def _proper_windows(w: _Work, bdps: List[BoundedDegreePath]) -> Iterable[Tuple[int, int, int, int]]:
    g = w.graph
    for p in bdps:
        if p.length >= 4:
            yield from _windows(ordered_bdp(g, p).vertices, 4)


def _lists3(w: _Work, win: Tuple[int, int, int, int]) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
    v1, v2, v3, v4 = win
    return w.lists[_e(v1, v2)], w.lists[_e(v2, v3)], w.lists[_e(v3, v4)]


def _contract_equal(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    for win in _proper_windows(w, bdps):
        l1, l2, l3 = _lists3(w, win)
        v1, v2, v3, v4 = win
        if l1 == l2 == l3 and 1 <= len(l1) <= 2 and not w.graph.has_edge(v1, v4):
            delta = 1 if len(l1) == 1 else 0
            w.k -= delta
            w.drop_vertices([v2, v3])
            w.add_edge(v1, v4, l1)
            w.note("contract-equal-lists", win, k_delta=-delta)
            return True
    return False


def _single(s: FrozenSet[int]) -> Optional[int]:
    return next(iter(s)) if len(s) == 1 else None


def _pair_lists(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    for win in _proper_windows(w, bdps):
        l1, l2, l3 = _lists3(w, win)
        if not (len(l1) == len(l2) == len(l3) == 2 and l1 != l3 and l2 != l3):
            continue
        v1, v2, v3, v4 = win
        e1, e2, e3 = _e(v1, v2), _e(v2, v3), _e(v3, v4)
        if l1 == l2:
            cx = _single(l2 & l3)
            if cx is None:
                continue
            w.set_list(e1, {cx})
            w.set_list(e2, {cx})
        elif not (l1 & l3):
            # e1 and e2 keep the color only e1 offers, e3 keeps its private color next to it
            cx, cy = _single(l1 - l2), _single(l3 - l2)
            if cx is None or cy is None:
                continue
            w.set_list(e1, {cx})
            w.set_list(e2, {cx})
            w.set_list(e3, {cx, cy})
        else:
            cx = _single(l1 & l3)
            if cx is None or w.graph.has_edge(v2, v4):
                continue
            w.drop_vertices([v3])
            w.set_list(e1, {cx})
            w.add_edge(v2, v4, {cx})
        w.k += 1
        w.note("pair-lists", win, k_delta=1)
        return True
    return False


def _contract_singleton_pair(w: _Work, bdps: List[BoundedDegreePath]) -> bool:
    for win in _proper_windows(w, bdps):
        l1, l2, l3 = _lists3(w, win)
        if not (len(l1) == 1 and len(l2) == len(l3) == 2):
            continue
        v1, v2, v3, v4 = win
        if l2 == l3:
            if w.graph.has_edge(v1, v4):
                continue
            w.drop_vertices([v2, v3])
            w.add_edge(v1, v4, l1)
        else:
            if w.graph.has_edge(v2, v4):
                continue
            w.drop_vertices([v3])
            w.add_edge(v2, v4, l2 ^ l3)
        w.note("contract-singleton-pair", win)
        return True
    return False


RuleFn = Callable[[_Work, List[BoundedDegreePath]], bool]

_PATH_RULES: Tuple[RuleFn, ...] = (_remove_bdp_edges, _split_disjoint, _push_singletons, _trim_open_end)
_LONG_RULES: Tuple[RuleFn, ...] = (_contract_equal, _pair_lists, _contract_singleton_pair)


def _rule_budget(n: int, m: int) -> int:
    if settings.rule_budget > 0:
        return settings.rule_budget
    return 8 * (n + m + 1) ** 3


def _run(w: _Work, stc: bool, full: bool) -> None:
    """Apply the rules to a fixpoint, lowest rule first, rescanning after every change."""
    budget = _rule_budget(w.n, len(w.lists))
    steps = 0
    while w.k >= 0:
        if steps > budget:
            raise ContractError(f"edge-list rules exceeded their budget of {budget} applications")
        steps += 1
        if stc and _isolated_triangle(w):
            continue
        bdps, cycles = enumerate_bdps_and_isolated_cycles(w.graph)
        if any(rule(w, bdps) for rule in _PATH_RULES):
            continue
        if not full:
            break
        if _cycles(w, cycles):
            continue
        if any(rule(w, bdps) for rule in _LONG_RULES):
            continue
        break


def _full_lists(g: Graph, psi: EdgeLists) -> Lists:
    return {e: psi.of(e) for e in g.edges}


# ------- Isolated paths and cycles -------


def _non_isolated(g: Graph) -> List[int]:
    return [v for v in g.vertices() if g.degree(v) > 0]


def optimal_weak_on_isolated_path(g: Graph, psi: EdgeLists) -> int:
    """Minimum weak count of a Ψ-satisfying proper labeling of a single path."""
    core = _non_isolated(g)
    if not core:
        return 0
    comps = [c for c in connected_components(g) if len(c) > 1]
    if len(comps) != 1 or g.max_degree() > 2 or g.m != len(core) - 1:
        raise ContractError("input is not a single path")
    w = _Work(g, _full_lists(g, psi), g.m, psi.c)
    _run(w, stc=False, full=False)
    if w.lists:
        raise ContractError(f"path rules left {len(w.lists)} edges")
    return g.m - w.k


def optimal_weak_on_cycle(g: Graph, psi: EdgeLists) -> int:
    """Minimum weak count on one cycle: fix the first edge, then solve the remaining path."""
    core = _non_isolated(g)
    comps = [c for c in connected_components(g) if len(c) > 1]
    if len(core) < 3 or len(comps) != 1 or any(g.degree(v) != 2 for v in core):
        raise ContractError("input is not a single cycle")
    order = cycle_order(g, core)
    ex = _e(order[0], order[1])
    rest = Graph(g.n, [e for e in g.edges if e != ex])
    base = {e: psi.of(e) for e in rest.edges}
    lx = psi.of(ex)

    def path_opt(lists: Lists) -> int:
        return optimal_weak_on_isolated_path(rest, EdgeLists(c=psi.c, allowed=lists))

    if len(lx) >= 3:
        return path_opt(base)
    best = 1 + path_opt(base)
    touching = [e for e in rest.edges if set(e) & set(ex)]
    for alpha in sorted(lx):
        lists = dict(base)
        for e in touching:
            lists[e] = lists[e] - {alpha}
        best = min(best, path_opt(lists))
    return best


# ------- Kernel -------


def kernel_el(inst: Instance) -> KernelOutcome:
    """Edge-list kernel for ECS and Multi-STC with at most 11|D'_2| edges and 10|D'_2| vertices."""
    require_kind(inst, "el-ecs", "el-mstc")
    g = inst.graph
    psi = inst.psi or EdgeLists(c=inst.c)
    w = _Work(g, _full_lists(g, psi), inst.k, inst.c)
    _run(w, stc=inst.kind == "el-mstc", full=True)

    final = w.graph
    keep = [v for v in final.vertices() if final.degree(v) > 0]
    dropped = [v for v in final.vertices() if final.degree(v) == 0]
    if dropped:
        w.note("drop-isolated-vertex", dropped)
    reduced, remap = induced_subgraph(final, keep)
    lists = {norm_edge(remap[u], remap[v]): s for (u, v), s in w.lists.items()}
    input_remap = {v: i for v, i in remap.items() if v < g.n}

    d = greedy_deletion_set(g, 2)
    bound, edge_bound = 10 * len(d), 11 * len(d)
    holds = reduced.n <= bound and reduced.m <= edge_bound
    return finish(
        inst, reduced, w.k, w.trace, input_remap,
        psi=new_edge_lists(inst.c, lists),
        deletion_set_size=len(d), bound=bound, edge_bound=edge_bound, bound_holds=holds,
    )


# ------- Checkable properties of reduced instances -------


def el_structure_ok(g: Graph) -> bool:
    """No isolated cycles, open BDPs have at most two edges, the others at most four."""
    bdps, cycles = enumerate_bdps_and_isolated_cycles(g)
    if cycles:
        return False
    return all(p.length <= (2 if p.open else 4) for p in bdps)


def k3_safe(g: Graph) -> bool:
    """No BDP vertex lies on a triangle, except on non-open BDPs with a single edge."""
    bdps, _ = enumerate_bdps_and_isolated_cycles(g)
    for p in bdps:
        if not p.open and len(p.vertices) == 2:
            continue
        for v in p.vertices:
            if any(edge_in_triangle(g, e) for e in g.incident_edges(v)):
                return False
    return True
