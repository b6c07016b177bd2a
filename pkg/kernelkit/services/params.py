from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple
import logging
import networkx as nx

from kernelkit.core.errors import ContractError
from kernelkit.models.entities import (
    ComponentCover,
    CorePeriphery,
    DeletionSet,
    Edge,
    ExpansionResult,
    Graph,
    PeripheryComponent,
    norm_edge,
)
from kernelkit.services.graph import connected_components, induced_subgraph

logger = logging.getLogger(__name__)


# ------- Edge-deletion sets and core/periphery -------


def greedy_deletion_set(g: Graph, t: int) -> DeletionSet:
    """
    For every vertex still above degree t remove enough incident edges, preferring
    edges whose other endpoint is also above t (ties: lowest id). At most
    sum(max(deg(v)-t, 0)) edges, a 2-approximation of the minimum.
    """
    if t < 0:
        raise ContractError(f"degree bound must be non-negative, got {t}")
    resid = g.degrees()
    deleted: Set[Edge] = set()
    for v in g.vertices():
        need = resid[v] - t
        if need <= 0:
            continue
        cand = [w for w in g.neighbors(v) if norm_edge(v, w) not in deleted]
        cand.sort(key=lambda w: (0 if resid[w] > t else 1, w))
        for w in cand[:need]:
            deleted.add(norm_edge(v, w))
            resid[v] -= 1
            resid[w] -= 1
    return DeletionSet(t=t, edges=tuple(sorted(deleted)))


def core_periphery(g: Graph, d: DeletionSet) -> CorePeriphery:
    core = sorted({v for e in d.edges for v in e})
    core_set = set(core)
    periphery = [v for v in g.vertices() if v not in core_set]
    sub, remap = induced_subgraph(g, periphery)
    back = {new: old for old, new in remap.items()}
    components = []
    for comp in connected_components(sub):
        vs = tuple(back[x] for x in comp)
        close = tuple(v for v in vs if any(w in core_set for w in g.neighbors(v)))
        components.append(PeripheryComponent(vertices=vs, close=close))
    return CorePeriphery(
        t=d.t, core=tuple(core), periphery=tuple(periphery), components=tuple(components)
    )


def core_neighborhood(g: Graph, cp: CorePeriphery) -> List[int]:
    """C ∪ N(C), ascending."""
    keep = set(cp.core)
    for v in cp.core:
        keep.update(g.neighbors(v))
    return sorted(keep)


# ------- Component covers -------


def _bfs_prefix(g: Graph, start: int, blocked: Set[int], limit: int) -> List[int]:
    order = [start]
    seen = {start}
    q = deque([start])
    while q and len(order) < limit:
        x = q.popleft()
        for w in g.neighbors(x):
            if w in blocked or w in seen:
                continue
            seen.add(w)
            order.append(w)
            q.append(w)
            if len(order) >= limit:
                break
    return order


def approx_component_cover(g: Graph, t: int) -> ComponentCover:
    """
    Repeatedly take t+1 connected vertices of G-D (BFS order from the lowest id of a
    component that is too large) into D. Every such group contains a vertex of
    any cover, so |D| <= (t+1)·λ_t.
    """
    if t < 1:
        raise ContractError(f"component order bound must be at least 1, got {t}")
    D: Set[int] = set()
    changed = True
    while changed:
        changed = False
        seen: Set[int] = set()
        for v in g.vertices():
            if v in D or v in seen:
                continue
            group = _bfs_prefix(g, v, D, t + 1)
            if len(group) > t:
                D.update(group)
                changed = True
                break
            # whole component has at most t vertices
            seen.update(_bfs_prefix(g, v, D, g.n + 1))
    return ComponentCover(t=t, vertices=tuple(sorted(D)), saturated=False)


def saturate(g: Graph, cover: ComponentCover) -> ComponentCover:
    """Drop cover vertices whose whole neighbourhood lies inside the cover."""
    D = set(cover.vertices)
    changed = True
    while changed:
        changed = False
        for v in sorted(D):
            if all(w in D for w in g.neighbors(v)):
                D.discard(v)
                changed = True
    return ComponentCover(t=cover.t, vertices=tuple(sorted(D)), saturated=True)


def is_component_cover(g: Graph, vertices: Iterable[int], t: int) -> bool:
    D = set(vertices)
    sub, _ = induced_subgraph(g, [v for v in g.vertices() if v not in D])
    return all(len(c) <= t for c in connected_components(sub))


# ------- Expansion lemma -------


def expansion(
    A: Sequence[Hashable], B: Sequence[Hashable], edges: Iterable[Tuple[Hashable, Hashable]], q: int
) -> Tuple[List[Hashable], List[Hashable], List[Tuple[Hashable, Hashable]]]:
    """
    q-expansion of X ⊆ A into Y ⊆ B with N(Y) ⊆ X, via one max-flow
    (source->a cap q, a->b cap 1, b->sink cap 1). Returns (X, Y, M) with M as
    (a, b) pairs.
    """
    A = list(A)
    B = list(B)
    if not A:
        raise ContractError("expansion needs a nonempty A-side")
    if q < 1:
        raise ContractError(f"q must be at least 1, got {q}")
    if len(B) < q * len(A):
        raise ContractError(f"|B|={len(B)} < q·|A|={q * len(A)}")
    a_set, b_set = set(A), set(B)
    nbrs: Dict[Hashable, List[Hashable]] = {b: [] for b in B}
    adj_a: Dict[Hashable, List[Hashable]] = {a: [] for a in A}
    for a, b in edges:
        if a not in a_set or b not in b_set:
            raise ContractError(f"edge ({a}, {b}) does not join A to B")
        nbrs[b].append(a)
        adj_a[a].append(b)
    isolated = [b for b in B if not nbrs[b]]
    if isolated:
        raise ContractError(f"B-side vertices without neighbours: {isolated[:5]}")

    S, T = ("s",), ("t",)
    D = nx.DiGraph()
    for a in A:
        D.add_edge(S, ("a", a), capacity=q)
        for b in adj_a[a]:
            D.add_edge(("a", a), ("b", b), capacity=1)
    for b in B:
        D.add_edge(("b", b), T, capacity=1)
    value, flow = nx.maximum_flow(D, S, T)

    def used(a: Hashable, b: Hashable) -> bool:
        return flow[("a", a)][("b", b)] > 0

    if value == q * len(A):
        X, Y = A, B
    else:
        # alternating reachability from unsaturated B-vertices
        start = [b for b in B if flow[("b", b)][T] <= 0]
        reach_b = set(start)
        reach_a: Set[Hashable] = set()
        stack = list(start)
        while stack:
            b = stack.pop()
            for a in nbrs[b]:
                if a in reach_a or used(a, b):
                    continue
                reach_a.add(a)
                for b2 in adj_a[a]:
                    if used(a, b2) and b2 not in reach_b:
                        reach_b.add(b2)
                        stack.append(b2)
        X = [a for a in A if a in reach_a]
        Y = [b for b in B if b in reach_b]
    M = [(a, b) for a in X for b in adj_a[a] if used(a, b)]
    logger.debug("expansion: |A|=%d |B|=%d q=%d -> |X|=%d |Y|=%d", len(A), len(B), q, len(X), len(Y))
    return X, Y, M


def ecs_expansion(g: Graph, cover: ComponentCover, c: int) -> Optional[ExpansionResult]:
    """
    Contract every component of G[I] (I = V∖D) into one B-vertex, expand D into them
    with q = c, then map each matched class back to its lowest-id vertex adjacent to
    the matched cover vertex. None when |I| < c²·|D|.
    """
    if not cover.saturated:
        raise ContractError("ecs_expansion needs a saturated cover")
    D = list(cover.vertices)
    d_set = set(D)
    I = [v for v in g.vertices() if v not in d_set]
    if not D or len(I) < c * c * len(D):
        return None
    sub, remap = induced_subgraph(g, I)
    back = {new: old for old, new in remap.items()}
    classes = [[back[x] for x in comp] for comp in connected_components(sub)]
    aux_edges = []
    for idx, cls in enumerate(classes):
        touching = sorted({w for v in cls for w in g.neighbors(v) if w in d_set})
        if not touching:
            raise ContractError(f"component {cls} of G[I] has no cover neighbour")
        aux_edges.extend((x, idx) for x in touching)
    X, Yc, Mc = expansion(D, list(range(len(classes))), aux_edges, c)
    Y = sorted(v for idx in Yc for v in classes[idx])
    M = []
    for x, idx in Mc:
        rep = min(v for v in classes[idx] if g.has_edge(x, v))
        M.append((x, rep))
    return ExpansionResult(X=tuple(sorted(X)), Y=tuple(Y), M=tuple(sorted(M)))
