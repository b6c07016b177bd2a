from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
import networkx as nx

from kernelkit.core.errors import InputError
from kernelkit.models.entities import BoundedDegreePath, Edge, Graph, Path, norm_edge


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    G[S] with ids compacted to 0..|S|-1.
    Returns the subgraph and the remap {old id: new id} (ascending old ids keep their order).
    """
    keep = sorted(set(s))
    for v in keep:
        g.check_vertex(v)
    remap = {v: i for i, v in enumerate(keep)}
    edges = [(remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap]
    return Graph(len(keep), edges), remap


def remove_vertices(g: Graph, vs: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    drop = set(vs)
    for v in drop:
        g.check_vertex(v)
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def remove_edges(g: Graph, es: Iterable[Edge]) -> Graph:
    drop = {g.check_edge(e) for e in es}
    return Graph(g.n, (e for e in g.edges if e not in drop))


def add_vertices(g: Graph, count: int) -> Tuple[Graph, List[int]]:
    return Graph(g.n + count, g.edges), list(range(g.n, g.n + count))


def add_edges(g: Graph, es: Iterable[Edge]) -> Graph:
    return Graph(g.n, list(g.edges) + [norm_edge(u, v) for u, v in es])


def connected_components(g: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    comps = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    comps.sort(key=lambda c: c[0])
    return comps


def common_neighbors(g: Graph, u: int, v: int) -> List[int]:
    return sorted(set(g.neighbors(u)) & set(g.neighbors(v)))


def edge_in_triangle(g: Graph, e: Edge) -> bool:
    u, v = g.check_edge(e)
    return bool(set(g.neighbors(u)) & set(g.neighbors(v)))


def edges_between(g: Graph, v1: Iterable[int], v2: Iterable[int]) -> List[Edge]:
    """E_G(V1, V2): edges with one endpoint in V1 and the other in V2."""
    a, b = set(v1), set(v2)
    return [e for e in g.edges if (e[0] in a and e[1] in b) or (e[1] in a and e[0] in b)]


def has_cycle(g: Graph, vertices: Optional[Iterable[int]] = None) -> bool:
    G = g.to_networkx()
    if vertices is not None:
        G = G.subgraph(vertices)
    return G.number_of_edges() > 0 and not nx.is_forest(G)


def is_tree(g: Graph, vertices: Iterable[int]) -> bool:
    G = g.to_networkx().subgraph(list(vertices))
    return G.number_of_nodes() > 0 and nx.is_tree(G)


def validate_path(g: Graph, p: Path) -> None:
    vs = p.vertices
    for v in vs:
        g.check_vertex(v)
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise InputError(f"({a}, {b}) is not an edge of the host graph")
    es = p.edges
    if p.kind == "cycle":
        if len(vs) < 4 or vs[0] != vs[-1] or len(set(vs[:-1])) != len(vs) - 1:
            raise InputError("cycle must close on its first vertex and be otherwise vertex-simple")
    elif p.kind == "edge-simple":
        if len(set(es)) != len(es):
            raise InputError("edge-simple path repeats an edge")
    elif p.kind == "simple":
        if len(set(vs)) != len(vs):
            raise InputError("simple path repeats a vertex")
    else:
        raise InputError(f"unknown path kind '{p.kind}'")


def _walk(g: Graph, start: int, allowed: Set[int]) -> List[int]:
    """Follow the unique continuation inside `allowed` from an endpoint."""
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in g.neighbors(cur) if w in allowed and w != prev and w != start]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def cycle_order(g: Graph, comp: Sequence[int]) -> List[int]:
    """Vertices of a cycle component starting at the lowest id, towards its smaller neighbour."""
    start = min(comp)
    members = set(comp)
    order = [start]
    prev, cur = start, min(g.neighbors(start))
    while cur != start:
        order.append(cur)
        nxt = [w for w in g.neighbors(cur) if w in members and w != prev]
        prev, cur = cur, nxt[0]
    order.append(start)
    return order


def enumerate_bdps_and_isolated_cycles(g: Graph) -> Tuple[List[BoundedDegreePath], List[Path]]:
    """
    BDPs are the maximal paths whose vertices all have degree <= 2 (at least one edge);
    components that are cycles are returned separately. Each BDP starts at its
    lower-id end; anchors are the degree >= 3 neighbours of the two end vertices.
    """
    low = {v for v in g.vertices() if 1 <= g.degree(v) <= 2}
    bdps: List[BoundedDegreePath] = []
    cycles: List[Path] = []
    seen: Set[int] = set()
    for v in sorted(low):
        if v in seen:
            continue
        # component of v among low vertices
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in g.neighbors(x):
                if w in low and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        inner = {x: sum(1 for w in g.neighbors(x) if w in comp) for x in comp}
        if len(comp) >= 3 and all(d == 2 for d in inner.values()):
            cycles.append(Path(vertices=tuple(cycle_order(g, sorted(comp))), kind="cycle"))
            continue
        if len(comp) < 2:
            continue
        ends = sorted(x for x in comp if inner[x] <= 1)
        order = _walk(g, ends[0], comp)
        if order[-1] < order[0]:
            order.reverse()

        def anchor(x: int) -> Optional[int]:
            out = [w for w in g.neighbors(x) if w not in comp]
            return out[0] if out else None

        is_open = g.degree(order[0]) == 1 or g.degree(order[-1]) == 1
        bdps.append(
            BoundedDegreePath(
                path=Path(vertices=tuple(order), kind="simple"),
                open=is_open,
                anchors=(anchor(order[0]), anchor(order[-1])),
            )
        )
    return bdps, cycles
