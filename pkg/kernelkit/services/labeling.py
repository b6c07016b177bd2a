from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from kernelkit.core.errors import InputError
from kernelkit.models.entities import Edge, EdgeLists, Graph, Labeling, Path, norm_edge
from kernelkit.services.graph import validate_path

ColorSequence = Tuple[int, ...]


def _check_coverage(g: Graph, L: Labeling) -> None:
    if len(L.colors) != g.m or any(not g.has_edge(*e) for e in L.colors):
        raise InputError(f"labeling covers {len(L.colors)} edges, graph has {g.m}")


def all_weak(g: Graph, c: int) -> Labeling:
    return Labeling(c=c, colors={e: 0 for e in g.edges})


def check_proper(g: Graph, L: Labeling) -> bool:
    """No two incident edges share a strong color."""
    _check_coverage(g, L)
    for v in g.vertices():
        seen = set()
        for w in g.neighbors(v):
            x = L.colors[norm_edge(v, w)]
            if x == 0:
                continue
            if x in seen:
                return False
            seen.add(x)
    return True


def induced_p3s(g: Graph) -> Iterable[Tuple[int, int, int]]:
    """(u, v, w) with center v, u < w and u, w non-adjacent."""
    for v in g.vertices():
        nb = g.neighbors(v)
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.has_edge(u, w):
                    yield u, v, w


def check_stc(g: Graph, L: Labeling) -> bool:
    """No induced P3 has both of its edges in the same strong class."""
    _check_coverage(g, L)
    for u, v, w in induced_p3s(g):
        x = L.colors[norm_edge(u, v)]
        if x != 0 and x == L.colors[norm_edge(v, w)]:
            return False
    return True


def check_psi_satisfying(g: Graph, L: Labeling, psi: EdgeLists) -> bool:
    _check_coverage(g, L)
    return all(x == 0 or x in psi.of(e) for e, x in L.colors.items())


def is_valid(kind: str, g: Graph, L: Labeling, psi: Optional[EdgeLists] = None) -> bool:
    if any(not (0 <= x <= L.c) for x in L.colors.values()):
        return False
    ok = check_stc(g, L) if kind in ("mstc", "el-mstc") else check_proper(g, L)
    if ok and kind in ("el-ecs", "el-mstc") and psi is not None:
        ok = check_psi_satisfying(g, L, psi)
    return ok


def color_sequence(g: Graph, L: Labeling, p: Path) -> ColorSequence:
    validate_path(g, p)
    return tuple(L.colors[e] for e in p.edges)


def apply_sequence(g: Graph, L: Labeling, p: Path, seq: Sequence[int]) -> Labeling:
    """Write `seq` onto E(P); every other edge keeps its color."""
    validate_path(g, p)
    es = p.edges
    if len(seq) != len(es):
        raise InputError(f"sequence has {len(seq)} entries, path has {len(es)} edges")
    updates: Dict[Edge, int] = {}
    for e, x in zip(es, seq):
        if e in updates and updates[e] != x:
            raise InputError(f"edge {e} appears twice on the path with different colors")
        updates[e] = x
    return L.recolored(updates)


def stc_conflicts(g: Graph) -> Dict[Edge, List[Edge]]:
    """For every edge, the edges it forms an induced P3 with."""
    out: Dict[Edge, List[Edge]] = {e: [] for e in g.edges}
    for u, v, w in induced_p3s(g):
        a, b = norm_edge(u, v), norm_edge(v, w)
        out[a].append(b)
        out[b].append(a)
    return out


def proper_conflicts(g: Graph) -> Dict[Edge, List[Edge]]:
    out: Dict[Edge, List[Edge]] = {}
    for u, v in g.edges:
        out[(u, v)] = [norm_edge(u, w) for w in g.neighbors(u) if w != v] + [
            norm_edge(v, w) for w in g.neighbors(v) if w != u
        ]
    return out
