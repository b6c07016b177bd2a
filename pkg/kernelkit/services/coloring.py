"""Constructive proper edge coloring with at most Δ+1 colors (Misra–Gries fan rotation)."""

from typing import Dict, List, Optional, Set

from kernelkit.core.errors import ContractError
from kernelkit.models.entities import Edge, Graph, Labeling, norm_edge


def vizing_color(g: Graph, colors: Optional[int] = None) -> Labeling:
    delta = g.max_degree()
    if colors is None:
        colors = delta + 1
    if colors < delta + 1:
        raise ContractError(f"{colors} colors given, need at least Δ+1 = {delta + 1}")

    at: List[Dict[int, int]] = [dict() for _ in range(g.n)]  # at[v][color] = neighbour
    col: Dict[Edge, int] = {}

    def setc(a: int, b: int, x: int) -> None:
        e = norm_edge(a, b)
        old = col.get(e, 0)
        if old:
            del at[a][old]
            del at[b][old]
        if x:
            at[a][x] = b
            at[b][x] = a
        col[e] = x

    def free(v: int) -> int:
        return next(x for x in range(1, colors + 1) if x not in at[v])

    for u, v in g.edges:
        # maximal fan of u starting with the uncolored edge {u, v}
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in g.neighbors(u):
                if w in in_fan:
                    continue
                x = col.get(norm_edge(u, w), 0)
                if x and x not in at[last]:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])

        # invert the cd-path starting at u
        path = []
        cur, x = u, d
        while x in at[cur]:
            nxt = at[cur][x]
            path.append((cur, nxt, x))
            cur = nxt
            x = c if x == d else d
        for a, b, _ in path:
            setc(a, b, 0)
        for a, b, x in path:
            setc(a, b, c if x == d else d)

        done = False
        for i, w in enumerate(fan):
            if i > 0:
                x = col.get(norm_edge(u, w), 0)
                if not x or x in at[fan[i - 1]]:
                    break
            if d not in at[w]:
                shifted = [col.get(norm_edge(u, fan[j + 1]), 0) for j in range(i)] + [d]
                for j in range(i + 1):
                    setc(u, fan[j], 0)
                for j in range(i + 1):
                    setc(u, fan[j], shifted[j])
                done = True
                break
        if not done:
            raise ContractError(f"no rotatable fan prefix for edge {(u, v)}")

    return Labeling(c=colors, colors={e: col[e] for e in g.edges})


def try_color_exactly(g: Graph, c: int) -> Optional[Labeling]:
    """Weak-free proper labeling with c colors when Δ <= c-1; None otherwise (no claim)."""
    if g.max_degree() > c - 1:
        return None
    return vizing_color(g, colors=c)


def colors_used(L: Labeling) -> Set[int]:
    return {x for x in L.colors.values() if x}
