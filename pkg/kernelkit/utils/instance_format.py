"""
Line-oriented instance and labeling files.

    # comment
    p <kind> <n> <m> <c> <k>
    e <u> <v> [colors... | -]      (1-indexed; colors only for el-* kinds)

Labeling files hold one "c <u> <v> <color>" line per edge, 0 meaning weak.
"""

from typing import Dict, FrozenSet, List, Optional, Tuple

from kernelkit.core.errors import InputError, ParseError
from kernelkit.models.entities import (
    LIST_KINDS,
    Edge,
    Graph,
    Instance,
    Labeling,
    new_edge_lists,
    new_instance,
    norm_edge,
)
from kernelkit.utils.norm import resolve_kind


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(no, f"{what} must be an integer, got '{tok}'")


def _vertex(tok: str, n: int, no: int) -> int:
    v = _int(tok, no, "vertex id")
    if not (1 <= v <= n):
        raise ParseError(no, f"vertex {v} out of range 1..{n}")
    return v - 1


def parse_instance(text: str) -> Instance:
    header: Optional[Tuple[str, int, int, int, int]] = None
    edges: List[Edge] = []
    lists: Dict[Edge, FrozenSet[int]] = {}
    seen = set()
    last = 0
    for no, tok in _lines(text):
        last = no
        if tok[0] == "p":
            if header is not None:
                raise ParseError(no, "second header line")
            if len(tok) != 6:
                raise ParseError(no, "header must be 'p <kind> <n> <m> <c> <k>'")
            try:
                kind = resolve_kind(tok[1])
            except InputError as e:
                raise ParseError(no, e.detail)
            n, m, c, k = (_int(t, no, name) for t, name in zip(tok[2:], ("n", "m", "c", "k")))
            if n < 0 or m < 0:
                raise ParseError(no, "n and m must be non-negative")
            if c < 1:
                raise ParseError(no, f"color count must be at least 1, got {c}")
            if k < 0:
                raise ParseError(no, f"budget k must be non-negative, got {k}")
            header = (kind, n, m, c, k)
        elif tok[0] == "e":
            if header is None:
                raise ParseError(no, "edge line before the header")
            kind, n, m, c, _ = header
            if len(tok) < 3:
                raise ParseError(no, "edge line must be 'e <u> <v> [colors]'")
            u, v = _vertex(tok[1], n, no), _vertex(tok[2], n, no)
            if u == v:
                raise ParseError(no, f"self-loop at vertex {u + 1}")
            e = norm_edge(u, v)
            if e in seen:
                raise ParseError(no, f"duplicate edge {u + 1} {v + 1}")
            seen.add(e)
            edges.append(e)
            tail = tok[3:]
            if tail:
                if kind not in LIST_KINDS:
                    raise ParseError(no, f"color lists are only allowed for el-* kinds, not '{kind}'")
                if tail == ["-"]:
                    lists[e] = frozenset()
                else:
                    colors = [_int(t, no, "color") for t in tail]
                    bad = [x for x in colors if not (1 <= x <= c)]
                    if bad:
                        raise ParseError(no, f"list color {bad[0]} outside 1..{c}")
                    lists[e] = frozenset(colors)
        else:
            raise ParseError(no, f"unknown line type '{tok[0]}'")
    if header is None:
        raise ParseError(max(last, 1), "missing header line")
    kind, n, m, c, k = header
    if len(edges) != m:
        raise ParseError(max(last, 1), f"header announces {m} edges, found {len(edges)}")
    psi = new_edge_lists(c, lists) if kind in LIST_KINDS else None
    return new_instance(Graph(n, edges), c, k, kind, psi)


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    out = [f"p {inst.kind} {g.n} {g.m} {inst.c} {inst.k}"]
    explicit = inst.psi.allowed if inst.psi is not None else {}
    for u, v in g.edges:
        line = f"e {u + 1} {v + 1}"
        if (u, v) in explicit:
            colors = sorted(explicit[(u, v)])
            line += " " + (" ".join(map(str, colors)) if colors else "-")
        out.append(line)
    return "\n".join(out) + "\n"


def parse_labeling(text: str, g: Graph, c: int) -> Labeling:
    colors: Dict[Edge, int] = {}
    last = 0
    for no, tok in _lines(text):
        last = no
        if tok[0] != "c" or len(tok) != 4:
            raise ParseError(no, "labeling line must be 'c <u> <v> <color>'")
        u, v = _vertex(tok[1], g.n, no), _vertex(tok[2], g.n, no)
        if not g.has_edge(u, v):
            raise ParseError(no, f"{u + 1} {v + 1} is not an edge of the instance")
        e = norm_edge(u, v)
        if e in colors:
            raise ParseError(no, f"edge {u + 1} {v + 1} labeled twice")
        x = _int(tok[3], no, "color")
        if not (0 <= x <= c):
            raise ParseError(no, f"color {x} outside 0..{c}")
        colors[e] = x
    if len(colors) != g.m:
        raise ParseError(max(last, 1), f"labeling covers {len(colors)} of {g.m} edges")
    return Labeling(c=c, colors=colors)


def serialize_labeling(L: Labeling) -> str:
    return "".join(f"c {u + 1} {v + 1} {x}\n" for (u, v), x in sorted(L.colors.items()))
