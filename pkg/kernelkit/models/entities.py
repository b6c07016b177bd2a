from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from kernelkit.core.errors import InputError

Edge = Tuple[int, int]

KINDS = ("ecs", "mstc", "el-ecs", "el-mstc")
LIST_KINDS = ("el-ecs", "el-mstc")
STC_KINDS = ("mstc", "el-mstc")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on dense ids 0..n-1.

    Edges are normalized pairs (u, v) with u < v, kept sorted; adjacency lists are
    sorted too, so every iteration order is deterministic. Instances are never
    mutated after construction: all graph edits build a new Graph.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
        ordered = sorted(seen)
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(ordered)
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._index: Dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, ())

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range 0..{self.n - 1}")

    def check_edge(self, e: Edge) -> Edge:
        u, v = e
        key = norm_edge(u, v)
        if key not in self._index:
            raise InputError(f"unknown edge {key}")
        return key

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted((v,) + self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._index

    def edge_index(self, e: Edge) -> int:
        return self._index[norm_edge(*e)]

    def incident_edges(self, v: int) -> List[Edge]:
        return [norm_edge(v, w) for w in self.adj[v]]

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Path(BaseModel):
    """Vertex sequence of a path in some host graph.

    kind is "simple", "edge-simple" or "cycle"; cycles repeat their first vertex
    at the end.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    kind: str = "simple"

    @property
    def edges(self) -> List[Edge]:
        return [norm_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def reversed(self) -> "Path":
        return Path(vertices=tuple(reversed(self.vertices)), kind=self.kind)


class BoundedDegreePath(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: Path
    open: bool
    # outside neighbours (degree >= 3) of the first and last vertex
    anchors: Tuple[Optional[int], Optional[int]] = (None, None)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.path.vertices

    @property
    def edges(self) -> List[Edge]:
        return self.path.edges

    @property
    def length(self) -> int:
        return self.path.length


class Labeling(BaseModel):
    """Per-edge colors in 0..c, 0 meaning weak."""

    model_config = ConfigDict(frozen=True)

    c: int = Field(ge=0)
    colors: Dict[Edge, int]

    def color(self, u: int, v: int) -> int:
        return self.colors[norm_edge(u, v)]

    @property
    def weak_count(self) -> int:
        return sum(1 for x in self.colors.values() if x == 0)

    def weak_edges(self) -> List[Edge]:
        return sorted(e for e, x in self.colors.items() if x == 0)

    def recolored(self, updates: Dict[Edge, int]) -> "Labeling":
        colors = dict(self.colors)
        for e, x in updates.items():
            colors[norm_edge(*e)] = x
        return Labeling(c=self.c, colors=colors)


class EdgeLists(BaseModel):
    """Allowed strong colors per edge; missing edges allow every color 1..c."""

    model_config = ConfigDict(frozen=True)

    c: int = Field(ge=1)
    allowed: Dict[Edge, FrozenSet[int]] = Field(default_factory=dict)

    def of(self, e: Edge) -> FrozenSet[int]:
        key = norm_edge(*e)
        if key in self.allowed:
            return self.allowed[key]
        return frozenset(range(1, self.c + 1))


def new_edge_lists(c: int, allowed: Dict[Edge, Iterable[int]]) -> EdgeLists:
    if c < 1:
        raise InputError(f"color count must be at least 1, got {c}")
    clean: Dict[Edge, FrozenSet[int]] = {}
    for e, colors in allowed.items():
        s = frozenset(colors)
        bad = sorted(x for x in s if not (1 <= x <= c))
        if bad:
            raise InputError(f"edge {e}: list colors {bad} outside 1..{c}")
        clean[norm_edge(*e)] = s
    return EdgeLists(c=c, allowed=clean)


class Instance(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Graph
    c: int = Field(ge=1)
    k: int = Field(ge=0)
    kind: str
    psi: Optional[EdgeLists] = None

    @property
    def is_list_kind(self) -> bool:
        return self.kind in LIST_KINDS

    @property
    def is_stc_kind(self) -> bool:
        return self.kind in STC_KINDS

    def allowed(self, e: Edge) -> FrozenSet[int]:
        if self.psi is None:
            return frozenset(range(1, self.c + 1))
        return self.psi.of(e)


def new_instance(
    graph: Graph, c: int, k: int, kind: str, psi: Optional[EdgeLists] = None
) -> Instance:
    """Validated Instance constructor; raises InputError instead of pydantic errors."""
    if kind not in KINDS:
        raise InputError(f"unknown problem kind '{kind}'")
    if c < 1:
        raise InputError(f"color count must be at least 1, got {c}")
    if k < 0:
        raise InputError(f"budget k must be non-negative, got {k}")
    if kind in LIST_KINDS:
        if psi is None:
            psi = EdgeLists(c=c)
        if psi.c != c:
            raise InputError(f"edge lists built for c={psi.c}, instance has c={c}")
        for e in psi.allowed:
            if not graph.has_edge(*e):
                raise InputError(f"edge list given for non-edge {e}")
        # drop entries equal to the default so equal instances compare equal
        full = frozenset(range(1, c + 1))
        psi = EdgeLists(c=c, allowed={e: s for e, s in psi.allowed.items() if s != full})
    elif psi is not None:
        raise InputError(f"edge lists are only allowed for list kinds, got kind '{kind}'")
    return Instance(graph=graph, c=c, k=k, kind=kind, psi=psi)


class TraceStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: str
    vertices: Tuple[int, ...] = ()
    edges: Tuple[Edge, ...] = ()
    k_delta: int = 0


class KernelOutcome(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    reduced: Instance
    decision: str  # "yes" | "no" | "open"
    k_out: int
    trace: List[TraceStep] = Field(default_factory=list)
    # surviving input vertex -> vertex id in the reduced graph
    remap: Dict[int, int] = Field(default_factory=dict)
    deletion_set_size: int = 0
    bound: Optional[int] = None
    edge_bound: Optional[int] = None
    bound_holds: bool = True
    n_in: int = 0
    m_in: int = 0
    k_in: int = 0

    @property
    def k_delta(self) -> int:
        return self.k_in - self.k_out


# ------- Parameter machinery -------


class DeletionSet(BaseModel):
    """Edges whose removal leaves maximum degree <= t."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=0)
    edges: Tuple[Edge, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)


class PeripheryComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    # A*: vertices of A with a core neighbour
    close: Tuple[int, ...] = ()

    @property
    def far(self) -> Tuple[int, ...]:
        """A minus A*."""
        cl = set(self.close)
        return tuple(v for v in self.vertices if v not in cl)


class CorePeriphery(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: int
    core: Tuple[int, ...]
    periphery: Tuple[int, ...]
    components: Tuple[PeripheryComponent, ...] = ()


class ComponentCover(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=1)
    vertices: Tuple[int, ...] = ()
    saturated: bool = False


class ExpansionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    X: Tuple[int, ...]
    Y: Tuple[int, ...]
    M: Tuple[Edge, ...]
