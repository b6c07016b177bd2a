"""Random instances, brute-force oracles and the equivalence / bound suites."""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging
import random

import networkx as nx
from pydantic import BaseModel

from kernelkit.core.config import settings
from kernelkit.core.errors import ContractError, InputError, KernelkitError, SolverSizeError
from kernelkit.models.entities import (
    LIST_KINDS,
    ComponentCover,
    Edge,
    ExpansionResult,
    Graph,
    Instance,
    KernelOutcome,
    Labeling,
    Path,
    new_edge_lists,
    new_instance,
    norm_edge,
)
from kernelkit.models.schemas import SuiteRecord, SuiteSummary
from kernelkit.services.coloring import colors_used, vizing_color
from kernelkit.services.graph import connected_components, induced_subgraph, remove_vertices
from kernelkit.services.kernel_ecs import keep_core_neighborhood, kernel_ecs_coc, kernel_ecs_xi
from kernelkit.services.kernel_el import el_structure_ok, k3_safe, kernel_el, optimal_weak_on_cycle
from kernelkit.services.kernel_stc import (
    kernel_stc,
    move_strong_color_in_cycle,
    move_weak_edge_along_path,
    rotate_cycle,
)
from kernelkit.services.labeling import check_proper, check_stc, color_sequence, stc_conflicts
from kernelkit.services.params import (
    approx_component_cover,
    expansion,
    greedy_deletion_set,
    is_component_cover,
)
from kernelkit.services.solver import brute_force_min_weak, decide, min_weak
from kernelkit.utils.instance_format import serialize_instance

logger = logging.getLogger(__name__)


# ------- Instances -------


def random_instance(
    kind: str, n: int, p: float, c: int, k: int = 0, seed: int = 0, lists: bool = False
) -> Instance:
    """G(n, p) instance; reproducible from the seed. Lists are drawn only for el-* kinds."""
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    if not (0.0 <= p <= 1.0):
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    psi = None
    if kind in LIST_KINDS:
        allowed = {}
        if lists:
            for e in edges:
                size = rng.randint(0, c)
                allowed[e] = rng.sample(range(1, c + 1), size)
        psi = new_edge_lists(c, allowed)
    return new_instance(Graph(n, edges), c, k, kind, psi)


def with_budget(inst: Instance, k: int) -> Instance:
    return inst.model_copy(update={"k": k})


def kernelize(inst: Instance, param: str = "xi") -> KernelOutcome:
    """The kernel matching the instance kind (ECS: ξ or component-order parameter)."""
    if inst.kind == "ecs":
        if param == "xi":
            return kernel_ecs_xi(inst)
        if param == "coc":
            return kernel_ecs_coc(inst)
        raise InputError(f"unknown parameter '{param}', expected xi or coc")
    if inst.kind == "mstc":
        return kernel_stc(inst)
    return kernel_el(inst)


# ------- Brute-force parameter oracles -------


def exact_xi(g: Graph, t: int) -> int:
    """Minimum number of edge deletions leaving maximum degree <= t."""
    for size in range(g.m + 1):
        for drop in combinations(g.edges, size):
            deg = g.degrees()
            for u, v in drop:
                deg[u] -= 1
                deg[v] -= 1
            if max(deg, default=0) <= t:
                return size
    return g.m


def exact_lambda(g: Graph, t: int) -> int:
    """Minimum number of vertex deletions leaving components of order <= t."""
    for size in range(g.n + 1):
        for drop in combinations(range(g.n), size):
            rest, _ = remove_vertices(g, drop)
            if all(len(c) <= t for c in connected_components(rest)):
                return size
    return g.n


# ------- Answer checking -------


class AnswerCache:
    """Minimum weak counts per instance text, so k-sweeps reuse one search."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = settings.solver_limit if limit is None else limit
        self._mw: Dict[str, int] = {}

    def min_weak(self, inst: Instance) -> int:
        key = serialize_instance(with_budget(inst, 0))
        if key not in self._mw:
            self._mw[key] = min_weak(inst, self.limit)[0]
        return self._mw[key]

    def answer(self, outcome: KernelOutcome) -> bool:
        if outcome.decision != "open":
            return outcome.decision == "yes"
        return self.min_weak(outcome.reduced) <= outcome.reduced.k


def check_equivalence(
    inst: Instance, kernel: Callable[[Instance], KernelOutcome], cache: AnswerCache
) -> Optional[str]:
    """None when every budget 0..m gives the same answer before and after the kernel."""
    best = cache.min_weak(inst)
    for k in range(inst.graph.m + 1):
        outcome = kernel(with_budget(inst, k))
        if not outcome.bound_holds:
            return f"k={k}: size bound {outcome.bound} violated (n={outcome.reduced.graph.n})"
        expected = best <= k
        got = cache.answer(outcome)
        if got != expected:
            return f"k={k}: input answer {expected}, kernel answer {got}"
    return None


# ------- Suites -------


def _record(suite: str, seed: int, inst: Optional[Instance], status: str, detail: str = "") -> SuiteRecord:
    g = inst.graph if inst is not None else Graph(0)
    return SuiteRecord(
        suite=suite,
        seed=seed,
        kind=inst.kind if inst is not None else "",
        c=inst.c if inst is not None else 0,
        n=g.n,
        m=g.m,
        status=status,
        detail=detail,
        instance=serialize_instance(inst) if status == "fail" and inst is not None else None,
    )


def _equivalence_trial(
    suite: str, seed: int, inst: Instance, kernel: Callable[[Instance], KernelOutcome], extra=None
) -> SuiteRecord:
    cache = AnswerCache()
    try:
        detail = check_equivalence(inst, kernel, cache)
        if detail is None and extra is not None:
            detail = extra(kernel(inst))
    except SolverSizeError as e:
        logger.warning("%s seed %d skipped: %s", suite, seed, e.detail)
        return _record(suite, seed, inst, "skipped", e.detail)
    except ContractError as e:
        return _record(suite, seed, inst, "fail", e.detail)
    return _record(suite, seed, inst, "fail" if detail else "pass", detail or "")


def _trial_ecs_xi(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    inst = random_instance("ecs", rng.randint(1, max_n), rng.choice((0.3, 0.6)), 2 + seed % 3, seed=seed)
    return _equivalence_trial("ecs-xi", seed, inst, kernel_ecs_xi)


def _trial_ecs_coc(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    inst = random_instance("ecs", rng.randint(1, max_n), rng.choice((0.3, 0.6)), 2 + seed % 2, seed=seed)
    return _equivalence_trial("ecs-coc", seed, inst, kernel_ecs_coc)


def _trial_mstc(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    n = rng.randint(1, min(max_n, 9))
    inst = random_instance("mstc", n, rng.choice((0.3, 0.6)), 1 + seed % 5, seed=seed)
    return _equivalence_trial("mstc", seed, inst, kernel_stc)


def _el_shape(outcome: KernelOutcome) -> Optional[str]:
    if outcome.decision != "open":
        return None
    g = outcome.reduced.graph
    if not el_structure_ok(g):
        return "reduced instance keeps an isolated cycle or a long BDP"
    if outcome.reduced.kind == "el-mstc" and not k3_safe(g):
        return "reduced instance has a BDP vertex on a triangle"
    return None


def _trial_el(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    kind = LIST_KINDS[seed % 2]
    c = 2 + (seed // 2) % 3
    inst = random_instance(kind, rng.randint(1, max_n), rng.choice((0.2, 0.3, 0.5)), c, seed=seed, lists=True)
    return _equivalence_trial("el", seed, inst, kernel_el, _el_shape)


def _trial_cycle_optimum(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    r = rng.randint(3, 9)
    c = rng.randint(1, 4)
    g = Graph(r, [(i, (i + 1) % r) for i in range(r)])
    allowed = {e: rng.sample(range(1, c + 1), rng.randint(0, c)) for e in g.edges}
    inst = new_instance(g, c, 0, "el-ecs", new_edge_lists(c, allowed))
    got = optimal_weak_on_cycle(g, inst.psi)
    expected = brute_force_min_weak(inst) if g.m <= 6 else min_weak(inst, limit=g.m)[0]
    detail = "" if got == expected else f"cycle optimum {got}, exact {expected}"
    return _record("cycle-optimum", seed, inst, "fail" if detail else "pass", detail)


def _trial_misra_gries(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    inst = random_instance("ecs", rng.randint(1, max(max_n, 12)), rng.random(), 1, seed=seed)
    g = inst.graph
    L = vizing_color(g)
    detail = ""
    if not check_proper(g, L):
        detail = "labeling is not proper"
    elif L.weak_count:
        detail = f"{L.weak_count} edges left uncolored"
    elif len(colors_used(L)) > g.max_degree() + 1:
        detail = f"{len(colors_used(L))} colors used, Δ={g.max_degree()}"
    return _record("misra-gries", seed, inst, "fail" if detail else "pass", detail)


def _bounded_degree_graph(rng: random.Random, n: int, t: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < t and deg[v] < t and rng.random() < 0.7:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def _random_stc_labeling(rng: random.Random, g: Graph, c: int) -> Labeling:
    conf = stc_conflicts(g)
    colors: Dict[Edge, int] = {}
    order = list(g.edges)
    rng.shuffle(order)
    for e in order:
        taken = {colors.get(f, 0) for f in conf[e]}
        options = [x for x in range(1, c + 1) if x not in taken]
        colors[e] = rng.choice(options) if options and rng.random() < 0.85 else 0
    return Labeling(c=c, colors=colors)


def _random_walk(rng: random.Random, g: Graph, start: Edge) -> Path:
    u, v = start if rng.random() < 0.5 else (start[1], start[0])
    vs = [u, v]
    used = {norm_edge(u, v)}
    for _ in range(rng.randint(0, 7)):
        nxt = [w for w in g.neighbors(vs[-1]) if norm_edge(vs[-1], w) not in used]
        if not nxt:
            break
        w = rng.choice(nxt)
        used.add(norm_edge(vs[-1], w))
        vs.append(w)
    return Path(vertices=tuple(vs), kind="edge-simple")


def _off_path_equal(a: Labeling, b: Labeling, es: Sequence[Edge]) -> bool:
    on = set(es)
    return all(b.colors[e] == x for e, x in a.colors.items() if e not in on)


def _trial_lemmas(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    c = rng.randint(2, 5)
    t = c // 2 + 1
    g = _bounded_degree_graph(rng, rng.randint(3, 9), t)
    inst = new_instance(g, c, 0, "mstc")
    if not g.m:
        return _record("lemmas", seed, inst, "skipped", "no edges")
    L = _random_stc_labeling(rng, g, c)
    start = rng.choice(g.edges)
    L = L.recolored({start: 0})
    detail = ""

    p = _random_walk(rng, g, start)
    q = color_sequence(g, L, p)
    L2 = move_weak_edge_along_path(g, L, p)
    if not check_stc(g, L2) or not _off_path_equal(L, L2, p.edges):
        detail = "moving the weak edge broke the labeling"
    elif L2.weak_count > L.weak_count:
        detail = "moving the weak edge added weak edges"
    elif L2.weak_count == L.weak_count and color_sequence(g, L2, p) != q[1:] + (0,):
        detail = f"sequence {q} became {color_sequence(g, L2, p)}"

    try:
        found = nx.find_cycle(g.to_networkx(), source=start[0])
    except nx.NetworkXNoCycle:
        found = []
    if found and not detail:
        vs = tuple(a for a, _ in found) + (found[0][0],)
        cyc = Path(vertices=vs, kind="cycle")
        es = cyc.edges
        Lc = L.recolored({es[rng.randrange(len(es))]: 0})
        r = len(es)
        i = rng.randrange(r)
        q = color_sequence(g, Lc, cyc)
        L3 = rotate_cycle(g, Lc, cyc, i)
        if not check_stc(g, L3) or not _off_path_equal(Lc, L3, es) or L3.weak_count > Lc.weak_count:
            detail = "cycle rotation broke the labeling"
        elif L3.weak_count == Lc.weak_count:
            got = color_sequence(g, L3, cyc)
            if any(got[j] != q[(i + j) % r] for j in range(r)):
                detail = f"rotation by {i} turned {q} into {got}"
        strong = [e for e in es if Lc.colors[e]]
        if strong and not detail:
            e2 = rng.choice(strong)
            e1 = rng.choice(es)
            L4 = move_strong_color_in_cycle(g, Lc, cyc, e1, e2)
            if not check_stc(g, L4) or L4.weak_count > Lc.weak_count:
                detail = "moving a strong color broke the labeling"
            elif L4.weak_count == Lc.weak_count and L4.colors[e1] != Lc.colors[e2]:
                detail = f"edge {e1} did not receive color {Lc.colors[e2]}"
    return _record("lemmas", seed, inst, "fail" if detail else "pass", detail)


def hall_expansion_exists(A: Sequence[int], B: Sequence[int], edges: Sequence[Tuple[int, int]], q: int) -> bool:
    """Exhaustive search for nonempty X ⊆ A, Y ⊆ B with N(Y) ⊆ X and a q-expansion of X into Y."""
    nbrs = {b: {a for a, bb in edges if bb == b} for b in B}
    for size in range(1, len(A) + 1):
        for X in combinations(A, size):
            xs = set(X)
            Y = [b for b in B if nbrs[b] and nbrs[b] <= xs]
            ok = True
            for s in range(1, size + 1):
                for S in combinations(X, s):
                    reach = [b for b in Y if nbrs[b] & set(S)]
                    if len(reach) < q * s:
                        ok = False
                        break
                if not ok:
                    break
            if ok and Y:
                return True
    return False


def expansion_contract_ok(
    A: Sequence[int], B: Sequence[int], edges: Sequence[Tuple[int, int]], q: int,
    X: Sequence[int], Y: Sequence[int], M: Sequence[Tuple[int, int]],
) -> Optional[str]:
    es = set(edges)
    if not X or not Y:
        return "X or Y is empty"
    xs, ys = set(X), set(Y)
    if not xs <= set(A) or not ys <= set(B):
        return "X or Y leaves its side"
    if any((a, b) in es and a not in xs for a in A for b in ys):
        return "N(Y) is not inside X"
    if any(m not in es or m[0] not in xs or m[1] not in ys for m in M):
        return "M is not inside E(X, Y)"
    for x in xs:
        if sum(1 for a, _ in M if a == x) != q:
            return f"{x} is not matched exactly {q} times"
    if len({b for _, b in M}) != q * len(xs):
        return "matched Y-vertices are not distinct"
    return None


def _trial_expansion(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    q = rng.randint(1, 3)
    a_count = rng.randint(1, 4)
    b_count = rng.randint(q * a_count, min(12, q * a_count + 4))
    A = list(range(a_count))
    B = list(range(100, 100 + b_count))
    edges = []
    for b in B:
        touch = [a for a in A if rng.random() < 0.4] or [rng.choice(A)]
        edges.extend((a, b) for a in touch)
    X, Y, M = expansion(A, B, edges, q)
    detail = expansion_contract_ok(A, B, edges, q, X, Y, M) or ""
    if not detail and b_count <= 12 and not hall_expansion_exists(A, B, edges, q):
        detail = "exhaustive search finds no expansion"
    return _record("expansion", seed, None, "fail" if detail else "pass", detail)


def ecs_expansion_ok(g: Graph, cover: ComponentCover, res: ExpansionResult, c: int) -> Optional[str]:
    """The invariants of an expansion inside an ECS instance with cover D and I = V∖D."""
    D = set(cover.vertices)
    X, Y = set(res.X), set(res.Y)
    if not X or not Y:
        return "X or Y is empty"
    if not X <= D or Y & D:
        return "X must lie in D and Y in I"
    if any(w not in X | Y for y in Y for w in g.neighbors(y)):
        return "N(Y) is not inside X ∪ Y"
    for x in X:
        if sum(1 for a, _ in res.M if a == x) != c:
            return f"{x} is not matched exactly {c} times"
    ends = {b for _, b in res.M}
    if len(ends) != c * len(X) or not ends <= Y or any(not g.has_edge(a, b) for a, b in res.M):
        return "M endpoints are not distinct real edges into Y"
    sub, remap = induced_subgraph(g, sorted(Y))
    back = {v: k for k, v in remap.items()}
    for comp in connected_components(sub):
        if sum(1 for v in comp if back[v] in ends) > 1:
            return "a component of G[Y] holds two matched vertices"
    return None


def _trial_approximation(seed: int, max_n: int) -> SuiteRecord:
    rng = random.Random(seed)
    t = rng.randint(1, 3)
    inst = random_instance("ecs", rng.randint(1, 7), rng.choice((0.3, 0.5, 0.8)), 2, seed=seed)
    g = inst.graph
    detail = ""
    if g.m <= 8:
        d = greedy_deletion_set(g, t)
        xi = exact_xi(g, t)
        if len(d) > 2 * xi:
            detail = f"greedy set {len(d)} > 2·ξ_{t} = {2 * xi}"
    cover = approx_component_cover(g, t)
    lam = exact_lambda(g, t)
    if not detail and not is_component_cover(g, cover.vertices, t):
        detail = "approximate cover is not a cover"
    elif not detail and len(cover.vertices) > (t + 1) * lam:
        detail = f"cover {len(cover.vertices)} > (t+1)·λ_{t} = {(t + 1) * lam}"
    return _record("approximation", seed, inst, "fail" if detail else "pass", detail)


# ------- Counterexample: the ECS core rule is unsafe for STC -------


def counterexample_gadget() -> Tuple[Graph, Dict[str, int]]:
    """
    Two copies ("b", "r") of the forcing gadget sharing the start vertex i0 and the
    three exits u1..u3, plus the vertex a adjacent to all exits. With c = 4 and
    k = 0, each copy forces one common strong color on its three exit edges, the
    two copies need different colors, and a's three edges have only two left.
    """
    ids: Dict[str, int] = {}
    edges: List[Edge] = []

    def vid(name: str) -> int:
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    def edge(a: str, b: str) -> None:
        edges.append(norm_edge(vid(a), vid(b)))

    vid("i0")
    for side in ("b", "r"):
        g1 = f"{side}.g1"
        edge("i0", g1)
        layer2 = [f"{side}.g2{z}" for z in (1, 2, 3)]
        layer3 = [f"{side}.g3{y}" for y in (1, 2, 3)]
        layer4 = [f"{side}.g4{x}" for x in (1, 2, 3)]
        for x in layer2:
            edge(g1, x)
        for x in layer2:
            for y in layer3:
                edge(x, y)
        for y in layer3:
            for x in layer4:
                edge(y, x)
        for i in range(3):
            for j in range(i + 1, 3):
                edge(layer4[i], layer4[j])
        for x, name in zip((1, 2, 3), layer4):
            edge(name, f"u{x}")
    for x in (1, 2, 3):
        edge("a", f"u{x}")
    return Graph(len(ids), edges), ids


def _single_gadget(pins: Dict[Tuple[str, str], int]) -> Instance:
    """The "b" copy alone as EL-MSTC with c = 4, k = 0 and the given edges pinned to one color."""
    g, ids = counterexample_gadget()
    keep = [v for name, v in ids.items() if name == "i0" or name[0] in "bu"]
    sub, remap = induced_subgraph(g, keep)
    allowed = {norm_edge(remap[ids[a]], remap[ids[b]]): [x] for (a, b), x in pins.items()}
    return new_instance(sub, 4, 0, "el-mstc", new_edge_lists(4, allowed))


def _exit_piece(with_a: bool) -> Instance:
    # u_x - l_x pinned to 1, u_x - r_x pinned to 2, a joined to every u_x
    edges, pins = [], {}
    for x in range(3):
        u, l, r = 3 * x, 3 * x + 1, 3 * x + 2
        edges += [(u, l), (u, r)]
        pins[(u, l)] = [1]
        pins[(u, r)] = [2]
    n = 9
    if with_a:
        edges += [(0, 9), (3, 9), (6, 9)]
        n = 10
    return new_instance(Graph(n, edges), 4, 0, "el-mstc", new_edge_lists(4, pins))


class CounterexampleReport(BaseModel):
    kernel_keeps_gadget: bool
    ecs_rule_removes_a: bool
    gadget_colorable: bool
    exits_forced_equal: bool
    start_forced_equal: bool
    exit_piece_no: bool
    exit_piece_without_a_yes: bool
    kernel_keeps_exit_piece_no: bool
    kernel_keeps_exit_piece_without_a_yes: bool
    full_gadget_no: Optional[bool] = None
    ecs_rule_output_yes: Optional[bool] = None

    @property
    def passed(self) -> bool:
        checks = [v for v in self.model_dump().values() if v is not None]
        return all(checks)


def _kernel_answer(outcome: KernelOutcome, limit: int) -> bool:
    if outcome.decision != "open":
        return outcome.decision == "yes"
    return decide(outcome.reduced, limit)


def counterexample_check(full: bool = False) -> CounterexampleReport:
    """
    kernel_stc vs the ECS core-neighbourhood rule on the STC counterexample.
    The gadget pieces are decided exactly; the whole gadget (59 edges) only
    when `full` is set.
    """
    g, ids = counterexample_gadget()
    inst = new_instance(g, 4, 0, "mstc")
    outcome = kernel_stc(inst)
    reduced, _, _, removed = keep_core_neighborhood(g, 3)
    limit = 32
    report = CounterexampleReport(
        kernel_keeps_gadget=outcome.decision == "open" and outcome.reduced.graph == g,
        ecs_rule_removes_a=removed == [ids["a"]],
        gadget_colorable=decide(_single_gadget({}), limit),
        exits_forced_equal=not decide(_single_gadget({("b.g41", "u1"): 1, ("b.g42", "u2"): 2}), limit),
        start_forced_equal=not decide(_single_gadget({("i0", "b.g1"): 1, ("b.g41", "u1"): 2}), limit),
        exit_piece_no=not decide(_exit_piece(True), limit),
        exit_piece_without_a_yes=decide(_exit_piece(False), limit),
        kernel_keeps_exit_piece_no=not _kernel_answer(kernel_el(_exit_piece(True)), limit),
        kernel_keeps_exit_piece_without_a_yes=_kernel_answer(kernel_el(_exit_piece(False)), limit),
    )
    if full:
        report = report.model_copy(update={
            "full_gadget_no": not decide(inst, g.m),
            "ecs_rule_output_yes": decide(new_instance(reduced, 4, 0, "mstc"), g.m),
        })
    return report


def _trial_counterexample(seed: int, max_n: int) -> SuiteRecord:
    report = counterexample_check()
    detail = "" if report.passed else report.model_dump_json()
    return _record("counterexample", seed, None, "fail" if detail else "pass", detail)


SUITES: Dict[str, Callable[[int, int], SuiteRecord]] = {
    "ecs-xi": _trial_ecs_xi,
    "ecs-coc": _trial_ecs_coc,
    "mstc": _trial_mstc,
    "el": _trial_el,
    "cycle-optimum": _trial_cycle_optimum,
    "misra-gries": _trial_misra_gries,
    "lemmas": _trial_lemmas,
    "expansion": _trial_expansion,
    "approximation": _trial_approximation,
    "counterexample": _trial_counterexample,
}


def run_suite(name: str, trials: int, max_n: int = 10, seed: int = 0) -> Tuple[List[SuiteRecord], SuiteSummary]:
    """Run one suite; records come back sorted by seed whatever the worker count."""
    if name not in SUITES:
        raise InputError(f"unknown suite '{name}', expected one of {', '.join(SUITES)}")
    trial = SUITES[name]
    count = 1 if name == "counterexample" else trials
    seeds = list(range(seed, seed + count))

    def safe(s: int) -> SuiteRecord:
        try:
            return trial(s, max_n)
        except KernelkitError as e:
            return _record(name, s, None, "fail", e.detail)

    if settings.workers > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            records = list(pool.map(safe, seeds))
    else:
        records = [safe(s) for s in seeds]
    records.sort(key=lambda r: r.seed)
    summary = SuiteSummary(
        suite=name,
        total=len(records),
        passed=sum(1 for r in records if r.status == "pass"),
        failed=sum(1 for r in records if r.status == "fail"),
        skipped=sum(1 for r in records if r.status == "skipped"),
    )
    logger.info("suite %s: %d passed, %d failed, %d skipped", name, summary.passed, summary.failed, summary.skipped)
    return records, summary


def equivalence_suite(kind: str, trials: int, max_n: int = 10, seed: int = 0) -> Tuple[List[SuiteRecord], SuiteSummary]:
    names = {"ecs": "ecs-xi", "ecs-coc": "ecs-coc", "mstc": "mstc", "el-ecs": "el", "el-mstc": "el"}
    if kind not in names:
        raise InputError(f"no equivalence suite for kind '{kind}'")
    return run_suite(names[kind], trials, max_n, seed)
