"""Exact minimum weak-edge count by branch and bound, for all four problem kinds."""

from itertools import product
from typing import Dict, List, Optional, Tuple
import logging

from kernelkit.core.config import settings
from kernelkit.core.errors import ContractError, SolverSizeError
from kernelkit.models.entities import Edge, Instance, Labeling
from kernelkit.services.coloring import try_color_exactly
from kernelkit.services.kernel_ecs import maximum_matching_size
from kernelkit.services.labeling import is_valid, proper_conflicts, stc_conflicts

logger = logging.getLogger(__name__)


class _Search:
    def __init__(self, inst: Instance):
        g = inst.graph
        self.inst = inst
        self.c = inst.c
        self.proper = not inst.is_stc_kind
        self.edges: List[Edge] = list(g.edges)
        index = {e: i for i, e in enumerate(self.edges)}
        table = stc_conflicts(g) if inst.is_stc_kind else proper_conflicts(g)
        self.conf: List[List[int]] = [sorted({index[f] for f in table[e]}) for e in self.edges]
        self.allowed: List[List[int]] = [sorted(inst.allowed(e)) for e in self.edges]
        # colors no list tells apart are interchangeable while unused
        sig = {x: tuple(x in a for a in self.allowed) for x in range(1, self.c + 1)}
        self.group = {x: min(y for y in sig if sig[y] == sig[x]) for x in sig}
        self.peeled = self._peel()
        peeled = set(self.peeled)
        self.core = [i for i in range(len(self.edges)) if i not in peeled]
        # static tie-break: high degree sum first
        deg = g.degrees()
        self.rank = {i: r for r, i in enumerate(
            sorted(self.core, key=lambda i: (-(deg[self.edges[i][0]] + deg[self.edges[i][1]]), i))
        )}
        self.at: Dict[int, List[int]] = {}
        for i in self.core:
            for v in self.edges[i]:
                self.at.setdefault(v, []).append(i)
        self.color = [-1] * len(self.edges)
        self.blocked = [[0] * (self.c + 1) for _ in self.edges]
        self.used = [0] * (self.c + 1)
        self.best = 0
        self.best_color: Optional[List[int]] = None
        self.nodes = 0

    def _peel(self) -> List[int]:
        """Edges with more allowed colors than remaining conflicts; they never need to be weak."""
        alive = set(range(len(self.edges)))
        order: List[int] = []
        changed = True
        while changed:
            changed = False
            for i in sorted(alive):
                if len(self.allowed[i]) > sum(1 for j in self.conf[i] if j in alive):
                    alive.discard(i)
                    order.append(i)
                    changed = True
        return order

    def live(self, i: int) -> List[int]:
        b = self.blocked[i]
        return [x for x in self.allowed[i] if b[x] == 0]

    def assign(self, i: int, x: int) -> None:
        self.color[i] = x
        if x:
            self.used[x] += 1
            for j in self.conf[i]:
                self.blocked[j][x] += 1

    def unassign(self, i: int) -> None:
        x = self.color[i]
        self.color[i] = -1
        if x:
            self.used[x] -= 1
            for j in self.conf[i]:
                self.blocked[j][x] -= 1

    def lower_bound(self, open_edges: List[int]) -> int:
        forced = sum(1 for i in open_edges if not self.live(i))
        if not self.proper:
            return forced
        best = forced
        for v, es in self.at.items():
            pending = [i for i in es if self.color[i] < 0]
            if len(pending) < 2:
                continue
            taken = {self.color[i] for i in es if self.color[i] > 0}
            offered = set()
            for i in pending:
                offered.update(self.allowed[i])
            best = max(best, len(pending) - len(offered - taken))
        return best

    def run(self, cutoff: int) -> Optional[List[int]]:
        self.best = cutoff
        self._branch(0)
        return self.best_color

    def _branch(self, weak: int) -> None:
        self.nodes += 1
        open_edges = [i for i in self.core if self.color[i] < 0]
        if weak + self.lower_bound(open_edges) >= self.best:
            return
        if not open_edges:
            self.best = weak
            self.best_color = self._complete()
            return
        i = min(open_edges, key=lambda j: (len(self.live(j)), self.rank[j]))
        tried_fresh = set()
        for x in self.live(i):
            if self.used[x] == 0:
                if self.group[x] in tried_fresh:
                    continue
                tried_fresh.add(self.group[x])
            self.assign(i, x)
            self._branch(weak)
            self.unassign(i)
            if weak >= self.best:
                return
        self.assign(i, 0)
        self._branch(weak + 1)
        self.unassign(i)

    def _complete(self) -> List[int]:
        color = list(self.color)
        for i in reversed(self.peeled):
            taken = {color[j] for j in self.conf[i] if color[j] > 0}
            color[i] = next(x for x in self.allowed[i] if x not in taken)
        return color


def _labeling(inst: Instance, edges: List[Edge], color: List[int]) -> Labeling:
    return Labeling(c=inst.c, colors=dict(zip(edges, color)))


def _check_witness(inst: Instance, L: Labeling) -> None:
    if not is_valid(inst.kind, inst.graph, L, inst.psi):
        raise ContractError("solver produced an invalid labeling")


def min_weak(inst: Instance, limit: Optional[int] = None) -> Tuple[int, Labeling]:
    """Minimum number of weak edges over all valid labelings, with a witness."""
    limit = settings.solver_limit if limit is None else limit
    g = inst.graph
    if g.m > limit:
        raise SolverSizeError(g.m, limit)
    search = _Search(inst)
    color = search.run(g.m + 1)
    if color is None:
        raise ContractError("search found no labeling")
    L = _labeling(inst, search.edges, color)
    _check_witness(inst, L)
    logger.debug("min_weak=%d for %s m=%d after %d nodes", L.weak_count, inst.kind, g.m, search.nodes)
    return L.weak_count, L


def decide(inst: Instance, limit: Optional[int] = None) -> bool:
    """Is there a valid labeling with at most k weak edges?"""
    g, c, k = inst.graph, inst.c, inst.k
    if k >= g.m:
        return True
    if inst.kind in ("ecs", "mstc") and g.max_degree() <= c - 1:
        return try_color_exactly(g, c) is not None
    if inst.kind == "ecs" and c == 1:
        return g.m - maximum_matching_size(g) <= k
    limit = settings.solver_limit if limit is None else limit
    if g.m > limit:
        raise SolverSizeError(g.m, limit)
    search = _Search(inst)
    color = search.run(k + 1)
    if color is None:
        return False
    _check_witness(inst, _labeling(inst, search.edges, color))
    return True


def brute_force_min_weak(inst: Instance) -> int:
    """Full enumeration over every labeling; only for tiny instances."""
    g = inst.graph
    edges = list(g.edges)
    choices = [[0] + sorted(inst.allowed(e)) for e in edges]
    best = g.m
    for combo in product(*choices):
        weak = sum(1 for x in combo if x == 0)
        if weak >= best:
            continue
        if is_valid(inst.kind, g, Labeling(c=inst.c, colors=dict(zip(edges, combo))), inst.psi):
            best = weak
    return best
