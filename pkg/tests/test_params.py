import random

import pytest

from kernelkit.core.errors import ContractError
from kernelkit.models.entities import ComponentCover, DeletionSet, Graph
from kernelkit.services.harness import (
    ecs_expansion_ok,
    exact_lambda,
    exact_xi,
    expansion_contract_ok,
    hall_expansion_exists,
)
from kernelkit.services.params import (
    approx_component_cover,
    core_neighborhood,
    core_periphery,
    ecs_expansion,
    expansion,
    greedy_deletion_set,
    is_component_cover,
    saturate,
)
from tests.graphs import cycle, path, star


def test_greedy_on_star():
    d = greedy_deletion_set(star(4), 2)
    assert len(d) == 2
    assert exact_xi(star(4), 2) == 2


def test_greedy_nothing_to_delete(petersen):
    assert len(greedy_deletion_set(petersen, 3)) == 0


def test_greedy_prefers_shared_edges():
    g = path(4)
    d = greedy_deletion_set(g, 1)
    assert d.edges == ((1, 2),)
    assert len(d) <= 2 * exact_xi(g, 1)


@pytest.mark.parametrize("seed", range(20))
def test_greedy_is_two_approximation(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6])
    t = rng.randint(0, 2)
    d = greedy_deletion_set(g, t)
    rest = [x for x in g.degrees()]
    for u, v in d.edges:
        rest[u] -= 1
        rest[v] -= 1
    assert max(rest, default=0) <= t
    assert len(d) <= 2 * exact_xi(g, t)


def test_core_periphery_without_deletions():
    g = Graph(5, [(0, 1), (2, 3)])
    cp = core_periphery(g, DeletionSet(t=1))
    assert cp.core == ()
    assert len(cp.components) == 3
    assert all(comp.close == () for comp in cp.components)


def test_core_periphery_single_edge():
    cp = core_periphery(path(3), DeletionSet(t=1, edges=((0, 1),)))
    assert cp.core == (0, 1)
    assert cp.components[0].vertices == (2,)
    assert cp.components[0].close == (2,)


def test_core_periphery_star():
    g = star(4)
    cp = core_periphery(g, greedy_deletion_set(g, 2))
    assert cp.core == (0, 1, 2)
    assert cp.periphery == (3, 4)
    assert all(comp.far == () for comp in cp.components)
    assert core_neighborhood(g, cp) == [0, 1, 2, 3, 4]


def test_cover_of_small_components():
    g = Graph(6, [(0, 1), (2, 3), (3, 4)])
    assert approx_component_cover(g, 3).vertices == ()


def test_cover_of_long_path():
    g = path(4)
    cover = approx_component_cover(g, 3)
    assert 1 <= len(cover.vertices) <= 4
    assert is_component_cover(g, cover.vertices, 3)


def test_saturated_cover_of_big_star():
    g = star(9)
    cover = saturate(g, approx_component_cover(g, 2))
    assert cover.vertices == (0,)
    assert cover.saturated
    assert exact_lambda(g, 2) == 1


@pytest.mark.parametrize("seed", range(15))
def test_cover_approximation(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
    t = rng.randint(1, 3)
    cover = approx_component_cover(g, t)
    assert is_component_cover(g, cover.vertices, t)
    assert is_component_cover(g, saturate(g, cover).vertices, t)
    assert len(cover.vertices) <= (t + 1) * exact_lambda(g, t)


def test_expansion_single_star():
    X, Y, M = expansion(["a"], [1, 2, 3], [("a", 1), ("a", 2), ("a", 3)], 3)
    assert X == ["a"] and Y == [1, 2, 3]
    assert sorted(M) == [("a", 1), ("a", 2), ("a", 3)]


def test_expansion_disjoint_stars():
    q = 2
    edges = [("a", 1), ("a", 2), ("b", 3), ("b", 4)]
    X, Y, M = expansion(["a", "b"], [1, 2, 3, 4], edges, q)
    assert sorted(X) == ["a", "b"] and sorted(Y) == [1, 2, 3, 4]
    assert expansion_contract_ok(["a", "b"], [1, 2, 3, 4], edges, q, X, Y, M) is None


def test_expansion_skips_deficient_side():
    # b sees a single B-vertex, which a also sees
    A, B = ["a", "b"], [1, 2, 3, 4]
    edges = [("a", 1), ("a", 2), ("a", 3), ("a", 4), ("b", 4)]
    X, Y, M = expansion(A, B, edges, 2)
    assert expansion_contract_ok(A, B, edges, 2, X, Y, M) is None
    assert hall_expansion_exists(A, B, edges, 2)


def test_expansion_preconditions():
    with pytest.raises(ContractError):
        expansion(["a"], [1], [("a", 1)], 2)
    with pytest.raises(ContractError):
        expansion(["a"], [1, 2], [("a", 1)], 2)
    with pytest.raises(ContractError):
        expansion([], [1], [], 1)


@pytest.mark.parametrize("seed", range(20))
def test_expansion_random(seed):
    rng = random.Random(seed)
    q = rng.randint(1, 3)
    A = list(range(rng.randint(1, 4)))
    B = list(range(100, 100 + q * len(A) + rng.randint(0, 3)))
    edges = []
    for b in B:
        touch = [a for a in A if rng.random() < 0.4] or [rng.choice(A)]
        edges.extend((a, b) for a in touch)
    X, Y, M = expansion(A, B, edges, q)
    assert expansion_contract_ok(A, B, edges, q, X, Y, M) is None
    if len(B) <= 12:
        assert hall_expansion_exists(A, B, edges, q)


def test_ecs_expansion_on_big_star():
    g = star(9)
    cover = saturate(g, approx_component_cover(g, 2))
    res = ecs_expansion(g, cover, 2)
    assert res is not None
    assert res.X == (0,)
    assert len(res.M) == 2
    assert ecs_expansion_ok(g, cover, res, 2) is None


def test_ecs_expansion_guards():
    g = star(3)
    with pytest.raises(ContractError):
        ecs_expansion(g, ComponentCover(t=2, vertices=(0,)), 2)
    assert ecs_expansion(g, ComponentCover(t=2, vertices=(0,), saturated=True), 2) is None


def test_ecs_expansion_on_cycle_with_pendants():
    # 0-1-2-3 cycle in the cover side, each cover vertex with 5 private leaves
    edges = list(cycle(4).edges)
    nxt = 4
    for v in range(4):
        for _ in range(5):
            edges.append((v, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    cover = ComponentCover(t=2, vertices=(0, 1, 2, 3), saturated=True)
    res = ecs_expansion(g, cover, 2)
    assert res is not None
    assert ecs_expansion_ok(g, cover, res, 2) is None
