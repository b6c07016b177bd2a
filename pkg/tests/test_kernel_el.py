import random

import pytest

from kernelkit.core.config import settings
from kernelkit.core.errors import ContractError, InputError
from kernelkit.models.entities import BoundedDegreePath, EdgeLists, Graph, Path, new_edge_lists, new_instance
from kernelkit.services.graph import enumerate_bdps_and_isolated_cycles
from kernelkit.services.harness import AnswerCache, check_equivalence, random_instance
from kernelkit.services.kernel_el import (
    _full_lists,
    _pair_lists,
    _Work,
    el_structure_ok,
    k3_safe,
    kernel_el,
    optimal_weak_on_cycle,
    optimal_weak_on_isolated_path,
    ordered_bdp,
)
from kernelkit.services.solver import brute_force_min_weak
from tests.graphs import complete, cycle, path


def _lists(g, c, colors):
    return new_edge_lists(c, dict(zip(g.edges, colors)))


def _el(g, c, k, colors, kind="el-ecs"):
    return new_instance(g, c, k, kind, _lists(g, c, colors))


def test_isolated_even_cycle():
    out = kernel_el(_el(cycle(4), 2, 0, [{1, 2}] * 4))
    assert out.decision == "yes"
    step = next(s for s in out.trace if s.rule == "isolated-cycle")
    assert step.k_delta == 0


@pytest.mark.parametrize("k, decision", [(0, "no"), (1, "yes")])
def test_isolated_odd_cycle(k, decision):
    out = kernel_el(_el(cycle(5), 2, k, [{1, 2}] * 5))
    assert out.decision == decision
    assert next(s for s in out.trace if s.rule == "isolated-cycle").k_delta == -1


def test_isolated_triangle_for_stc():
    out = kernel_el(_el(complete(3), 1, 1, [set(), {1}, {1}], kind="el-mstc"))
    assert out.trace[0].rule == "isolated-triangle"
    assert out.trace[0].k_delta == -1
    assert out.decision == "yes"
    assert out.k_out == 0


def test_pendant_edge_with_spare_colors():
    # claw at 0, leaf 3 extended by the pendant edge 3-4
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    inst = new_instance(g, 2, 0, "el-ecs", new_edge_lists(2, {(3, 4): [1, 2]}))
    out = kernel_el(inst)
    assert out.trace[0].rule == "bdp-slack-list"
    assert out.trace[0].edges == ((3, 4),)
    assert out.k_out == 0


def test_wrong_kind():
    with pytest.raises(InputError):
        kernel_el(new_instance(path(3), 2, 0, "ecs"))


def test_rule_budget(monkeypatch):
    monkeypatch.setattr(settings, "rule_budget", 1)
    with pytest.raises(ContractError):
        kernel_el(_el(path(8), 2, 0, [{1, 2}] * 7))


@pytest.mark.parametrize("colors, expected", [([{1}], 0), ([{1}, {1}], 1), ([set(), {1}], 1), ([{1}, {2}], 0)])
def test_isolated_path_examples(colors, expected):
    g = path(len(colors) + 1)
    assert optimal_weak_on_isolated_path(g, _lists(g, 2, colors)) == expected


@pytest.mark.parametrize("seed", range(25))
def test_isolated_path_matches_brute_force(seed):
    rng = random.Random(seed)
    c = rng.randint(1, 4)
    g = path(rng.randint(2, 8))
    colors = [rng.sample(range(1, c + 1), rng.randint(0, c)) for _ in g.edges]
    inst = _el(g, c, 0, colors)
    assert optimal_weak_on_isolated_path(g, inst.psi) == brute_force_min_weak(inst)


def test_isolated_path_rejects_other_graphs():
    with pytest.raises(ContractError):
        optimal_weak_on_isolated_path(cycle(4), EdgeLists(c=2))
    with pytest.raises(ContractError):
        optimal_weak_on_isolated_path(Graph(4, [(0, 1), (2, 3)]), EdgeLists(c=2))


@pytest.mark.parametrize(
    "n, colors, expected",
    [
        (3, [{1}] * 3, 2),
        (4, [{1, 2}] * 4, 0),
        (5, [{1, 2}] * 5, 1),
        (3, [{1}, {2}, {3}], 0),
    ],
)
def test_cycle_examples(n, colors, expected):
    g = cycle(n)
    assert optimal_weak_on_cycle(g, _lists(g, 3, colors)) == expected


@pytest.mark.parametrize("seed", range(25))
def test_cycle_matches_brute_force(seed):
    rng = random.Random(seed)
    c = rng.randint(1, 3)
    g = cycle(rng.randint(3, 6))
    colors = [rng.sample(range(1, c + 1), rng.randint(0, c)) for _ in g.edges]
    inst = _el(g, c, 0, colors)
    assert optimal_weak_on_cycle(g, inst.psi) == brute_force_min_weak(inst)


def test_cycle_rejects_paths():
    with pytest.raises(ContractError):
        optimal_weak_on_cycle(path(4), EdgeLists(c=2))


def _bdp_with(g, vertex):
    bdps, _ = enumerate_bdps_and_isolated_cycles(g)
    return next(p for p in bdps if vertex in p.vertices)


def test_ordered_bdp_open_end_last():
    # 0 has degree 3; the path 1-2-3 hangs off it
    g = Graph(6, [(0, 4), (0, 5), (0, 1), (1, 2), (2, 3)])
    p = _bdp_with(g, 2)
    assert ordered_bdp(g, p).vertices == (1, 2, 3)
    flipped = BoundedDegreePath(path=p.path.reversed(), open=p.open, anchors=p.anchors[::-1])
    assert ordered_bdp(g, flipped).vertices == (1, 2, 3)


def test_ordered_bdp_ties_take_lower_id():
    g = path(4)
    p = _bdp_with(g, 1)
    flipped = BoundedDegreePath(path=p.path.reversed(), open=True, anchors=p.anchors)
    assert ordered_bdp(g, flipped).vertices == (0, 1, 2, 3)

    # 1-2-3 between the two claw centers 0 and 4
    g = Graph(9, [(0, 5), (0, 6), (0, 1), (1, 2), (2, 3), (3, 4), (4, 7), (4, 8)])
    p = _bdp_with(g, 2)
    assert not p.open
    assert ordered_bdp(g, p).vertices == (1, 2, 3)


def test_structure_checks(paw):
    assert not el_structure_ok(path(5))
    assert el_structure_ok(path(3))
    assert not el_structure_ok(cycle(4))
    assert k3_safe(paw)


@pytest.mark.parametrize("seed", range(20))
def test_kernel_keeps_answers(seed):
    kind = ("el-ecs", "el-mstc")[seed % 2]
    inst = random_instance(kind, 7, 0.4, 2 + seed % 3, seed=seed, lists=True)
    if inst.graph.m > 14:
        pytest.skip("too large for the exact check")
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None
    out = kernel_el(inst)
    assert out.bound_holds
    if out.decision == "open":
        assert el_structure_ok(out.reduced.graph)
        if kind == "el-mstc":
            assert k3_safe(out.reduced.graph)


def test_reduced_instance_is_a_fixpoint():
    inst = random_instance("el-ecs", 10, 0.3, 3, k=2, seed=4, lists=True)
    out = kernel_el(inst)
    if out.decision != "open":
        return
    again = kernel_el(out.reduced)
    assert [s.rule for s in again.trace] == []
    assert again.reduced == out.reduced


def _hub_path(length, colors, c, k=0, kind="el-ecs", open_end=False):
    """Claw centers 0 and `last` joined by a path of `length` edges through 3, 4, ...

    `colors` are the lists of the path edges between the two hub edges, in order.
    With `open_end` the path hangs off hub 0 only and ends in a leaf.
    """
    inner = list(range(3, 3 + length - 1))
    edges = [(0, 1), (0, 2), (0, inner[0])] + list(zip(inner, inner[1:]))
    n = inner[-1] + 1
    if not open_end:
        hub = n
        edges += [(inner[-1], hub), (hub, hub + 1), (hub, hub + 2)]
        n = hub + 3
    g = Graph(n, edges)
    allowed = {(u, v): s for (u, v), s in zip(zip(inner, inner[1:]), colors)}
    return new_instance(g, c, k, kind, new_edge_lists(c, allowed))


def _rules(out):
    return [s.rule for s in out.trace]


@pytest.mark.parametrize("kind", ["el-ecs", "el-mstc"])
def test_equal_lists_on_long_path_contract(kind):
    inst = _hub_path(6, [{1, 2}] * 4, 2, kind=kind)
    out = kernel_el(inst)
    assert _rules(out)[0] == "contract-equal-lists"
    assert out.trace[0].vertices == (3, 4, 5, 6)
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None


@pytest.mark.parametrize(
    "c, colors",
    [
        # equal first pair: both narrow to the shared color of the middle pair
        (3, [{1, 2}, {1, 2}, {2, 3}, {2, 3}]),
        # disjoint outer lists: the first pair keeps 1, the third edge keeps {1, 4}
        (4, [{1, 2}, {2, 3}, {3, 4}, {3, 4}]),
    ],
)
def test_pair_lists_narrow_window(c, colors):
    inst = _hub_path(6, colors, c)
    out = kernel_el(inst)
    step = out.trace[0]
    assert step.rule == "pair-lists"
    assert step.vertices == (3, 4, 5, 6)
    assert step.k_delta == 1
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None


def test_pair_lists_shared_outer_color_shortcuts():
    # lists {1,2}, {2,3}, {1,3}: vertex 5 is cut out and 4-6 carries color 1
    inst = _hub_path(6, [{1, 2}, {2, 3}, {1, 3}, {1, 2}], 3)
    out = kernel_el(inst)
    assert out.trace[0].rule == "pair-lists"
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None


def test_singleton_then_distinct_pairs_contract():
    inst = _hub_path(6, [{1}, {1, 2}, {2, 3}, {2, 3}], 3)
    out = kernel_el(inst)
    assert out.trace[0].rule == "contract-singleton-pair"
    assert out.trace[0].k_delta == 0
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None


@pytest.mark.parametrize("k", [0, 2])
def test_open_path_is_trimmed(k):
    inst = _hub_path(5, [{1}] * 3, 2, k=k, open_end=True)
    out = kernel_el(inst)
    assert "trim-open-end" in _rules(out)
    if out.decision == "open":
        assert el_structure_ok(out.reduced.graph)
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None


@pytest.mark.parametrize("seed", range(30))
def test_hub_paths_keep_answers(seed):
    rng = random.Random(seed)
    c = rng.randint(2, 4)
    length = rng.randint(4, 7)
    colors = [set(rng.sample(range(1, c + 1), rng.randint(1, 2))) for _ in range(length - 2)]
    kind = ("el-ecs", "el-mstc")[seed % 2]
    inst = _hub_path(length, colors, c, kind=kind, open_end=seed % 3 == 0)
    assert check_equivalence(inst, kernel_el, AnswerCache()) is None
    out = kernel_el(inst)
    assert out.bound_holds
    if out.decision == "open":
        assert el_structure_ok(out.reduced.graph)


def test_pair_lists_disjoint_outer_lists_keep_a_solution():
    inst = _hub_path(6, [{1, 2}, {2, 3}, {3, 4}, {3, 4}], 4)
    w = _Work(inst.graph, _full_lists(inst.graph, inst.psi), 0, 4)
    bdps, _ = enumerate_bdps_and_isolated_cycles(w.graph)
    assert _pair_lists(w, bdps)
    assert w.lists[(3, 4)] == {1}
    assert w.lists[(4, 5)] == {1}
    assert w.lists[(5, 6)] == {1, 4}
    assert w.k == 1
