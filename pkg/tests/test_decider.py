import random

from hypothesis import given, settings
from hypothesis import strategies as st

from dcsreconf.core import DegreeBounds, Graph, Instance, verify_move_sequence
from dcsreconf.decider import (
    FIXED_EDGE,
    LOCKED_ALT_AB_TIGHT_CYCLE,
    LOCKED_B_TIGHT_CYCLE,
    decide,
    decide_with_trace,
)
from dcsreconf.obstructions import m_fixed_subgraph
from dcsreconf.oracle import enumerate_ab_constrained, oracle_decide

from helpers import (
    bounds,
    cycle_graph,
    graph,
    inst,
    path_graph,
    random_bounds,
    random_connected_graph,
    sub,
)


def test_equal_endpoints_yield_empty_sequence():
    g = cycle_graph(4)
    d = decide(inst(g, bounds(g, 0, 1), [0, 2], [0, 2], 3))
    assert d.yes and d.moves == ()


def test_matching_swap_on_cycle():
    g = cycle_graph(4)
    b = bounds(g, 0, 1)
    tight = decide(inst(g, b, [0, 2], [1, 3], 1))
    assert not tight.yes
    assert tight.witness.kind == LOCKED_B_TIGHT_CYCLE
    assert set(tight.witness.cycle.edges) == {0, 1, 2, 3}
    loose = decide(inst(g, b, [0, 2], [1, 3], 2))
    assert loose.yes and len(loose.moves) == 4


def test_fixed_edge_conflict():
    g = path_graph(3)
    b = DegreeBounds(g, [0, 1, 0], [1, 1, 1])
    d = decide(inst(g, b, [0], [1], 1))
    assert not d.yes
    assert d.witness.kind == FIXED_EDGE
    assert d.witness.edge in {0, 1}


def test_alternately_tight_cycle_locked_for_every_slack():
    g = cycle_graph(4)
    b = DegreeBounds(g, [1, 0, 1, 0], [2, 1, 2, 1])
    for k in (1, 2, 3):
        d = decide(inst(g, b, [0, 2], [1, 3], k))
        assert not d.yes
        assert d.witness.kind == LOCKED_ALT_AB_TIGHT_CYCLE


def test_alternately_tight_cycle_unlocked_by_pendant():
    g = graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)])
    b = DegreeBounds(g, [1, 0, 1, 0, 0], [2, 1, 2, 1, 1])
    d = decide(inst(g, b, [0, 2], [1, 3], 1))
    assert d.yes


def test_single_augmentation_trace():
    g = path_graph(2)
    d, trace = decide_with_trace(inst(g, bounds(g, 0, 1), [], [0], 1))
    assert d.yes and len(d.moves) == 1
    assert len(trace) == 1
    assert trace[0].trail_class == "m-augmenting"
    assert trace[0].rule == "grow"
    assert trace[0].moves == 1


def test_cycle_swap_trace_at_slack_two():
    g = cycle_graph(4)
    d, trace = decide_with_trace(inst(g, bounds(g, 0, 1), [0, 2], [1, 3], 2))
    assert d.yes
    assert len(trace) == 1
    assert trace[0].trail_class == "b-tight-cycle"
    assert trace[0].rule == "tight-cycle-dip"
    assert trace[0].moves == 4


def test_empty_trace_when_equal():
    g = path_graph(2)
    d, trace = decide_with_trace(inst(g, bounds(g, 0, 1), [0], [0], 1))
    assert d.yes and trace == []


def test_orientation_swap_when_source_is_larger():
    g = path_graph(4)
    b = bounds(g, 0, 1)
    d = decide(inst(g, b, [0, 2], [1], 1))
    assert d.yes
    i = inst(g, b, [0, 2], [1], 1)
    assert verify_move_sequence(i, list(d.moves))


def test_yes_sequences_always_verify():
    rng = random.Random(67)
    done = 0
    while done < 150:
        g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(2, 9))
        b = random_bounds(rng, g)
        states = enumerate_ab_constrained(g, b)
        if len(states) < 2:
            continue
        s1, s2 = rng.sample(states, 2)
        k = rng.choice([1, 1, 2, 3])
        i = Instance(g, b, s1.copy(), s2.copy(), k)
        done += 1
        d = decide(i)
        if d.yes:
            assert verify_move_sequence(i, list(d.moves))
            assert len(d.moves) <= g.m * g.m + 2 * g.m


def test_agrees_with_oracle_on_random_instances():
    rng = random.Random(71)
    done = 0
    while done < 200:
        g = random_connected_graph(rng, rng.randint(2, 6), rng.randint(1, 9))
        b = random_bounds(rng, g)
        states = enumerate_ab_constrained(g, b)
        if len(states) < 2:
            continue
        s1, s2 = rng.sample(states, 2)
        k = rng.choice([1, 1, 2, 3])
        i = Instance(g, b, s1.copy(), s2.copy(), k)
        done += 1
        assert decide(i).yes == oracle_decide(i)


def test_monotone_in_slack():
    rng = random.Random(73)
    done = 0
    while done < 60:
        g = random_connected_graph(rng, rng.randint(3, 5), rng.randint(2, 7))
        b = random_bounds(rng, g)
        states = enumerate_ab_constrained(g, b)
        if len(states) < 2:
            continue
        s1, s2 = rng.sample(states, 2)
        done += 1
        answers = [
            decide(Instance(g, b, s1.copy(), s2.copy(), k)).yes for k in (1, 2, 3)
        ]
        assert answers == sorted(answers)


def test_witness_and_moves_lift_through_restriction():
    # a pinned pendant edge occupies index 0, so the restricted instance
    # reindexes the cycle edges; answers must come back in original indices
    g = graph(6, [(4, 5), (0, 1), (1, 2), (2, 3), (3, 0)])
    b = DegreeBounds(g, [0, 0, 0, 0, 1, 0], [1, 1, 1, 1, 1, 1])
    tight = decide(inst(g, b, [0, 1, 3], [0, 2, 4], 1))
    assert not tight.yes
    assert tight.witness.kind == LOCKED_B_TIGHT_CYCLE
    assert set(tight.witness.cycle.edges) == {1, 2, 3, 4}
    loose = inst(g, b, [0, 1, 3], [0, 2, 4], 2)
    d, trace = decide_with_trace(loose)
    assert d.yes
    assert verify_move_sequence(loose, list(d.moves))
    assert {m.edge for m in d.moves} == {1, 2, 3, 4}
    assert len(trace) == 1 and set(trace[0].trail.edges) == {1, 2, 3, 4}


def test_equal_size_detour_forwards_locked_cycle_in_difference():
    # equal sizes, not maximum, slack 1: the detour through an augmented
    # target meets the genuinely locked square, whose edges lie in the
    # difference, so the certificate is forwarded
    g = graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7)])
    b = DegreeBounds(
        g, [1, 0, 1, 0, 0, 0, 0, 0], [2, 1, 2, 1, 1, 1, 1, 1]
    )
    i = inst(g, b, [0, 2, 4], [1, 3, 4], 1)
    d = decide(i)
    assert not d.yes
    assert d.witness.kind == LOCKED_ALT_AB_TIGHT_CYCLE
    assert set(d.witness.cycle.edges) == {0, 1, 2, 3}
    assert not oracle_decide(i)


def test_equal_size_detour_freezes_cycle_outside_difference(monkeypatch):
    # the detour can report a locked square that the actual difference never
    # touches; the decider must freeze it and decide the remainder (this
    # branch is staged here because organic inputs reaching it are elusive)
    import dcsreconf.decider as dec
    from dcsreconf.trail_type import Trail

    g = graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7)])
    b = DegreeBounds(
        g, [1, 0, 1, 0, 0, 0, 0, 0], [2, 1, 2, 1, 1, 1, 1, 1]
    )
    i = inst(g, b, [0, 2, 4], [0, 2, 5], 1)
    real_process = dec._process
    staged = {"armed": True}

    def fake_process(inner, trace, max_regime):
        if staged["armed"]:
            staged["armed"] = False
            return dec.Decision.reject(
                dec.Witness(
                    dec.LOCKED_ALT_AB_TIGHT_CYCLE,
                    cycle=Trail((0, 1, 2, 3, 0), (0, 1, 2, 3)),
                    context="any slack",
                )
            )
        return real_process(inner, trace, max_regime)

    monkeypatch.setattr(dec, "_process", fake_process)
    d = decide(i)
    assert d.yes
    assert verify_move_sequence(i, list(d.moves))
    assert not staged["armed"]  # the staged certificate was consumed
    assert {m.edge for m in d.moves} <= {4, 5, 6}


def test_upper_tight_cycle_escape_at_slack_one():
    # pendant gives one cycle vertex an escape, so the swap works at slack 1
    g = graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    b = bounds(g, 0, 1)
    i = inst(g, b, [0, 2], [1, 3], 1)
    d, trace = decide_with_trace(i)
    assert d.yes
    assert verify_move_sequence(i, list(d.moves))
    assert any(entry.rule == "tight-cycle-escape" for entry in trace)
    assert oracle_decide(i)


@st.composite
def small_instances(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = draw(
        st.lists(st.sampled_from(pairs), min_size=1, max_size=7, unique=True)
    )
    host = Graph(n, picked)
    upper = [draw(st.integers(0, host.degree[v])) for v in range(n)]
    lower = [draw(st.integers(0, upper[v])) for v in range(n)]
    b = DegreeBounds(host, lower, upper)
    states = enumerate_ab_constrained(host, b)
    if len(states) < 2:
        return None
    i = draw(st.integers(0, len(states) - 1))
    j = draw(st.integers(0, len(states) - 1))
    k = draw(st.sampled_from([1, 2, 3]))
    return Instance(host, b, states[i].copy(), states[j].copy(), k)


@given(small_instances())
@settings(max_examples=60, deadline=None)
def test_property_decider_matches_oracle(instance):
    if instance is None:
        return
    assert decide(instance).yes == oracle_decide(instance)


def test_no_witness_cycles_lie_in_the_difference():
    rng = random.Random(79)
    done = 0
    while done < 120:
        g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(3, 9))
        b = random_bounds(rng, g, relax=0.3)
        states = enumerate_ab_constrained(g, b)
        if len(states) < 2:
            continue
        s1, s2 = rng.sample(states, 2)
        i = Instance(g, b, s1.copy(), s2.copy(), rng.choice([1, 2]))
        done += 1
        d = decide(i)
        if d.yes or d.witness.cycle is None:
            continue
        diff = s1.edge_set ^ s2.edge_set
        assert set(d.witness.cycle.edges) & diff
        if d.witness.kind == LOCKED_B_TIGHT_CYCLE:
            fixed = m_fixed_subgraph(g, b, s1)
            assert not (set(d.witness.cycle.edges) & fixed.edge_set)
