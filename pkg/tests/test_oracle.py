import pytest

from debruijn_sft import (
    Arc,
    Language,
    TooLargeError,
    build_graph,
    certify_minimal_walk,
    count_eulerian_cycles,
    decide_minimal_is_eulerian,
    enumerate_eulerian_cycles,
    global_minimal_label,
    graph_from_arcs,
    minimal_eulerian_label,
    minimal_walk,
    verdict_to_json,
)
from debruijn_sft.language import Alphabet

from corpus import ALL_INSTANCES, graph_of

BINARY = Alphabet.from_text("01")


def test_enumeration_complete_and_sorted():
    g = graph_of(("01", (), 2))
    result = enumerate_eulerian_cycles(g, g.max_vertex)
    assert not result.truncated
    labels = [w.label for w in result.walks]
    assert labels == sorted(labels)
    assert len(set(w.steps for w in result.walks)) == len(result.walks)
    for w in result.walks:
        assert w.is_eulerian(g)
    best = count_eulerian_cycles(g, g.max_vertex)
    assert len(result.walks) == best * len(g.out_arcs(g.max_vertex))


def test_enumeration_two_cycle():
    g = graph_from_arcs(1, BINARY, [Arc((0,), 1, (1,)), Arc((1,), 0, (0,))])
    result = enumerate_eulerian_cycles(g, (0,))
    assert len(result.walks) == 1 and not result.truncated


def test_enumeration_cap_truncates():
    g = graph_of(("01", (), 3))
    result = enumerate_eulerian_cycles(g, g.max_vertex, cap=3)
    assert result.truncated
    assert len(result.walks) == 3


def test_size_guard():
    g = graph_of(("01", (), 4))  # 32 arcs
    with pytest.raises(TooLargeError):
        enumerate_eulerian_cycles(g, g.max_vertex)
    with pytest.raises(TooLargeError):
        minimal_eulerian_label(g, g.max_vertex)
    with pytest.raises(TooLargeError):
        global_minimal_label(g)


def test_minimal_label_full_binary_span3():
    g = graph_of(("01", (), 3))
    label = minimal_eulerian_label(g, g.max_vertex)
    assert g.alphabet.text(label) == "0000100110101111"


def test_minimal_label_self_loops():
    g = graph_from_arcs(1, BINARY, [Arc((0,), 0, (0,)), Arc((0,), 1, (0,))])
    assert minimal_eulerian_label(g, (0,)) == (0, 1)


def test_minimal_label_lower_bounds_enumeration():
    g = graph_of(("01", ("11",), 5))
    best = minimal_eulerian_label(g, g.max_vertex)
    result = enumerate_eulerian_cycles(g, g.max_vertex)
    assert best == min(w.label for w in result.walks)


def test_greedy_equals_oracle_when_decision_true():
    for spec in ALL_INSTANCES:
        g = graph_of(spec)
        if len(g.arcs) > 24:
            continue
        decision = decide_minimal_is_eulerian(g)
        if decision.answer:
            greedy = minimal_walk(g)
            assert greedy.label == minimal_eulerian_label(g, g.max_vertex), spec


def test_global_minimum_examples():
    g = graph_of(("01", (), 2))
    best = global_minimal_label(g)
    assert g.alphabet.text(best.label).startswith("0001")

    # Witness that the maximal vertex is not always the best start.
    g2 = graph_of(("01", ("11",), 2))
    best2 = global_minimal_label(g2)
    assert g2.alphabet.text(best2.start) == "01"
    assert g2.alphabet.text(best2.label) == "0001"
    assert best2.start != g2.max_vertex
    assert g2.alphabet.text(minimal_eulerian_label(g2, g2.max_vertex)) == "0010"

    g3 = graph_from_arcs(1, BINARY, [Arc((0,), 1, (1,)), Arc((1,), 0, (0,))])
    best3 = global_minimal_label(g3)
    assert best3.label == (0, 1) and best3.start == (1,)


def test_global_minimum_never_exceeds_start_at_max_vertex():
    for spec in ALL_INSTANCES:
        g = graph_of(spec)
        if len(g.arcs) > 20:
            continue
        best = global_minimal_label(g)
        assert best.label <= minimal_eulerian_label(g, g.max_vertex), spec


def test_certify_corpus():
    for spec in ALL_INSTANCES:
        g = graph_of(spec)
        if len(g.arcs) > 26:
            continue
        verdict = certify_minimal_walk(g, max_arcs=26)
        assert verdict.passed, spec


def test_certify_blocked_instance_fields():
    g = graph_of(("01", ("01111",), 4))
    verdict = certify_minimal_walk(g, max_arcs=26)
    assert verdict.passed
    assert not verdict.greedy_eulerian
    assert not verdict.decision
    assert verdict.oracle_label != verdict.greedy_label
    data = verdict_to_json(verdict, g)
    assert set(data) == {"greedyLabel", "greedyEulerian", "oracleLabel", "decision", "pass"}
    assert data["pass"] is True
