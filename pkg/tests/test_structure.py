import pytest

from debruijn_sft import (
    Language,
    analysis_to_json,
    analyze_max_arcs,
    build_graph,
    check_cycle_label_blocks,
    classify_vertex,
    decide_minimal_is_eulerian,
    enumerate_obstructions,
    minimal_walk,
    verify_cycle_structure,
    verify_exhaustion_order,
    verify_floor_paths,
    verify_greedy_decision,
    verify_label_monotonicity,
    verify_overlap_bounds,
)

from corpus import ALL_INSTANCES, graph_of, random_instances

GOLDEN5 = ("01", ("11",), 5)
BLOCKED4 = ("01", ("01111",), 4)


def test_unrestricted_analysis_is_tree():
    for alphabet, n in [("01", 3), ("01", 4), ("012", 2)]:
        g = graph_of((alphabet, (), n))
        t = analyze_max_arcs(g)
        assert t.is_tree
        assert t.cycles == ()
        assert g.alphabet.text(t.root) == alphabet[-1] * n
        assert len(t.max_arc) == len(g.vertices) - 1


def test_golden5_vertex_classification():
    g = graph_of(GOLDEN5)
    t = analyze_max_arcs(g)
    a = g.alphabet
    rec = classify_vertex(t, a.word("01010"))
    assert a.text(rec.overlap) == "1010"
    assert a.symbols[rec.overlap_next] == "1"
    assert a.symbols[rec.max_label] == "1"
    assert not rec.is_floor and not rec.is_restricted
    zero = classify_vertex(t, a.word("00000"))
    assert zero.overlap == ()
    assert zero.is_floor
    assert a.symbols[zero.overlap_next] == "1"
    with pytest.raises(ValueError):
        classify_vertex(t, t.root)


def test_full_binary_overlap_example():
    g = graph_of(("01", (), 3))
    t = analyze_max_arcs(g)
    a = g.alphabet
    rec = classify_vertex(t, a.word("011"))
    assert a.text(rec.overlap) == "11"
    assert a.symbols[rec.overlap_next] == "1"
    # Arc 011 -> 110 has label 0 < overlap_next, so 110 must be floor.
    assert classify_vertex(t, a.word("110")).is_floor


def test_golden5_cycle():
    g = graph_of(GOLDEN5)
    t = analyze_max_arcs(g)
    assert not t.is_tree
    a = g.alphabet
    assert [[a.text(v) for v in c] for c in t.cycles] == [["00100", "01001", "10010"]]


def test_blocked4_cycles_divide_span_plus_one():
    g = graph_of(BLOCKED4)
    t = analyze_max_arcs(g)
    assert not t.is_tree
    for cyc in t.cycles:
        assert len(cyc) in (1, 5)
        assert 5 % len(cyc) == 0


def test_restricted_vertices_feed_floor_vertices():
    for spec in ALL_INSTANCES:
        t = analyze_max_arcs(graph_of(spec))
        for v in t.restricted:
            head = t.max_arc[v].head
            if head != t.root:
                assert head in t.floor, spec


def test_tree_arc_count_invariant():
    for spec in ALL_INSTANCES:
        g = graph_of(spec)
        t = analyze_max_arcs(g)
        assert len(t.max_arc) == len(g.vertices) - 1
        for v, arc in t.max_arc.items():
            assert arc.tail == v
            assert arc == g.out_arcs(v)[-1]


def all_reports(g):
    t = analyze_max_arcs(g)
    reports = [
        verify_exhaustion_order(g, t.avoid_set()),
        verify_label_monotonicity(t),
        verify_cycle_structure(t),
        verify_overlap_bounds(t),
        verify_floor_paths(t),
        verify_greedy_decision(g),
    ]
    reports.extend(check_cycle_label_blocks(t, c) for c in t.cycles)
    return reports


def test_verifiers_zero_violations_on_corpus():
    for spec in ALL_INSTANCES:
        for report in all_reports(graph_of(spec)):
            assert report.ok, (spec, report)


def test_verifiers_zero_violations_on_random_corpus():
    for spec in random_instances(20):
        for report in all_reports(graph_of(spec)):
            assert report.ok, (spec, report)


def test_floor_path_verifier_handles_restricted_floor_start():
    # With 002 forbidden the vertex 00 is floor yet restricted: its only
    # extension would immediately break the spelled-overlap equality, so
    # paths must stop there rather than flag a violation.
    g = graph_of(("012", ("002",), 2))
    t = analyze_max_arcs(g)
    v = g.alphabet.word("00")
    assert v in t.floor and v in t.restricted
    assert verify_floor_paths(t).ok


def test_obstructions_empty_without_restrictions():
    for alphabet, n in [("01", 2), ("01", 4), ("01", 6), ("012", 3)]:
        g = graph_of((alphabet, (), n))
        assert enumerate_obstructions(g) == ()


def test_obstructions_blocked4_nonempty():
    g = graph_of(BLOCKED4)
    obs = enumerate_obstructions(g)
    assert obs
    words = {g.alphabet.text(o.word) for o in obs}
    assert words == {"01011", "01101", "10101", "10110", "11010"}


def test_obstructions_golden5_match_cycle_construction():
    g = graph_of(GOLDEN5)
    t = analyze_max_arcs(g)
    expected = {
        u + (t.max_label[u],) for cyc in t.cycles for u in cyc
    }
    assert {o.word for o in enumerate_obstructions(g)} == expected


def test_obstruction_cross_construction_on_corpus():
    for spec in ALL_INSTANCES:
        g = graph_of(spec)
        t = analyze_max_arcs(g)
        expected = {u + (t.max_label[u],) for cyc in t.cycles for u in cyc}
        assert {o.word for o in enumerate_obstructions(g)} == expected, spec


def test_obstruction_witnesses_are_valid_decompositions():
    for spec in [GOLDEN5, BLOCKED4, ("01", ("111",), 5)]:
        g = graph_of(spec)
        m = g.max_vertex
        arc_words = {a.tail + (a.label,) for a in g.arcs}
        for o in enumerate_obstructions(g):
            rotated = o.word[o.rotation :] + o.word[: o.rotation]
            flat = tuple(s for h, b in o.blocks for s in h + (b,))
            assert flat == rotated
            for h, b in o.blocks:
                assert h == m[: len(h)]
                assert b < m[len(h)]
            # Raising any block letter must leave the arc-word set.
            chunks = [h + (b,) for h, b in o.blocks]
            for i, (h, b) in enumerate(o.blocks):
                ending_here = ()
                for c in chunks[i + 1 :] + chunks[: i + 1]:
                    ending_here += c
                for b2 in range(b + 1, g.alphabet.size):
                    assert ending_here[:-1] + (b2,) not in arc_words


def test_decide_examples():
    assert decide_minimal_is_eulerian(graph_of(("01", (), 4))).answer is True
    decision = decide_minimal_is_eulerian(graph_of(BLOCKED4))
    assert decision.answer is False
    assert decision.via_tree is False and decision.via_obstructions is False
    assert decision.cycles and decision.obstructions


def test_main_theorem_three_ways_on_everything():
    for spec in ALL_INSTANCES + random_instances(30):
        g = graph_of(spec)
        decision = decide_minimal_is_eulerian(g)
        walk = minimal_walk(g)
        assert decision.via_tree == decision.via_obstructions == decision.answer
        assert walk.is_eulerian(g) == decision.answer, spec


def test_analysis_json_shape():
    g = graph_of(GOLDEN5)
    data = analysis_to_json(g)
    assert data["root"] == "10101"
    assert len(data["vertices"]) == 12  # root reported separately
    assert data["decision"] == {
        "answer": False,
        "viaTree": False,
        "viaObstructions": False,
    }
    assert data["cycles"][0]["vertices"] == ["00100", "01001", "10010"]
    assert data["cycles"][0]["label"] == "100"
    assert {o["word"] for o in data["obstructions"]} == {"001001", "010010", "100100"}
    by_label = {v["label"]: v for v in data["vertices"]}
    assert by_label["01010"] == {
        "label": "01010",
        "overlap": "1010",
        "overlapNext": "1",
        "maxLabel": "1",
        "floor": False,
        "restricted": False,
    }
