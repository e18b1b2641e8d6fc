"""Brute-force ground truth at desk scale.

Exhaustive backtracking over Eulerian circuits, true minimal circuit
labels, the global minimum over all start vertices, and a certification
verdict tying the greedy walk, the decision procedure, and the oracle
together. Everything here is factorial-time and guarded by an arc bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotEulerianError, TooLargeError
from .graph import DeBruijnGraph
from .language import Word
from .structure import decide_minimal_is_eulerian
from .walks import Walk, minimal_walk

DEFAULT_MAX_ARCS = 24


def _guard(g: DeBruijnGraph, max_arcs: int) -> None:
    if len(g.arcs) > max_arcs:
        raise TooLargeError(
            f"{len(g.arcs)} arcs exceeds the exhaustive bound of {max_arcs}"
        )


@dataclass(frozen=True)
class EnumerationResult:
    walks: tuple[Walk, ...]
    truncated: bool


def enumerate_eulerian_cycles(
    g: DeBruijnGraph, start: Word, cap: int | None = None,
    max_arcs: int = DEFAULT_MAX_ARCS,
) -> EnumerationResult:
    """Every Eulerian circuit from `start`, in lexicographic label order.

    Backtracking tries arcs in ascending label order, so circuits come out
    sorted by label; `cap` stops the search early and flags truncation.
    """
    _guard(g, max_arcs)
    if start not in g.out:
        raise ValueError(f"vertex {start} is not in the graph")
    total = len(g.arcs)
    used: set = set()
    path: list = []
    found: list[Walk] = []

    def extend(cur: Word) -> bool:
        if len(path) == total:
            if cur == start:
                found.append(Walk(start, tuple(path)))
                if cap is not None and len(found) >= cap:
                    return False
            return True
        for arc in g.out_arcs(cur):
            if arc in used:
                continue
            used.add(arc)
            path.append(arc)
            keep_going = extend(arc.head)
            path.pop()
            used.discard(arc)
            if not keep_going:
                return False
        return True

    completed = extend(start)
    return EnumerationResult(tuple(found), truncated=not completed)


def minimal_eulerian_label(
    g: DeBruijnGraph, start: Word, max_arcs: int = DEFAULT_MAX_ARCS
) -> Word:
    """Lexicographically smallest Eulerian-circuit label from `start`.

    Depth-first search extending by the smallest label first: since all
    circuits have the same length, the first one completed is minimal.
    """
    _guard(g, max_arcs)
    if start not in g.out:
        raise ValueError(f"vertex {start} is not in the graph")
    total = len(g.arcs)
    used: set = set()
    path: list = []

    def extend(cur: Word) -> Walk | None:
        if len(path) == total:
            return Walk(start, tuple(path)) if cur == start else None
        for arc in g.out_arcs(cur):
            if arc in used:
                continue
            used.add(arc)
            path.append(arc)
            hit = extend(arc.head)
            path.pop()
            used.discard(arc)
            if hit is not None:
                return hit
        return None

    walk = extend(start)
    if walk is None:
        raise NotEulerianError(f"no Eulerian circuit from {start}")
    return walk.label


@dataclass(frozen=True)
class GlobalMinimum:
    start: Word
    label: Word


def global_minimal_label(g: DeBruijnGraph, max_arcs: int = DEFAULT_MAX_ARCS) -> GlobalMinimum:
    """Smallest Eulerian-circuit label over every start vertex.

    The winner can differ from the maximal vertex, in which case the
    greedy-from-maximal answer is not the global optimum."""
    _guard(g, max_arcs)
    best: GlobalMinimum | None = None
    for start in g.vertices:
        label = minimal_eulerian_label(g, start, max_arcs=max_arcs)
        if best is None or label < best.label:
            best = GlobalMinimum(start=start, label=label)
    if best is None:
        raise NotEulerianError("graph has no vertices")
    return best


@dataclass(frozen=True)
class Verdict:
    greedy_label: Word
    greedy_eulerian: bool
    oracle_label: Word
    decision: bool
    passed: bool


def certify_minimal_walk(g: DeBruijnGraph, max_arcs: int = DEFAULT_MAX_ARCS) -> Verdict:
    """Cross-check the greedy walk against the oracle.

    Passes when the decision procedure agrees with the walk actually
    covering the graph, and, whenever it does cover, its label equals the
    oracle's minimal circuit label from the maximal vertex."""
    greedy = minimal_walk(g)
    greedy_eulerian = greedy.is_eulerian(g)
    decision = decide_minimal_is_eulerian(g)
    oracle_label = minimal_eulerian_label(g, g.max_vertex, max_arcs=max_arcs)
    passed = (greedy_eulerian == decision.answer) and (
        not greedy_eulerian or greedy.label == oracle_label
    )
    return Verdict(
        greedy_label=greedy.label,
        greedy_eulerian=greedy_eulerian,
        oracle_label=oracle_label,
        decision=decision.answer,
        passed=passed,
    )


def verdict_to_json(v: Verdict, g: DeBruijnGraph) -> dict:
    return {
        "greedyLabel": g.alphabet.text(v.greedy_label),
        "greedyEulerian": v.greedy_eulerian,
        "oracleLabel": g.alphabet.text(v.oracle_label),
        "decision": v.decision,
        "pass": v.passed,
    }
