"""Structure of the maximum-label arc subgraph and the greedy-walk decision.

For each non-root vertex keep its maximum-label out-arc; those arcs form a
functional subgraph (every vertex one exit, the root none). The greedy
minimal walk from the maximal vertex is exactly the walk avoiding this
subgraph, so it covers the whole graph precisely when the subgraph is a
tree converging to the root. A second, independent criterion looks only at
words: a word of full span+1 length is an obstruction when some rotation
splits into blocks, each a prefix of the maximal vertex followed by a
letter strictly below the next letter of that prefix, such that raising
the trailing letter of any block always leaves the language. The decision
procedure computes both criteria and insists they agree.

Per-vertex data, with m the maximal vertex:
  overlap(u)      longest word that is a suffix of u and a prefix of m
  overlap_next(u) the letter of m right after that prefix
  max_label(u)    label of u's maximum out-arc
  floor           overlap(u) is empty
  restricted      max_label(u) < overlap_next(u)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TheoremViolationError
from .graph import Arc, DeBruijnGraph
from .language import Word
from .walks import AvoidSet, exhaustion_order, minimal_walk, walk_avoiding


@dataclass(frozen=True, eq=False)
class MaxArcAnalysis:
    graph: DeBruijnGraph
    root: Word
    max_arc: dict[Word, Arc]        # v != root -> maximum-label out-arc
    overlap: dict[Word, Word]
    overlap_next: dict[Word, int]
    max_label: dict[Word, int]
    floor: frozenset[Word]
    restricted: frozenset[Word]
    cycles: tuple[tuple[Word, ...], ...]   # each starts at its minimal vertex
    is_tree: bool

    def avoid_set(self) -> AvoidSet:
        return AvoidSet(root=self.root, arc_by_vertex=self.max_arc)

    def successor(self, v: Word) -> Word | None:
        arc = self.max_arc.get(v)
        return None if arc is None else arc.head


@dataclass(frozen=True)
class VertexClass:
    overlap: Word
    overlap_next: int
    max_label: int
    is_floor: bool
    is_restricted: bool


@dataclass(frozen=True)
class Obstruction:
    """A word certifying the greedy walk cannot cover the graph.

    ``blocks`` concatenate to the rotation of ``word`` by ``rotation``
    places; each block is (prefix of the maximal vertex, letter)."""

    word: Word
    rotation: int
    blocks: tuple[tuple[Word, int], ...]


@dataclass(frozen=True)
class Decision:
    answer: bool
    via_tree: bool
    via_obstructions: bool
    cycles: tuple[tuple[Word, ...], ...]
    obstructions: tuple[Obstruction, ...]


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checks: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _longest_overlap(u: Word, m: Word) -> Word:
    # Longest proper borrowing: suffix of u that is a prefix of m, length < n.
    n = len(m)
    for k in range(n - 1, 0, -1):
        if u[n - k :] == m[:k]:
            return m[:k]
    return ()


def analyze_max_arcs(g: DeBruijnGraph) -> MaxArcAnalysis:
    root = g.max_vertex
    max_arc: dict[Word, Arc] = {}
    overlap: dict[Word, Word] = {}
    overlap_next: dict[Word, int] = {}
    max_label: dict[Word, int] = {}
    for v in g.vertices:
        if v == root:
            continue
        arcs = g.out_arcs(v)
        if not arcs:
            raise ValueError(f"vertex {v} has no out-arc; graph is not analyzable")
        max_arc[v] = arcs[-1]
        max_label[v] = arcs[-1].label
        ov = _longest_overlap(v, root)
        overlap[v] = ov
        overlap_next[v] = root[len(ov)]
    floor = frozenset(v for v, ov in overlap.items() if not ov)
    restricted = frozenset(v for v in max_arc if max_label[v] < overlap_next[v])

    # Cycle scan of the functional subgraph (root has no exit, so paths
    # either reach the root or wind into a cycle).
    color: dict[Word, int] = {}   # 1 in progress, 2 done
    cycles: list[tuple[Word, ...]] = []
    for v in g.vertices:
        if color.get(v) == 2 or v == root:
            continue
        path: list[Word] = []
        pos: dict[Word, int] = {}
        cur: Word | None = v
        while cur is not None and color.get(cur) is None and cur != root:
            color[cur] = 1
            pos[cur] = len(path)
            path.append(cur)
            cur = max_arc[cur].head
        if cur is not None and color.get(cur) == 1 and cur in pos:
            cyc = path[pos[cur] :]
            k = cyc.index(min(cyc))
            cycles.append(tuple(cyc[k:] + cyc[:k]))
        for w in path:
            color[w] = 2
    cycles.sort()
    return MaxArcAnalysis(
        graph=g,
        root=root,
        max_arc=max_arc,
        overlap=overlap,
        overlap_next=overlap_next,
        max_label=max_label,
        floor=floor,
        restricted=restricted,
        cycles=tuple(cycles),
        is_tree=not cycles,
    )


def classify_vertex(t: MaxArcAnalysis, v: Word) -> VertexClass:
    if v == t.root:
        raise ValueError("the root has no classification")
    if v not in t.max_arc:
        raise ValueError(f"vertex {v} is not in the graph")
    return VertexClass(
        overlap=t.overlap[v],
        overlap_next=t.overlap_next[v],
        max_label=t.max_label[v],
        is_floor=v in t.floor,
        is_restricted=v in t.restricted,
    )


# ---------------------------------------------------------------------------
# Lemma-level verifiers. Each replays one structural fact over the whole
# graph and reports violations; all must come back empty.

def verify_label_monotonicity(t: MaxArcAnalysis) -> VerificationReport:
    """Along any max-arc walk of span+2 steps, the first label never
    exceeds the label taken span+1 steps later."""
    g = t.graph
    length = g.span + 2
    checks = 0
    violations = []
    for v in g.vertices:
        labels = []
        cur = v
        for _ in range(length):
            arc = t.max_arc.get(cur)
            if arc is None:
                break
            labels.append(arc.label)
            cur = arc.head
        if len(labels) < length:
            continue
        checks += 1
        if labels[0] > labels[-1]:
            violations.append(
                f"walk from {v}: first label {labels[0]} > label {labels[-1]} "
                f"at step {length}"
            )
    return VerificationReport("label-monotonicity", checks, tuple(violations))


def _cycle_loop_label(t: MaxArcAnalysis, start: Word, length: int) -> Word:
    labels = []
    cur = start
    for _ in range(length):
        arc = t.max_arc[cur]
        labels.append(arc.label)
        cur = arc.head
    return tuple(labels)


def verify_cycle_structure(t: MaxArcAnalysis) -> VerificationReport:
    """Cycle facts: length divides span+1; for every cycle vertex u the
    word u plus its max label equals the loop label read from u's
    successor, repeated; restricted and floor counts agree per cycle."""
    n = t.graph.span
    checks = 0
    violations = []
    for cyc in t.cycles:
        checks += 1
        if (n + 1) % len(cyc) != 0:
            violations.append(f"cycle {cyc}: length {len(cyc)} does not divide {n + 1}")
            continue
        reps = (n + 1) // len(cyc)
        for u in cyc:
            succ = t.max_arc[u].head
            expected = _cycle_loop_label(t, succ, len(cyc)) * reps
            if u + (t.max_label[u],) != expected:
                violations.append(
                    f"cycle {cyc}: vertex {u} with label {t.max_label[u]} "
                    f"is not the repeated loop label {expected}"
                )
        n_restricted = sum(1 for u in cyc if u in t.restricted)
        n_floor = sum(1 for u in cyc if u in t.floor)
        if n_restricted != n_floor:
            violations.append(
                f"cycle {cyc}: {n_restricted} restricted but {n_floor} floor vertices"
            )
    return VerificationReport("cycle-structure", checks, tuple(violations))


def verify_overlap_bounds(t: MaxArcAnalysis) -> VerificationReport:
    """Arc labels never exceed overlap_next of the tail; strictly smaller
    labels land on floor vertices, equal labels extend the overlap."""
    g = t.graph
    root = t.root
    checks = 0
    violations = []
    for a in g.arcs:
        if a.tail == root:
            continue
        checks += 1
        cap = t.overlap_next[a.tail]
        if a.label > cap:
            violations.append(f"arc {a}: label exceeds bound {cap}")
            continue
        if a.head == root:
            continue
        if a.label < cap and t.overlap[a.head] != ():
            violations.append(f"arc {a}: low label but head overlap is nonempty")
        if a.label == cap and t.overlap[a.head] != t.overlap[a.tail] + (a.label,):
            violations.append(f"arc {a}: head overlap does not extend tail overlap")
    return VerificationReport("overlap-bounds", checks, tuple(violations))


def verify_floor_paths(t: MaxArcAnalysis) -> VerificationReport:
    """Max-arc paths from a floor vertex through unrestricted interior
    vertices spell exactly the overlap of their endpoint."""
    checks = 0
    violations = []
    for f in sorted(t.floor):
        labels: list[int] = []
        visited = {f}
        cur = f
        while True:
            if cur != t.root and tuple(labels) != t.overlap[cur]:
                violations.append(
                    f"path from {f} to {cur}: label {tuple(labels)} != overlap "
                    f"{t.overlap[cur]}"
                )
            checks += 1
            # The endpoint becomes an interior vertex on the next step, so
            # stop extending at the root or at a restricted vertex.
            if cur == t.root or cur in t.restricted:
                break
            arc = t.max_arc[cur]
            labels.append(arc.label)
            cur = arc.head
            if cur in visited:
                break
            visited.add(cur)
    return VerificationReport("floor-paths", checks, tuple(violations))


def check_cycle_label_blocks(t: MaxArcAnalysis, cycle: tuple[Word, ...]) -> VerificationReport:
    """Restricted vertices of a cycle are spelled by each other's data:
    going around from a restricted vertex, the overlap/max-label pairs of
    the following restricted vertices concatenate to one loop label, and
    its repetitions reproduce the vertex itself."""
    if cycle not in t.cycles:
        raise ValueError("not a cycle of this analysis")
    n = t.graph.span
    rest = [u for u in cycle if u in t.restricted]
    if not rest:
        return VerificationReport(
            "cycle-label-blocks", 1, (f"cycle {cycle} has no restricted vertex",)
        )
    reps = (n + 1) // len(cycle)
    k = len(rest)
    checks = 0
    violations = []
    for i, u in enumerate(rest):
        checks += 1
        loop: list[int] = []
        for j in range(1, k + 1):
            w = rest[(i + j) % k]
            loop.extend(t.overlap[w] + (t.max_label[w],))
        if len(loop) != len(cycle):
            violations.append(
                f"cycle {cycle}: blocks after {u} spell {len(loop)} letters, "
                f"cycle has {len(cycle)}"
            )
            continue
        if tuple(loop) * reps != u + (t.max_label[u],):
            violations.append(f"cycle {cycle}: block spelling mismatch at {u}")
    return VerificationReport("cycle-label-blocks", checks, tuple(violations))


def verify_exhaustion_order(g: DeBruijnGraph, avoid: AvoidSet) -> VerificationReport:
    """When the avoiding walk exhausts a vertex v that is not on a reserved
    cycle, everything that drains into v through reserved arcs is already
    exhausted."""
    walk = walk_avoiding(g, avoid)
    order = exhaustion_order(walk, g)

    on_cycle: set[Word] = set()
    state: dict[Word, int] = {}
    for v in g.vertices:
        if v in state:
            continue
        path: list[Word] = []
        pos: dict[Word, int] = {}
        cur: Word | None = v
        while cur is not None and cur not in state and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            arc = avoid.arc_by_vertex.get(cur)
            cur = None if arc is None else arc.head
        if cur is not None and cur in pos:
            on_cycle.update(path[pos[cur] :])
        for w in path:
            state[w] = 2

    checks = 0
    violations = []
    for v in g.vertices:
        if v in on_cycle or v not in order:
            continue
        # Subtree draining into v: vertices whose reserved-arc path hits v.
        for u in g.vertices:
            if u == v:
                continue
            cur2: Word | None = u
            hops = 0
            while cur2 is not None and cur2 != v and hops <= len(g.vertices):
                arc = avoid.arc_by_vertex.get(cur2)
                cur2 = None if arc is None else arc.head
                hops += 1
            if cur2 != v:
                continue
            checks += 1
            if u not in order or order[u] > order[v]:
                violations.append(
                    f"{v} exhausted at {order[v]} but upstream {u} at "
                    f"{order.get(u)}"
                )
    return VerificationReport("exhaustion-order", checks, tuple(violations))


# ---------------------------------------------------------------------------
# Independent criterion: obstruction words.

def _split_blocks(
    w: Word, m: Word, words: frozenset[Word], size: int
) -> tuple[tuple[Word, int], ...] | None:
    """First block decomposition of w (in shortest-first order) passing all
    three conditions, or None."""
    n = len(m)

    def conditions_3(blocks: list[tuple[Word, int]]) -> bool:
        flat = [h + (b,) for h, b in blocks]
        for i, (_, b) in enumerate(blocks):
            rotated: Word = ()
            for chunk in flat[i + 1 :] + flat[: i + 1]:
                rotated += chunk
            for b2 in range(b + 1, size):
                if rotated[:-1] + (b2,) in words:
                    return False
        return True

    def rec(rest: Word, acc: list[tuple[Word, int]]):
        if not rest:
            return list(acc) if conditions_3(acc) else None
        for length in range(1, min(n, len(rest)) + 1):
            h, b = rest[: length - 1], rest[length - 1]
            if h != m[: length - 1]:
                continue
            if b >= m[length - 1]:
                continue
            acc.append((h, b))
            found = rec(rest[length:], acc)
            acc.pop()
            if found is not None:
                return found
        return None

    found = rec(w, [])
    return None if found is None else tuple(found)


def enumerate_obstructions(g: DeBruijnGraph) -> tuple[Obstruction, ...]:
    """All arc words admitting an obstruction decomposition on some
    rotation, with one witness each.

    Brute force over rotations and block boundaries, independent of the
    max-arc subgraph; results are memoized per rotation class since the
    search space of a word depends only on its rotations.
    """
    m = g.max_vertex
    words = frozenset(a.tail + (a.label,) for a in g.arcs)
    size = g.alphabet.size
    cache: dict[Word, tuple[Word, tuple[tuple[Word, int], ...]] | None] = {}
    out: list[Obstruction] = []
    for w in sorted(words):
        rots = [w[r:] + w[:r] for r in range(len(w))]
        key = min(rots)
        if key not in cache:
            hit = None
            for cand in sorted(set(rots)):
                blocks = _split_blocks(cand, m, words, size)
                if blocks is not None:
                    hit = (cand, blocks)
                    break
            cache[key] = hit
        hit = cache[key]
        if hit is not None:
            rotated, blocks = hit
            out.append(Obstruction(word=w, rotation=rots.index(rotated), blocks=blocks))
    return tuple(out)


def decide_minimal_is_eulerian(g: DeBruijnGraph) -> Decision:
    """Decide whether the greedy minimal walk covers the graph, by the two
    independent criteria; a disagreement is raised, never masked."""
    t = analyze_max_arcs(g)
    obstructions = enumerate_obstructions(g)
    via_tree = t.is_tree
    via_obstructions = not obstructions
    if via_tree != via_obstructions:
        raise TheoremViolationError(
            f"criteria disagree: tree={via_tree} obstructions={not via_obstructions} "
            f"(cycles={t.cycles}, words={[o.word for o in obstructions]})"
        )
    return Decision(
        answer=via_tree,
        via_tree=via_tree,
        via_obstructions=via_obstructions,
        cycles=t.cycles,
        obstructions=obstructions,
    )


def verify_greedy_decision(g: DeBruijnGraph) -> VerificationReport:
    """Three-way agreement: subgraph cycles, obstruction words, and the
    greedy walk itself, plus the cross-identifications between cycles and
    obstruction words."""
    checks = 1
    violations = []
    try:
        decision = decide_minimal_is_eulerian(g)
    except TheoremViolationError as exc:
        return VerificationReport("greedy-decision", 1, (str(exc),))
    walk = minimal_walk(g)
    if walk.is_eulerian(g) != decision.answer:
        violations.append(
            f"decision {decision.answer} but greedy walk eulerian={walk.is_eulerian(g)}"
        )
    t = analyze_max_arcs(g)
    obstruction_words = {o.word for o in decision.obstructions}
    for cyc in t.cycles:
        reps = (g.span + 1) // len(cyc) if (g.span + 1) % len(cyc) == 0 else None
        for u in cyc:
            checks += 1
            if reps is None or u + (t.max_label[u],) not in obstruction_words:
                violations.append(f"cycle word for {u} missing from obstructions")
    tree_arcs = set(t.max_arc.values())
    for o in decision.obstructions:
        w = o.word
        for r in range(len(w)):
            rot = w[r:] + w[:r]
            checks += 1
            arc = Arc(rot[:-1], rot[-1], rot[1:])
            if arc not in g or arc not in tree_arcs:
                violations.append(
                    f"obstruction {w}: rotation {rot} is not a max-arc of the graph"
                )
    return VerificationReport("greedy-decision", checks, tuple(violations))


def analysis_to_json(g: DeBruijnGraph) -> dict:
    """Full analysis record: per-vertex table, cycles, obstructions and the
    decision with both criteria."""
    t = analyze_max_arcs(g)
    decision = decide_minimal_is_eulerian(g)
    alpha = g.alphabet
    return {
        "root": alpha.text(t.root),
        "vertices": [
            {
                "label": alpha.text(v),
                "overlap": alpha.text(t.overlap[v]),
                "overlapNext": alpha.symbols[t.overlap_next[v]],
                "maxLabel": alpha.symbols[t.max_label[v]],
                "floor": v in t.floor,
                "restricted": v in t.restricted,
            }
            for v in g.vertices
            if v != t.root
        ],
        "cycles": [
            {
                "vertices": [alpha.text(v) for v in cyc],
                "label": alpha.text(_cycle_loop_label(t, cyc[0], len(cyc))),
            }
            for cyc in t.cycles
        ],
        "obstructions": [
            {
                "word": alpha.text(o.word),
                "rotation": o.rotation,
                "blocks": [
                    {"prefix": alpha.text(h), "letter": alpha.symbols[b]}
                    for h, b in o.blocks
                ],
            }
            for o in decision.obstructions
        ],
        "decision": {
            "answer": decision.answer,
            "viaTree": decision.via_tree,
            "viaObstructions": decision.via_obstructions,
        },
    }
