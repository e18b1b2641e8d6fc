"""De Bruijn graph of a given span, restricted to its largest strongly
connected component.

Vertices are length-n words, arcs come one-for-one from the circular words
of length n+1: the word w yields the arc w[:n] -> w[1:] labeled w[n]. All
orderings (vertex list, arc list, per-vertex out-arcs) are deterministic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .errors import AmbiguousComponentError, EmptyGraphError
from .language import Language, Alphabet, Word, enumerate_words, is_circular_word
from .scc import strongly_connected_components


@dataclass(frozen=True)
class Arc:
    tail: Word
    label: int
    head: Word


@dataclass(frozen=True, eq=False)
class DeBruijnGraph:
    span: int
    alphabet: Alphabet
    language: Language | None
    vertices: tuple[Word, ...]           # lexicographically sorted
    arcs: tuple[Arc, ...]                # sorted by (tail, label)
    out: dict[Word, tuple[Arc, ...]]     # per vertex, ascending label
    max_vertex: Word

    def out_arcs(self, v: Word) -> tuple[Arc, ...]:
        return self.out.get(v, ())

    def __post_init__(self) -> None:
        object.__setattr__(self, "_arc_set", frozenset(self.arcs))

    def __contains__(self, arc: Arc) -> bool:
        return arc in self._arc_set  # type: ignore[attr-defined]


def graph_from_arcs(
    span: int, alphabet: Alphabet, arcs: list[Arc] | tuple[Arc, ...],
    language: Language | None = None,
) -> DeBruijnGraph:
    """Assemble a graph directly from arcs, without the SCC restriction.

    Useful for hand-built instances; out-arcs of one vertex must carry
    distinct labels so label-greedy choices are unambiguous.
    """
    if not arcs:
        raise EmptyGraphError("no arcs")
    ordered = tuple(sorted(arcs, key=lambda a: (a.tail, a.label)))
    verts: set[Word] = set()
    for a in ordered:
        verts.update((a.tail, a.head))
    out: dict[Word, list[Arc]] = {v: [] for v in sorted(verts)}
    for a in ordered:
        out[a.tail].append(a)
    for v, lst in out.items():
        labels = [a.label for a in lst]
        if len(set(labels)) != len(labels):
            raise ValueError(f"vertex {v} has two out-arcs with the same label")
    vertices = tuple(sorted(verts))
    return DeBruijnGraph(
        span=span,
        alphabet=alphabet,
        language=language,
        vertices=vertices,
        arcs=ordered,
        out={v: tuple(lst) for v, lst in out.items()},
        max_vertex=vertices[-1],
    )


def build_graph(lang: Language, n: int) -> DeBruijnGraph:
    """Build the span-n graph of the language.

    Raises EmptyGraphError when no component holds an arc and
    AmbiguousComponentError when two components tie for the maximal arc
    count (the construction is only well defined with a unique winner).
    """
    if n < 1:
        raise ValueError("span must be >= 1")
    if n + 1 < lang.max_forbidden_len:
        warnings.warn(
            f"span {n} is shorter than the longest forbidden word minus one; "
            "arcs cannot see every constraint", stacklevel=2,
        )
    words = enumerate_words(lang, n + 1)
    if not words:
        raise EmptyGraphError(f"no words of length {n + 1}")
    raw = [Arc(w[:n], w[n], w[1:]) for w in words]
    succ: dict[Word, list[Word]] = {}
    verts: set[Word] = set()
    for a in raw:
        verts.update((a.tail, a.head))
        succ.setdefault(a.tail, []).append(a.head)
    comps = strongly_connected_components(sorted(verts), lambda v: succ.get(v, ()))
    comp_id = {v: i for i, comp in enumerate(comps) for v in comp}
    arc_count = [0] * len(comps)
    for a in raw:
        if comp_id[a.tail] == comp_id[a.head]:
            arc_count[comp_id[a.tail]] += 1
    best = max(arc_count)
    if best == 0:
        raise EmptyGraphError("every arc crosses between components")
    winners = [i for i, c in enumerate(arc_count) if c == best]
    if len(winners) > 1:
        raise AmbiguousComponentError(
            f"{len(winners)} strongly connected components tie at {best} arcs"
        )
    keep = winners[0]
    arcs = [a for a in raw if comp_id[a.tail] == keep and comp_id[a.head] == keep]
    return graph_from_arcs(n, lang.alphabet, arcs, language=lang)


def arc_to_word(g: DeBruijnGraph, arc: Arc) -> Word:
    """The length-(n+1) word carried by an arc of g."""
    if arc not in g:
        raise ValueError(f"arc {arc} does not belong to this graph")
    return arc.tail + (arc.label,)


def word_to_arc(g: DeBruijnGraph, w: Word) -> Arc:
    """Inverse of arc_to_word."""
    if len(w) != g.span + 1:
        raise ValueError(f"expected a word of length {g.span + 1}, got {len(w)}")
    if g.language is not None and not is_circular_word(g.language, w):
        raise ValueError(f"word {w} is not in the language")
    tail = w[: g.span]
    if tail not in g.out:
        raise ValueError(f"prefix vertex {tail} is not in the component")
    for a in g.out[tail]:
        if a.label == w[g.span]:
            return a
    raise ValueError(f"no arc realizes word {w} inside the component")


def walk_label_target(g: DeBruijnGraph, start: Word, w: Word) -> Word:
    """Endpoint of the walk with label w from start (the length-n suffix of
    start followed by w)."""
    if start not in g.out:
        raise ValueError(f"vertex {start} is not in the graph")
    cur = start
    for s in w:
        nxt = next((a for a in g.out_arcs(cur) if a.label == s), None)
        if nxt is None:
            raise ValueError(f"no walk labeled {w} from {start}: stuck at {cur}")
        cur = nxt.head
    return cur


def export_dot(g: DeBruijnGraph, highlight: Iterable[Arc] = ()) -> str:
    """Graphviz DOT text; arcs in `highlight` are drawn bold."""
    marked = set(highlight)
    lines = [f"digraph span{g.span} {{"]
    for v in g.vertices:
        lines.append(f'  "{g.alphabet.text(v)}";')
    for a in g.arcs:
        attrs = f'label="{g.alphabet.symbols[a.label]}"'
        if a in marked:
            attrs += ", style=bold"
        lines.append(f'  "{g.alphabet.text(a.tail)}" -> "{g.alphabet.text(a.head)}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: DeBruijnGraph) -> dict:
    return {
        "span": g.span,
        "alphabet": list(g.alphabet.symbols),
        "vertices": [g.alphabet.text(v) for v in g.vertices],
        "arcs": [
            {
                "tail": g.alphabet.text(a.tail),
                "label": g.alphabet.symbols[a.label],
                "head": g.alphabet.text(a.head),
            }
            for a in g.arcs
        ],
    }


def graph_from_json(data: dict) -> DeBruijnGraph:
    alphabet = Alphabet(tuple(data["alphabet"]))
    arcs = [
        Arc(alphabet.word(d["tail"]), alphabet.rank(d["label"]), alphabet.word(d["head"]))
        for d in data["arcs"]
    ]
    return graph_from_arcs(int(data["span"]), alphabet, arcs)
