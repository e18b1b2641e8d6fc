"""Deciding when the greedy walk succeeds, two independent ways.

Reserve at each non-maximal vertex its maximum-label out-arc: the greedy
walk is exactly the walk that spends reserved arcs last, so it covers the
graph precisely when the reserved arcs form a tree converging to the
maximal vertex. Independently, the same failure is certified by
obstruction words, found by brute-force block decomposition without ever
looking at the reserved subgraph. The decision procedure runs both and
refuses to answer if they ever disagreed.
"""

from debruijn_sft import (
    Language, analyze_max_arcs, build_graph, classify_vertex,
    decide_minimal_is_eulerian, minimal_walk,
)

for forbidden, span in [((), 4), (("11",), 5), (("01111",), 4)]:
    lang = Language.from_text("01", forbidden)
    g = build_graph(lang, span)
    a = g.alphabet
    t = analyze_max_arcs(g)
    decision = decide_minimal_is_eulerian(g)

    name = ",".join(forbidden) if forbidden else "nothing"
    print(f"Forbidding {name}, span {span}: maximal vertex {a.text(t.root)}")
    print(f"  reserved subgraph is a tree : {t.is_tree}")
    print(f"  obstruction words exist     : {not decision.via_obstructions}")
    print(f"  greedy walk covers the graph: {minimal_walk(g).is_eulerian(g)}")
    for cyc in t.cycles:
        print(f"  cycle: {' > '.join(a.text(v) for v in cyc)}")
    for o in decision.obstructions:
        blocks = " ".join(f"{a.text(h) or 'e'}|{a.symbols[b]}" for h, b in o.blocks)
        print(f"  obstruction {a.text(o.word)}: blocks {blocks}")
    print()

g = build_graph(Language.from_text("01", ("11",)), 5)
t = analyze_max_arcs(g)
a = g.alphabet
print("Per-vertex data on the failing golden-mean instance:")
print("  vertex  overlap  next  max  floor restricted")
for v in g.vertices:
    if v == t.root:
        continue
    c = classify_vertex(t, v)
    print(f"  {a.text(v)}   {a.text(c.overlap) or '-':>5} "
          f"{a.symbols[c.overlap_next]:>5} {a.symbols[c.max_label]:>4}"
          f" {str(c.is_floor):>6} {str(c.is_restricted):>6}")
