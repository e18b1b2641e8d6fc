"""The maximal vertex is not always the best place to start.

The greedy theory fixes the start at the maximal vertex. Searching every
start exhaustively shows that a circuit from elsewhere can be strictly
smaller, even on instances where the greedy walk succeeds.
"""

from debruijn_sft import (
    Language, build_graph, certify_minimal_walk, global_minimal_label,
    minimal_eulerian_label,
)

g = build_graph(Language.from_text("01", ("11",)), 2)
a = g.alphabet
print(f"Golden-mean graph at span 2: {len(g.arcs)} arcs, maximal vertex {a.text(g.max_vertex)}")
print(f"  minimal circuit from the maximal vertex: {a.text(minimal_eulerian_label(g, g.max_vertex))}")
best = global_minimal_label(g)
print(f"  minimal circuit over every start       : {a.text(best.label)} from {a.text(best.start)}")
print()
print("0001 beats 0010, so the global optimum starts at 01, not at 10.")
print()

print("Certification verdicts (greedy vs decision vs oracle):")
for forbidden, span, bound in [((), 3, 24), (("11",), 5, 24), (("01111",), 4, 26)]:
    g = build_graph(Language.from_text("01", forbidden), span)
    v = certify_minimal_walk(g, max_arcs=bound)
    name = ",".join(forbidden) if forbidden else "nothing"
    print(f"  forbidding {name}, span {span}: greedy eulerian={v.greedy_eulerian} "
          f"decision={v.decision} pass={v.passed}")
