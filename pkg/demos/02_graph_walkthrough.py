"""The span-n graph of a language.

Vertices are length-n words; every length-(n+1) word of the language
becomes one arc, labeled by its last letter. The graph is the largest
strongly connected component of that raw construction, and arcs stay in
bijection with the words they came from.
"""

from debruijn_sft import (
    Language, arc_to_word, build_graph, export_dot, walk_label_target, word_to_arc,
)

lang = Language.from_text("01", ("11",))
g = build_graph(lang, 5)
a = g.alphabet

print(f"Golden-mean graph at span 5: {len(g.vertices)} vertices, {len(g.arcs)} arcs")
print(f"maximal vertex m = {a.text(g.max_vertex)}")
print()

print("Adjacency (tail --label--> head):")
for arc in g.arcs:
    print(f"  {a.text(arc.tail)} --{a.symbols[arc.label]}--> {a.text(arc.head)}")
print()

print("Arc/word bijection:")
arc = word_to_arc(g, a.word("010101"))
print(f"  word 010101 -> arc {a.text(arc.tail)} --1--> {a.text(arc.head)}")
print(f"  back again  -> {a.text(arc_to_word(g, arc))}")
print()

print("A vertex label need not itself be a word of the language:")
print("  10001 wraps 1..1, yet it sits in the component as a through-station.")
print()

end = walk_label_target(g, a.word("00000"), a.word("10010"))
print(f"Following label 10010 from 00000 lands on {a.text(end)}")
print()

print("DOT export (paste into Graphviz):")
print(export_dot(g))
