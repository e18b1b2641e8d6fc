"""Full sequences from Eulerian circuits.

A closed walk using every arc exactly once spells a cyclic sequence that
contains every word of the next span exactly once. Cycle splicing always
finds one; the greedy minimal walk only sometimes does.
"""

from debruijn_sft import Language, build_graph, enumerate_words, eulerian_cycle, minimal_walk

for forbidden, span in [((), 3), (("11",), 5)]:
    lang = Language.from_text("01", forbidden)
    g = build_graph(lang, span)
    a = g.alphabet
    name = "11" if forbidden else "nothing"
    print(f"Binary language forbidding {name}, span {span}:")

    walk = eulerian_cycle(g, g.max_vertex)
    label = a.text(walk.label)
    print(f"  spliced circuit label : {label}")

    width = span + 1
    doubled = label + label
    windows = sorted(doubled[i : i + width] for i in range(len(label)))
    words = sorted(a.text(w) for w in enumerate_words(lang, width))
    print(f"  cyclic windows == words of length {width}: {windows == words}")

    greedy = minimal_walk(g)
    print(f"  greedy walk from {a.text(g.max_vertex)}: label {a.text(greedy.label)}")
    print(f"  greedy covers everything: {greedy.is_eulerian(g)}")
    print()

print("The greedy walk is letter-by-letter minimal among walks from the")
print("maximal vertex, so when it does close into a full circuit, that")
print("circuit is the smallest possible sequence from there.")
