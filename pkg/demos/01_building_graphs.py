"""Triads of a scale and the single-step voice-leading graph between them."""

from vlgraph import adjacency_matrix, build_graph, count_walks, parse_scale
from vlgraph.export import graph_table, to_dot

# --- C major: seven triads on one cycle ---
major = build_graph(parse_scale("major"))
print(graph_table(major))

# Every triad has two neighbours, so the adjacency rows all sum to 2.
print(adjacency_matrix(major))

# Closed progressions of seven chords from C back to C: once round each way.
print("walks C -> C of length 7:", count_walks(major, 0, 0, 7))

# --- Hexatonic scale: eight triads on a cube ---
hexatonic = build_graph(parse_scale("hexatonic"))
print(graph_table(hexatonic, unicode=True))

# --- Whole-tone: two augmented triads, nothing joins them ---
print(graph_table(build_graph(parse_scale("0,2,4,6,8,10"))))

# DOT text can be piped to Graphviz (`dot -Tpng`).
print(to_dot(build_graph(parse_scale("harmonic-minor"))))
