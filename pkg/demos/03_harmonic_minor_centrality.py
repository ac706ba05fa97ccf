"""Centrality and communicability for the triads of C harmonic minor."""

import numpy as np

from vlgraph import adjacency_matrix, build_graph, centrality_report, communicability, parse_scale
from vlgraph.export import centrality_table

g = build_graph(parse_scale("harmonic-minor"))
report = centrality_report(g, alpha=0.35)
print(centrality_table(g, report))

# alpha must stay below 1/rho for the Katz series to converge.
print("largest admissible alpha:", 1 / report.spectral_radius)

# --- communicability: exp(A) ---
names = g.names()
c = communicability(adjacency_matrix(g))
print("C(c, f)  =", round(c[names.index("c"), names.index("f")], 3))
print("C(c, ab) =", round(c[names.index("c"), names.index("ab")], 3))
order = np.argsort(-c.diagonal())
print("self-communicability, high to low:")
for v in order:
    print(f"  {names[v]:4s} {c[v, v]:.3f}")
