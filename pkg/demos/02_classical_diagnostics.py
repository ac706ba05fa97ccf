"""Eccentricity, regularity, isomorphism and traversability of a few scales."""

from vlgraph import (
    build_graph,
    eccentricity_summary,
    euler_classify,
    find_euler_trail,
    find_isomorphism,
    find_subgraph_isomorphism,
    hamiltonian_circuits,
    is_regular,
    parse_scale,
)

for name in ["major", "harmonic-minor", "hexatonic", "octatonic", "mixolydian-augmented", "enigmatic-minor"]:
    g = build_graph(parse_scale(name))
    ecc = eccentricity_summary(g)
    print(f"{name:22s} n={g.order:2d} |E|={g.size:2d} regular={is_regular(g)[0]!s:5s} "
          f"r={ecc.radius} d={ecc.diameter} self-centred={ecc.self_centred} euler={euler_classify(g).value}")

# --- Hamiltonian circuits on the cube ---
cube = build_graph(parse_scale("hexatonic"))
ham = hamiltonian_circuits(cube)
print("cube circuits:", ham.undirected_count, "undirected,", ham.directed_count, "directed")
names = cube.names()
print("one of them:", " -> ".join(names[v] for v in ham.witnesses[0]))

# --- An Euler circuit through the octatonic graph ---
octatonic = build_graph(parse_scale("octatonic"))
trail = find_euler_trail(octatonic)
print("octatonic Euler circuit:", " ".join(octatonic.names()[v] for v in trail))

# --- C major plus one black note ---
plus = {k: build_graph(parse_scale(s)) for k, s in {
    "C#": "0,1,2,4,5,7,9,11", "D#": "0,2,3,4,5,7,9,11", "F#": "0,2,4,5,6,7,9,11",
    "G#": "0,2,4,5,7,8,9,11", "A#": "0,2,4,5,7,9,10,11"}.items()}
for k in ["D#", "F#", "A#"]:
    print(f"C# ~ {k}:", find_isomorphism(plus["C#"], plus[k]) is not None)
print("F# ~ G#:", find_isomorphism(plus["F#"], plus["G#"]) is not None)
print("F# embeds in G#:", find_subgraph_isomorphism(plus["F#"], plus["G#"]) is not None)
