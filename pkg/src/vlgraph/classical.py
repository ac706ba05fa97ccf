"""Distances, eccentricity, regularity, isomorphism, Hamiltonian and Eulerian structure."""

from __future__ import annotations

import enum
import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import VoiceLeadingGraph

__all__ = [
    "UNREACHABLE",
    "INFINITE",
    "bfs_distances",
    "geodesic_distances",
    "is_connected",
    "connected_components",
    "EccentricitySummary",
    "eccentricity_summary",
    "is_regular",
    "find_isomorphism",
    "find_subgraph_isomorphism",
    "HamiltonianResult",
    "hamiltonian_circuits",
    "EulerClass",
    "euler_classify",
    "NotEulerianError",
    "find_euler_trail",
]

UNREACHABLE = -1
INFINITE = math.inf


def bfs_distances(graph: VoiceLeadingGraph, source: int) -> list[int]:
    """Hop distances from ``source``; :data:`UNREACHABLE` where there is no path."""
    dist = [UNREACHABLE] * graph.order
    dist[source] = 0
    queue = deque([source])
    adj = graph.neighbours
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def geodesic_distances(graph: VoiceLeadingGraph) -> np.ndarray:
    """All-pairs shortest path lengths (BFS from every vertex).

    Disconnected pairs hold :data:`UNREACHABLE`.
    """
    out = np.full((graph.order, graph.order), UNREACHABLE, dtype=np.int64)
    for s in range(graph.order):
        out[s] = bfs_distances(graph, s)
    return out


def connected_components(graph: VoiceLeadingGraph) -> list[list[int]]:
    seen = [False] * graph.order
    comps = []
    for s in range(graph.order):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(graph, s)) if d != UNREACHABLE]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(graph: VoiceLeadingGraph) -> bool:
    """Connectivity; the empty graph counts as connected."""
    if graph.order == 0:
        return True
    return UNREACHABLE not in bfs_distances(graph, 0)


@dataclass(frozen=True)
class EccentricitySummary:
    """Eccentricity data for a graph.

    For a disconnected graph every eccentricity is :data:`INFINITE`, as are
    radius and diameter, and ``self_centred`` is ``None`` (not applicable).
    Empty graphs have no eccentricities and ``radius``/``diameter`` of ``None``.
    """

    eccentricities: tuple[float, ...]
    radius: Optional[float]
    diameter: Optional[float]
    central_vertices: tuple[int, ...]
    peripheral_vertices: tuple[int, ...]
    self_centred: Optional[bool]

    @property
    def connected(self) -> bool:
        return all(e != INFINITE for e in self.eccentricities)


def eccentricity_summary(graph: VoiceLeadingGraph) -> EccentricitySummary:
    n = graph.order
    if n == 0:
        return EccentricitySummary((), None, None, (), (), None)
    ecc: list[float] = []
    for s in range(n):
        row = bfs_distances(graph, s)
        ecc.append(INFINITE if UNREACHABLE in row else max(row))
    if INFINITE in ecc:
        return EccentricitySummary(tuple(ecc), INFINITE, INFINITE, (), (), None)
    radius, diameter = min(ecc), max(ecc)
    return EccentricitySummary(
        eccentricities=tuple(ecc),
        radius=radius,
        diameter=diameter,
        central_vertices=tuple(v for v, e in enumerate(ecc) if e == radius),
        peripheral_vertices=tuple(v for v, e in enumerate(ecc) if e == diameter),
        self_centred=radius == diameter,
    )


def is_regular(graph: VoiceLeadingGraph) -> tuple[bool, Optional[int]]:
    """``(True, d)`` if every vertex has degree ``d``, else ``(False, None)``.

    The empty graph is vacuously regular with degree ``None``.
    """
    degrees = set(graph.degrees())
    if len(degrees) > 1:
        return False, None
    return True, (degrees.pop() if degrees else None)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _refine_colours(adjs: list[tuple[tuple[int, ...], ...]]) -> list[list[int]]:
    """Joint colour refinement (1-WL) over several graphs.

    Colours are comparable across the graphs because the signature table is
    shared, which makes them a valid pruning invariant for isomorphism.
    """
    colours = [[len(a) for a in adj] for adj in adjs]
    n_classes = len({c for cs in colours for c in cs})
    while True:
        sigs = [
            [(cs[v], tuple(sorted(cs[w] for w in adj[v]))) for v in range(len(adj))]
            for adj, cs in zip(adjs, colours)
        ]
        table = {s: k for k, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colours = [[table[s] for s in ss] for ss in sigs]
        if len(table) == n_classes:
            return colours
        n_classes = len(table)


def _search_order(adj: tuple[tuple[int, ...], ...], colours: list[int]) -> list[int]:
    """Vertex order where each vertex after the first in a component has a placed neighbour."""
    freq = Counter(colours)
    n = len(adj)
    placed = [False] * n
    order: list[int] = []
    while len(order) < n:
        start = min(
            (v for v in range(n) if not placed[v]),
            key=lambda v: (freq[colours[v]], -len(adj[v]), v),
        )
        placed[start] = True
        order.append(start)
        frontier = [start]
        while frontier:
            # grow by the unplaced vertex with the most placed neighbours
            best = None
            best_key = None
            for v in range(n):
                if placed[v]:
                    continue
                links = sum(placed[w] for w in adj[v])
                if links == 0:
                    continue
                key = (-links, freq[colours[v]], -len(adj[v]), v)
                if best_key is None or key < best_key:
                    best, best_key = v, key
            if best is None:
                break
            placed[best] = True
            order.append(best)
    return order


def _backtrack_map(
    small: VoiceLeadingGraph,
    big: VoiceLeadingGraph,
    candidates: list[list[int]],
    order: list[int],
    induced: bool,
) -> Optional[dict[int, int]]:
    adj_s, adj_b = small.neighbours, big.neighbours
    mapping: dict[int, int] = {}
    used = [False] * big.order

    def consistent(v: int, w: int) -> bool:
        for u, x in mapping.items():
            if small.has_edge(u, v):
                if not big.has_edge(x, w):
                    return False
            elif induced and big.has_edge(x, w):
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        mapped_nbrs = [mapping[u] for u in adj_s[v] if u in mapping]
        if mapped_nbrs:
            pool = [w for w in adj_b[mapped_nbrs[0]] if w in candidates[v]]
        else:
            pool = candidates[v]
        for w in pool:
            if used[w] or not consistent(v, w):
                continue
            mapping[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return dict(mapping) if extend(0) else None


def _verify_map(
    small: VoiceLeadingGraph, big: VoiceLeadingGraph, mapping: dict[int, int], induced: bool
) -> bool:
    if len(set(mapping.values())) != len(mapping) or len(mapping) != small.order:
        return False
    image = {(min(mapping[i], mapping[j]), max(mapping[i], mapping[j])) for i, j in small.edges}
    if not image <= big.edges:
        return False
    if induced:
        inverse = {w: v for v, w in mapping.items()}
        for x, y in big.edges:
            if x in inverse and y in inverse and not small.has_edge(inverse[x], inverse[y]):
                return False
    return True


def find_isomorphism(g1: VoiceLeadingGraph, g2: VoiceLeadingGraph) -> Optional[dict[int, int]]:
    """Adjacency-preserving bijection from ``g1``'s vertices onto ``g2``'s, or ``None``.

    Backtracking over candidates restricted by refined vertex colours
    (degree, then multiset of neighbour colours, iterated to a fixed point).
    The map is checked edge by edge in both directions before it is returned.
    """
    if g1.order != g2.order or g1.size != g2.size:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = _refine_colours([g1.neighbours, g2.neighbours])
    if Counter(c1) != Counter(c2):
        return None
    by_colour: dict[int, list[int]] = {}
    for w, c in enumerate(c2):
        by_colour.setdefault(c, []).append(w)
    candidates = [by_colour.get(c, []) for c in c1]
    mapping = _backtrack_map(g1, g2, candidates, _search_order(g1.neighbours, c1), True)
    if mapping is None:
        return None
    if not _verify_map(g1, g2, mapping, induced=True):
        raise AssertionError("isomorphism search returned an invalid map")
    return mapping


def find_subgraph_isomorphism(
    small: VoiceLeadingGraph, big: VoiceLeadingGraph
) -> Optional[dict[int, int]]:
    """Injective map sending every edge of ``small`` to an edge of ``big``.

    The embedded subgraph need not be induced. Returns ``None`` if no such
    map exists.
    """
    if small.order > big.order or small.size > big.size:
        return None
    deg_s, deg_b = small.degrees(), big.degrees()
    candidates = [[w for w in range(big.order) if deg_b[w] >= deg_s[v]] for v in range(small.order)]
    order = _search_order(small.neighbours, deg_s)
    mapping = _backtrack_map(small, big, candidates, order, induced=False)
    if mapping is not None and not _verify_map(small, big, mapping, induced=False):
        raise AssertionError("subgraph search returned an invalid map")
    return mapping


# ---------------------------------------------------------------------------
# Hamiltonian circuits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HamiltonianResult:
    """Hamiltonian circuit counts.

    ``undirected_count`` counts cycles up to rotation and reflection;
    ``directed_count`` counts both traversal directions from vertex 0. When
    ``capped`` is true the enumeration stopped early and the counts are lower
    bounds.
    """

    undirected_count: int
    directed_count: int
    witnesses: tuple[tuple[int, ...], ...]
    capped: bool = False


def hamiltonian_circuits(
    graph: VoiceLeadingGraph,
    max_witnesses: int = 20,
    max_circuits: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> HamiltonianResult:
    """Enumerate Hamiltonian circuits by backtracking from vertex 0.

    Witnesses are closed vertex sequences (first vertex repeated at the end),
    one per undirected circuit, oriented so the second vertex is smaller than
    the penultimate. ``max_circuits`` caps the number of directed circuits
    found and ``max_steps`` the number of search-node expansions.
    """
    n = graph.order
    if n < 3:
        return HamiltonianResult(0, 0, ())
    adj = graph.neighbours
    visited = [False] * n
    path = [0]
    visited[0] = True
    directed = 0
    steps = 0
    capped = False
    witnesses: list[tuple[int, ...]] = []

    def unreachable_left() -> bool:
        # prune: every unvisited vertex needs two usable neighbours
        # (unvisited ones, the path head, or vertex 0 closing the circuit)
        head = path[-1]
        for v in range(n):
            if visited[v]:
                continue
            free = sum(1 for w in adj[v] if not visited[w] or w == head or w == 0)
            if free < 2:
                return True
        return False

    def extend() -> bool:
        nonlocal directed, steps, capped
        steps += 1
        if max_steps is not None and steps > max_steps:
            capped = True
            return False
        head = path[-1]
        if len(path) == n:
            if graph.has_edge(head, 0):
                directed += 1
                if path[1] < path[-1] and len(witnesses) < max_witnesses:
                    witnesses.append(tuple(path) + (0,))
                if max_circuits is not None and directed >= max_circuits:
                    capped = True
                    return False
            return True
        if unreachable_left():
            return True
        for w in adj[head]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            keep_going = extend()
            path.pop()
            visited[w] = False
            if not keep_going:
                return False
        return True

    extend()
    return HamiltonianResult(directed // 2, directed, tuple(witnesses), capped)


# ---------------------------------------------------------------------------
# Eulerian trails
# ---------------------------------------------------------------------------


class EulerClass(enum.Enum):
    EULERIAN = "Eulerian"
    SEMI_EULERIAN = "SemiEulerian"
    NEITHER = "Neither"
    EMPTY = "Empty"


class NotEulerianError(ValueError):
    """Raised when an Euler trail is requested from a graph that has none."""


def _edges_connected(graph: VoiceLeadingGraph) -> bool:
    touched = [v for v in range(graph.order) if graph.neighbours[v]]
    if not touched:
        return True
    dist = bfs_distances(graph, touched[0])
    return all(dist[v] != UNREACHABLE for v in touched)


def euler_classify(graph: VoiceLeadingGraph) -> EulerClass:
    """Classify by degree parity; isolated vertices are ignored."""
    if graph.size == 0:
        return EulerClass.EMPTY
    if not _edges_connected(graph):
        return EulerClass.NEITHER
    odd = sum(d % 2 for d in graph.degrees())
    if odd == 0:
        return EulerClass.EULERIAN
    if odd == 2:
        return EulerClass.SEMI_EULERIAN
    return EulerClass.NEITHER


def find_euler_trail(graph: VoiceLeadingGraph) -> list[int]:
    """Euler trail by splicing cycles (Hierholzer).

    Closed for Eulerian graphs (starting at the lowest-index non-isolated
    vertex), open for semi-Eulerian ones (starting at the lowest-index odd
    vertex). Unused edges are always taken lowest index first.
    """
    kind = euler_classify(graph)
    if kind not in (EulerClass.EULERIAN, EulerClass.SEMI_EULERIAN):
        raise NotEulerianError(f"graph has no Euler trail (class {kind.value})")
    degrees = graph.degrees()
    if kind is EulerClass.SEMI_EULERIAN:
        start = next(v for v, d in enumerate(degrees) if d % 2)
    else:
        start = next(v for v, d in enumerate(degrees) if d)
    remaining = [list(a) for a in graph.neighbours]
    pointer = [0] * graph.order
    used: set[tuple[int, int]] = set()
    stack = [start]
    trail: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = remaining[v]
        while pointer[v] < len(nbrs) and (min(v, nbrs[pointer[v]]), max(v, nbrs[pointer[v]])) in used:
            pointer[v] += 1
        if pointer[v] == len(nbrs):
            trail.append(stack.pop())
        else:
            w = nbrs[pointer[v]]
            used.add((min(v, w), max(v, w)))
            stack.append(w)
    trail.reverse()
    return trail
