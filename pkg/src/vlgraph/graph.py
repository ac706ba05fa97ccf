"""Voice-leading graphs under the single-step parsimonious edge rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from .pitch import PitchClassSet, Triad, extract_triads

__all__ = [
    "VoiceLeadingGraph",
    "are_scale_neighbours",
    "is_parsimonious_pair",
    "build_graph",
    "adjacency_matrix",
    "walk_matrix",
    "count_walks",
    "degree",
]


@dataclass(frozen=True)
class VoiceLeadingGraph:
    """Simple undirected graph whose vertices are the triads of a scale.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j`` into ``vertices``.
    """

    scale: PitchClassSet
    vertices: tuple[Triad, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        n = len(self.vertices)
        for i, j in self.edges:
            if not 0 <= i < j < n:
                raise ValueError(f"bad edge {(i, j)} for {n} vertices")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        """Sorted adjacency lists, indexed by vertex."""
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbours]

    def index_of(self, triad: Triad) -> int:
        return self.vertices.index(triad)

    def names(self, unicode: bool = False) -> list[str]:
        return [t.name(unicode=unicode) for t in self.vertices]

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.order:
            raise IndexError(f"vertex index {i} out of range for order {self.order}")


def are_scale_neighbours(scale: PitchClassSet, a: int, b: int) -> bool:
    """True if ``a`` and ``b`` are consecutive in the cyclic order of ``scale``.

    The largest member wraps around to the smallest, so in C major 11 and 0
    are neighbours.
    """
    m = len(scale)
    if a == b or m < 2:
        return False
    gap = (scale.index(a) - scale.index(b)) % m
    return gap == 1 or gap == m - 1


def is_parsimonious_pair(scale: PitchClassSet, t1: Triad, t2: Triad) -> bool:
    """Single-step voice-leading test.

    The triads must share exactly two pitch classes, and the two remaining
    ones must be neighbours in the cyclic order of ``scale``.
    """
    for t in (t1, t2):
        if not t.pitches.issubset(scale):
            raise ValueError(f"{t!r} is not contained in scale {scale}")
    a, b = t1.pitches.bitmask, t2.pitches.bitmask
    if (a & b).bit_count() != 2:
        return False
    moved = a ^ b
    p, q = (i for i in range(12) if moved >> i & 1)
    return are_scale_neighbours(scale, p, q)


def build_graph(scale: PitchClassSet) -> VoiceLeadingGraph:
    """Voice-leading graph on all triads of ``scale``."""
    vertices = tuple(extract_triads(scale))
    edges = frozenset(
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if is_parsimonious_pair(scale, vertices[i], vertices[j])
    )
    return VoiceLeadingGraph(scale, vertices, edges)


def adjacency_matrix(graph: VoiceLeadingGraph) -> np.ndarray:
    """Symmetric 0/1 ``int64`` matrix in canonical vertex order."""
    a = np.zeros((graph.order, graph.order), dtype=np.int64)
    for i, j in graph.edges:
        a[i, j] = a[j, i] = 1
    return a


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


def walk_matrix(graph: VoiceLeadingGraph, k: int) -> list[list[int]]:
    """Exact ``A**k`` as nested Python ints, by repeated squaring.

    Python ints never overflow, so no width check is needed.
    """
    if k < 0:
        raise ValueError("walk length must be non-negative")
    n = graph.order
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = adjacency_matrix(graph).tolist()
    while k:
        if k & 1:
            result = _matmul(result, base)
        k >>= 1
        if k:
            base = _matmul(base, base)
    return result


def count_walks(graph: VoiceLeadingGraph, i: int, j: int, k: int) -> int:
    """Number of walks of length ``k`` from vertex ``i`` to vertex ``j``."""
    graph._check_index(i)
    graph._check_index(j)
    return walk_matrix(graph, k)[i][j]


def degree(graph: VoiceLeadingGraph, i: int) -> int:
    graph._check_index(i)
    return len(graph.neighbours[i])
