"""Degree, closeness, betweenness and Katz centrality, spectral radius, communicability.

Betweenness is accumulated with exact :class:`fractions.Fraction` arithmetic
so the Brandes pass and the explicit path enumeration can be compared
without tolerance.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .classical import UNREACHABLE, bfs_distances
from .graph import VoiceLeadingGraph, adjacency_matrix

__all__ = [
    "DisconnectedGraphError",
    "ConvergenceError",
    "degree_centrality",
    "closeness_centrality",
    "betweenness_raw",
    "betweenness_raw_by_paths",
    "betweenness_centrality",
    "spectral_radius",
    "KatzResult",
    "katz_centrality",
    "katz_series",
    "expm",
    "communicability",
    "CentralityReport",
    "centrality_report",
    "DEFAULT_ALPHA",
]

logger = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.35


class DisconnectedGraphError(ValueError):
    """The measure needs every pair of vertices to be connected."""


class ConvergenceError(RuntimeError):
    """An iterative method hit its iteration cap."""


def _require_connected(graph: VoiceLeadingGraph, rows: list[list[int]]) -> None:
    if any(UNREACHABLE in row for row in rows):
        raise DisconnectedGraphError("graph is disconnected")


def degree_centrality(graph: VoiceLeadingGraph) -> list[Fraction]:
    """``degree / (n - 1)`` for each vertex, as exact fractions."""
    n = graph.order
    if n < 2:
        raise ValueError("degree centrality needs at least two vertices")
    return [Fraction(d, n - 1) for d in graph.degrees()]


def closeness_centrality(graph: VoiceLeadingGraph) -> list[float]:
    """Reciprocal of the mean geodesic distance to all other vertices."""
    n = graph.order
    if n < 2:
        raise ValueError("closeness centrality needs at least two vertices")
    rows = [bfs_distances(graph, s) for s in range(n)]
    _require_connected(graph, rows)
    return [(n - 1) / sum(row) for row in rows]


def _single_source(graph: VoiceLeadingGraph, s: int) -> tuple[list[int], list[list[int]], list[int]]:
    """BFS order, shortest-path predecessors and path counts from ``s``."""
    n = graph.order
    dist = [UNREACHABLE] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[s], sigma[s] = 0, 1
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in graph.neighbours[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, preds, sigma


def betweenness_raw(graph: VoiceLeadingGraph) -> list[Fraction]:
    """Unnormalised betweenness over unordered pairs, by Brandes accumulation.

    Entry ``v`` is the sum over unordered ``{s, t}`` with ``v`` not an
    endpoint of ``sigma_st(v) / sigma_st``. Unreachable pairs contribute 0.
    """
    n = graph.order
    total = [Fraction(0)] * n
    for s in range(n):
        order, preds, sigma = _single_source(graph, s)
        delta = [Fraction(0)] * n
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
            if w != s:
                total[w] += delta[w]
    # every unordered pair was visited from both ends
    return [x / 2 for x in total]


def _all_shortest_paths(preds: list[list[int]], t: int) -> list[list[int]]:
    if not preds[t]:
        return [[t]]
    return [p + [t] for u in preds[t] for p in _all_shortest_paths(preds, u)]


def betweenness_raw_by_paths(graph: VoiceLeadingGraph) -> list[Fraction]:
    """Same quantity as :func:`betweenness_raw`, by listing every shortest path.

    Exponential in the worst case; meant as a cross-check on small graphs.
    """
    n = graph.order
    total = [Fraction(0)] * n
    for s in range(n):
        dist = bfs_distances(graph, s)
        preds: list[list[int]] = [[] for _ in range(n)]
        for w in range(n):
            if w != s and dist[w] != UNREACHABLE:
                preds[w] = [v for v in graph.neighbours[w] if dist[v] == dist[w] - 1]
        for t in range(s + 1, n):
            if dist[t] == UNREACHABLE:
                continue
            paths = _all_shortest_paths(preds, t)
            counts = [0] * n
            for path in paths:
                for v in path[1:-1]:
                    counts[v] += 1
            for v, c in enumerate(counts):
                if c:
                    total[v] += Fraction(c, len(paths))
    return total


def betweenness_centrality(graph: VoiceLeadingGraph) -> list[float]:
    """Betweenness normalised by the ``(n-1)(n-2)/2`` pairs that exclude the vertex."""
    n = graph.order
    if n < 3:
        raise ValueError("betweenness centrality needs at least three vertices")
    _require_connected(graph, [bfs_distances(graph, 0)])
    scale = Fraction(2, (n - 1) * (n - 2))
    return [float(x * scale) for x in betweenness_raw(graph)]


def spectral_radius(a: np.ndarray, tol: float = 1e-9, max_iter: int = 100_000) -> float:
    """Largest eigenvalue of a symmetric non-negative matrix by power iteration.

    Iterates on ``A + I`` so that a bipartite ``+rho/-rho`` pair cannot
    stall convergence. A zero matrix returns 0 with a logged warning.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 0 or not a.any():
        logger.warning("spectral radius of a zero matrix requested; returning 0")
        return 0.0
    shifted = a + np.eye(n)
    x = np.ones(n) / np.sqrt(n)
    estimate = float(x @ shifted @ x)
    for _ in range(max_iter):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        new = float(x @ shifted @ x)
        if abs(new - estimate) < tol and np.linalg.norm(shifted @ x - new * x) < np.sqrt(tol):
            return new - 1.0
        estimate = new
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


@dataclass(frozen=True)
class KatzResult:
    """Katz scores.

    ``raw`` is the walk sum from length 1 upwards and ``normalized`` is that
    vector scaled to unit Euclidean norm. ``inclusive_normalized`` also
    counts the length-0 walk (``(I - alpha A)^-1 1``) before scaling.
    """

    alpha: float
    raw: np.ndarray
    normalized: np.ndarray
    inclusive_normalized: np.ndarray


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    return v / norm if norm > 0 else v.copy()


def katz_centrality(a: np.ndarray, alpha: float = DEFAULT_ALPHA) -> KatzResult:
    """Katz centrality in closed form, solving ``(I - alpha A) x = 1``.

    ``alpha`` must satisfy ``0 <= alpha < 1/rho(A)``; otherwise the walk
    series diverges and :class:`ValueError` is raised.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    rho = spectral_radius(a) if a.any() else 0.0
    if alpha < 0 or (rho > 0 and alpha * rho >= 1):
        limit = f"1/{rho:.6g} = {1 / rho:.6g}" if rho > 0 else "infinity"
        raise ValueError(f"alpha must lie in [0, {limit}); got {alpha}")
    x = np.linalg.solve(np.eye(n) - alpha * a, np.ones(n))
    raw = x - 1.0
    return KatzResult(alpha, raw, _unit(raw), _unit(x))


def katz_series(a: np.ndarray, alpha: float, terms: Optional[int] = None, tol: float = 1e-13) -> np.ndarray:
    """Truncated walk series ``sum_{k=1..terms} alpha^k (A^k)^T 1``.

    With ``terms=None`` the length is chosen so the geometric tail bound
    ``sqrt(n) (alpha rho)^(K+1) / (1 - alpha rho)`` is below ``tol``.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if terms is None:
        ratio = alpha * spectral_radius(a) if a.any() else 0.0
        if ratio >= 1:
            raise ValueError("series diverges for alpha >= 1/rho")
        if ratio == 0:
            terms = 1
        else:
            bound = tol * (1 - ratio) / np.sqrt(n)
            terms = max(1, int(np.ceil(np.log(bound) / np.log(ratio))))
    term = np.ones(n)
    total = np.zeros(n)
    for _ in range(terms):
        term = alpha * (a.T @ term)
        total += term
    return total


def expm(a: np.ndarray, tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling and squaring of a truncated Taylor series.

    The matrix is halved until its 1-norm is at most 1/2, the series is
    summed until a term's 1-norm falls below ``tol`` times the partial sum's,
    and the result is squared back up.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    norm = np.abs(a).sum(axis=0).max() if n else 0.0
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    b = a / 2.0**squarings
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 100):
        term = term @ b / k
        result = result + term
        if np.abs(term).sum(axis=0).max() <= tol * np.abs(result).sum(axis=0).max():
            break
    for _ in range(squarings):
        result = result @ result
    return result


def communicability(a: np.ndarray) -> np.ndarray:
    """Communicability matrix ``exp(A)``, symmetrised to remove rounding asymmetry."""
    e = expm(a)
    return (e + e.T) / 2


@dataclass(frozen=True)
class CentralityReport:
    """All per-vertex measures for a connected graph with at least three vertices."""

    degree: tuple[int, ...]
    degree_centrality: tuple[Fraction, ...]
    closeness: tuple[float, ...]
    betweenness: tuple[float, ...]
    katz: KatzResult
    spectral_radius: float

    @property
    def alpha(self) -> float:
        return self.katz.alpha


def centrality_report(graph: VoiceLeadingGraph, alpha: float = DEFAULT_ALPHA) -> CentralityReport:
    a = adjacency_matrix(graph)
    return CentralityReport(
        degree=tuple(graph.degrees()),
        degree_centrality=tuple(degree_centrality(graph)),
        closeness=tuple(closeness_centrality(graph)),
        betweenness=tuple(betweenness_centrality(graph)),
        katz=katz_centrality(a, alpha),
        spectral_radius=spectral_radius(a),
    )
