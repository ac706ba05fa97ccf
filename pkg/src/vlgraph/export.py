"""Graph documents (JSON), Graphviz DOT output and plain-text tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Any, Optional

import numpy as np

from .centrality import CentralityReport
from .classical import INFINITE, EccentricitySummary
from .graph import VoiceLeadingGraph
from .pitch import PitchClassSet, Triad, TriadQuality

__all__ = [
    "SCHEMA_VERSION",
    "GraphDocument",
    "to_dot",
    "format_table",
    "graph_table",
    "centrality_table",
    "fmt3",
]

SCHEMA_VERSION = 1


def _num(x: float) -> Any:
    # JSON has no infinity
    if x is None:
        return None
    if x == INFINITE:
        return "inf"
    return int(x) if float(x).is_integer() else float(x)


@dataclass
class GraphDocument:
    """Self-describing, JSON-serialisable snapshot of a voice-leading graph.

    ``metrics`` holds optional blocks keyed ``"eccentricity"``,
    ``"centrality"`` and ``"communicability"``.
    """

    scale: PitchClassSet
    vertices: list[Triad]
    edges: list[tuple[int, int]]
    metrics: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_graph(
        cls,
        graph: VoiceLeadingGraph,
        eccentricity: Optional[EccentricitySummary] = None,
        centrality: Optional[CentralityReport] = None,
        communicability: Optional[np.ndarray] = None,
    ) -> "GraphDocument":
        metrics: dict[str, Any] = {}
        if eccentricity is not None:
            metrics["eccentricity"] = {
                "eccentricities": [_num(e) for e in eccentricity.eccentricities],
                "radius": _num(eccentricity.radius),
                "diameter": _num(eccentricity.diameter),
                "central_vertices": list(eccentricity.central_vertices),
                "peripheral_vertices": list(eccentricity.peripheral_vertices),
                "self_centred": eccentricity.self_centred,
            }
        if centrality is not None:
            metrics["centrality"] = {
                "alpha": centrality.alpha,
                "spectral_radius": centrality.spectral_radius,
                "degree": list(centrality.degree),
                "degree_centrality": [str(f) for f in centrality.degree_centrality],
                "closeness": list(centrality.closeness),
                "betweenness": list(centrality.betweenness),
                "katz_raw": centrality.katz.raw.tolist(),
                "katz_normalized": centrality.katz.normalized.tolist(),
                "katz_inclusive_normalized": centrality.katz.inclusive_normalized.tolist(),
            }
        if communicability is not None:
            metrics["communicability"] = np.asarray(communicability).tolist()
        return cls(graph.scale, list(graph.vertices), graph.sorted_edges(), metrics)

    def to_graph(self) -> VoiceLeadingGraph:
        return VoiceLeadingGraph(self.scale, tuple(self.vertices), frozenset(self.edges))

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "scale": {
                "pitch_classes": list(self.scale.members),
                "mask": self.scale.mask_string(),
            },
            "vertices": [
                {
                    "index": i,
                    "name": t.name(),
                    "quality": t.quality.label,
                    "root": t.root,
                    "pitch_classes": list(t.pitches.members),
                }
                for i, t in enumerate(self.vertices)
            ],
            "edges": [list(e) for e in self.edges],
        }
        if self.metrics:
            doc["metrics"] = self.metrics
        return doc

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "GraphDocument":
        version = doc.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {version!r}")
        scale = PitchClassSet.from_iterable(doc["scale"]["pitch_classes"])
        vertices = []
        for i, v in enumerate(doc["vertices"]):
            if v["index"] != i:
                raise ValueError(f"vertex index {v['index']} out of order at position {i}")
            triad = Triad.from_root(v["root"], TriadQuality[v["quality"].upper()])
            if list(triad.pitches.members) != v["pitch_classes"]:
                raise ValueError(f"vertex {i}: pitch classes disagree with root/quality")
            vertices.append(triad)
        edges = [(min(e), max(e)) for e in doc["edges"]]
        return cls(scale, vertices, edges, doc.get("metrics", {}))

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        return cls.from_dict(json.loads(text))


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: VoiceLeadingGraph, unicode: bool = False, name: Optional[str] = None) -> str:
    """Undirected Graphviz document; node ids are vertex indices, labels are triad names."""
    title = name or f"scale {graph.scale}"
    lines = [f"graph {_dot_id(title)} {{"]
    for i, triad in enumerate(graph.vertices):
        lines.append(f"  {i} [label={_dot_id(triad.name(unicode=unicode))}];")
    for i, j in graph.sorted_edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fmt3(x: float) -> str:
    """Three decimals, halves rounded up (0.5625 -> 0.563)."""
    return str(Decimal(repr(float(x))).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def format_table(headers: list[str], rows: list[list[Any]]) -> str:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    out = []
    for n, row in enumerate(cells):
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if n == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def graph_table(graph: VoiceLeadingGraph, unicode: bool = False) -> str:
    names = graph.names(unicode=unicode)
    lines = [f"scale {graph.scale}: {graph.order} vertices, {graph.size} edges", ""]
    rows = [
        [i, names[i], t.quality.label, ",".join(map(str, t.pitches)), len(graph.neighbours[i])]
        for i, t in enumerate(graph.vertices)
    ]
    lines.append(format_table(["#", "triad", "quality", "pitches", "degree"], rows))
    if graph.size:
        lines += ["", "edges:"]
        lines += [f"  {names[i]} -- {names[j]}" for i, j in graph.sorted_edges()]
    return "\n".join(lines)


def centrality_table(graph: VoiceLeadingGraph, report: CentralityReport, unicode: bool = False) -> str:
    names = graph.names(unicode=unicode)
    rows = []
    for i in range(graph.order):
        dc = report.degree_centrality[i]
        rows.append([
            names[i],
            report.degree[i],
            f"{dc.numerator}/{dc.denominator}" if dc.denominator != 1 else str(dc.numerator),
            fmt3(dc),
            fmt3(report.closeness[i]),
            fmt3(report.betweenness[i]),
            fmt3(report.katz.raw[i]),
            fmt3(report.katz.normalized[i]),
            fmt3(report.katz.inclusive_normalized[i]),
        ])
    headers = ["triad", "degree", "deg.c", "deg.c(dec)", "closeness", "betweenness", "katz", "katz(unit)", "katz(incl,unit)"]
    head = f"alpha = {report.alpha}, spectral radius = {fmt3(report.spectral_radius)}"
    return head + "\n\n" + format_table(headers, rows)
