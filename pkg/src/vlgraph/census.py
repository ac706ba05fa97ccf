"""Exhaustive classification of voice-leading graphs over all pitch-class subsets."""

from __future__ import annotations

import csv
import enum
import io
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional, TextIO

from .classical import eccentricity_summary
from .graph import VoiceLeadingGraph, build_graph
from .pitch import FULL_MASK, PitchClassSet

__all__ = [
    "CensusCategory",
    "CensusRecord",
    "CensusSummary",
    "REFERENCE_COUNTS",
    "enumerate_pitch_sets",
    "classify_graph",
    "census_record",
    "run_census",
    "write_records",
    "read_records",
]


class CensusCategory(enum.Enum):
    EMPTY_GRAPH = "empty"
    DISCONNECTED = "disconnected"
    SELF_CENTRED = "self-centred"
    NON_SELF_CENTRED = "non-self-centred"


# Published counts for sizes 3..12.
REFERENCE_COUNTS = {
    CensusCategory.EMPTY_GRAPH: 642,
    CensusCategory.DISCONNECTED: 2,
    CensusCategory.SELF_CENTRED: 1857,
    CensusCategory.NON_SELF_CENTRED: 1516,
}


@dataclass(frozen=True)
class CensusRecord:
    mask: int
    category: CensusCategory
    n_vertices: int
    n_edges: int
    radius: Optional[int]
    diameter: Optional[int]

    @property
    def scale(self) -> PitchClassSet:
        return PitchClassSet.from_mask(self.mask)


@dataclass
class CensusSummary:
    min_size: int
    max_size: int
    total_sets: int = 0
    counts: Counter = field(default_factory=Counter)
    records: Optional[list[CensusRecord]] = None

    def count(self, category: CensusCategory) -> int:
        return self.counts.get(category, 0)

    def expected_total(self) -> int:
        return sum(comb(12, k) for k in range(self.min_size, self.max_size + 1))

    def mismatches(self, reference: dict = REFERENCE_COUNTS) -> dict[CensusCategory, tuple[int, int]]:
        """Categories whose count differs from ``reference``, as ``(got, expected)``."""
        return {
            cat: (self.count(cat), want)
            for cat, want in reference.items()
            if self.count(cat) != want
        }

    def format_counts(self) -> str:
        return ", ".join(f"{cat.value}: {self.count(cat)}" for cat in CensusCategory)


def enumerate_pitch_sets(min_size: int = 3, max_size: int = 12) -> Iterator[PitchClassSet]:
    """Every pitch-class set with ``min_size <= size <= max_size``, by ascending mask."""
    if not 0 <= min_size <= max_size <= 12:
        raise ValueError(f"need 0 <= min_size <= max_size <= 12, got ({min_size}, {max_size})")
    for mask in range(FULL_MASK + 1):
        if min_size <= mask.bit_count() <= max_size:
            yield PitchClassSet.from_mask(mask)


def classify_graph(graph: VoiceLeadingGraph) -> CensusCategory:
    return census_record(graph).category


def census_record(graph: VoiceLeadingGraph) -> CensusRecord:
    mask = graph.scale.bitmask
    if graph.order == 0:
        return CensusRecord(mask, CensusCategory.EMPTY_GRAPH, 0, 0, None, None)
    summary = eccentricity_summary(graph)
    if summary.self_centred is None:
        return CensusRecord(mask, CensusCategory.DISCONNECTED, graph.order, graph.size, None, None)
    category = CensusCategory.SELF_CENTRED if summary.self_centred else CensusCategory.NON_SELF_CENTRED
    return CensusRecord(
        mask, category, graph.order, graph.size, int(summary.radius), int(summary.diameter)
    )


def run_census(min_size: int = 3, max_size: int = 12, record_details: bool = False) -> CensusSummary:
    """Build and classify the graph of every pitch-class set in the size range."""
    summary = CensusSummary(min_size, max_size, records=[] if record_details else None)
    for scale in enumerate_pitch_sets(min_size, max_size):
        record = census_record(build_graph(scale))
        summary.total_sets += 1
        summary.counts[record.category] += 1
        if record_details:
            summary.records.append(record)
    return summary


_FIELDS = ["mask", "category", "n_vertices", "n_edges", "radius", "diameter"]


def write_records(records: list[CensusRecord], stream: TextIO) -> None:
    """Write detail records as CSV; the mask column is the 12-character binary string."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(_FIELDS)
    for r in records:
        writer.writerow([
            PitchClassSet.from_mask(r.mask).mask_string(),
            r.category.value,
            r.n_vertices,
            r.n_edges,
            "" if r.radius is None else r.radius,
            "" if r.diameter is None else r.diameter,
        ])


def read_records(stream: TextIO | str) -> list[CensusRecord]:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = []
    for row in csv.DictReader(stream):
        mask = sum(1 << i for i, ch in enumerate(row["mask"]) if ch == "1")
        out.append(CensusRecord(
            mask,
            CensusCategory(row["category"]),
            int(row["n_vertices"]),
            int(row["n_edges"]),
            int(row["radius"]) if row["radius"] else None,
            int(row["diameter"]) if row["diameter"] else None,
        ))
    return out
