"""Classify the voice-leading graph of every pitch-class set of size 3..12."""

import time
from collections import Counter

from vlgraph.census import CensusCategory, run_census

start = time.perf_counter()
summary = run_census(3, 12, record_details=True)
print(f"{summary.total_sets} sets in {time.perf_counter() - start:.2f}s")
print(summary.format_counts())

# --- which sets are disconnected? ---
for r in summary.records:
    if r.category is CensusCategory.DISCONNECTED:
        print("disconnected:", r.scale)

# --- self-centred share by scale size ---
by_size = Counter()
self_centred = Counter()
for r in summary.records:
    size = len(r.scale)
    by_size[size] += 1
    self_centred[size] += r.category is CensusCategory.SELF_CENTRED
for size in sorted(by_size):
    print(f"size {size:2d}: {self_centred[size]:4d} / {by_size[size]:4d} self-centred")

# --- widest diameters ---
widest = sorted((r for r in summary.records if r.diameter is not None), key=lambda r: -r.diameter)[:5]
for r in widest:
    print(r.scale, "diameter", r.diameter, "radius", r.radius)
