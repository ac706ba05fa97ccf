"""Pitch-class sets, scale presets and triad extraction in 12-TET.

Conventions
-----------
- Pitch classes are plain ints 0..11 (0 = C, 1 = Db, ..., 11 = B).
- A scale is a :class:`PitchClassSet`; its 12-bit mask has bit ``i`` set iff
  pitch class ``i`` is a member.
- Triads are identified by their pitch-class set, so the three augmented
  triads on ``p``, ``p+4``, ``p+8`` are one triad with root ``min`` of the set.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "PitchClass",
    "pitch_class",
    "PitchClassSet",
    "TriadQuality",
    "Triad",
    "PRESETS",
    "ScaleParseError",
    "parse_scale",
    "preset_scale",
    "extract_triads",
    "pitch_name",
]

PitchClass = int

N_PITCH_CLASSES = 12
FULL_MASK = (1 << N_PITCH_CLASSES) - 1

_FLAT_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")


class ScaleParseError(ValueError):
    """Raised when a scale description cannot be turned into a pitch-class set."""


def pitch_class(value: int) -> PitchClass:
    """Reduce an integer to its pitch class (mod 12)."""
    return int(value) % N_PITCH_CLASSES


def pitch_name(pc: int, unicode: bool = False) -> str:
    """Flat-preferring spelling of a pitch class, e.g. ``8 -> 'Ab'``."""
    name = _FLAT_NAMES[pitch_class(pc)]
    if unicode:
        name = name.replace("b", "♭") if len(name) == 2 else name
    return name


def _mask_of(members: Iterable[int]) -> int:
    mask = 0
    for pc in members:
        mask |= 1 << pc
    return mask


@dataclass(frozen=True, order=True)
class PitchClassSet:
    """Sorted, duplicate-free collection of pitch classes.

    Use :meth:`from_iterable` or :meth:`from_mask` rather than the raw
    constructor; both normalise the members.
    """

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if any(not 0 <= pc < N_PITCH_CLASSES for pc in members):
            raise ValueError(f"pitch classes must lie in 0..11: {members}")
        if list(members) != sorted(set(members)):
            raise ValueError(f"members must be strictly increasing: {members}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "PitchClassSet":
        return cls(tuple(sorted({pitch_class(v) for v in values})))

    @classmethod
    def from_mask(cls, mask: int) -> "PitchClassSet":
        if not 0 <= mask <= FULL_MASK:
            raise ValueError(f"mask out of range 0..4095: {mask}")
        return cls(tuple(i for i in range(N_PITCH_CLASSES) if mask >> i & 1))

    @property
    def bitmask(self) -> int:
        return _mask_of(self.members)

    def mask_string(self) -> str:
        """12-character binary string, leftmost character is pitch class 0."""
        return "".join("1" if pc in self else "0" for pc in range(N_PITCH_CLASSES))

    def transpose(self, k: int) -> "PitchClassSet":
        return PitchClassSet.from_iterable(pc + k for pc in self.members)

    def issubset(self, other: "PitchClassSet") -> bool:
        return self.bitmask & ~other.bitmask == 0

    def index(self, pc: int) -> int:
        return self.members.index(pc)

    def __contains__(self, pc: object) -> bool:
        return pc in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


class TriadQuality(enum.Enum):
    """Triad quality; the value is the interval template above the root."""

    MAJOR = (0, 4, 7)
    MINOR = (0, 3, 7)
    DIMINISHED = (0, 3, 6)
    AUGMENTED = (0, 4, 8)

    @property
    def rank(self) -> int:
        return _QUALITY_ORDER.index(self)

    @property
    def label(self) -> str:
        return self.name.lower()


_QUALITY_ORDER = (
    TriadQuality.MAJOR,
    TriadQuality.MINOR,
    TriadQuality.DIMINISHED,
    TriadQuality.AUGMENTED,
)


@dataclass(frozen=True, eq=False)
class Triad:
    """A major, minor, diminished or augmented triad.

    Equality and hashing go through the pitch-class set only.
    """

    pitches: PitchClassSet
    quality: TriadQuality
    root: int

    @classmethod
    def from_root(cls, root: int, quality: TriadQuality) -> "Triad":
        root = pitch_class(root)
        pitches = PitchClassSet.from_iterable(root + step for step in quality.value)
        if quality is TriadQuality.AUGMENTED:
            root = pitches.members[0]
        return cls(pitches, quality, root)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.quality.rank, self.root)

    def transpose(self, k: int) -> "Triad":
        return Triad.from_root(self.root + k, self.quality)

    def name(self, unicode: bool = False) -> str:
        """Display name: ``C`` major, ``c`` minor, ``bo`` diminished, ``Eb+`` augmented."""
        base = pitch_name(self.root, unicode=unicode)
        if self.quality in (TriadQuality.MINOR, TriadQuality.DIMINISHED):
            base = base[0].lower() + base[1:]
        if self.quality is TriadQuality.DIMINISHED:
            base += "°" if unicode else "o"
        elif self.quality is TriadQuality.AUGMENTED:
            base += "+"
        return base

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triad):
            return NotImplemented
        return self.pitches == other.pitches

    def __hash__(self) -> int:
        return hash(self.pitches)

    def __repr__(self) -> str:
        return f"Triad({self.name()}, {self.pitches})"


PRESETS: dict[str, tuple[int, ...]] = {
    "major": (0, 2, 4, 5, 7, 9, 11),
    "diatonic": (0, 2, 4, 5, 7, 9, 11),
    "natural-minor": (0, 2, 3, 5, 7, 8, 10),
    "harmonic-minor": (0, 2, 3, 5, 7, 8, 11),
    "melodic-minor": (0, 2, 3, 5, 7, 9, 11),
    "hexatonic": (0, 1, 4, 5, 8, 9),
    "octatonic": (0, 1, 3, 4, 6, 7, 9, 10),
    "whole-tone": (0, 2, 4, 6, 8, 10),
    "chromatic": tuple(range(12)),
    "mixolydian-augmented": (0, 2, 4, 5, 8, 9, 10),
    "enigmatic-minor": (0, 1, 4, 6, 8, 10, 11),
}


def preset_scale(name: str, transpose: int = 0) -> PitchClassSet:
    """Look up a named scale rooted on C, optionally transposed by ``transpose`` semitones."""
    key = name.strip().lower().replace("_", "-").replace(" ", "-")
    try:
        members = PRESETS[key]
    except KeyError:
        raise ScaleParseError(
            f"unknown preset {name!r}; known presets: {', '.join(sorted(PRESETS))}"
        ) from None
    return PitchClassSet.from_iterable(pc + transpose for pc in members)


_MASK_RE = re.compile(r"[01]{12}")
_PRESET_RE = re.compile(r"([A-Za-z][A-Za-z_\- ]*?)\s*(?:@\s*(-?\d+))?")


def parse_scale(text: str) -> PitchClassSet:
    """Parse a scale description.

    Accepted forms are an integer list (``"0,2,4,5,7,9,11"`` or
    ``"0 2 4"``), a 12-character binary mask whose leftmost character is
    pitch class 0, or a preset name with an optional ``@k`` transposition
    (``"harmonic-minor@3"``).

    Raises
    ------
    ScaleParseError
        On empty input, malformed tokens, values outside 0..11, duplicates
        or unknown preset names.
    """
    text = text.strip()
    if not text:
        raise ScaleParseError("empty scale description")
    if _MASK_RE.fullmatch(text):
        members = [i for i, ch in enumerate(text) if ch == "1"]
        if not members:
            raise ScaleParseError("mask selects no pitch classes")
        return PitchClassSet(tuple(members))
    if text[0].isalpha():
        match = _PRESET_RE.fullmatch(text)
        if match is None:
            raise ScaleParseError(f"malformed preset reference {text!r}")
        return preset_scale(match.group(1), int(match.group(2) or 0))

    tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
    values = []
    for tok in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise ScaleParseError(f"malformed token {tok!r}")
        value = int(tok)
        if value >= N_PITCH_CLASSES:
            raise ScaleParseError(f"pitch class out of range 0..11: {value}")
        if value in values:
            raise ScaleParseError(f"duplicate pitch class {value}")
        values.append(value)
    if not values:
        raise ScaleParseError("empty scale description")
    return PitchClassSet(tuple(sorted(values)))


def extract_triads(scale: PitchClassSet) -> list[Triad]:
    """All triads whose pitch classes lie in ``scale``, in canonical order.

    Ordering is major, minor, diminished, augmented, and within a quality by
    ascending root. This order fixes vertex indices for every downstream
    matrix.
    """
    mask = scale.bitmask
    triads: list[Triad] = []
    seen: set[int] = set()
    for quality in _QUALITY_ORDER:
        for root in range(N_PITCH_CLASSES):
            triad_mask = _mask_of(pitch_class(root + step) for step in quality.value)
            if triad_mask & ~mask or triad_mask in seen:
                continue
            seen.add(triad_mask)
            triads.append(Triad.from_root(root, quality))
    return triads
