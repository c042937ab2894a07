"""Color sequences, windowed multisets, and distinguishability checking.

A color sequence is a word over the palette [k] = {1, ..., k}, read either
linearly or cyclically.  Every length-m window is summarized by the multiset
of colors it contains; the sequence is m-distinguishable when all window
multisets are pairwise distinct, so a window's multiset identifies where the
window sits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import InputError

Mode = Literal["linear", "cyclic"]

__all__ = [
    "Multiset",
    "ColorSequence",
    "DistinguishabilityReport",
    "window_starts",
    "window_multiset",
    "check_distinguishable",
    "t_cut",
    "format_sequence",
    "parse_sequences",
]


@dataclass(frozen=True)
class Multiset:
    """A multiset over [k], stored as its count vector in palette order.

    The count vector is the canonical key: O(k) equality and hashing with no
    sorting ambiguity, and a stable wire form (counts joined by '-').
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise InputError("multiset needs a palette of at least one color")
        if any(c < 0 for c in self.counts):
            raise InputError("negative multiplicity in count vector")

    @classmethod
    def of(cls, elements: Iterable[int], palette_size: int) -> "Multiset":
        if palette_size < 1:
            raise InputError("palette size must be at least 1")
        counts = [0] * palette_size
        for color in elements:
            if not 1 <= color <= palette_size:
                raise InputError(f"color {color} outside palette [1..{palette_size}]")
            counts[color - 1] += 1
        return cls(tuple(counts))

    @classmethod
    def from_key(cls, key: str) -> "Multiset":
        try:
            return cls(tuple(int(part) for part in key.split("-")))
        except ValueError as exc:
            raise InputError(f"malformed multiset key {key!r}") from exc

    @property
    def palette_size(self) -> int:
        return len(self.counts)

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    def elements(self) -> list[int]:
        """The colors with multiplicity, ascending."""
        out: list[int] = []
        for color, mult in enumerate(self.counts, start=1):
            out.extend([color] * mult)
        return out

    def key(self) -> str:
        return "-".join(str(c) for c in self.counts)


@dataclass(frozen=True)
class ColorSequence:
    """A word over [palette_size] with a linear or cyclic reading."""

    colors: tuple[int, ...]
    palette_size: int
    mode: Mode = "cyclic"

    def __post_init__(self):
        if self.palette_size < 1:
            raise InputError("palette size must be at least 1")
        if len(self.colors) < 1:
            raise InputError("sequence must not be empty")
        if self.mode not in ("linear", "cyclic"):
            raise InputError(f"unknown mode {self.mode!r}")
        for c in self.colors:
            if not 1 <= c <= self.palette_size:
                raise InputError(f"color {c} outside palette [1..{self.palette_size}]")

    @classmethod
    def of(
        cls,
        colors: Iterable[int],
        palette_size: int | None = None,
        mode: Mode = "cyclic",
    ) -> "ColorSequence":
        tup = tuple(int(c) for c in colors)
        if palette_size is None:
            palette_size = max(tup) if tup else 0
        return cls(tup, palette_size, mode)

    @classmethod
    def from_digits(
        cls, digits: str, palette_size: int | None = None, mode: Mode = "cyclic"
    ) -> "ColorSequence":
        """Build from a compact digit string (palettes up to 9 colors)."""
        return cls.of((int(ch) for ch in digits), palette_size, mode)

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def with_mode(self, mode: Mode) -> "ColorSequence":
        return ColorSequence(self.colors, self.palette_size, mode)


@dataclass(frozen=True)
class DistinguishabilityReport:
    """Outcome of a distinguishability check.

    On failure ``collision`` is the lexicographically smallest pair of window
    tag positions carrying equal multisets.
    """

    ok: bool
    collision: tuple | None = None
    window_count: int = 0


def _require_window(seq: ColorSequence, m: int) -> None:
    if m < 1:
        raise InputError("window size must be at least 1")
    if m > len(seq):
        raise InputError(f"window size {m} exceeds sequence length {len(seq)}")


def window_starts(seq: ColorSequence, m: int) -> range:
    """Valid window tag positions for the sequence's mode."""
    _require_window(seq, m)
    if seq.mode == "linear":
        return range(len(seq) - m + 1)
    return range(len(seq))


def _window_counts(
    colors: tuple[int, ...], t: int, m: int, k: int, cyclic: bool
) -> tuple[int, ...]:
    counts = [0] * k
    if cyclic:
        n = len(colors)
        for i in range(m):
            counts[colors[(t + i) % n] - 1] += 1
    else:
        for c in colors[t : t + m]:
            counts[c - 1] += 1
    return tuple(counts)


def window_multiset(seq: ColorSequence, t: int, m: int) -> Multiset:
    """Multiset of the m colors in the window tagged at position t."""
    if t not in window_starts(seq, m):
        raise InputError(f"window start {t} out of range for mode {seq.mode}")
    return Multiset(
        _window_counts(seq.colors, t, m, seq.palette_size, seq.mode == "cyclic")
    )


def check_distinguishable(seq: ColorSequence, m: int) -> DistinguishabilityReport:
    """Are all window multisets pairwise distinct?

    Scans every window once; the reported collision is the smallest pair
    (first occurrence, second occurrence) in lexicographic order over all
    colliding keys.
    """
    starts = window_starts(seq, m)
    cyclic = seq.mode == "cyclic"
    first_seen: dict[tuple[int, ...], int] = {}
    best: tuple[int, int] | None = None
    for t in starts:
        key = _window_counts(seq.colors, t, m, seq.palette_size, cyclic)
        prev = first_seen.get(key)
        if prev is None:
            first_seen[key] = t
        else:
            pair = (prev, t)
            if best is None or pair < best:
                best = pair
    if best is None:
        return DistinguishabilityReport(True, None, len(starts))
    return DistinguishabilityReport(False, best, len(starts))


def t_cut(seq: ColorSequence, t: int, m: int) -> ColorSequence:
    """Linearize a cyclic sequence: cut after position t and repeat m-1 symbols.

    Output is the rotation starting at t+1 followed by its own first m-1
    colors, length len(seq)+m-1.  A cyclic m-distinguishable input yields a
    linear m-distinguishable output for every t.
    """
    if seq.mode != "cyclic":
        raise InputError("t_cut requires a cyclic sequence")
    if not 0 <= t < len(seq):
        raise InputError(f"cut position {t} out of range 0..{len(seq) - 1}")
    if m < 1:
        raise InputError("window size must be at least 1")
    rotated = seq.colors[t + 1 :] + seq.colors[: t + 1]
    return ColorSequence(rotated + rotated[: m - 1], seq.palette_size, "linear")


def format_sequence(seq: ColorSequence, comments: Iterable[str] = ()) -> str:
    """Sequence text form: '#' header carrying k and mode, colors on one line."""
    lines = [f"# k={seq.palette_size} mode={seq.mode}"]
    lines.extend(f"# {comment}" for comment in comments)
    lines.append(" ".join(str(c) for c in seq.colors))
    return "\n".join(lines) + "\n"


def parse_sequences(text: str) -> list[ColorSequence]:
    """Parse the sequence text format, one sequence per line.

    A '#' header sets k and mode for the lines that follow; lines without a
    preceding header default to linear with the palette inferred from the
    colors present.
    """
    header_k: int | None = None
    header_mode: Mode | None = None
    out: list[ColorSequence] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if token.startswith("k="):
                    try:
                        header_k = int(token[2:])
                    except ValueError as exc:
                        raise InputError(f"bad header token {token!r}") from exc
                elif token.startswith("mode="):
                    value = token[5:]
                    if value not in ("linear", "cyclic"):
                        raise InputError(f"unknown mode {value!r} in header")
                    header_mode = value
            continue
        try:
            colors = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise InputError(f"bad sequence line {line!r}") from exc
        k = header_k if header_k is not None else max(colors)
        mode: Mode = header_mode if header_mode is not None else "linear"
        out.append(ColorSequence(colors, k, mode))
    return out
