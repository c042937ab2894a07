"""2D color maps, block multisets, and the multiset-to-position codebook.

A grid coloring is (m, n)-distinguishable when the multiset of colors in
each m x n block identifies the block's tag point.  The product of two 1D
colorings (cells carry the pair of axis colors, flattened to one id)
inherits distinguishability from its axes, which is how large 2D codes are
built from 1D ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .bounds import multichoose
from .errors import (
    CardinalityError,
    CollisionError,
    InputError,
    UnknownBlockError,
)
from .sequences import ColorSequence, DistinguishabilityReport, Multiset

GridMode = Literal["plain", "cyclic"]

__all__ = [
    "ColorGrid2D",
    "flat_pair",
    "product_grid",
    "block_starts",
    "block_multiset",
    "check_grid_distinguishable",
    "Codebook",
    "build_codebook",
    "decode",
    "format_grid",
    "parse_grid",
    "format_codebook",
    "parse_codebook",
]


@dataclass(frozen=True)
class ColorGrid2D:
    """M x N grid of colors; cells[x][y] in [palette_size]."""

    cells: tuple[tuple[int, ...], ...]
    palette_size: int
    mode: GridMode = "plain"

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise InputError("grid needs at least one row and one column")
        if self.palette_size < 1:
            raise InputError("palette size must be at least 1")
        if self.mode not in ("plain", "cyclic"):
            raise InputError(f"unknown grid mode {self.mode!r}")
        width = len(self.cells[0])
        for row in self.cells:
            if len(row) != width:
                raise InputError("grid rows must all have the same length")
            for c in row:
                if not 1 <= c <= self.palette_size:
                    raise InputError(
                        f"color {c} outside palette [1..{self.palette_size}]"
                    )

    @property
    def M(self) -> int:
        return len(self.cells)

    @property
    def N(self) -> int:
        return len(self.cells[0])

    def color(self, x: int, y: int) -> int:
        return self.cells[x][y]


def flat_pair(a: int, b: int, k2: int) -> int:
    """Single-integer encoding of the color pair (a, b): (a-1)*k2 + b."""
    return (a - 1) * k2 + b


def product_grid(s1: ColorSequence, s2: ColorSequence) -> ColorGrid2D:
    """Grid whose (x, y) cell pairs the axis colors, flattened to one id.

    Palette size is the product of the axis palettes; the grid is cyclic
    only when both axes are cyclic.
    """
    k2 = s2.palette_size
    cells = tuple(
        tuple(flat_pair(a, b, k2) for b in s2.colors) for a in s1.colors
    )
    mode: GridMode = (
        "cyclic" if s1.mode == "cyclic" and s2.mode == "cyclic" else "plain"
    )
    return ColorGrid2D(cells, s1.palette_size * k2, mode)


def _require_block(g: ColorGrid2D, m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise InputError("block dimensions must be at least 1")
    if m > g.M or n > g.N:
        raise InputError(f"block {m}x{n} larger than grid {g.M}x{g.N}")


def block_starts(g: ColorGrid2D, m: int, n: int) -> list[tuple[int, int]]:
    """Tag points of the (m, n)-coding area; the whole grid when cyclic.

    Plain grids include x0 = M-m and y0 = N-n, the last positions where a
    block still fits.
    """
    _require_block(g, m, n)
    if g.mode == "cyclic":
        return [(x, y) for x in range(g.M) for y in range(g.N)]
    return [(x, y) for x in range(g.M - m + 1) for y in range(g.N - n + 1)]


def _block_counts(
    g: ColorGrid2D, x0: int, y0: int, m: int, n: int
) -> tuple[int, ...]:
    counts = [0] * g.palette_size
    if g.mode == "cyclic":
        for i in range(m):
            row = g.cells[(x0 + i) % g.M]
            for j in range(n):
                counts[row[(y0 + j) % g.N] - 1] += 1
    else:
        for i in range(m):
            row = g.cells[x0 + i]
            for c in row[y0 : y0 + n]:
                counts[c - 1] += 1
    return tuple(counts)


def block_multiset(g: ColorGrid2D, x0: int, y0: int, m: int, n: int) -> Multiset:
    """Multiset of the m*n colors in the block tagged at (x0, y0)."""
    _require_block(g, m, n)
    if g.mode == "cyclic":
        if not (0 <= x0 < g.M and 0 <= y0 < g.N):
            raise InputError(f"tag point ({x0}, {y0}) outside the grid")
    elif not (0 <= x0 <= g.M - m and 0 <= y0 <= g.N - n):
        raise InputError(
            f"tag point ({x0}, {y0}) outside the {m}x{n} coding area"
        )
    return Multiset(_block_counts(g, x0, y0, m, n))


def check_grid_distinguishable(
    g: ColorGrid2D, m: int, n: int
) -> DistinguishabilityReport:
    """Are all block multisets over the coding area pairwise distinct?"""
    first_seen: dict[tuple[int, ...], tuple[int, int]] = {}
    best: tuple[tuple[int, int], tuple[int, int]] | None = None
    starts = block_starts(g, m, n)
    for pos in starts:
        key = _block_counts(g, pos[0], pos[1], m, n)
        prev = first_seen.get(key)
        if prev is None:
            first_seen[key] = pos
        else:
            pair = (prev, pos)
            if best is None or pair < best:
                best = pair
    if best is None:
        return DistinguishabilityReport(True, None, len(starts))
    return DistinguishabilityReport(False, best, len(starts))


@dataclass(frozen=True)
class Codebook:
    """Injective map from block multiset keys to their tag points."""

    block_m: int
    block_n: int
    palette_size: int
    mode: GridMode
    entries: dict

    @property
    def size(self) -> int:
        return len(self.entries)


def build_codebook(g: ColorGrid2D, m: int, n: int) -> Codebook:
    """Map every coding-area block's multiset to its tag point.

    Fails with the two colliding positions when the grid is not
    (m, n)-distinguishable.
    """
    entries: dict[tuple[int, ...], tuple[int, int]] = {}
    for x0, y0 in block_starts(g, m, n):
        key = _block_counts(g, x0, y0, m, n)
        if key in entries:
            raise CollisionError(entries[key], (x0, y0))
        entries[key] = (x0, y0)
    if len(entries) > multichoose(g.palette_size, m * n):
        raise AssertionError("more codewords than multisets exist; impossible")
    return Codebook(m, n, g.palette_size, g.mode, entries)


def decode(cb: Codebook, s: Multiset) -> tuple[int, int]:
    """Tag point of the block whose color multiset is s.

    Malformed input (wrong palette or cardinality) is distinguished from a
    well-formed multiset that simply is not a code symbol.
    """
    if s.palette_size != cb.palette_size:
        raise CardinalityError(
            f"multiset palette {s.palette_size} differs from codebook "
            f"palette {cb.palette_size}"
        )
    want = cb.block_m * cb.block_n
    if s.cardinality != want:
        raise CardinalityError(
            f"multiset has {s.cardinality} elements; blocks have {want}"
        )
    pos = cb.entries.get(s.counts)
    if pos is None:
        raise UnknownBlockError(f"multiset {s.key()} is not a code symbol")
    return pos


def format_grid(g: ColorGrid2D) -> str:
    """Grid file: '#' header with M, N, k, mode; one CSV row per grid row."""
    lines = [f"# M={g.M} N={g.N} k={g.palette_size} mode={g.mode}"]
    lines.extend(",".join(str(c) for c in row) for row in g.cells)
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> ColorGrid2D:
    k: int | None = None
    mode = "plain"
    rows: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if token.startswith("k="):
                    k = int(token[2:])
                elif token.startswith("mode="):
                    mode = token[5:]
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split(",")))
        except ValueError as exc:
            raise InputError(f"bad grid row {line!r}") from exc
    if not rows:
        raise InputError("no grid rows found")
    if k is None:
        k = max(max(row) for row in rows)
    return ColorGrid2D(tuple(rows), k, mode)


def format_codebook(cb: Codebook) -> str:
    """Codebook file: CSV rows key,x0,y0 with the key's counts joined by '-'."""
    lines = [
        f"# m={cb.block_m} n={cb.block_n} k={cb.palette_size} mode={cb.mode}",
        "key,x0,y0",
    ]
    for key in sorted(cb.entries):
        x0, y0 = cb.entries[key]
        lines.append(f"{'-'.join(str(c) for c in key)},{x0},{y0}")
    return "\n".join(lines) + "\n"


def parse_codebook(text: str) -> Codebook:
    m = n = None
    mode = "plain"
    entries: dict[tuple[int, ...], tuple[int, int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line == "key,x0,y0":
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if token.startswith("m="):
                    m = int(token[2:])
                elif token.startswith("n="):
                    n = int(token[2:])
                elif token.startswith("mode="):
                    mode = token[5:]
            continue
        try:
            key_str, x_str, y_str = line.rsplit(",", 2)
            counts = tuple(int(p) for p in key_str.split("-"))
            entries[counts] = (int(x_str), int(y_str))
        except ValueError as exc:
            raise InputError(f"bad codebook row {line!r}") from exc
    if not entries:
        raise InputError("no codebook rows found")
    palettes = {len(key) for key in entries}
    cards = {sum(key) for key in entries}
    if len(palettes) != 1 or len(cards) != 1:
        raise InputError("codebook rows disagree on palette or block size")
    if m is None or n is None:
        m, n = cards.pop(), 1  # header absent: only the product is known
    if mode not in ("plain", "cyclic"):
        raise InputError(f"unknown grid mode {mode!r}")
    return Codebook(m, n, palettes.pop(), mode, entries)
