"""Two-sided hitomezashi friezes: stitch presence, duality and the translation lattice.

Coordinates: vertical stitch lines sit at integer columns ``i`` and horizontal
stitch lines at rows ``j = 0 .. h-1`` numbered bottom to top, where ``h = |y|``.
A vertical segment ``(i, j)`` joins rows ``j`` and ``j+1`` on column ``i``; a
horizontal segment ``(i, j)`` joins columns ``i`` and ``i+1`` on row ``j``.
Index 0 along every line is the reference ("first") stitch.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .word import BinaryWord, complement


class DegenerateHeight(ValueError):
    """A frieze needs at least two horizontal lines (|y| >= 2)."""


class RowOutOfRange(IndexError):
    pass


class PatternSyntaxError(ValueError):
    pass


class Orientation(enum.Enum):
    VERTICAL = "V"
    HORIZONTAL = "H"


class Side(enum.Enum):
    FRONT = "front"
    BACK = "back"

    def swapped(self) -> Side:
        return Side.BACK if self is Side.FRONT else Side.FRONT


@dataclass(frozen=True)
class SegmentId:
    orientation: Orientation
    i: int
    j: int

    @classmethod
    def v(cls, i: int, j: int) -> SegmentId:
        return cls(Orientation.VERTICAL, i, j)

    @classmethod
    def h(cls, i: int, j: int) -> SegmentId:
        return cls(Orientation.HORIZONTAL, i, j)


@dataclass(frozen=True)
class FriezePattern:
    """Periodic vertical word ``x`` and finite horizontal word ``y``.

    ``x`` is kept exactly as given; it is one repeating unit, not necessarily
    primitive.
    """

    x: BinaryWord
    y: BinaryWord

    def __post_init__(self) -> None:
        if len(self.y) < 2:
            raise DegenerateHeight(f"|y| must be at least 2, got {len(self.y)}")

    @property
    def height(self) -> int:
        return len(self.y)

    def __str__(self) -> str:
        return f"x={self.x} y={self.y}"

    @cached_property
    def period(self) -> int:
        return translation_period(self)

    @cached_property
    def presence_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Front presence over one translation period as ``(V, H)`` uint8 arrays.

        ``V`` has shape ``(P, h-1)`` and ``H`` has shape ``(P, h)``.
        """
        P, h = self.period, self.height
        cols = np.arange(P)
        xs = np.array(self.x.bits, dtype=np.uint8)[cols % len(self.x)]
        ys = np.array(self.y.bits, dtype=np.uint8)
        V = xs[:, None] ^ (np.arange(h - 1) % 2).astype(np.uint8)[None, :]
        H = ys[None, :] ^ (cols % 2).astype(np.uint8)[:, None]
        V.setflags(write=False)
        H.setflags(write=False)
        return V, H


def new_frieze(x: BinaryWord | str, y: BinaryWord | str) -> FriezePattern:
    return FriezePattern(BinaryWord.of(x), BinaryWord.of(y))


def _check_row(p: FriezePattern, s: SegmentId) -> None:
    top = p.height - 2 if s.orientation is Orientation.VERTICAL else p.height - 1
    if not 0 <= s.j <= top:
        raise RowOutOfRange(f"row {s.j} outside 0..{top} for {s.orientation.name.lower()} segment")


def front_present(p: FriezePattern, s: SegmentId) -> bool:
    _check_row(p, s)
    if s.orientation is Orientation.VERTICAL:
        return bool(p.x[s.i % len(p.x)] ^ (s.j % 2))
    return bool(p.y[s.j] ^ (s.i % 2))


def back_present(p: FriezePattern, s: SegmentId) -> bool:
    # every stitch on the front has a gap behind it and vice versa
    return not front_present(p, s)


def present(p: FriezePattern, s: SegmentId, side: Side) -> bool:
    return front_present(p, s) if side is Side.FRONT else back_present(p, s)


def dual(p: FriezePattern) -> FriezePattern:
    """The pattern seen on the reverse of the fabric, as a front pattern."""
    return FriezePattern(complement(p.x), complement(p.y))


def primitive_period(z: BinaryWord) -> int:
    """Least q dividing |z| such that z is a power of its length-q prefix."""
    n = len(z)
    for q in range(1, n + 1):
        if n % q == 0 and z.bits == z.bits[:q] * (n // q):
            return q
    return n  # unreachable


def translation_period(p: FriezePattern) -> int:
    """Least positive column shift that maps the two-sided frieze onto itself.

    Odd shifts flip the phase of every horizontal line, turning ``y`` into its
    complement, which never equals ``y``; so the period is the least even
    multiple of the primitive period of ``x``.
    """
    q = primitive_period(p.x)
    return q if q % 2 == 0 else 2 * q


def segments_in_period(p: FriezePattern) -> list[SegmentId]:
    P, h = p.period, p.height
    segs = [SegmentId.v(i, j) for i in range(P) for j in range(h - 1)]
    segs += [SegmentId.h(i, j) for i in range(P) for j in range(h)]
    return segs


_LINE_RE = re.compile(r"^\s*x\s*=\s*([01]+)\s+y\s*=\s*([01]+)\s*$")


def parse_pattern_line(line: str) -> FriezePattern:
    """Parse ``x=<bits> y=<bits>`` (whitespace tolerant)."""
    m = _LINE_RE.match(line)
    if m is None:
        raise PatternSyntaxError(f"expected 'x=<bits> y=<bits>', got {line!r}")
    return new_frieze(m.group(1), m.group(2))


def read_patterns(lines: Iterator[str] | list[str]) -> Iterator[FriezePattern]:
    """Yield patterns from text lines, skipping blanks and ``#`` comments."""
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield parse_pattern_line(stripped)
