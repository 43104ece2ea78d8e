"""Two-sided frieze isometries as finite data, their action on segments, and the symmetry oracle.

An isometry is three sign flips plus a column offset.  The column coordinate
``u`` transforms affinely as ``u -> su*u + b``:

* ``su = +1``: ``b = t``, a translation by ``t`` columns (integer);
* ``su = -1``: ``b = 2c``, a mirror/half-turn through column ``c`` (integer or
  half-integer).

Internally the offset is stored as ``shift2 = 2*shift`` so every value is an
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .pattern import FriezePattern, Orientation, SegmentId, Side, present, segments_in_period

Signs = tuple[int, int, int]

IDENTITY_PART: Signs = (1, 1, 1)

# point part -> (axis, symbol for the pure element, symbol for the half-period variant)
POINT_PARTS: dict[Signs, tuple[str, str, str | None]] = {
    (1, 1, 1): ("", "translation", None),
    (-1, 1, 1): ("a", "m", None),
    (1, -1, 1): ("b", "m", "a"),
    (-1, -1, 1): ("c", "2", None),
    (1, 1, -1): ("c", "m", "a"),
    (-1, 1, -1): ("b", "2", None),
    (1, -1, -1): ("a", "2", "2'"),
    (-1, -1, -1): ("c", "rr2", None),
}

_DESCRIPTIONS = {
    (1, 1, 1): "translation",
    (-1, 1, 1): "mirror ⊥ a",
    (1, -1, 1): "mirror ⊥ b",
    (-1, -1, 1): "half-turn about c",
    (1, 1, -1): "reflection in the frieze plane",
    (-1, 1, -1): "half-turn about b",
    (1, -1, -1): "half-turn about a",
    (-1, -1, -1): "roto-reflection",
}


_MOVING = {
    (1, 1, 1): "translation",
    (1, -1, 1): "glide ⊥ b",
    (1, 1, -1): "glide in the frieze plane",
    (1, -1, -1): "screw about a",
}


def _sign(v: int) -> int:
    if v not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {v!r}")
    return v


@dataclass(frozen=True, order=True)
class Isometry:
    su: int
    sv: int
    sz: int
    shift2: int = 0

    def __post_init__(self) -> None:
        _sign(self.su), _sign(self.sv), _sign(self.sz)
        if self.su == 1 and self.shift2 % 2:
            raise ValueError("a translation part must be a whole number of columns")

    @classmethod
    def make(cls, su: int, sv: int, sz: int, shift: float = 0) -> Isometry:
        """Build from a shift given in columns (``t`` or the anchor ``c``)."""
        twice = 2 * shift
        if twice != int(twice):
            raise ValueError(f"shift must be a multiple of 1/2, got {shift!r}")
        return cls(su, sv, sz, int(twice))

    @classmethod
    def translation(cls, t: int) -> Isometry:
        return cls(1, 1, 1, 2 * t)

    @property
    def signs(self) -> Signs:
        return (self.su, self.sv, self.sz)

    @property
    def shift(self) -> int | float:
        return self.shift2 // 2 if self.shift2 % 2 == 0 else self.shift2 / 2

    @property
    def offset(self) -> int:
        """The ``b`` in ``u -> su*u + b``."""
        return self.shift2 // 2 if self.su == 1 else self.shift2

    @classmethod
    def _from_affine(cls, su: int, sv: int, sz: int, b: int) -> Isometry:
        return cls(su, sv, sz, 2 * b if su == 1 else b)

    def inverse(self) -> Isometry:
        return Isometry._from_affine(self.su, self.sv, self.sz, -self.su * self.offset)

    def reduced(self, period: int) -> Isometry:
        """Canonical representative: ``t mod P`` for translations, ``c mod P`` otherwise."""
        return Isometry(self.su, self.sv, self.sz, self.shift2 % (2 * period))

    def describe(self) -> str:
        name = _DESCRIPTIONS[self.signs]
        if self.su == -1:
            return f"{name} at column {self.shift}"
        if self.shift2 == 0:
            return "identity" if self.signs == IDENTITY_PART else name
        return f"{_MOVING.get(self.signs, name)} by {self.shift}"

    def to_record(self) -> dict:
        return {"su": self.su, "sv": self.sv, "sz": self.sz, "shift": self.shift, "label": self.describe()}

    def __str__(self) -> str:
        s = lambda v: "+1" if v > 0 else "-1"  # noqa: E731
        return f"{{su:{s(self.su)}, sv:{s(self.sv)}, sz:{s(self.sz)}, shift:{self.shift}}}"


IDENTITY = Isometry(1, 1, 1, 0)


def compose(g1: Isometry, g2: Isometry) -> Isometry:
    """``g1 . g2``: apply ``g2`` first."""
    return Isometry._from_affine(
        g1.su * g2.su, g1.sv * g2.sv, g1.sz * g2.sz, g1.su * g2.offset + g1.offset
    )


def apply(g: Isometry, s: SegmentId, side: Side, h: int) -> tuple[SegmentId, Side]:
    b = g.offset
    if s.orientation is Orientation.VERTICAL:
        i = g.su * s.i + b
        j = s.j if g.sv == 1 else h - 2 - s.j
    else:
        i = s.i + b if g.su == 1 else b - s.i - 1
        j = s.j if g.sv == 1 else h - 1 - s.j
    return SegmentId(s.orientation, i, j), side if g.sz == 1 else side.swapped()


def is_symmetry(p: FriezePattern, g: Isometry) -> bool:
    """Reference oracle: compare presence segment by segment over one period, both sides."""
    h = p.height
    for s in segments_in_period(p):
        for side in (Side.FRONT, Side.BACK):
            s2, side2 = apply(g, s, side, h)
            if present(p, s, side) != present(p, s2, side2):
                return False
    return True


def candidate_isometries(period: int) -> list[Isometry]:
    """Every isometry the symmetry search needs to test for a pattern of this period.

    Translation parts of su=+1 elements are limited to 0 and P/2 (their square
    is a lattice translation); mirror/half-turn anchors range over one period
    in half-column steps.
    """
    out = []
    for signs in POINT_PARTS:
        su, sv, sz = signs
        if su == 1:
            ts = [0] if signs == IDENTITY_PART else [0, period // 2]
            out.extend(Isometry(su, sv, sz, 2 * t) for t in ts)
        else:
            out.extend(Isometry(su, sv, sz, b) for b in range(2 * period))
    return out


def symbol_of(g: Isometry, period: int) -> tuple[str, str] | None:
    """(axis, symbol) this isometry witnesses, or None for pure translations."""
    axis, pure, half = POINT_PARTS[g.signs]
    if not axis:
        return None
    if g.su == -1:
        return axis, pure
    t = (g.shift2 // 2) % period
    if t == 0:
        return axis, pure
    if 2 * t == period and half is not None:
        return axis, half
    raise ValueError(f"translation {t} is not 0 or P/2 for period {period}")


def closure_violations(symmetries: Iterable[Isometry], period: int) -> list[tuple[Isometry, Isometry]]:
    """Pairs whose reduced composition falls outside the given (reduced) set."""
    found = {g.reduced(period) for g in symmetries}
    bad = []
    for g1 in found:
        for g2 in found:
            if compose(g1, g2).reduced(period) not in found:
                bad.append((g1, g2))
        if g1.inverse().reduced(period) not in found:
            bad.append((g1, g1))
    return bad
