"""Word-level lemmas, proof-style word maps, and the exhaustive census.

The census classifies every ``(x, y)`` within length bounds through the
geometric oracle; the impossibility results are then checked as statements
about which labels never occur.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .classify import (
    COMPATIBLE_LABELS,
    classify,
    label_signature,
    parse_label,
)
from .isometry import Isometry
from .pattern import FriezePattern
from .word import BinaryWord, complement, reverse, rotate, words_up_to


def lemma_I_holds(z: BinaryWord) -> bool:
    """z differs from its complement, and for odd length also from its reversed complement."""
    zc = complement(z)
    return z != zc and (len(z) % 2 == 0 or z != reverse(zc))


def even_expansion(x: BinaryWord) -> BinaryWord:
    return x if len(x) % 2 == 0 else x + x


def mirror_condition_II(x: BinaryWord, anchored: bool = True) -> bool:
    """Word test for a mirror perpendicular to the frieze axis.

    ``anchored``: ``x`` is a palindrome of even length, i.e. the mirror maps
    the block of columns ``0 .. |x|-1`` onto itself.  Otherwise: some rotation
    of the even-length expansion of ``x`` is a palindrome, i.e. a mirror
    exists somewhere.
    """
    if anchored:
        return len(x) % 2 == 0 and x == reverse(x)
    X = even_expansion(x)
    return any(r == reverse(r) for r in (rotate(X, k) for k in range(len(X))))


def anchored_mirror(x: BinaryWord) -> Isometry:
    """The mirror perpendicular to a that exchanges columns ``k`` and ``|x|-1-k``."""
    return Isometry(-1, 1, 1, len(x) - 1)


def rotation_about_a_words(x: BinaryWord, y: BinaryWord) -> tuple[BinaryWord, BinaryWord]:
    """Words of the pattern after a half-turn about the frieze axis.

    A vertical line holds ``|y| - 1`` stitch slots, so turning it over shifts
    its phase exactly when ``|y|`` is odd.
    """
    return (x if len(y) % 2 == 0 else complement(x)), reverse(y)


def translated_words(x: BinaryWord, y: BinaryWord, t: int) -> tuple[BinaryWord, BinaryWord]:
    """Words after moving the frieze ``t`` columns; odd moves swap every row's phase."""
    return rotate(x, t), (y if t % 2 == 0 else complement(y))


def word_image(p: FriezePattern, sv: int, sz: int, t: int) -> tuple[BinaryWord, BinaryWord]:
    """Words of ``s -> front(g s)`` for ``g = (+1, sv, sz, t)``, negated when ``sz = -1``."""
    x, y = p.x, p.y
    if sv == -1:
        x, y = rotation_about_a_words(x, y)
    x, y = translated_words(x, y, t)
    if sz == -1:
        x, y = complement(x), complement(y)
    return x, y


def is_symmetry_words(p: FriezePattern, sv: int, sz: int, t: int) -> bool:
    """Word-level fast path for su = +1 isometries; agrees with the geometric oracle."""
    return word_image(p, sv, sz, t) == (p.x, p.y)


# ---- census ---------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    x: BinaryWord
    y: BinaryWord
    label: str
    period: int

    def csv_fields(self) -> list:
        return [str(self.x), str(self.y), self.label, self.period]


def _check_bounds(max_x: int, max_y: int) -> None:
    if max_x < 1 or max_y < 2:
        raise ValueError(f"need max_x >= 1 and max_y >= 2, got ({max_x}, {max_y})")


def _classify_block(args: tuple[int, int]) -> list[CensusRow]:
    nx, max_y = args
    rows = []
    for x in words_up_to(nx, nx):
        for y in words_up_to(max_y, 2):
            r = classify(FriezePattern(x, y))
            rows.append(CensusRow(x, y, r.label, r.period))
    return rows


def enumerate_patterns(max_x: int, max_y: int, workers: int = 1) -> Iterator[CensusRow]:
    """Classify every pattern with ``|x| <= max_x`` and ``2 <= |y| <= max_y``.

    Order is length-lexicographic in ``x``, then in ``y``, for any ``workers``.
    """
    _check_bounds(max_x, max_y)
    blocks = [(nx, max_y) for nx in range(1, max_x + 1)]
    if workers <= 1:
        for b in blocks:
            yield from _classify_block(b)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows in pool.map(_classify_block, blocks):
            yield from rows


def write_census_csv(rows: Iterable[CensusRow], out: TextIO) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["x", "y", "label", "period"])
    n = 0
    for row in rows:
        w.writerow(row.csv_fields())
        n += 1
    return n


def census_csv(max_x: int, max_y: int, workers: int = 1) -> str:
    buf = io.StringIO()
    write_census_csv(enumerate_patterns(max_x, max_y, workers), buf)
    return buf.getvalue()


def theorem_violations(label: str) -> list[int]:
    """Which impossibility results a label would contradict (empty for realizable ones)."""
    sig = label_signature(label)
    out = []
    if "m" in sig.axis_c:
        out.append(1)
    if "2" in sig.axis_a or "2" in sig.axis_b:
        out.append(2)
    if "m" in sig.axis_a and "a" in sig.axis_c:
        out.append(3)
    return out


@dataclass
class TheoremReport:
    max_x: int
    max_y: int
    patterns_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    label_counts: dict[str, int] = field(default_factory=dict)

    @property
    def observed_labels(self) -> set[str]:
        return set(self.label_counts)

    @property
    def ok(self) -> bool:
        return not self.violations and self.observed_labels <= COMPATIBLE_LABELS

    def to_record(self) -> dict:
        return {
            "bounds": {"max_x": self.max_x, "max_y": self.max_y},
            "patterns_checked": self.patterns_checked,
            "observed_labels": sorted(self.observed_labels),
            "label_counts": dict(sorted(self.label_counts.items())),
            "violations": self.violations,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2)

    def summary(self) -> str:
        lines = [
            f"bounds: |x| <= {self.max_x}, |y| <= {self.max_y}",
            f"patterns checked: {self.patterns_checked}",
            f"observed labels ({len(self.label_counts)}): " + " ".join(sorted(self.observed_labels)),
            f"violations: {len(self.violations)}",
        ]
        return "\n".join(lines)


def verify_theorems(max_x: int, max_y: int, workers: int = 1) -> TheoremReport:
    report = TheoremReport(max_x, max_y)
    cache: dict[str, list[int]] = {}
    for row in enumerate_patterns(max_x, max_y, workers):
        report.patterns_checked += 1
        report.label_counts[row.label] = report.label_counts.get(row.label, 0) + 1
        if row.label not in cache:
            cache[row.label] = theorem_violations(row.label)
        for thm in cache[row.label]:
            report.violations.append({"x": str(row.x), "y": str(row.y), "label": row.label, "theorem": thm})
    return report


def find_witness(label: str, max_x: int, max_y: int) -> FriezePattern | None:
    """First pattern in census order realising ``label``, or None within the bounds."""
    target = parse_label(label)
    _check_bounds(max_x, max_y)
    for x in words_up_to(max_x):
        for y in words_up_to(max_y, 2):
            p = FriezePattern(x, y)
            if classify(p).label == target:
                return p
    return None
