"""Symmetry detection, label formatting and the 31-entry two-sided frieze catalogue.

Symbols per axis, written ``axis:symbol``:

* ``a:m`` mirror perpendicular to a, ``a:2`` half-turn about a, ``a:2'`` screw;
* ``b:m`` mirror perpendicular to b, ``b:a`` its glide, ``b:2`` half-turn about b;
* ``c:m`` reflection in the frieze plane, ``c:a`` its glide, ``c:2`` half-turn
  about c, ``c:rr2`` roto-reflection.

A group label shows a generating subset of its symbols (p11[2a] also contains
the roto-reflection, for instance), so detection matches the *complete* set of
symbols found against each catalogue entry, and the reported signature is the
label's displayed subset.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .isometry import Isometry, candidate_isometries, symbol_of
from .pattern import FriezePattern


class SignatureNotInCatalogue(RuntimeError):
    """Detected symmetries match no two-sided frieze group; indicates a bug."""


class UnknownLabel(ValueError):
    pass


class RealizationClass(enum.Enum):
    HITOMEZASHI_ONLY = "HitomezashiOnly"
    CELTIC_ONLY = "CelticOnly"
    BOTH = "Both"
    NEITHER = "Neither"


AXES = ("a", "b", "c")


@dataclass(frozen=True)
class CatalogueEntry:
    label: str
    symbols: frozenset[str]  # every axis:symbol present in the group
    hitomezashi_realizable: bool
    celtic_realizable: bool
    excluded_by: tuple[int, ...] = ()  # theorems ruling it out in hitomezashi

    @property
    def realization_class(self) -> RealizationClass:
        if self.hitomezashi_realizable and self.celtic_realizable:
            return RealizationClass.BOTH
        if self.hitomezashi_realizable:
            return RealizationClass.HITOMEZASHI_ONLY
        if self.celtic_realizable:
            return RealizationClass.CELTIC_ONLY
        return RealizationClass.NEITHER

    def to_record(self) -> dict:
        return {
            "label": self.label,
            "hitomezashi_realizable": self.hitomezashi_realizable,
            "celtic_realizable": self.celtic_realizable,
            "realization_class": self.realization_class.value,
            "excluded_by": list(self.excluded_by),
        }


def _e(label, symbols, hito, celtic, excluded=()):
    return CatalogueEntry(label, frozenset(symbols.split()), hito, celtic, tuple(excluded))


_I = "c:rr2"
_CATALOGUE: tuple[CatalogueEntry, ...] = (
    # realised in hitomezashi
    _e("p111", "", True, True),
    _e("p112", "c:2", True, True),
    _e("p1a1", "b:a", True, True),
    _e("p11~2", _I, True, True),
    _e("p2'11", "a:2'", True, True),
    _e("p11a", "c:a", True, False),
    _e("p11[2a]", f"c:2 c:a {_I}", True, False),
    _e("p1m1", "b:m", True, False),
    _e("pm11", "a:m", True, False),
    _e("p[2'm]11", f"a:m a:2' {_I}", True, False),
    _e("p2'ma", "a:2' b:m c:a", True, False),
    _e("pmm2", "a:m b:m c:2", True, False),
    _e("pma2", "a:m b:a c:2", True, False),
    # ruled out
    _e("p121", "b:2", False, True, [2]),
    _e("p1[2a]1", f"b:2 b:a {_I}", False, True, [2]),
    _e("p211", "a:2", False, True, [2]),
    _e("p222", "a:2 b:2 c:2", False, True, [2]),
    _e("p2'22", "a:2' b:2 c:2", False, True, [2]),
    _e("p2aa", "a:2 b:a c:a", False, False, [2]),
    _e("p[2m]11", f"a:m a:2 {_I}", False, False, [2]),
    _e("p1[2m]1", f"b:2 b:m {_I}", False, False, [2]),
    _e("pm2a", "a:m b:2 c:a", False, False, [2, 3]),
    _e("pmma", f"a:m b:m c:a c:2 b:2 a:2' {_I}", False, False, [3]),
    _e("pmaa", f"a:m b:a c:a c:2 b:2 a:2 {_I}", False, False, [3]),
    _e("p11m", "c:m", False, False, [1]),
    _e("p2mm", "a:2 b:m c:m", False, False, [1, 2]),
    _e("p11[2m]", f"c:2 c:m {_I}", False, False, [1]),
    _e("p2'am", "a:2' b:a c:m", False, False, [1]),
    _e("pm2m", "a:m b:2 c:m", False, False, [1, 2]),
    _e("pmmm", f"a:m b:m c:m c:2 b:2 a:2 {_I}", False, False, [1]),
    _e("pmam", f"a:m b:a c:m c:2 b:2 a:2' {_I}", False, False, [1]),
)

_BY_LABEL = {e.label: e for e in _CATALOGUE}
_BY_SYMBOLS = {e.symbols: e for e in _CATALOGUE}

COMPATIBLE_LABELS = frozenset(e.label for e in _CATALOGUE if e.hitomezashi_realizable)
INCOMPATIBLE_LABELS = frozenset(e.label for e in _CATALOGUE if not e.hitomezashi_realizable)


def catalogue() -> tuple[CatalogueEntry, ...]:
    return _CATALOGUE


def entry(label: str) -> CatalogueEntry:
    return _BY_LABEL[parse_label(label)]


# ---- label text -------------------------------------------------------------

_ROTATIONS = ("2", "2'", "rr2")
_RENDER = {"rr2": "~2"}


def _render_position(symbols) -> str:
    syms = sorted(symbols, key=lambda s: (s not in _ROTATIONS, s))
    text = "".join(_RENDER.get(s, s) for s in syms)
    if not syms:
        return "1"
    return text if len(syms) == 1 else f"[{text}]"


_TOKEN = re.compile(r"~2|2'|[2ma1]")


def _normalize(text: str) -> str:
    t = text.strip().replace("$", "").replace(" ", "")
    t = t.replace("\u2032", "'").replace("^\\prime", "'").replace("^{\\prime}", "'")
    t = t.replace("\\textrm", "").replace("\\mathrm", "")
    t = re.sub(r"\\tilde\{?2\}?", "~2", t)
    t = t.replace("2\u0303", "~2").replace("\u02dc2", "~2")
    # \stackrel{top}{bottom} -> [top bottom]
    t = re.sub(r"\\stackrel\{([^{}]*)\}\{\{?([^{}]*)\}?\}", r"[\1\2]", t)
    t = t.replace("{", "").replace("}", "")
    if t[:1] == "P":
        t = "p" + t[1:]
    return t


def _split_positions(text: str) -> list[frozenset[str]]:
    t = _normalize(text)
    if not t.startswith("p"):
        raise UnknownLabel(f"label must start with 'p': {text!r}")
    body, positions = t[1:], []
    while body:
        if body[0] == "[":
            end = body.find("]")
            if end < 0:
                raise UnknownLabel(f"unbalanced bracket in {text!r}")
            chunk, body = body[1:end], body[end + 1 :]
        else:
            m = _TOKEN.match(body)
            if m is None:
                raise UnknownLabel(f"cannot parse label {text!r}")
            chunk, body = m.group(0), body[m.end() :]
        toks = _TOKEN.findall(chunk)
        if "".join(toks) != chunk:
            raise UnknownLabel(f"cannot parse label {text!r}")
        positions.append(frozenset("rr2" if s == "~2" else s for s in toks if s != "1"))
    if len(positions) != 3:
        raise UnknownLabel(f"label needs three positions after 'p': {text!r}")
    return positions


def parse_label(text: str) -> str:
    """Canonical ASCII form of a label given in ASCII, LaTeX or Unicode notation."""
    positions = _split_positions(text)
    label = "p" + "".join(_render_position(s) for s in positions)
    if label not in _BY_LABEL:
        raise UnknownLabel(f"{text!r} is not one of the 31 two-sided frieze groups")
    return label


# ---- signatures ---------------------------------------------------------------


@dataclass(frozen=True)
class SymmetrySignature:
    axis_a: frozenset[str] = frozenset()
    axis_b: frozenset[str] = frozenset()
    axis_c: frozenset[str] = frozenset()
    anchors: dict[str, Isometry] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_symbols(cls, symbols, anchors=None) -> SymmetrySignature:
        per_axis = {ax: frozenset(s.split(":")[1] for s in symbols if s.startswith(ax + ":")) for ax in AXES}
        return cls(per_axis["a"], per_axis["b"], per_axis["c"], dict(anchors or {}))

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(
            f"{ax}:{s}" for ax, syms in zip(AXES, (self.axis_a, self.axis_b, self.axis_c)) for s in syms
        )

    def to_record(self) -> dict:
        key = lambda s: (s not in _ROTATIONS, s)  # noqa: E731
        return {
            "a": sorted(self.axis_a, key=key),
            "b": sorted(self.axis_b, key=key),
            "c": sorted(self.axis_c, key=key),
        }


def signature_to_label(sig: SymmetrySignature) -> str:
    """Render positions a, b, c; accepts either a label's displayed symbols or a full symbol set."""
    label = "p" + "".join(_render_position(s) for s in (sig.axis_a, sig.axis_b, sig.axis_c))
    if label in _BY_LABEL:
        return label
    e = _BY_SYMBOLS.get(sig.symbols)
    if e is None:
        raise SignatureNotInCatalogue(f"no two-sided frieze group has symbols {sorted(sig.symbols)}")
    return e.label


def label_signature(label: str) -> SymmetrySignature:
    a, b, c = _split_positions(parse_label(label))
    return SymmetrySignature(a, b, c)


@lru_cache(maxsize=None)
def _candidate_arrays(period: int):
    cands = candidate_isometries(period)
    arr = np.array([(g.su, g.sv, g.sz, g.shift2) for g in cands], dtype=np.int64)
    return cands, arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy(), arr[:, 3].copy()


def symmetries(p: FriezePattern, backend: str | None = None) -> list[Isometry]:
    """All candidate isometries (shifts in the canonical search range) that are symmetries of p."""
    cands, su, sv, sz, s2 = _candidate_arrays(p.period)
    V, H = p.presence_arrays
    mask = _kernels.symmetry_mask(V, H, su, sv, sz, s2, backend=backend)
    return [cands[k] for k in np.flatnonzero(mask)]


def holds(p: FriezePattern, isometries: list[Isometry], backend: str | None = None) -> np.ndarray:
    """Kernel symmetry test for arbitrary isometries (any shift); one bool per isometry."""
    arr = np.array([(g.su, g.sv, g.sz, g.shift2) for g in isometries], dtype=np.int64).reshape(-1, 4)
    V, H = p.presence_arrays
    cols = [arr[:, k].copy() for k in range(4)]
    return _kernels.symmetry_mask(V, H, *cols, backend=backend)


def detected_symbols(p: FriezePattern, backend: str | None = None) -> dict[str, Isometry]:
    """Every ``axis:symbol`` found, mapped to its first witnessing isometry."""
    P = p.period
    found: dict[str, Isometry] = {}
    for g in symmetries(p, backend):
        sym = symbol_of(g, P)
        if sym is not None:
            found.setdefault(f"{sym[0]}:{sym[1]}", g)
    if "a:2" in found and "a:2'" in found:
        raise SignatureNotInCatalogue("half-turn and screw about a together imply a shorter period")
    for ax in ("b", "c"):
        if f"{ax}:m" in found:
            found.pop(f"{ax}:a", None)
    return found


def detect_signature(p: FriezePattern, backend: str | None = None) -> SymmetrySignature:
    found = detected_symbols(p, backend)
    e = _BY_SYMBOLS.get(frozenset(found))
    if e is None:
        raise SignatureNotInCatalogue(f"{p}: symbols {sorted(found)} match no catalogue group")
    shown = label_signature(e.label)
    return SymmetrySignature(shown.axis_a, shown.axis_b, shown.axis_c, found)


@dataclass(frozen=True)
class ClassificationReport:
    pattern: FriezePattern
    label: str
    period: int
    signature: SymmetrySignature

    @property
    def anchors(self) -> dict[str, Isometry]:
        return self.signature.anchors

    def to_record(self) -> dict:
        return {
            "x": str(self.pattern.x),
            "y": str(self.pattern.y),
            "label": self.label,
            "period": self.period,
            "signature": self.signature.to_record(),
            "anchors": {k: g.to_record() for k, g in sorted(self.anchors.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), ensure_ascii=False)


def classify(p: FriezePattern, backend: str | None = None) -> ClassificationReport:
    sig = detect_signature(p, backend)
    return ClassificationReport(p, signature_to_label(sig), p.period, sig)


def label_of(p: FriezePattern, backend: str | None = None) -> str:
    return classify(p, backend).label
