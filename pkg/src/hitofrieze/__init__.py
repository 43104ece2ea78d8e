"""Symmetry analysis of two-sided hitomezashi friezes."""

from ._kernels import BACKEND
from .classify import (
    COMPATIBLE_LABELS,
    INCOMPATIBLE_LABELS,
    CatalogueEntry,
    ClassificationReport,
    RealizationClass,
    SignatureNotInCatalogue,
    SymmetrySignature,
    UnknownLabel,
    catalogue,
    classify,
    detect_signature,
    parse_label,
    signature_to_label,
)
from .isometry import Isometry, apply, compose, is_symmetry
from .pattern import (
    DegenerateHeight,
    FriezePattern,
    Orientation,
    RowOutOfRange,
    SegmentId,
    Side,
    back_present,
    dual,
    front_present,
    new_frieze,
    segments_in_period,
    translation_period,
)
from .render import RenderOptions, render_ascii, render_svg
from .theorems import (
    enumerate_patterns,
    find_witness,
    lemma_I_holds,
    mirror_condition_II,
    rotation_about_a_words,
    verify_theorems,
)
from .word import BinaryWord, complement, reverse, rotate

__version__ = "0.1.0"
