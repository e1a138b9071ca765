"""Kohnert posets: closures of cell diagrams under Kohnert moves."""

from .closure import AnalysisReport, KohnertPoset, analyze, kd_closure
from .diagram import Cell, Diagram, apply_sequence, kohnert_move, normalize
from .errors import (
    DiagramError,
    FamilyMismatchError,
    KohnertError,
    NotPureError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    ShapeError,
    UnknownNodeError,
)
from .families import analyze_auto, detect_family
from .obstruction import ObstructionWitness, detect_any, scan_closure_for_obstruction
from .polynomial import Polynomial, is_multiplicity_free, kohnert_polynomial
from .poset import Poset, RankCertificate

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Cell",
    "Diagram",
    "DiagramError",
    "FamilyMismatchError",
    "KohnertError",
    "KohnertPoset",
    "NotPureError",
    "ObstructionWitness",
    "ParseError",
    "Polynomial",
    "Poset",
    "PreconditionError",
    "RankCertificate",
    "ResourceLimitError",
    "ShapeError",
    "UnknownNodeError",
    "analyze",
    "analyze_auto",
    "apply_sequence",
    "detect_any",
    "detect_family",
    "is_multiplicity_free",
    "kd_closure",
    "kohnert_move",
    "kohnert_polynomial",
    "normalize",
    "scan_closure_for_obstruction",
]
