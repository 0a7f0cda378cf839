"""Multi-patterns as an operad, colored rule systems over them, and renderers."""

from .bud import ColoredMultiPattern, bud_compose, bud_full_compose, bud_homogeneous, colored_unit, pruning
from .budgen import BudGeneratingSystem, DerivationLog, Prng, generate, replay
from .monoid import ADDITIVE, DegreeMonoid
from .patterns import (
    DegreePattern,
    MultiPattern,
    Pattern,
    RhythmPattern,
    compose,
    full_compose,
    homogeneous_compose,
)

__all__ = [
    "ADDITIVE",
    "BudGeneratingSystem",
    "ColoredMultiPattern",
    "DegreeMonoid",
    "DegreePattern",
    "DerivationLog",
    "MultiPattern",
    "Pattern",
    "Prng",
    "RhythmPattern",
    "bud_compose",
    "bud_full_compose",
    "bud_homogeneous",
    "colored_unit",
    "compose",
    "full_compose",
    "generate",
    "homogeneous_compose",
    "pruning",
    "replay",
]

__version__ = "0.1.0"
