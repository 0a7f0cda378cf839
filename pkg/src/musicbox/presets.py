"""Ready-made bud generating systems built from an input pattern.

All presets work over the additive monoid with colors b1, b2, b3 (or b1
alone) and start from b1. Rule order is fixed so seeded runs are stable.
"""

from __future__ import annotations

from .bud import ColoredMultiPattern
from .budgen import BudGeneratingSystem
from .errors import ArgumentError, NotAChordError, NotAnArpeggioError, NotFlatError
from .monoid import ADDITIVE
from .morphisms import copy_m
from .music_ops import concatenate, homogeneous_op, is_arpeggio, is_chord, is_flat
from .patterns import MultiPattern, Pattern

B1, B2, B3 = "b1", "b2", "b3"
COLORS = (B1, B2, B3)


def _rule(out: str, body, inputs: str, n: int) -> ColoredMultiPattern:
    if isinstance(body, Pattern):
        body = MultiPattern((body,))
    return ColoredMultiPattern(out, body, (inputs,) * n)


def _self_similar(p: Pattern, m: int) -> list[ColoredMultiPattern]:
    """The two rules b1 -> p(b2...) and b2 -> p(b2...), p copied on m rows."""
    body = copy_m(m, p)
    return [_rule(B1, body, B2, p.arity), _rule(B2, body, B2, p.arity)]


def temporizer_system(p: Pattern, t: int) -> BudGeneratingSystem:
    if t < 1:
        raise ArgumentError("t must be at least 1")
    rules = _self_similar(p, 1)
    rules += [_rule(B2, Pattern.from_word([0] + [None] * j), B3, 1) for j in range(1, t + 1)]
    return BudGeneratingSystem(ADDITIVE, 1, COLORS, rules, B1)


def rhythmic_system(p: Pattern, flat: Pattern) -> BudGeneratingSystem:
    if not is_flat(flat):
        raise NotFlatError(f"{flat} is not flat (all degrees must be 0)")
    rules = _self_similar(p, 1) + [_rule(B2, flat, B3, flat.arity)]
    return BudGeneratingSystem(ADDITIVE, 1, COLORS, rules, B1)


def concatenating_system(p: Pattern, op: str) -> BudGeneratingSystem:
    body = concatenate(p, homogeneous_op(op)(p))
    return BudGeneratingSystem(ADDITIVE, 1, (B1,), [_rule(B1, body, B1, 2 * p.arity)], B1)


def harmonizator_system(p: Pattern, chord: MultiPattern) -> BudGeneratingSystem:
    if not is_chord(chord):
        raise NotAChordError("expected a chord: one column, at least two rows")
    m = chord.multiplicity
    rules = _self_similar(p, m) + [ColoredMultiPattern(B2, chord, (B3,))]
    return BudGeneratingSystem(ADDITIVE, m, COLORS, rules, B1)


def arpeggiator_system(p: Pattern, arpeggio: MultiPattern) -> BudGeneratingSystem:
    if not is_arpeggio(arpeggio):
        raise NotAnArpeggioError("expected an arpeggio: one sounding beat per row, at most one per column")
    m = arpeggio.multiplicity
    rules = _self_similar(p, m) + [ColoredMultiPattern(B2, arpeggio, (B3,))]
    return BudGeneratingSystem(ADDITIVE, m, COLORS, rules, B1)


def stacking_system(p: Pattern, op: str) -> BudGeneratingSystem:
    body = MultiPattern((p, homogeneous_op(op)(p)))
    return BudGeneratingSystem(ADDITIVE, 2, (B1,), [_rule(B1, body, B1, p.arity)], B1)


PRESETS = {
    "temporizer": temporizer_system,
    "rhythmic": rhythmic_system,
    "concatenating": concatenating_system,
    "harmonizator": harmonizator_system,
    "arpeggiator": arpeggiator_system,
    "stacking": stacking_system,
}
