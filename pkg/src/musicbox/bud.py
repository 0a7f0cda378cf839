"""Colored multi-patterns and color-checked composition."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ArityMismatchError, ColorMismatchError, FormatError, MultiplicityError
from .monoid import ADDITIVE, DegreeMonoid
from .patterns import MultiPattern, _check_position, full_compose

_COLOR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def check_color(name: str) -> str:
    if not isinstance(name, str) or not _COLOR_RE.match(name):
        raise FormatError(f"bad color name {name!r}")
    return name


@dataclass(frozen=True)
class ColoredMultiPattern:
    output: str
    body: MultiPattern
    inputs: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        check_color(self.output)
        for c in self.inputs:
            check_color(c)
        if len(self.inputs) != self.body.arity:
            raise ArityMismatchError(
                f"{len(self.inputs)} input colors for a body of arity {self.body.arity}"
            )

    @property
    def arity(self) -> int:
        return self.body.arity

    @property
    def multiplicity(self) -> int:
        return self.body.multiplicity

    def compose(self, i: int, other: ColoredMultiPattern, monoid: DegreeMonoid = ADDITIVE):
        return bud_compose(self, i, other, monoid)

    @classmethod
    def parse(cls, text: str) -> ColoredMultiPattern:
        parts = text.split("|")
        if len(parts) != 3:
            raise FormatError("colored pattern needs the form '<out> | <rows> | <inputs>'")
        out = parts[0].strip()
        body = MultiPattern.parse(parts[1])
        return cls(check_color(out), body, tuple(parts[2].split()))

    def __str__(self) -> str:
        return f"{self.output} | {self.body} | {' '.join(self.inputs)}"


def colored_unit(color: str, multiplicity: int = 1, monoid: DegreeMonoid = ADDITIVE):
    return ColoredMultiPattern(color, MultiPattern.unit(monoid, multiplicity), (color,))


def _check_slot(x: ColoredMultiPattern, i: int, y: ColoredMultiPattern) -> None:
    if x.inputs[i - 1] != y.output:
        raise ColorMismatchError(
            f"slot {i} expects color {x.inputs[i - 1]}, got {y.output}", slot=i
        )


def bud_compose(x: ColoredMultiPattern, i: int, y: ColoredMultiPattern, monoid: DegreeMonoid = ADDITIVE):
    i = _check_position(i, x.arity)
    _check_slot(x, i, y)
    body = x.body.compose(i, y.body, monoid)
    inputs = x.inputs[: i - 1] + y.inputs + x.inputs[i:]
    return ColoredMultiPattern(x.output, body, inputs)


def bud_full_compose(x: ColoredMultiPattern, ys: Sequence[ColoredMultiPattern], monoid: DegreeMonoid = ADDITIVE):
    """Compose on every slot at once. All slots are checked before anything is built."""
    ys = list(ys)
    if len(ys) != x.arity:
        raise ArityMismatchError(f"full composition needs {x.arity} operands, got {len(ys)}")
    for i, y in enumerate(ys, start=1):
        _check_slot(x, i, y)
    body = full_compose(x.body, [y.body for y in ys], monoid)
    inputs = tuple(c for y in ys for c in y.inputs)
    return ColoredMultiPattern(x.output, body, inputs)


def bud_homogeneous(x: ColoredMultiPattern, y: ColoredMultiPattern, monoid: DegreeMonoid = ADDITIVE):
    """Graft y on each input of x colored like its output; other inputs get units."""
    if x.multiplicity != y.multiplicity:
        raise MultiplicityError(f"multiplicities differ: {x.multiplicity} and {y.multiplicity}")
    ys = [
        y if c == y.output else colored_unit(c, x.multiplicity, monoid)
        for c in x.inputs
    ]
    return bud_full_compose(x, ys, monoid)


def pruning(x: ColoredMultiPattern) -> MultiPattern:
    return x.body
