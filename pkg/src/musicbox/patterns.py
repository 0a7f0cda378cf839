"""Degree patterns, rhythm patterns, patterns and multi-patterns.

All four are immutable values sharing the same composition contract::

    x.compose(i, y, monoid)    # graft y onto the i-th input of x, 1-based
    x.arity                    # number of inputs

so that the generic :func:`full_compose` and :func:`homogeneous_compose`
below work on any of them. Rhythm patterns ignore the monoid.

Text form of a pattern is the concise word: degrees as decimal integers,
rests as ``.``, tokens separated by spaces (``0 2 . 1 . 0 4``). Multi-pattern
rows are joined with `` ; ``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArityMismatchError,
    CarrierError,
    FormatError,
    MultiplicityError,
    PositionError,
)
from .monoid import ADDITIVE, DegreeMonoid

REST = "."
BEAT = "x"

_REST_ALIASES = {".", "□", "_"}
_BEAT_ALIASES = {"x", "■", "*"}


def _check_position(i, arity: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int):
        raise PositionError(f"position must be an integer, got {i!r}")
    if not 1 <= i <= arity:
        raise PositionError(f"position {i} out of range [1, {arity}]")
    return i


def _check_carrier(degrees: Iterable[int], monoid: DegreeMonoid) -> None:
    for d in degrees:
        if not monoid.contains(d):
            raise CarrierError(f"degree {d!r} is not in the carrier of {monoid}")


@dataclass(frozen=True)
class DegreePattern:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.degrees:
            raise ValueError("a degree pattern is a nonempty word")
        for d in self.degrees:
            if isinstance(d, bool) or not isinstance(d, int):
                raise TypeError(f"degrees are integers, got {d!r}")

    @classmethod
    def unit(cls, monoid: DegreeMonoid = ADDITIVE) -> DegreePattern:
        return cls((monoid.unit,))

    @property
    def arity(self) -> int:
        return len(self.degrees)

    def compose(self, i: int, other: DegreePattern, monoid: DegreeMonoid = ADDITIVE) -> DegreePattern:
        _check_position(i, self.arity)
        _check_carrier(self.degrees, monoid)
        _check_carrier(other.degrees, monoid)
        d = self.degrees[i - 1]
        middle = tuple(monoid.combine(d, e) for e in other.degrees)
        return DegreePattern(self.degrees[: i - 1] + middle + self.degrees[i:])

    def __str__(self) -> str:
        return " ".join(map(str, self.degrees))


@dataclass(frozen=True)
class RhythmPattern:
    """A word over rests (``.``) and beats (``x``) with at least one beat."""

    atoms: str

    def __post_init__(self):
        atoms = "".join(
            REST if a in _REST_ALIASES else BEAT if a in _BEAT_ALIASES else a for a in self.atoms
        )
        bad = set(atoms) - {REST, BEAT}
        if bad:
            raise ValueError(f"rhythm atoms must be rests or beats, got {sorted(bad)}")
        if BEAT not in atoms:
            raise ValueError("a rhythm pattern needs at least one beat")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def unit(cls) -> RhythmPattern:
        return cls(BEAT)

    @property
    def arity(self) -> int:
        return self.atoms.count(BEAT)

    @property
    def length(self) -> int:
        return len(self.atoms)

    def beat_index(self, i: int) -> int:
        """0-based atom index of the i-th beat."""
        _check_position(i, self.arity)
        pos = -1
        for _ in range(i):
            pos = self.atoms.index(BEAT, pos + 1)
        return pos

    def compose(self, i: int, other: RhythmPattern, monoid: DegreeMonoid | None = None) -> RhythmPattern:
        pos = self.beat_index(i)
        return RhythmPattern(self.atoms[:pos] + other.atoms + self.atoms[pos + 1 :])

    def durations(self) -> tuple[int, ...]:
        return rp_to_durations(self)

    def __str__(self) -> str:
        return self.atoms.replace(REST, "□").replace(BEAT, "■")


def rp_to_durations(r: RhythmPattern) -> tuple[int, ...]:
    """Duration sequence: rest counts before the first beat, after each beat."""
    return tuple(len(run) for run in r.atoms.split(BEAT))


def durations_to_rp(gaps: Sequence[int]) -> RhythmPattern:
    gaps = tuple(gaps)
    if len(gaps) < 2:
        raise FormatError(f"a duration sequence has at least two entries, got {gaps}")
    if any(isinstance(g, bool) or not isinstance(g, int) or g < 0 for g in gaps):
        raise FormatError(f"durations are nonnegative integers, got {gaps}")
    return RhythmPattern(BEAT.join(REST * g for g in gaps))


@dataclass(frozen=True)
class Pattern:
    """A degree pattern and a rhythm pattern of the same arity."""

    degrees: tuple[int, ...]
    rhythm: RhythmPattern

    def __post_init__(self):
        object.__setattr__(self, "degrees", DegreePattern(self.degrees).degrees)
        if isinstance(self.rhythm, str):
            object.__setattr__(self, "rhythm", RhythmPattern(self.rhythm))
        if len(self.degrees) != self.rhythm.arity:
            raise ArityMismatchError(
                f"degree pattern has arity {len(self.degrees)} but rhythm has arity {self.rhythm.arity}"
            )

    @classmethod
    def unit(cls, monoid: DegreeMonoid = ADDITIVE) -> Pattern:
        return cls((monoid.unit,), RhythmPattern.unit())

    @classmethod
    def from_word(cls, word: Iterable[int | None]) -> Pattern:
        """Build from the concise word, ``None`` standing for a rest."""
        word = list(word)
        degrees = tuple(a for a in word if a is not None)
        atoms = "".join(REST if a is None else BEAT for a in word)
        if not degrees:
            raise FormatError("a pattern needs at least one degree")
        return cls(degrees, RhythmPattern(atoms))

    @classmethod
    def parse(cls, text: str) -> Pattern:
        return cls.from_word(_parse_word(text))

    @property
    def arity(self) -> int:
        return len(self.degrees)

    @property
    def length(self) -> int:
        return self.rhythm.length

    @property
    def degree_pattern(self) -> DegreePattern:
        return DegreePattern(self.degrees)

    @property
    def word(self) -> tuple[int | None, ...]:
        it = iter(self.degrees)
        return tuple(next(it) if a == BEAT else None for a in self.rhythm.atoms)

    def compose(self, i: int, other: Pattern, monoid: DegreeMonoid = ADDITIVE) -> Pattern:
        degrees = self.degree_pattern.compose(i, other.degree_pattern, monoid)
        rhythm = self.rhythm.compose(i, other.rhythm)
        return Pattern(degrees.degrees, rhythm)

    def __str__(self) -> str:
        return " ".join(REST if a is None else str(a) for a in self.word)


def _parse_word(text: str, line: int | None = None) -> list[int | None]:
    word: list[int | None] = []
    for match in re.finditer(r"\S+", text):
        tok = match.group()
        if tok in _REST_ALIASES:
            word.append(None)
            continue
        try:
            word.append(int(tok.replace("¯", "-")))
        except ValueError:
            raise FormatError(f"bad token {tok!r}", line, match.start() + 1) from None
    if not word:
        raise FormatError("empty pattern", line)
    if all(a is None for a in word):
        raise FormatError("a pattern needs at least one degree (beat)", line)
    return word


@dataclass(frozen=True)
class MultiPattern:
    """Stacked patterns of equal arity and equal length, one voice per row."""

    rows: tuple[Pattern, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise ValueError("a multi-pattern has at least one row")
        object.__setattr__(self, "rows", rows)
        first = rows[0]
        for j, row in enumerate(rows[1:], start=2):
            if row.arity != first.arity:
                raise ArityMismatchError(f"row {j} has arity {row.arity}, row 1 has arity {first.arity}")
            if row.length != first.length:
                raise ArityMismatchError(f"row {j} has length {row.length}, row 1 has length {first.length}")

    @classmethod
    def unit(cls, monoid: DegreeMonoid = ADDITIVE, multiplicity: int = 1) -> MultiPattern:
        if multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        return cls((Pattern.unit(monoid),) * multiplicity)

    @classmethod
    def of(cls, *rows: Pattern | str) -> MultiPattern:
        return cls(tuple(Pattern.parse(r) if isinstance(r, str) else r for r in rows))

    @classmethod
    def parse(cls, text: str) -> MultiPattern:
        """Parse rows separated by ``;`` or newlines; blank lines and ``#`` comments ignored."""
        rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            for chunk in body.split(";"):
                if chunk.strip():
                    rows.append((lineno, chunk))
                elif ";" in body:
                    raise FormatError("empty row", lineno)
        if not rows:
            raise FormatError("no pattern rows")
        patterns = [Pattern.from_word(_parse_word(chunk, lineno)) for lineno, chunk in rows]
        try:
            return cls(tuple(patterns))
        except ArityMismatchError as exc:
            raise FormatError(str(exc)) from None

    @property
    def multiplicity(self) -> int:
        return len(self.rows)

    @property
    def arity(self) -> int:
        return self.rows[0].arity

    @property
    def length(self) -> int:
        return self.rows[0].length

    def __getitem__(self, ij: tuple[int, int]) -> int | None:
        """1-based ``m[i, j]``: the j-th letter of row i (None for a rest)."""
        i, j = ij
        return self.rows[i - 1].word[j - 1]

    def compose(self, i: int, other: MultiPattern, monoid: DegreeMonoid = ADDITIVE) -> MultiPattern:
        if self.multiplicity != other.multiplicity:
            raise MultiplicityError(
                f"multiplicities differ: {self.multiplicity} and {other.multiplicity}"
            )
        _check_position(i, self.arity)
        return MultiPattern(tuple(x.compose(i, y, monoid) for x, y in zip(self.rows, other.rows)))

    def __str__(self) -> str:
        return " ; ".join(map(str, self.rows))


def compose(x, i: int, y, monoid: DegreeMonoid = ADDITIVE):
    """Partial composition ``x o_i y`` on any of the four carriers."""
    return x.compose(i, y, monoid)


def full_compose_fold(x, ys: Sequence, monoid: DegreeMonoid = ADDITIVE):
    """``x o [y1, ..., yn]`` as the right-to-left fold of partial compositions."""
    ys = list(ys)
    if len(ys) != x.arity:
        raise ArityMismatchError(f"full composition needs {x.arity} operands, got {len(ys)}")
    for i in range(len(ys), 0, -1):
        x = x.compose(i, ys[i - 1], monoid)
    return x


def _splice_pattern(p: Pattern, ys: Sequence[Pattern], monoid: DegreeMonoid) -> Pattern:
    word: list[int | None] = []
    k = 0
    for a in p.word:
        if a is None:
            word.append(None)
            continue
        for b in ys[k].word:
            word.append(None if b is None else monoid.combine(a, b))
        k += 1
    return Pattern.from_word(word)


def full_compose(x, ys: Sequence, monoid: DegreeMonoid = ADDITIVE):
    """Full composition ``x o [y1, ..., yn]``.

    Patterns and multi-patterns are spliced in a single pass over the word;
    other carriers go through :func:`full_compose_fold`. Both give the same
    value (checked in the test suite).
    """
    ys = list(ys)
    if len(ys) != x.arity:
        raise ArityMismatchError(f"full composition needs {x.arity} operands, got {len(ys)}")
    if isinstance(x, MultiPattern):
        for y in ys:
            if y.multiplicity != x.multiplicity:
                raise MultiplicityError(
                    f"multiplicities differ: {x.multiplicity} and {y.multiplicity}"
                )
        for p in x.rows:
            _check_carrier(p.degrees, monoid)
        for y in ys:
            for p in y.rows:
                _check_carrier(p.degrees, monoid)
        return MultiPattern(
            tuple(_splice_pattern(row, [y.rows[j] for y in ys], monoid) for j, row in enumerate(x.rows))
        )
    if isinstance(x, Pattern):
        _check_carrier(x.degrees, monoid)
        for y in ys:
            _check_carrier(y.degrees, monoid)
        return _splice_pattern(x, ys, monoid)
    return full_compose_fold(x, ys, monoid)


def homogeneous_compose(x, y, monoid: DegreeMonoid = ADDITIVE):
    """``x (.) y``: y grafted onto every input of x."""
    return full_compose(x, [y] * x.arity, monoid)
