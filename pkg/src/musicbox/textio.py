"""Text formats: patterns, bud generating systems and their interpretation.

A system file is line oriented, ``#`` starts a comment::

    monoid additive
    multiplicity 2
    colors b1 b2 b3
    initial b1
    rule b1 : b1 b1 {
        1 . 0
        0 . 1
    }
    interpretation { scale hirajoshi; root 9:3; tempo 128 }

``colors`` is optional; without it the colors are those used by the rules
and the initial color, sorted. ``multiplicity`` defaults to the row count of
the first rule. Braced blocks may span lines or sit on one line with rows
separated by ``;``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .bud import ColoredMultiPattern, check_color
from .budgen import BudGeneratingSystem
from .errors import FormatError, MusicBoxError
from .monoid import ADDITIVE, DegreeMonoid
from .patterns import MultiPattern
from .render import Interpretation, Note, RootedScale, Scale


def parse_pattern(text: str) -> MultiPattern:
    return MultiPattern.parse(text)


def format_pattern(m) -> str:
    if not isinstance(m, MultiPattern):
        m = MultiPattern((m,))
    return "\n".join(str(row) for row in m.rows) + "\n"


@dataclass(frozen=True)
class SystemFile:
    system: BudGeneratingSystem
    interpretation: Interpretation | None = None


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _blocks(text: str):
    """Yield ``(lineno, head, body)``; body is None for plain statements."""
    lines = text.splitlines()
    n = 0
    while n < len(lines):
        lineno, line = n + 1, _strip(lines[n])
        n += 1
        if not line:
            continue
        if "{" not in line:
            if "}" in line:
                raise FormatError("unmatched '}'", lineno)
            yield lineno, line, None
            continue
        head, rest = line.split("{", 1)
        parts = []
        while "}" not in rest:
            parts.append(rest)
            if n >= len(lines):
                raise FormatError("unterminated block", lineno)
            rest = _strip(lines[n])
            n += 1
        inner, tail = rest.split("}", 1)
        if tail.strip():
            raise FormatError(f"unexpected text after block: {tail.strip()!r}", n)
        parts.append(inner)
        yield lineno, head.strip(), "\n".join(p for p in parts if p.strip())


def _interpretation(body: str, lineno: int) -> Interpretation:
    fields = {}
    for stmt in re.split(r"[;\n]", body):
        words = stmt.split()
        if not words:
            continue
        if len(words) != 2 or words[0] not in ("scale", "root", "tempo"):
            raise FormatError(f"bad interpretation field {stmt.strip()!r}", lineno)
        fields[words[0]] = words[1]
    if "scale" not in fields or "root" not in fields:
        raise FormatError("interpretation needs a scale and a root", lineno)
    try:
        scale = Scale.parse(fields["scale"])
        root = Note.parse(fields["root"], scale.eta)
        return Interpretation(RootedScale(scale, root), int(fields.get("tempo", 128)))
    except (ValueError, MusicBoxError) as exc:
        raise FormatError(str(exc), lineno) from None


def parse_system(text: str) -> SystemFile:
    monoid: DegreeMonoid = ADDITIVE
    multiplicity = colors = initial = interp = None
    rules: list[ColoredMultiPattern] = []
    for lineno, head, body in _blocks(text):
        words = head.split()
        key, args = words[0], words[1:]
        try:
            if body is not None:
                if key == "rule":
                    rules.append(_rule(args, body, lineno))
                elif key == "interpretation" and not args:
                    interp = _interpretation(body, lineno)
                else:
                    raise FormatError(f"unknown block {head!r}", lineno)
            elif key == "monoid":
                monoid = DegreeMonoid.parse(" ".join(args))
            elif key == "multiplicity" and len(args) == 1:
                multiplicity = int(args[0])
            elif key == "colors" and args:
                colors = tuple(check_color(c) for c in args)
            elif key == "initial" and len(args) == 1:
                initial = check_color(args[0])
            else:
                raise FormatError(f"unknown statement {head!r}", lineno)
        except FormatError as exc:
            if exc.line is None:
                raise FormatError(str(exc), lineno) from None
            raise
        except (ValueError, MusicBoxError) as exc:
            raise FormatError(str(exc), lineno) from None
    if initial is None:
        raise FormatError("missing 'initial <color>'")
    if multiplicity is None:
        multiplicity = rules[0].multiplicity if rules else 1
    if colors is None:
        used = {initial} | {c for r in rules for c in (r.output, *r.inputs)}
        colors = tuple(sorted(used))
    return SystemFile(BudGeneratingSystem(monoid, multiplicity, colors, rules, initial), interp)


def _rule(args: list[str], body: str, lineno: int) -> ColoredMultiPattern:
    if len(args) < 3 or args[1] != ":":
        raise FormatError("expected 'rule <out> : <in> ... { rows }'", lineno)
    try:
        pattern = MultiPattern.parse(body)
    except FormatError as exc:
        raise FormatError(f"rule body: {exc}", lineno) from None
    return ColoredMultiPattern(check_color(args[0]), pattern, tuple(args[2:]))


def format_system(sf: SystemFile | BudGeneratingSystem) -> str:
    if isinstance(sf, BudGeneratingSystem):
        sf = SystemFile(sf)
    s = sf.system
    lines = [
        f"monoid {s.monoid}",
        f"multiplicity {s.multiplicity}",
        "colors " + " ".join(s.colors),
        f"initial {s.initial}",
    ]
    for r in s.rules:
        lines.append(f"rule {r.output} : {' '.join(r.inputs)} {{")
        lines += [f"    {row}" for row in r.body.rows]
        lines.append("}")
    if sf.interpretation is not None:
        i = sf.interpretation
        rs = i.rooted_scale
        lines.append(f"interpretation {{ scale {rs.scale}; root {rs.root}; tempo {i.tempo} }}")
    return "\n".join(lines) + "\n"
