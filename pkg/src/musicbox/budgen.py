"""Bud generating systems and seeded random generation.

Three modes grow a colored multi-pattern from the initial colored unit:

* partial: compose one rule at one random slot per step;
* full: compose a rule on every slot at once;
* homogeneous: graft one rule on every slot of its output color.

Every run records its choices in a :class:`DerivationLog` and
:func:`replay` rebuilds the output from the log alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .bud import (
    ColoredMultiPattern,
    bud_compose,
    bud_full_compose,
    bud_homogeneous,
    check_color,
    colored_unit,
)
from .errors import (
    ArgumentError,
    EmptyRuleSetError,
    FormatError,
    InvalidSystemError,
    MusicBoxError,
    ReplayError,
)
from .monoid import DegreeMonoid
from .patterns import MultiPattern

MASK64 = (1 << 64) - 1


class Prng:
    """splitmix64 with rejection sampling for unbiased bounded draws."""

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, n: int) -> int:
        """An index in ``[0, n - 1]``."""
        if n < 1:
            raise ArgumentError(f"cannot draw from an empty range (n = {n})")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % n


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error", "warning" or "note"
    message: str

    def __str__(self) -> str:
        return f"{self.level}: {self.message}"


@dataclass(frozen=True)
class BudGeneratingSystem:
    monoid: DegreeMonoid
    multiplicity: int
    colors: tuple[str, ...]
    rules: tuple[ColoredMultiPattern, ...]
    initial: str

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(dict.fromkeys(self.colors)))
        object.__setattr__(self, "rules", tuple(self.rules))

    def rules_for(self, color: str) -> list[ColoredMultiPattern]:
        """Rules with the given output color, in rule-list order."""
        return [r for r in self.rules if r.output == color]

    def validate(self) -> list[Diagnostic]:
        diags: list[Diagnostic] = []

        def error(msg):
            diags.append(Diagnostic("error", msg))

        if self.multiplicity < 1:
            error(f"multiplicity must be positive, got {self.multiplicity}")
        for c in self.colors:
            try:
                check_color(c)
            except FormatError:
                error(f"bad color name {c!r}")
        known = set(self.colors)
        if self.initial not in known:
            error(f"initial color {self.initial} is not declared")
        for n, rule in enumerate(self.rules, start=1):
            for c in (rule.output, *rule.inputs):
                if c not in known:
                    error(f"rule {n} uses unknown color {c}")
            if rule.multiplicity != self.multiplicity:
                error(f"rule {n} has {rule.multiplicity} rows, expected {self.multiplicity}")
            for row in rule.body.rows:
                bad = [d for d in row.degrees if not self.monoid.contains(d)]
                if bad:
                    error(f"rule {n} has degree {bad[0]} outside {self.monoid}")
                    break
        if self.initial in known:
            reached = self._reachable()
            for c in self.colors:
                if c not in reached:
                    diags.append(Diagnostic("warning", f"color {c} is unreachable from {self.initial}"))
        for c in self.colors:
            if not self.rules_for(c):
                diags.append(Diagnostic("note", f"color {c} has no rules (terminal)"))
        return diags

    def _reachable(self) -> set[str]:
        seen = {self.initial}
        todo = deque([self.initial])
        while todo:
            for rule in self.rules_for(todo.popleft()):
                for c in rule.inputs:
                    if c not in seen:
                        seen.add(c)
                        todo.append(c)
        return seen

    def errors(self) -> list[Diagnostic]:
        return [d for d in self.validate() if d.level == "error"]

    def check(self) -> None:
        errs = self.errors()
        if errs:
            raise InvalidSystemError("; ".join(d.message for d in errs), errs)

    def start(self) -> ColoredMultiPattern:
        return colored_unit(self.initial, self.multiplicity, self.monoid)


# -- derivation logs --------------------------------------------------------

MODES = ("partial", "full", "homogeneous")


@dataclass
class DerivationLog:
    """Recorded choices. Rule indices are 0-based within the relevant rule
    list; partial slots are 1-based positions. ``None`` marks a skipped step
    (partial) or a skipped iteration (full)."""

    mode: str
    steps: list = field(default_factory=list)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ArgumentError(f"unknown mode {self.mode!r}")

    def format(self) -> str:
        lines = [f"mode {self.mode}"]
        for step in self.steps:
            if self.mode == "partial":
                slot, idx = step
                lines.append(f"step {slot} {'skip' if idx is None else idx}")
            elif self.mode == "full":
                lines.append("step skip" if step is None else "step " + " ".join(map(str, step)))
            else:
                lines.append(f"step {step}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> DerivationLog:
        log = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            words = raw.split("#", 1)[0].split()
            if not words:
                continue
            if log is None:
                if len(words) != 2 or words[0] != "mode" or words[1] not in MODES:
                    raise FormatError("expected 'mode partial|full|homogeneous'", lineno)
                log = cls(words[1])
                continue
            if words[0] != "step":
                raise FormatError(f"expected 'step', got {words[0]!r}", lineno)
            args = words[1:]
            try:
                log.steps.append(_parse_step(log.mode, args))
            except ValueError:
                raise FormatError(f"bad {log.mode} step {' '.join(args)!r}", lineno) from None
        if log is None:
            raise FormatError("empty derivation log")
        return log


def _parse_step(mode: str, args: list[str]):
    if mode == "partial":
        if len(args) != 2:
            raise ValueError
        return int(args[0]), None if args[1] == "skip" else int(args[1])
    if mode == "full":
        if args == ["skip"]:
            return None
        if not args:
            raise ValueError
        return tuple(int(a) for a in args)
    if len(args) != 1:
        raise ValueError
    return int(args[0])


# -- generation -------------------------------------------------------------


def generate_partial(system: BudGeneratingSystem, k: int, prng: Prng):
    if k < 0:
        raise ArgumentError("k must be nonnegative")
    system.check()
    x = system.start()
    log = DerivationLog("partial")
    for _ in range(k):
        i = prng.uniform(x.arity) + 1
        rules = system.rules_for(x.inputs[i - 1])
        if not rules:
            log.steps.append((i, None))
            continue
        idx = prng.uniform(len(rules))
        x = bud_compose(x, i, rules[idx], system.monoid)
        log.steps.append((i, idx))
    return x.body, log


def generate_full(system: BudGeneratingSystem, k: int, prng: Prng):
    if k < 0:
        raise ArgumentError("k must be nonnegative")
    system.check()
    x = system.start()
    log = DerivationLog("full")
    for _ in range(k):
        options = [system.rules_for(c) for c in x.inputs]
        if any(not rules for rules in options):
            log.steps.append(None)
            continue
        choice = tuple(prng.uniform(len(rules)) for rules in options)
        x = bud_full_compose(x, [rules[j] for rules, j in zip(options, choice)], system.monoid)
        log.steps.append(choice)
    return x.body, log


def generate_homogeneous(system: BudGeneratingSystem, k: int, prng: Prng):
    if k < 0:
        raise ArgumentError("k must be nonnegative")
    system.check()
    if not system.rules:
        raise EmptyRuleSetError("homogeneous generation needs at least one rule")
    x = system.start()
    log = DerivationLog("homogeneous")
    for _ in range(k):
        idx = prng.uniform(len(system.rules))
        x = bud_homogeneous(x, system.rules[idx], system.monoid)
        log.steps.append(idx)
    return x.body, log


GENERATORS = {
    "partial": generate_partial,
    "full": generate_full,
    "homogeneous": generate_homogeneous,
}


def generate(system: BudGeneratingSystem, mode: str, k: int, seed: int):
    if mode not in GENERATORS:
        raise ArgumentError(f"unknown mode {mode!r}")
    return GENERATORS[mode](system, k, Prng(seed))


def _pick(rules: Sequence, idx, n: int, what: str):
    if not isinstance(idx, int) or not 0 <= idx < len(rules):
        raise ReplayError(f"{what} index {idx} out of range [0, {len(rules) - 1}]", n)
    return rules[idx]


def replay(system: BudGeneratingSystem, log: DerivationLog) -> MultiPattern:
    """Rebuild the output of a logged run without any randomness."""
    system.check()
    x = system.start()
    for n, step in enumerate(log.steps, start=1):
        try:
            if log.mode == "partial":
                i, idx = step
                if not isinstance(i, int) or not 1 <= i <= x.arity:
                    raise ReplayError(f"slot {i} out of range [1, {x.arity}]", n)
                rules = system.rules_for(x.inputs[i - 1])
                if idx is None:
                    if rules:
                        raise ReplayError(f"skip recorded but color {x.inputs[i - 1]} has rules", n)
                    continue
                x = bud_compose(x, i, _pick(rules, idx, n, "rule"), system.monoid)
            elif log.mode == "full":
                options = [system.rules_for(c) for c in x.inputs]
                if step is None:
                    if all(options):
                        raise ReplayError("skip recorded but every slot has rules", n)
                    continue
                if len(step) != x.arity:
                    raise ReplayError(f"{len(step)} choices for {x.arity} slots", n)
                ys = [_pick(rules, j, n, f"slot {i} rule") for i, (rules, j) in enumerate(zip(options, step), 1)]
                x = bud_full_compose(x, ys, system.monoid)
            else:
                x = bud_homogeneous(x, _pick(system.rules, step, n, "rule"), system.monoid)
        except ReplayError:
            raise
        except (MusicBoxError, TypeError) as exc:
            raise ReplayError(str(exc), n) from None
    return x.body
