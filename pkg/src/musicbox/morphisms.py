"""Operad (anti)morphisms on patterns and generator decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import CarrierError, MonoidError, MonotonicityError, MultiplicityError
from .monoid import ADDITIVE, ADDITIVE_KIND, MAX_KIND, DegreeMonoid
from .patterns import (
    BEAT,
    REST,
    DegreePattern,
    MultiPattern,
    Pattern,
    RhythmPattern,
    full_compose,
    rp_to_durations,
)


def _as_multi(x) -> MultiPattern:
    return MultiPattern((x,)) if isinstance(x, Pattern) else x


def _map_rows(x, fn: Callable[[int, Pattern], Pattern]):
    if isinstance(x, Pattern):
        return fn(0, x)
    return MultiPattern(tuple(fn(j, row) for j, row in enumerate(x.rows)))


def _map_degrees(x, fn: Callable[[int, int], int]):
    """Apply ``fn(row_index, degree)`` to every degree, leaving rhythms alone."""
    return _map_rows(x, lambda j, p: Pattern(tuple(fn(j, d) for d in p.degrees), p.rhythm))


def mirror(x):
    """Read every row right to left. Works on all four carriers."""
    if isinstance(x, DegreePattern):
        return DegreePattern(x.degrees[::-1])
    if isinstance(x, RhythmPattern):
        return RhythmPattern(x.atoms[::-1])
    return _map_rows(x, lambda _, p: Pattern(p.degrees[::-1], RhythmPattern(p.rhythm.atoms[::-1])))


def mul_alpha(alpha: int, x, per_row: Sequence[int] | None = None, monoid: DegreeMonoid = ADDITIVE):
    """Multiply degrees by ``alpha``, or by ``per_row[j]`` on row j."""
    if monoid.kind != ADDITIVE_KIND:
        raise MonoidError(f"mul is defined on the additive monoid only, not {monoid}")
    if isinstance(x, DegreePattern):
        return DegreePattern(tuple(alpha * d for d in x.degrees))
    if per_row is not None:
        per_row = tuple(per_row)
        if len(per_row) != _as_multi(x).multiplicity:
            raise MultiplicityError(
                f"{len(per_row)} factors given for multiplicity {_as_multi(x).multiplicity}"
            )
        return _map_degrees(x, lambda j, d: per_row[j] * d)
    return _map_degrees(x, lambda _, d: alpha * d)


def red_k(k: int, x, monoid: DegreeMonoid = ADDITIVE):
    """Reduce degrees mod k, landing in the cyclic monoid of order k."""
    if monoid.kind != ADDITIVE_KIND:
        raise MonoidError(f"red is defined on the additive monoid only, not {monoid}")
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(x, DegreePattern):
        return DegreePattern(tuple(d % k for d in x.degrees))
    return _map_degrees(x, lambda _, d: d % k)


@dataclass(frozen=True)
class RootedWeaklyIncreasingMap:
    """A weakly increasing map from ``[source_bound, inf)`` to ``[target_bound, inf)``
    sending ``source_bound`` to ``target_bound``.

    Only values actually seen can be checked; see :meth:`validate_on`.
    """

    source_bound: int
    target_bound: int
    fn: Callable[[int], int]

    @classmethod
    def shift(cls, source_bound: int, delta: int) -> RootedWeaklyIncreasingMap:
        return cls(source_bound, source_bound + delta, lambda d: d + delta)

    @classmethod
    def from_table(cls, source_bound: int, target_bound: int, table: dict[int, int]):
        return cls(source_bound, target_bound, table.__getitem__)

    def __call__(self, d: int) -> int:
        return self.fn(d)

    def validate_on(self, degrees: Iterable[int]) -> None:
        points = sorted(set(degrees) | {self.source_bound})
        if points[0] < self.source_bound:
            raise CarrierError(f"degree {points[0]} below lower bound {self.source_bound}")
        if self(self.source_bound) != self.target_bound:
            raise MonotonicityError(
                f"theta({self.source_bound}) = {self(self.source_bound)}, expected {self.target_bound}"
            )
        images = [self(d) for d in points]
        for (a, fa), (b, fb) in zip(zip(points, images), zip(points[1:], images[1:])):
            if fa > fb:
                raise MonotonicityError(f"theta({a}) = {fa} > theta({b}) = {fb}")


def incr_theta(theta: RootedWeaklyIncreasingMap, x, monoid: DegreeMonoid | None = None):
    """Apply a rooted weakly increasing map to every degree (max monoids)."""
    monoid = monoid or DegreeMonoid.max_bounded(theta.source_bound)
    if monoid.kind != MAX_KIND or monoid.param != theta.source_bound:
        raise MonoidError(f"incr needs the max monoid with bound {theta.source_bound}, not {monoid}")
    if isinstance(x, DegreePattern):
        theta.validate_on(x.degrees)
        return DegreePattern(tuple(theta(d) for d in x.degrees))
    theta.validate_on(d for row in _as_multi(x).rows for d in row.degrees)
    return _map_degrees(x, lambda _, d: theta(d))


def dil_beta(beta: int, x):
    """Replace every rest by ``beta`` rests (``beta = 0`` drops them)."""
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    if isinstance(x, RhythmPattern):
        return RhythmPattern(x.atoms.replace(REST, REST * beta))
    return _map_rows(x, lambda _, p: Pattern(p.degrees, dil_beta(beta, p.rhythm)))


def copy_m(m: int, p: Pattern) -> MultiPattern:
    if m < 1:
        raise ValueError("m must be positive")
    return MultiPattern((p,) * m)


def embed_dp(d: DegreePattern, monoid: DegreeMonoid = ADDITIVE) -> Pattern:
    return Pattern(d.degrees, RhythmPattern(BEAT * d.arity))


def embed_rp(r: RhythmPattern, monoid: DegreeMonoid = ADDITIVE) -> Pattern:
    return Pattern((monoid.unit,) * r.arity, r)


# -- decompositions ---------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    """A composition tree: ``generator`` with one subtree per input.

    A ``None`` child is an open input. The empty tree (the unit) is ``None``
    itself, never a :class:`Tree`.
    """

    generator: object
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != self.generator.arity:
            raise ValueError(
                f"generator of arity {self.generator.arity} given {len(self.children)} children"
            )

    def nodes(self):
        """Generators in prefix order."""
        yield self.generator
        for child in self.children:
            if child is not None:
                yield from child.nodes()

    def __str__(self) -> str:
        if all(c is None for c in self.children):
            return f"[{self.generator}]"
        inner = ", ".join("_" if c is None else str(c) for c in self.children)
        return f"[{self.generator}]({inner})"


def evaluate(tree: Tree | None, unit, monoid: DegreeMonoid = ADDITIVE):
    """Compose a tree bottom-up; ``unit`` fills open inputs."""
    if tree is None:
        return unit
    args = [evaluate(child, unit, monoid) for child in tree.children]
    return full_compose(tree.generator, args, monoid)


def _chain(generators: Sequence) -> Tree | None:
    """Left comb ``g1 o_1 g2 o_1 ... o_1 gk`` of arity-one generators."""
    tree = None
    for g in reversed(generators):
        tree = Tree(g, (tree,))
    return tree


def _comb(pair, slots: Sequence[Tree | None]) -> Tree | None:
    """The (n-1)-fold chain of the binary generator, with the slot trees grafted on."""
    tree = slots[0]
    for slot in slots[1:]:
        tree = Tree(pair, (tree, slot))
    return tree


RP_REST_BEAT = RhythmPattern(REST + BEAT)
RP_BEAT_REST = RhythmPattern(BEAT + REST)
RP_BEAT_BEAT = RhythmPattern(BEAT + BEAT)


def decompose_rp(r: RhythmPattern) -> Tree | None:
    """Tree over the generators rest-beat, beat-rest and beat-beat evaluating to r."""
    gaps = rp_to_durations(r)
    slots = [_chain([RP_REST_BEAT] * gaps[0] + [RP_BEAT_REST] * gaps[1])]
    slots += [_chain([RP_BEAT_REST] * g) for g in gaps[2:]]
    return _comb(RP_BEAT_BEAT, slots)


def pattern_generators(monoid: DegreeMonoid) -> dict[str, Pattern]:
    """The finite part of the minimal generating set of the pattern operad.

    Degree generators are included for additive and cyclic monoids; for a max
    monoid every non-unit degree is a generator, so only the three rhythmic
    generators are listed.
    """
    e = monoid.unit
    gens = {
        "rest_unit": Pattern.from_word([None, e]),
        "unit_rest": Pattern.from_word([e, None]),
        "unit_unit": Pattern.from_word([e, e]),
    }
    for g in monoid.generators() or ():
        gens[str(g)] = Pattern.from_word([g])
    return gens


def _degree_chain(d: int, monoid: DegreeMonoid) -> list[Pattern]:
    if d == monoid.unit:
        return []
    if monoid.kind == ADDITIVE_KIND:
        step = 1 if d > 0 else -1
        return [Pattern.from_word([step])] * abs(d)
    if monoid.kind == MAX_KIND:
        return [Pattern.from_word([d])]
    return [Pattern.from_word([1])] * d


def decompose_pattern(p: Pattern, monoid: DegreeMonoid = ADDITIVE) -> Tree | None:
    """Tree over the minimal generating set of the pattern operad evaluating to p."""
    for d in p.degrees:
        monoid.check(d)
    gens = pattern_generators(monoid)
    gaps = rp_to_durations(p.rhythm)
    slots = []
    for j, d in enumerate(p.degrees):
        prefix = [gens["rest_unit"]] * gaps[0] if j == 0 else []
        suffix = [gens["unit_rest"]] * gaps[j + 1]
        slots.append(_chain(prefix + suffix + _degree_chain(d, monoid)))
    return _comb(gens["unit_unit"], slots)

