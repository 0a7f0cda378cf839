"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from musicbox.bud import ColoredMultiPattern
from musicbox.monoid import DegreeMonoid
from musicbox.patterns import DegreePattern, MultiPattern, Pattern, RhythmPattern

MAX_ARITY = 6
MAX_LENGTH = 8

monoids = st.one_of(
    st.just(DegreeMonoid.additive()),
    st.integers(1, 6).map(DegreeMonoid.cyclic),
    st.integers(-3, 3).map(DegreeMonoid.max_bounded),
)


def degrees(m: DegreeMonoid):
    if m.kind == "additive":
        return st.integers(-12, 12)
    if m.kind == "cyclic":
        return st.integers(0, m.param - 1)
    return st.integers(m.param, m.param + 9)


def degree_patterns(m: DegreeMonoid, max_arity: int = MAX_ARITY):
    return st.lists(degrees(m), min_size=1, max_size=max_arity).map(lambda ds: DegreePattern(tuple(ds)))


@st.composite
def rhythm_patterns(draw, arity=None, length=None, max_arity=MAX_ARITY, max_length=MAX_LENGTH):
    a = arity if arity is not None else draw(st.integers(1, max_arity))
    n = length if length is not None else draw(st.integers(a, max(a, max_length)))
    beats = set(draw(st.permutations(range(n)))[:a])
    return RhythmPattern("".join("x" if j in beats else "." for j in range(n)))


@st.composite
def patterns(draw, m: DegreeMonoid, arity=None, length=None, max_arity=MAX_ARITY, max_length=MAX_LENGTH):
    r = draw(rhythm_patterns(arity, length, max_arity, max_length))
    ds = draw(st.lists(degrees(m), min_size=r.arity, max_size=r.arity))
    return Pattern(tuple(ds), r)


@st.composite
def multi_patterns(draw, m: DegreeMonoid, multiplicity: int, max_arity=MAX_ARITY, max_length=MAX_LENGTH):
    a = draw(st.integers(1, max_arity))
    n = draw(st.integers(a, max(a, max_length)))
    return MultiPattern(tuple(draw(patterns(m, a, n)) for _ in range(multiplicity)))


@st.composite
def colored(draw, m: DegreeMonoid, multiplicity: int, colors=("a", "b", "c"), output=None):
    body = draw(multi_patterns(m, multiplicity, max_arity=4, max_length=6))
    out = output if output is not None else draw(st.sampled_from(colors))
    ins = draw(st.lists(st.sampled_from(colors), min_size=body.arity, max_size=body.arity))
    return ColoredMultiPattern(out, body, tuple(ins))


def carriers(monoid: DegreeMonoid, kind: str, multiplicity: int = 1):
    """Strategy for one carrier: 'dp', 'rp', 'p' or 'mp'."""
    if kind == "dp":
        return degree_patterns(monoid)
    if kind == "rp":
        return rhythm_patterns()
    if kind == "p":
        return patterns(monoid)
    return multi_patterns(monoid, multiplicity)


def unit_of(x, monoid: DegreeMonoid):
    if isinstance(x, DegreePattern):
        return DegreePattern.unit(monoid)
    if isinstance(x, RhythmPattern):
        return RhythmPattern.unit()
    if isinstance(x, Pattern):
        return Pattern.unit(monoid)
    return MultiPattern.unit(monoid, x.multiplicity)
