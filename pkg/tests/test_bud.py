from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from laws import colored, monoids
from musicbox.bud import (
    ColoredMultiPattern,
    bud_compose,
    bud_full_compose,
    bud_homogeneous,
    colored_unit,
    pruning,
)
from musicbox.errors import ArityMismatchError, ColorMismatchError, FormatError, MultiplicityError
from musicbox.monoid import DegreeMonoid
from musicbox.patterns import MultiPattern, compose, homogeneous_compose

C = ColoredMultiPattern.parse
MP = MultiPattern.parse


def test_colored_unit():
    u = colored_unit("b1", 2)
    assert u == C("b1 | 0 ; 0 | b1")
    assert pruning(u) == MultiPattern.unit(multiplicity=2)


def test_color_validation():
    for bad in ("1b", "", "b-1", "b 1"):
        with pytest.raises(FormatError):
            ColoredMultiPattern(bad, MP("0"), ("a",))
    with pytest.raises(ArityMismatchError):
        C("a | 0 0 | a")
    with pytest.raises(FormatError):
        C("a | 0")


def test_text_round_trip():
    x = C("b3 | 0 1 . ; -1 . 0 | b2 b1")
    assert C(str(x)) == x


def test_mismatch_names_the_slot():
    x = C("a | 0 0 0 | a b a")
    with pytest.raises(ColorMismatchError) as err:
        bud_compose(x, 2, colored_unit("a"))
    assert err.value.slot == 2
    with pytest.raises(ColorMismatchError) as err:
        bud_full_compose(x, [colored_unit("a"), colored_unit("a"), colored_unit("b")])
    assert err.value.slot == 2
    with pytest.raises(MultiplicityError):
        bud_compose(x, 1, colored_unit("a", 2))


def test_homogeneous_grafts_matching_inputs_only():
    x = C("b1 | 0 1 2 | b2 b1 b2")
    y = C("b2 | 1 . 1 | b3 b3")
    got = bud_homogeneous(x, y)
    expected = bud_full_compose(x, [y, colored_unit("b1"), y])
    assert got == expected
    assert got.inputs == ("b3", "b3", "b1", "b3", "b3")
    assert bud_homogeneous(x, C("b9 | 0 | b9")) == x


@st.composite
def colored_pairs(draw):
    m = draw(monoids)
    mult = draw(st.integers(1, 3))
    x = draw(colored(m, mult))
    i = draw(st.integers(1, x.arity))
    y = draw(colored(m, mult, output=x.inputs[i - 1]))
    j = draw(st.integers(1, y.arity))
    z = draw(colored(m, mult, output=y.inputs[j - 1]))
    return m, x, i, y, j, z


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(colored_pairs())
def test_colored_axioms_and_pruning(case):
    m, x, i, y, j, z = case
    xy = bud_compose(x, i, y, m)
    assert pruning(xy) == compose(pruning(x), i, pruning(y), m)
    assert bud_compose(xy, i + j - 1, z, m) == bud_compose(x, i, bud_compose(y, j, z, m), m)
    assert bud_compose(x, i, colored_unit(x.inputs[i - 1], x.multiplicity, m), m) == x
    assert bud_compose(colored_unit(x.output, x.multiplicity, m), 1, x, m) == x


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.data())
def test_single_color_homogeneous_is_plain_homogeneous(data):
    m = data.draw(monoids)
    mult = data.draw(st.integers(1, 3))
    x = data.draw(colored(m, mult, colors=("a",)))
    y = data.draw(colored(m, mult, colors=("a",)))
    assert pruning(bud_homogeneous(x, y, m)) == homogeneous_compose(pruning(x), pruning(y), m)
    assert bud_homogeneous(x, y, m) == bud_full_compose(x, [y] * x.arity, m)


def test_monoid_is_threaded_through():
    m = DegreeMonoid.cyclic(3)
    x = C("a | 2 | a")
    assert pruning(bud_compose(x, 1, C("a | 2 2 | a a"), m)) == MP("1 1")


@st.composite
def colored_parallel(draw):
    m = draw(monoids)
    mult = draw(st.integers(1, 3))
    x = draw(colored(m, mult).filter(lambda c: c.arity >= 2))
    i = draw(st.integers(1, x.arity - 1))
    j = draw(st.integers(i + 1, x.arity))
    y = draw(colored(m, mult, output=x.inputs[i - 1]))
    z = draw(colored(m, mult, output=x.inputs[j - 1]))
    return m, x, i, j, y, z


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(colored_parallel())
def test_colored_parallel_axiom(case):
    m, x, i, j, y, z = case
    left = bud_compose(bud_compose(x, j, z, m), i, y, m)
    right = bud_compose(bud_compose(x, i, y, m), j + y.arity - 1, z, m)
    assert left == right
