from __future__ import annotations

import pytest

from musicbox.errors import ArgumentError, NotAChordError, NotAnArpeggioError, NotFlatError, NotHomogeneousError
from musicbox.music_ops import concatenate
from musicbox.patterns import MultiPattern, Pattern
from musicbox.presets import (
    arpeggiator_system,
    concatenating_system,
    harmonizator_system,
    rhythmic_system,
    stacking_system,
    temporizer_system,
)

P = Pattern.parse
MP = MultiPattern.parse


def describe(system):
    return [str(r) for r in system.rules]


def test_temporizer():
    s = temporizer_system(P("0 2 . 1 . 0 4"), 2)
    assert describe(s) == [
        "b1 | 0 2 . 1 . 0 4 | b2 b2 b2 b2 b2",
        "b2 | 0 2 . 1 . 0 4 | b2 b2 b2 b2 b2",
        "b2 | 0 . | b3",
        "b2 | 0 . . | b3",
    ]
    assert (s.colors, s.initial, s.multiplicity) == (("b1", "b2", "b3"), "b1", 1)
    assert len(temporizer_system(P("0"), 1).rules) == 3
    for j, rule in enumerate(s.rules[2:], start=1):
        assert (rule.arity, rule.body.length) == (1, j + 1)
    with pytest.raises(ArgumentError):
        temporizer_system(P("0"), 0)


def test_rhythmic():
    s = rhythmic_system(P("1 . 0 1 1 . 2"), P("0 0 . 0 ."))
    assert describe(s)[2] == "b2 | 0 0 . 0 . | b3 b3 b3"
    with pytest.raises(NotFlatError):
        rhythmic_system(P("0"), P("1 0"))


def test_concatenating():
    p = P("2 0 . . 1 -1 .")
    s = concatenating_system(p, "mir")
    assert describe(s) == ["b1 | 2 0 . . 1 -1 . . -1 1 . . 0 2 | " + " ".join(["b1"] * 8)]
    assert concatenating_system(p, "id").rules[0].body == MultiPattern((concatenate(p, p),))
    with pytest.raises(NotHomogeneousError):
        concatenating_system(p, "rep:2")


def test_harmonizator():
    s = harmonizator_system(P("2 1 0 2 . 1 . 0 ."), MP("0 ; 5 ; -7"))
    assert s.multiplicity == 3
    assert describe(s)[2] == "b2 | 0 ; 5 ; -7 | b3"
    assert s.rules[0].inputs == ("b2",) * 6
    with pytest.raises(NotAChordError):
        harmonizator_system(P("0"), MP("0 0 ; 1 1"))


def test_arpeggiator():
    a = MP("0 . . ; . 2 . ; . . 4")
    s = arpeggiator_system(P("0 . 2 1 3 . 1"), a)
    assert s.multiplicity == 3 and len(s.rules) == 3
    assert s.rules[0].inputs == ("b2",) * 5
    assert s.rules[2].body == a
    with pytest.raises(NotAnArpeggioError):
        arpeggiator_system(P("0"), MP("0 0 ; 0 0"))


def test_stacking():
    p = P("2 0 . 1 -1 . .")
    s = stacking_system(p, "mir")
    assert describe(s) == ["b1 | 2 0 . 1 -1 . . ; . . -1 1 . 0 2 | b1 b1 b1 b1"]
    same = stacking_system(p, "id").rules[0].body
    assert same.rows == (p, p)
    with pytest.raises(NotHomogeneousError):
        stacking_system(p, "temp:1")


@pytest.mark.parametrize(
    "build",
    [
        lambda: temporizer_system(P("0 1"), 3),
        lambda: rhythmic_system(P("0 1"), P("0 .")),
        lambda: concatenating_system(P("0 1"), "inv"),
        lambda: harmonizator_system(P("0 1"), MP("0;2")),
        lambda: arpeggiator_system(P("0 1"), MP("0 . ; . 2")),
        lambda: stacking_system(P("0 1"), "tran:2"),
    ],
)
def test_presets_validate_without_problems(build):
    assert all(d.level == "note" for d in build().validate())
