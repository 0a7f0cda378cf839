"""Musical predicates and transformations expressed through the operad.

Every transformation here is a homogeneous composition with a specific
operand, or one of the morphisms. Functions accept a :class:`Pattern` where
they accept a :class:`MultiPattern` and hand back the same kind.
"""

from __future__ import annotations

import functools
from typing import Callable

from .errors import ArgumentError, NotAChordError, NotAnArpeggioError, NotHomogeneousError
from .monoid import ADDITIVE, DegreeMonoid
from .morphisms import copy_m, mirror, mul_alpha
from .patterns import MultiPattern, Pattern, full_compose, homogeneous_compose


def _multi(x) -> MultiPattern:
    return MultiPattern((x,)) if isinstance(x, Pattern) else x


def _keeps_kind(fn):
    """Let a multi-pattern operation also take (and return) a plain pattern."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        x = args[-1]
        if isinstance(x, Pattern):
            return fn(*args[:-1], MultiPattern((x,)), **kwargs).rows[0]
        return fn(*args, **kwargs)

    return wrapper


# -- predicates -------------------------------------------------------------


def is_chord(x) -> bool:
    x = _multi(x)
    return x.multiplicity >= 2 and x.arity == 1 and x.length == 1


def is_flat(x) -> bool:
    return all(d == 0 for row in _multi(x).rows for d in row.degrees)


def is_arpeggio_shape(x) -> bool:
    x = _multi(x)
    if x.multiplicity < 2 or x.arity != 1 or not is_flat(x):
        return False
    for column in zip(*(row.word for row in x.rows)):
        if sum(a is not None for a in column) > 1:
            return False
    return True


def arpeggio_factors(x) -> tuple[MultiPattern, MultiPattern] | None:
    """Split x as ``chord (.) shape`` when possible.

    With one degree per row the split is forced: the chord collects each
    row's degree and the shape is x with those degrees set to 0.
    """
    x = _multi(x)
    if x.multiplicity < 2 or x.arity != 1:
        return None
    chord = MultiPattern(tuple(Pattern.from_word([row.degrees[0]]) for row in x.rows))
    shape = MultiPattern(tuple(Pattern((0,), row.rhythm) for row in x.rows))
    if not is_arpeggio_shape(shape):
        return None
    return chord, shape


def is_arpeggio(x) -> bool:
    factors = arpeggio_factors(x)
    if factors is None:
        return False
    chord, shape = factors
    return is_chord(chord) and homogeneous_compose(chord, shape) == _multi(x)


# -- operations -------------------------------------------------------------


@_keeps_kind
def mimesis(x, y, monoid: DegreeMonoid = ADDITIVE):
    return homogeneous_compose(x, _multi(y), monoid)


def concatenate(x, y, monoid: DegreeMonoid = ADDITIVE):
    single = isinstance(x, Pattern) and isinstance(y, Pattern)
    x, y = _multi(x), _multi(y)
    e = monoid.unit
    out = full_compose(copy_m(x.multiplicity, Pattern.from_word([e, e])), [x, y], monoid)
    return out.rows[0] if single else out


@_keeps_kind
def repeat(k: int, x, monoid: DegreeMonoid = ADDITIVE):
    if k < 1:
        raise ArgumentError("repetition count must be positive")
    ones = copy_m(x.multiplicity, Pattern.from_word([monoid.unit] * k))
    return homogeneous_compose(ones, x, monoid)


@_keeps_kind
def transpose(d: int, x, monoid: DegreeMonoid = ADDITIVE):
    return homogeneous_compose(copy_m(x.multiplicity, Pattern.from_word([d])), x, monoid)


@_keeps_kind
def temporize(k: int, x, monoid: DegreeMonoid = ADDITIVE):
    if k < 0:
        raise ArgumentError("temporization must be nonnegative")
    pad = copy_m(x.multiplicity, Pattern.from_word([monoid.unit] + [None] * k))
    return homogeneous_compose(x, pad, monoid)


def inverse(x):
    return mul_alpha(-1, x)


def retrograde(x):
    return mirror(x)


def retrograde_inverse(x):
    return mirror(inverse(x))


def harmonize(p: Pattern, chord: MultiPattern, monoid: DegreeMonoid = ADDITIVE) -> MultiPattern:
    if not is_chord(chord):
        raise NotAChordError("harmonization needs a chord (one column, several rows)")
    return homogeneous_compose(copy_m(chord.multiplicity, p), chord, monoid)


def arpeggiate(p: Pattern, arpeggio: MultiPattern, monoid: DegreeMonoid = ADDITIVE) -> MultiPattern:
    if not is_arpeggio(arpeggio):
        raise NotAnArpeggioError("arpeggiation needs a chord composed with an arpeggio shape")
    return homogeneous_compose(copy_m(arpeggio.multiplicity, p), arpeggio, monoid)


# -- named homogeneous operations -------------------------------------------

_HOMOGENEOUS: dict[str, Callable] = {
    "id": lambda x: x,
    "inv": inverse,
    "mir": retrograde,
    "minv": retrograde_inverse,
}

_NON_HOMOGENEOUS = {"rep", "temp", "conc", "har", "arp", "mim", "mul", "red", "dil"}


def homogeneous_op(name: str) -> Callable:
    """Resolve ``id | inv | mir | minv | tran:<d>`` to a callable.

    Anything else is rejected with :class:`NotHomogeneousError`.
    """
    name = name.strip()
    if name in _HOMOGENEOUS:
        return _HOMOGENEOUS[name]
    head, sep, arg = name.partition(":")
    if head == "tran" and sep:
        try:
            d = int(arg)
        except ValueError:
            raise ArgumentError(f"bad transposition {name!r}") from None
        return functools.partial(transpose, d)
    raise NotHomogeneousError(
        f"{name!r} is not a homogeneous operation (expected id, inv, mir, minv or tran:<d>)"
    )


def is_homogeneous_op(name: str) -> bool:
    try:
        homogeneous_op(name)
    except (NotHomogeneousError, ArgumentError):
        return False
    return True
