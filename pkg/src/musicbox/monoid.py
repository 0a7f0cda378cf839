"""Degree monoids: the three ways two degrees can be combined during composition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CarrierError, FormatError

ADDITIVE_KIND = "additive"
CYCLIC_KIND = "cyclic"
MAX_KIND = "max"


@dataclass(frozen=True)
class DegreeMonoid:
    """A monoid structure on a subset of the integers.

    ``kind`` is one of ``"additive"`` (integers under +), ``"cyclic"``
    (``[0, param - 1]`` under addition mod ``param``) or ``"max"``
    (``[param, inf)`` under max, with ``param`` as unit).
    """

    kind: str
    param: int | None = None

    def __post_init__(self):
        if self.kind == ADDITIVE_KIND:
            if self.param is not None:
                raise ValueError("additive monoid takes no parameter")
        elif self.kind == CYCLIC_KIND:
            if not isinstance(self.param, int) or self.param < 1:
                raise ValueError(f"cyclic modulus must be a positive integer, got {self.param!r}")
        elif self.kind == MAX_KIND:
            if not isinstance(self.param, int):
                raise ValueError(f"max monoid needs an integer lower bound, got {self.param!r}")
        else:
            raise ValueError(f"unknown monoid kind {self.kind!r}")

    @classmethod
    def additive(cls) -> DegreeMonoid:
        return cls(ADDITIVE_KIND)

    @classmethod
    def cyclic(cls, k: int) -> DegreeMonoid:
        return cls(CYCLIC_KIND, k)

    @classmethod
    def max_bounded(cls, z: int) -> DegreeMonoid:
        return cls(MAX_KIND, z)

    @property
    def unit(self) -> int:
        if self.kind == MAX_KIND:
            return self.param
        return 0

    def contains(self, d) -> bool:
        if not isinstance(d, int) or isinstance(d, bool):
            return False
        if self.kind == CYCLIC_KIND:
            return 0 <= d < self.param
        if self.kind == MAX_KIND:
            return d >= self.param
        return True

    def check(self, d) -> int:
        if not self.contains(d):
            raise CarrierError(f"degree {d!r} is not in the carrier of {self}")
        return d

    def combine(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self.kind == CYCLIC_KIND:
            return (a + b) % self.param
        if self.kind == MAX_KIND:
            return max(a, b)
        return a + b

    def generators(self) -> tuple[int, ...] | None:
        """Minimal generating set, or None when it is infinite (max monoids)."""
        if self.kind == ADDITIVE_KIND:
            return (-1, 1)
        if self.kind == CYCLIC_KIND:
            return (1,) if self.param > 1 else ()
        return None

    def __str__(self) -> str:
        if self.kind == ADDITIVE_KIND:
            return "additive"
        return f"{self.kind} {self.param}"

    @classmethod
    def parse(cls, text: str) -> DegreeMonoid:
        """Read ``additive``, ``cyclic <k>`` or ``max <z>``."""
        parts = text.split()
        try:
            if parts == [ADDITIVE_KIND]:
                return cls.additive()
            if len(parts) == 2 and parts[0] == CYCLIC_KIND:
                return cls.cyclic(int(parts[1]))
            if len(parts) == 2 and parts[0] == MAX_KIND:
                return cls.max_bounded(int(parts[1]))
        except ValueError as exc:
            raise FormatError(f"bad monoid {text!r}: {exc}") from None
        raise FormatError(f"bad monoid {text!r}; expected 'additive', 'cyclic <k>' or 'max <z>'")


ADDITIVE = DegreeMonoid.additive()


def combine(m: DegreeMonoid, a: int, b: int) -> int:
    return m.combine(a, b)


def unit(m: DegreeMonoid) -> int:
    return m.unit


def contains(m: DegreeMonoid, d) -> bool:
    return m.contains(d)
