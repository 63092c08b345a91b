"""The truncated stable stems pi_0 .. pi_3 under smash product.

Degree 0 holds honest integers (mapping degrees), degrees 1..3 hold powers of
the Hopf class eta (each of order two), degree 4 and above collapse to zero or
an explicit unknown, and negative degrees are zero.  This is precisely the
fragment needed to multiply connected-sum invariants: eta^2 and eta^3 are the
nonzero products, eta^4 vanishes.

All values are immutable; ``smash`` is commutative and associative on the
non-unknown fragment and an unknown operand makes the product unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParameters

_SUPERSCRIPTS = {1: "η", 2: "η²", 3: "η³"}


class TriState(enum.Enum):
    """Three-valued verdict used throughout the engine."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.name


class StemKind(enum.Enum):
    INTEGER = "integer"
    HOPF = "hopf"
    ZERO = "zero"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class StemElement:
    """An element of a truncated stable stem.

    ``value`` is only populated for integer classes in degree 0.  Hopf powers
    carry their exponent in ``degree``.  Invariants: integer classes live in
    degree 0, Hopf powers in degrees 1..3, negative degrees are zero, and
    degrees above 3 are zero or unknown.
    """

    kind: StemKind
    degree: int
    value: int | None = None

    def __post_init__(self):
        if self.kind is StemKind.INTEGER:
            if self.degree != 0 or not isinstance(self.value, int):
                raise InvalidParameters("integer classes live in degree 0")
        elif self.kind is StemKind.HOPF:
            if self.degree not in (1, 2, 3) or self.value is not None:
                raise InvalidParameters("Hopf powers exist in degrees 1..3 only")
        else:
            if self.value is not None:
                raise InvalidParameters(f"{self.kind.value} carries no value")
            if self.kind is StemKind.UNKNOWN and self.degree < 0:
                raise InvalidParameters("negative stems vanish; use zero()")

    def __str__(self) -> str:
        if self.kind is StemKind.INTEGER:
            return str(self.value)
        if self.kind is StemKind.HOPF:
            return _SUPERSCRIPTS[self.degree]
        if self.kind is StemKind.ZERO:
            return "0"
        return "unknown"


def integer_class(value: int) -> StemElement:
    """An integer in the zeroth stem."""
    return StemElement(StemKind.INTEGER, 0, int(value))


def hopf_power(j: int) -> StemElement:
    """eta^j for j in {1, 2, 3}."""
    if j not in (1, 2, 3):
        raise InvalidParameters(f"Hopf powers exist in degrees 1..3 only, got {j}")
    return StemElement(StemKind.HOPF, j)


def zero(degree: int) -> StemElement:
    """The zero class in any degree."""
    return StemElement(StemKind.ZERO, degree)


def unknown(degree: int) -> StemElement:
    """An undetermined class; normalizes to zero in negative degrees."""
    if degree < 0:
        return zero(degree)
    return StemElement(StemKind.UNKNOWN, degree)


ETA = hopf_power(1)
ONE = integer_class(1)


def smash(x: StemElement, y: StemElement) -> StemElement:
    """Smash product of two truncated stem elements.

    Degrees add.  Integers multiply; an integer acts on a Hopf power through
    its parity (eta has order two); Hopf powers multiply until the exponent
    exceeds three, where the product vanishes.  Any unknown operand makes the
    result unknown at the summed degree.

    >>> smash(hopf_power(1), hopf_power(1)) == hopf_power(2)
    True
    >>> str(smash(integer_class(2), hopf_power(1)))
    '0'
    """
    deg = x.degree + y.degree
    # order matters: unknown absorbs before zero
    if x.kind is StemKind.UNKNOWN or y.kind is StemKind.UNKNOWN:
        return unknown(deg)
    if x.kind is StemKind.ZERO or y.kind is StemKind.ZERO:
        return zero(deg)
    if x.kind is StemKind.INTEGER and y.kind is StemKind.INTEGER:
        return integer_class(x.value * y.value)
    if x.kind is StemKind.INTEGER:
        return hopf_power(y.degree) if x.value % 2 else zero(deg)
    if y.kind is StemKind.INTEGER:
        return hopf_power(x.degree) if y.value % 2 else zero(deg)
    return hopf_power(deg) if deg <= 3 else zero(deg)


def smash_all(elements) -> StemElement:
    """Smash a sequence of elements; the empty product is the unit 1."""
    out = ONE
    for el in elements:
        out = smash(out, el)
    return out


def is_nonzero(x: StemElement) -> TriState:
    """Whether the element is nonzero in its stem."""
    if x.kind is StemKind.INTEGER:
        return TriState.YES if x.value != 0 else TriState.NO
    if x.kind is StemKind.HOPF:
        return TriState.YES
    if x.kind is StemKind.ZERO:
        return TriState.NO
    return TriState.UNKNOWN


def sq2_detects_hopf(d: int) -> bool:
    """Whether the squaring operation on the d-th power class detects the Hopf
    class, which happens exactly for even d (the relevant binomial coefficient
    d - 1 choose 1 is odd iff d is even).

    >>> [sq2_detects_hopf(d) for d in (1, 2, 3, 4)]
    [False, True, False, True]
    """
    if d < 1:
        raise InvalidParameters(f"detection is defined for d >= 1, got {d}")
    return d % 2 == 0
