"""Catalogue of building-block 4-manifolds and their Seiberg-Witten data.

The blocks are the summands the connected-sum engine understands:

* ``EllipticSurface(p_g, m, n)``: a simply connected minimal elliptic surface
  with geometric genus p_g and coprime multiple fibers m <= n.  Its basic
  classes are the multiples of the fiber class listed by ``basic_class_table``:
  the multiple (p_g-1-2a)mn + (m-2b-1)n + (n-2c-1)m carries SW value
  binomial(p_g-1, a), for 0 <= a < p_g, 0 <= b < m, 0 <= c < n.  For coprime
  m, n these multiples are pairwise distinct, the table is symmetric under
  negation, and the largest multiple always has value 1.
* ``SymplecticGeneric(b_plus)``: a symplectic block with b1 = 0 known only
  through the canonical class, where SW = 1 (sign convention fixed to +1).
* ``KaehlerGeneric(b_plus, odd_basic)``: a Kaehler block with b1 = 0 whose
  classes with odd SW are declared up front, labelled by their c^2 values.
  The declaration is complete: undeclared classes have even SW.
* ``NegativeDefinite(rank)``: a closed 4-manifold with b1 = 0 and negative
  definite diagonal intersection form of the given rank.
* ``HomotopySphereLike()``: b1 = b2 = 0, the neutral element for sums.

``K3`` is ``EllipticSurface(1, 1, 1)``.  All blocks here have b1 = 0.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Union

from .errors import InvalidParameters, UncataloguedBlock, UnknownSW
from .lattice import TopProfile

#: class key selecting the canonical class of a symplectic block
CANONICAL = "canonical"


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class EllipticSurface:
    """Simply connected minimal elliptic surface E(p_g; m, n).

    ``p_g >= 0`` is the geometric genus; ``m <= n`` are the coprime
    multiplicities of the multiple fibers (1 means no log transform).  Inputs
    with m > n are swapped with a warning.  Basic-class data exists for
    p_g >= 1 only; p_g = 0 blocks carry unknown SW.
    """

    p_g: int
    m: int
    n: int

    def __post_init__(self):
        if self.p_g < 0:
            raise InvalidParameters(f"p_g must be >= 0, got {self.p_g}")
        if self.m < 1 or self.n < 1:
            raise InvalidParameters("fiber multiplicities must be >= 1")
        if self.m > self.n:
            warnings.warn(
                f"multiplicities given as ({self.m}, {self.n}); normalizing to m <= n",
                stacklevel=2,
            )
            m, n = self.n, self.m
            object.__setattr__(self, "m", m)
            object.__setattr__(self, "n", n)
        if gcd(self.m, self.n) != 1:
            raise InvalidParameters(
                f"multiplicities must be coprime, got ({self.m}, {self.n})"
            )


K3 = EllipticSurface(1, 1, 1)


@dataclass(frozen=True)
class SymplecticGeneric:
    """Symplectic block with b1 = 0; only the canonical class carries declared
    SW data (value 1)."""

    b_plus: int

    def __post_init__(self):
        if self.b_plus < 1 or self.b_plus % 2 == 0:
            raise InvalidParameters(
                f"b_plus of a symplectic block must be odd and positive, got {self.b_plus}"
            )


@dataclass(frozen=True)
class KaehlerGeneric:
    """Kaehler block with b1 = 0 and a complete declaration of its odd-SW
    classes, labelled by their c^2 values."""

    b_plus: int
    odd_basic: tuple[int, ...] = ()

    def __post_init__(self):
        if self.b_plus < 1 or self.b_plus % 2 == 0:
            raise InvalidParameters(
                f"b_plus of a Kaehler block must be odd and positive, got {self.b_plus}"
            )
        labels = tuple(sorted({int(x) for x in self.odd_basic}))
        object.__setattr__(self, "odd_basic", labels)


@dataclass(frozen=True)
class NegativeDefinite:
    """Negative definite diagonal block of the given rank, b1 = 0."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidParameters(f"rank must be >= 0, got {self.rank}")


@dataclass(frozen=True)
class HomotopySphereLike:
    """A block with b1 = b2 = 0; contributes the identity to every sum."""


BuildingBlock = Union[
    EllipticSurface,
    SymplecticGeneric,
    KaehlerGeneric,
    NegativeDefinite,
    HomotopySphereLike,
]


def describe_block(block: BuildingBlock) -> str:
    """Short human-readable tag used in traces and error messages."""
    if isinstance(block, EllipticSurface):
        if block == K3:
            return "K3"
        return f"E(p_g={block.p_g},m={block.m},n={block.n})"
    if isinstance(block, SymplecticGeneric):
        return f"symplectic(b+={block.b_plus})"
    if isinstance(block, KaehlerGeneric):
        return f"kaehler(b+={block.b_plus})"
    if isinstance(block, NegativeDefinite):
        return f"negative-definite(rank={block.rank})"
    if isinstance(block, HomotopySphereLike):
        return "homotopy-sphere"
    raise UncataloguedBlock(f"not a catalogued building block: {block!r}")


def profile(block: BuildingBlock) -> TopProfile:
    """Betti-number profile of a block.

    b_minus is only reported where the catalogue pins it: K3 (b- = 19,
    signature -16), negative definite blocks (b- = rank) and sphere-like
    blocks.  Elliptic surfaces other than K3 and the generic symplectic or
    Kaehler blocks leave it undetermined.
    """
    if isinstance(block, EllipticSurface):
        if block == K3:
            return TopProfile(0, 3, 19)
        return TopProfile(0, 2 * block.p_g + 1)
    if isinstance(block, (SymplecticGeneric, KaehlerGeneric)):
        return TopProfile(0, block.b_plus)
    if isinstance(block, NegativeDefinite):
        return TopProfile(0, 0, block.rank)
    if isinstance(block, HomotopySphereLike):
        return TopProfile(0, 0, 0)
    raise UncataloguedBlock(f"not a catalogued building block: {block!r}")


def odd_binomial(n: int, k: int) -> bool:
    """True iff binomial(n, k) is odd, decided by the bit test k AND n == k.

    Works for arbitrarily large inputs without evaluating the binomial;
    k > n (a bit of k outside n) yields false.

    >>> odd_binomial(10, 2)
    True
    >>> odd_binomial(4, 2)
    False
    """
    if n < 0 or k < 0:
        return False
    return (k & n) == k


def _check_table_params(p_g: int, m: int, n: int) -> None:
    if p_g < 1:
        raise InvalidParameters(
            f"basic-class data requires geometric genus >= 1, got p_g = {p_g}"
        )
    if m < 1 or n < 1:
        raise InvalidParameters("fiber multiplicities must be >= 1")
    if m > n:
        raise InvalidParameters(f"multiplicities must satisfy m <= n, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise InvalidParameters(f"multiplicities must be coprime, got ({m}, {n})")


def max_multiple(p_g: int, m: int, n: int) -> int:
    """Largest basic-class multiple, attained at a = b = c = 0."""
    return (p_g - 1) * m * n + (m - 1) * n + (n - 1) * m


@lru_cache(maxsize=None)
def _table_entries(p_g: int, m: int, n: int) -> tuple[tuple[int, int], ...]:
    top = max_multiple(p_g, m, n)
    mn = m * n
    values: dict[int, int] = {}
    for a in range(p_g):
        va = comb(p_g - 1, a)
        for b in range(m):
            for c in range(n):
                key = top - 2 * (a * mn + b * n + c * m)
                if key in values:
                    # coprimality makes the triples injective; never reached
                    raise AssertionError(f"duplicate multiple {key} in E({p_g};{m},{n})")
                values[key] = va
    return tuple(sorted(values.items()))


@dataclass(frozen=True)
class BasicClassTable:
    """SW values on the line of fiber multiples, keyed by the multiple."""

    p_g: int
    m: int
    n: int
    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def value(self, multiple: int) -> int:
        """Exact SW value at a multiple; 0 when absent from the table."""
        return self.as_dict().get(multiple, 0)

    @property
    def multiples(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    @property
    def max_multiple(self) -> int:
        return self.entries[-1][0]


def basic_class_table(p_g: int, m: int, n: int) -> BasicClassTable:
    """Full basic-class table of E(p_g; m, n), p_g >= 1, coprime m <= n.

    Contains exactly p_g * m * n distinct multiples, symmetric under negation
    with equal values, and value 1 at the largest multiple.

    >>> basic_class_table(3, 1, 1).entries
    ((-2, 1), (0, 2), (2, 1))
    """
    _check_table_params(p_g, m, n)
    return BasicClassTable(p_g, m, n, _table_entries(p_g, m, n))


@lru_cache(maxsize=None)
def _recognizable(p_g: int, m: int, n: int) -> tuple[int, ...]:
    top = max_multiple(p_g, m, n)
    mn = m * n
    keys = []
    for a in range(p_g):
        # parity via the bit test; the binomial itself is never evaluated
        if not odd_binomial(p_g - 1, a):
            continue
        for b in range(m):
            for c in range(n):
                keys.append(top - 2 * (a * mn + b * n + c * m))
    return tuple(sorted(keys))


def recognizable_set(p_g: int, m: int, n: int) -> tuple[int, ...]:
    """The multiples whose SW value is odd, sorted ascending.

    >>> recognizable_set(3, 1, 1)
    (-2, 2)
    >>> recognizable_set(1, 2, 3)
    (-7, -3, -1, 1, 3, 7)
    """
    _check_table_params(p_g, m, n)
    return _recognizable(p_g, m, n)


def sw_value(block: BuildingBlock, class_key):
    """Seiberg-Witten datum of a block at a chosen class.

    Elliptic blocks answer with the exact integer from their table (0 when
    the multiple is absent).  Symplectic blocks answer 1 at ``CANONICAL`` and
    have no data elsewhere.  Kaehler blocks answer with a ``Parity`` from
    their declared odd-basic set.  Other blocks carry no SW data.
    """
    if isinstance(block, EllipticSurface):
        if block.p_g < 1:
            raise UnknownSW("p_g = 0 elliptic blocks carry no declared SW data")
        if not isinstance(class_key, int) or isinstance(class_key, bool):
            raise InvalidParameters("elliptic class keys are fiber multiples (integers)")
        return basic_class_table(block.p_g, block.m, block.n).value(class_key)
    if isinstance(block, SymplecticGeneric):
        if class_key == CANONICAL:
            return 1
        raise UnknownSW(
            "symplectic blocks declare SW data only at the canonical class"
        )
    if isinstance(block, KaehlerGeneric):
        if not isinstance(class_key, int) or isinstance(class_key, bool):
            raise InvalidParameters("Kaehler class keys are c^2 labels (integers)")
        return Parity.ODD if class_key in block.odd_basic else Parity.EVEN
    raise UnknownSW(f"{describe_block(block)} carries no SW data")


def sw_parity(block: BuildingBlock, class_key=None) -> Parity | None:
    """SW parity of a block at a chosen class; None when undetermined.

    ``class_key=None`` selects the block's distinguished class: the largest
    multiple for elliptic blocks (value 1), the canonical class for
    symplectic blocks, and the largest declared label for Kaehler blocks
    (even everywhere when nothing is declared).  An elliptic key must have
    the parity of the table multiples, otherwise it is not characteristic.
    """
    if isinstance(block, EllipticSurface):
        if block.p_g < 1:
            return None
        top = max_multiple(block.p_g, block.m, block.n)
        if class_key is None:
            return Parity.ODD
        if not isinstance(class_key, int) or isinstance(class_key, bool):
            raise InvalidParameters("elliptic class keys are fiber multiples (integers)")
        if (class_key - top) % 2 != 0:
            raise InvalidParameters(
                f"multiple {class_key} is not characteristic on "
                f"{describe_block(block)}: its parity differs from the table's"
            )
        odd = class_key in _recognizable(block.p_g, block.m, block.n)
        return Parity.ODD if odd else Parity.EVEN
    if isinstance(block, SymplecticGeneric):
        if class_key is None or class_key == CANONICAL:
            return Parity.ODD
        return None
    if isinstance(block, KaehlerGeneric):
        if class_key is None:
            return Parity.ODD if block.odd_basic else Parity.EVEN
        if not isinstance(class_key, int) or isinstance(class_key, bool):
            raise InvalidParameters("Kaehler class keys are c^2 labels (integers)")
        return Parity.ODD if class_key in block.odd_basic else Parity.EVEN
    if isinstance(block, (NegativeDefinite, HomotopySphereLike)):
        return None
    raise UncataloguedBlock(f"not a catalogued building block: {block!r}")
