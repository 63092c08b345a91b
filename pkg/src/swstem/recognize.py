"""Recover elliptic-surface parameters from a pattern of odd-SW multiples.

Every simply connected minimal elliptic surface E(p_g; m, n) with odd p_g
leaves a fingerprint: the set of fiber multiples carrying odd SW values.
``recognize`` inverts that map using only integer arithmetic on the pattern;
``recognize_oracle`` does the same by brute-force enumeration and is the
cross-check used in the test suite.  ``distinguish`` applies the resulting
classification to decide whether two small connected sums of elliptic
surfaces are built from the same pieces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .blocks import (
    BuildingBlock,
    EllipticSurface,
    describe_block,
    profile,
    recognizable_set,
)
from .errors import InvalidParameters, NotAnEllipticPattern


@dataclass(frozen=True)
class Pattern:
    """A nonempty, negation-symmetric set of multiples, sorted ascending."""

    multiples: tuple[int, ...]

    def __post_init__(self):
        items = tuple(sorted({int(x) for x in self.multiples}))
        if not items:
            raise InvalidParameters("a pattern needs at least one multiple")
        object.__setattr__(self, "multiples", items)
        present = set(items)
        for x in items:
            if -x not in present:
                raise InvalidParameters(
                    f"pattern is not symmetric under negation: {x} present, {-x} absent"
                )

    @classmethod
    def of(cls, values: Iterable[int]) -> "Pattern":
        return cls(tuple(values))


@dataclass(frozen=True)
class RecognitionResult:
    """A candidate triple plus the outcome of regenerating its pattern.

    ``validated`` is true exactly when the candidate's recognizable set
    equals the input pattern.  Diagnostics explain mismatches and flag
    candidates outside the proven odd-genus regime.
    """

    p_g: int
    m: int
    n: int
    validated: bool
    diagnostics: tuple[str, ...] = ()

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.p_g, self.m, self.n)


def recognize(pattern: Pattern) -> RecognitionResult:
    """Identify the surface whose odd-SW multiples form the given pattern.

    The algorithm: a singleton pattern is the trivial surface (1, 1, 1).
    Otherwise let k be the largest multiple and h half the gap down to the
    second largest.  When h is coprime to k, h is the smaller multiplicity m
    (the gap between the top classes moves one step along the finer fiber);
    the larger multiplicity n is the first lambda >= 1 with k - 2*lambda*m
    missing from the pattern, and p_g follows from the formula for the
    largest multiple.  When h and k share a factor (necessarily both even),
    the pattern belongs to the no-log-transform family m = n = 1 with
    p_g = k + 1.  Either way the candidate is validated by regenerating its
    recognizable set; mismatches come back with validated=False rather than
    a guess.
    """
    values = pattern.multiples
    if len(values) == 1:
        # symmetry forces the single multiple to be 0
        return _validated_result(1, 1, 1, pattern)

    k = values[-1]
    second = values[-2]
    if (k - second) % 2 != 0:
        raise NotAnEllipticPattern(
            "multiples in one pattern share a parity; "
            f"{k} and {second} do not"
        )
    h = (k - second) // 2

    if gcd(h, k) == 1:
        m = h
        n = _detect_larger_multiplicity(values, k, m)
        numerator = k - (m - 1) * n - (n - 1) * m
        if numerator % (m * n) != 0:
            raise NotAnEllipticPattern(
                f"largest multiple {k} is incompatible with multiplicities ({m}, {n})"
            )
        p_g = numerator // (m * n) + 1
        if p_g < 1:
            raise NotAnEllipticPattern(
                f"derived geometric genus {p_g} is not positive"
            )
        if m > n or gcd(m, n) != 1:
            raise NotAnEllipticPattern(
                f"derived multiplicities ({m}, {n}) are not coprime and ordered"
            )
        return _validated_result(p_g, m, n, pattern)

    # h and k share a factor: both are even, the m = n = 1 family
    return _validated_result(k + 1, 1, 1, pattern)


def _detect_larger_multiplicity(values: tuple[int, ...], k: int, m: int) -> int:
    """First lambda >= 1 whose class k - 2*lambda*m leaves the pattern."""
    present = set(values)
    lam = 1
    while k - 2 * lam * m in present:
        lam += 1
    return lam


def _validated_result(p_g: int, m: int, n: int, pattern: Pattern) -> RecognitionResult:
    try:
        regenerated = recognizable_set(p_g, m, n)
    except InvalidParameters as exc:
        raise NotAnEllipticPattern(str(exc)) from exc
    diagnostics: list[str] = []
    validated = regenerated == pattern.multiples
    if not validated:
        diagnostics.append(
            f"candidate ({p_g}, {m}, {n}) regenerates {len(regenerated)} multiples "
            f"with largest {regenerated[-1]}, which differ from the input"
        )
    elif p_g % 2 == 0:
        diagnostics.append("even geometric genus: outside the proven regime")
    return RecognitionResult(p_g, m, n, validated, tuple(diagnostics))


def recognize_oracle(
    pattern: Pattern, bounds: tuple[int, int] | None = None
) -> tuple[tuple[int, int, int], ...]:
    """All odd-genus triples within bounds whose recognizable set equals the
    pattern, by exhaustive enumeration.

    ``bounds`` is (p_g_max, n_max); the default derives both from the
    largest multiple, which is large enough to contain the generating
    triple whenever one exists.
    """
    if bounds is None:
        k = pattern.multiples[-1]
        bounds = (k + 1, k + 2)
    p_g_max, n_max = bounds
    if p_g_max < 1 or n_max < 1:
        raise InvalidParameters("oracle bounds must be positive")
    matches = []
    for p_g in range(1, p_g_max + 1, 2):
        for m in range(1, n_max + 1):
            for n in range(m, n_max + 1):
                if gcd(m, n) != 1:
                    continue
                if recognizable_set(p_g, m, n) == pattern.multiples:
                    matches.append((p_g, m, n))
    return tuple(matches)


class DistinctionVerdict(enum.Enum):
    SAME_SUMMANDS = "same_summands"
    DIFFERENT_SUMMANDS = "different_summands"
    OUT_OF_REGIME = "out_of_regime"


def _elliptic_parts(blocks: Sequence[BuildingBlock]) -> list[EllipticSurface] | None:
    """Elliptic summands after dropping neutral blocks; None if anything else
    appears."""
    out: list[EllipticSurface] = []
    for block in blocks:
        p = profile(block)
        if p.b_plus == 0 and p.b_minus == 0:
            continue
        if not isinstance(block, EllipticSurface):
            return None
        out.append(block)
    return out


def _in_regime(parts: list[EllipticSurface]) -> bool:
    if any(b.p_g % 2 == 0 for b in parts):
        return False
    if len(parts) <= 3:
        return True
    if len(parts) == 4:
        total_b_plus = sum(2 * b.p_g + 1 for b in parts)
        return total_b_plus % 8 == 4
    return False


def distinguish(
    sum_a: Sequence[BuildingBlock], sum_b: Sequence[BuildingBlock]
) -> DistinctionVerdict:
    """Decide whether two connected sums of elliptic surfaces are built from
    the same summands, which settles their diffeomorphism type.

    The classification applies when at least one side consists of at most
    three odd-genus surfaces, or exactly four with total b+ congruent
    4 mod 8; the other side may be any sum of elliptic surfaces.  Neutral
    blocks are dropped first.  Everything else is OUT_OF_REGIME.
    """
    parts_a = _elliptic_parts(sum_a)
    parts_b = _elliptic_parts(sum_b)
    if parts_a is None or parts_b is None:
        return DistinctionVerdict.OUT_OF_REGIME
    if not (_in_regime(parts_a) or _in_regime(parts_b)):
        return DistinctionVerdict.OUT_OF_REGIME
    bag_a = sorted((b.p_g, b.m, b.n) for b in parts_a)
    bag_b = sorted((b.p_g, b.m, b.n) for b in parts_b)
    if bag_a == bag_b:
        return DistinctionVerdict.SAME_SUMMANDS
    return DistinctionVerdict.DIFFERENT_SUMMANDS
