"""Connected-sum invariants in the truncated stable stems.

The invariant of a connected sum is the smash product of the summands'
invariants.  For the catalogued blocks this reduces to bookkeeping:

* an almost complex summand with b1 = 0 contributes the Hopf class eta when
  b+ is 3 mod 4 and its SW value at the chosen class is odd, the zero class
  in degree 1 when b+ is 1 mod 4 or the SW value is even, and an unknown
  otherwise;
* a negative definite summand with Dirac index d <= 0 contributes |d| smash
  factors of the compactified-inclusion class gamma and nothing else (d = 0
  summands are invisible);
* sphere-like summands (b1 = b2 = 0) contribute the identity and are dropped.

The equivariant nonvanishing verdict follows the summand-count criteria: for
two or three almost complex summands the class is nonzero iff every summand
has b+ congruent 3 mod 4 with odd SW; for four summands the total b+ must
additionally be congruent 4 mod 8; five or more summands always vanish.
Sums with no almost complex part restrict with degree one to the fixed locus
and can never vanish equivariantly.

Verdicts outside the covered regime are UNKNOWN, never guesses; every
engine answer carries a human-readable trace of the rules applied.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .blocks import (
    CANONICAL,
    BuildingBlock,
    EllipticSurface,
    HomotopySphereLike,
    KaehlerGeneric,
    NegativeDefinite,
    Parity,
    SymplecticGeneric,
    basic_class_table,
    describe_block,
    max_multiple,
    profile,
    recognizable_set,
    sw_parity,
)
from .errors import (
    InvalidParameters,
    PositiveIndexOnNegativeDefinite,
    PreconditionNotMet,
    UncataloguedBlock,
    UnknownSW,
)
from .lattice import SpinC, dirac_index
from .stems import StemElement, StemKind, TriState, hopf_power, smash_all, unknown, zero

_AC_KINDS = (EllipticSurface, SymplecticGeneric, KaehlerGeneric)


@dataclass(frozen=True)
class Summand:
    """A building block together with its per-summand spin-c choice.

    ``spin_c`` carries the characteristic vector of a negative definite
    block (None means the unit vector, the standard blowup structure).
    ``class_key`` selects a basic class on the other blocks: a fiber
    multiple for elliptic surfaces, a declared c^2 label for Kaehler blocks,
    or ``CANONICAL`` for symplectic blocks; None means the distinguished
    class.
    """

    block: BuildingBlock
    spin_c: SpinC | None = None
    class_key: int | str | None = None

    def __post_init__(self):
        profile(self.block)  # raises UncataloguedBlock on aliens
        if isinstance(self.block, NegativeDefinite):
            if self.class_key is not None:
                raise InvalidParameters(
                    "negative definite summands take spin-c data, not a class key"
                )
            if self.spin_c is not None and self.spin_c.c_coords is not None:
                if len(self.spin_c.c_coords) != self.block.rank:
                    raise InvalidParameters(
                        f"{len(self.spin_c.c_coords)} coordinates given for a "
                        f"rank-{self.block.rank} block"
                    )
            return
        if self.spin_c is not None:
            raise InvalidParameters(
                f"{describe_block(self.block)} takes a class key, not raw spin-c data"
            )
        if self.class_key is None:
            return
        if isinstance(self.block, EllipticSurface) and self.block.p_g < 1:
            raise InvalidParameters("p_g = 0 blocks have no class table to choose from")
        if isinstance(self.block, SymplecticGeneric) and self.class_key != CANONICAL:
            raise InvalidParameters(
                "symplectic blocks only declare data at the canonical class"
            )
        # validates key type and, for elliptic blocks, characteristic parity
        sw_parity(self.block, self.class_key)


@dataclass(frozen=True)
class ConnectedSum:
    """A nonempty formal connected sum of summands."""

    summands: tuple[Summand, ...]

    def __post_init__(self):
        items = tuple(self.summands)
        if not items:
            raise InvalidParameters("a connected sum needs at least one summand")
        for s in items:
            if not isinstance(s, Summand):
                raise InvalidParameters(f"not a summand: {s!r}")
        object.__setattr__(self, "summands", items)


def connected_sum(*parts) -> ConnectedSum:
    """Convenience constructor accepting bare blocks or prepared summands."""
    out = []
    for p in parts:
        out.append(p if isinstance(p, Summand) else Summand(p))
    return ConnectedSum(tuple(out))


@dataclass(frozen=True)
class InvariantClass:
    """The invariant of a connected sum, with its bookkeeping.

    ``stem_degree`` is always 2 * total_d - total b+ (the b1 = 0 stem), and
    equals the degree of ``nonequiv_class`` whenever that class is
    determined.  ``gamma_power`` counts the compactified-inclusion smash
    factors coming from negative definite summands.  The trace does not
    participate in equality.
    """

    total_d: int
    total_b_plus: int
    stem_degree: int
    nonequiv_class: StemElement
    equivariant_nonzero: TriState
    gamma_power: int
    trace: tuple[str, ...] = field(compare=False, default=())

    def __post_init__(self):
        if self.stem_degree != 2 * self.total_d - self.total_b_plus:
            raise InvalidParameters("stem degree must equal 2*total_d - total b+")
        if self.gamma_power < 0:
            raise InvalidParameters("gamma_power must be >= 0")


@dataclass(frozen=True)
class CriteriaResult:
    verdict: TriState
    trace: tuple[str, ...]


@dataclass(frozen=True)
class BlowupResult:
    invariant: InvariantClass
    sw_preserved: TriState


class SplitKind(enum.Enum):
    IMPOSSIBLE = "impossible"
    FORCES_NEGATIVE_DEFINITE_COMPLEMENT = "forces_negative_definite_complement"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SplitQuery:
    """Congruence constraint b+(X1) = residue (mod modulus) on a hypothetical
    splitting X = X1 # X2.  b1 of both parts is zero automatically, since the
    engine only forms sums of b1 = 0 blocks and first Betti numbers add."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus not in (2, 4):
            raise InvalidParameters(f"modulus must be 2 or 4, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise InvalidParameters(
                f"residue must lie in [0, {self.modulus}), got {self.residue}"
            )


@dataclass(frozen=True)
class SplitVerdict:
    kind: SplitKind
    trace: tuple[str, ...]

    def __post_init__(self):
        if not self.trace:
            raise InvalidParameters("split verdicts must carry a reasoning trace")


@dataclass(frozen=True)
class _AcData:
    """Digested per-summand data for an almost complex summand."""

    label: str
    b_plus: int
    d: int
    parity: Parity | None
    sw: int | None  # exact integer where declared


def _is_neutral(block: BuildingBlock) -> bool:
    p = profile(block)
    return p.b_plus == 0 and p.b_minus == 0


def _negdef_index(block: NegativeDefinite, spin_c: SpinC | None) -> int:
    if spin_c is None:
        spin_c = SpinC.from_coords((1,) * block.rank)
    if spin_c.c_coords is not None and len(spin_c.c_coords) != block.rank:
        raise InvalidParameters(
            f"{len(spin_c.c_coords)} coordinates given for a rank-{block.rank} block"
        )
    d = dirac_index(spin_c.c_square, -block.rank)
    if d > 0:
        raise PositiveIndexOnNegativeDefinite(
            f"c^2 = {spin_c.c_square} on {describe_block(block)} gives d = {d} > 0; "
            "no characteristic vector does this"
        )
    return d


def _ac_data(s: Summand) -> _AcData:
    block = s.block
    b_plus = profile(block).b_plus
    d = (b_plus + 1) // 2  # expected dimension zero pins 2d = b+ + 1
    parity = sw_parity(block, s.class_key)
    sw = None
    if isinstance(block, EllipticSurface) and block.p_g >= 1:
        key = s.class_key
        if key is None:
            key = max_multiple(block.p_g, block.m, block.n)
        sw = basic_class_table(block.p_g, block.m, block.n).value(key)
    elif isinstance(block, SymplecticGeneric):
        sw = 1
    return _AcData(describe_block(block), b_plus, d, parity, sw)


def _parity_word(parity: Parity | None) -> str:
    return "undetermined" if parity is None else str(parity)


def _hopf_contribution(b_plus: int, parity: Parity | None) -> StemElement:
    if b_plus % 4 == 1:
        return zero(1)
    if parity is Parity.ODD:
        return hopf_power(1)
    if parity is Parity.EVEN:
        return zero(1)
    return unknown(1)


def _criteria_core(ac: Sequence[_AcData]) -> CriteriaResult:
    trace: list[str] = []
    n = len(ac)
    if n == 0:
        return CriteriaResult(
            TriState.YES, ("no almost complex summands: the identity class remains",)
        )
    violated = []
    undecided = []
    for data in ac:
        if data.b_plus % 4 == 1:
            violated.append(data)
            trace.append(f"{data.label}: b+ = {data.b_plus} = 1 (mod 4), condition fails")
        elif data.parity is Parity.ODD:
            trace.append(
                f"{data.label}: b+ = {data.b_plus} = 3 (mod 4) and SW odd, condition holds"
            )
        elif data.parity is Parity.EVEN:
            violated.append(data)
            trace.append(f"{data.label}: SW parity even, condition fails")
        else:
            undecided.append(data)
            trace.append(f"{data.label}: SW parity undetermined")
    if n >= 5:
        trace.append(f"{n} >= 5 almost complex summands: the class always vanishes")
        return CriteriaResult(TriState.NO, tuple(trace))
    if violated:
        trace.append("a summand fails its condition, so the class vanishes")
        return CriteriaResult(TriState.NO, tuple(trace))
    if undecided:
        trace.append("undecided parities are load-bearing, verdict unknown")
        return CriteriaResult(TriState.UNKNOWN, tuple(trace))
    if n <= 3:
        trace.append(f"all {n} summands satisfy the condition: nonzero")
        return CriteriaResult(TriState.YES, tuple(trace))
    total = sum(data.b_plus for data in ac)
    trace.append(
        "four-summand rule uses total b+ = 4 (mod 8); the index-divisibility "
        "reading (d divisible by 8) would demand b+ = 12 (mod 16) instead"
    )
    if total % 8 == 4:
        trace.append(f"total b+ = {total} = 4 (mod 8): nonzero")
        return CriteriaResult(TriState.YES, tuple(trace))
    trace.append(f"total b+ = {total} is not 4 (mod 8): the class vanishes")
    return CriteriaResult(TriState.NO, tuple(trace))


def _split_summands(
    csum: ConnectedSum, trace: list[str]
) -> tuple[list[Summand], list[Summand]]:
    """Partition into almost complex and negative definite summands, dropping
    neutral (b1 = b2 = 0) blocks."""
    ac: list[Summand] = []
    negdef: list[Summand] = []
    for s in csum.summands:
        if _is_neutral(s.block):
            trace.append(f"dropped {describe_block(s.block)} (neutral summand)")
        elif isinstance(s.block, NegativeDefinite):
            negdef.append(s)
        elif isinstance(s.block, _AC_KINDS):
            ac.append(s)
        else:  # unreachable for the current catalogue
            raise UncataloguedBlock(f"not a catalogued building block: {s.block!r}")
    return ac, negdef


def invariant(csum: ConnectedSum) -> InvariantClass:
    """Invariant class of a connected sum of catalogued blocks.

    Totals d and b+ add over summands; negative definite summands raise the
    gamma power by |d| and, when that power is positive, leave the
    nonequivariant class undetermined except where the stem degree is
    negative (negative stems vanish).
    """
    trace: list[str] = []
    ac_summands, negdef_summands = _split_summands(csum, trace)

    total_d = 0
    total_b_plus = 0
    gamma_power = 0
    for s in negdef_summands:
        d = _negdef_index(s.block, s.spin_c)
        total_d += d
        gamma_power += -d
        trace.append(
            f"{describe_block(s.block)}: d = {d}, contributes {-d} gamma factor(s)"
        )

    ac = [_ac_data(s) for s in ac_summands]
    contributions = []
    for data in ac:
        total_d += data.d
        total_b_plus += data.b_plus
        piece = _hopf_contribution(data.b_plus, data.parity)
        contributions.append(piece)
        trace.append(
            f"{data.label}: b+ = {data.b_plus}, d = {data.d}, "
            f"SW parity {_parity_word(data.parity)}, contributes {piece}"
        )

    stem_degree = 2 * total_d - total_b_plus

    if gamma_power == 0:
        nonequiv = smash_all(contributions)
        trace.append(f"nonequivariant class: smash product = {nonequiv}")
    elif stem_degree < 0:
        nonequiv = zero(stem_degree)
        trace.append(
            f"gamma power {gamma_power} pushes the class into stem {stem_degree} < 0, "
            "which vanishes"
        )
    else:
        nonequiv = unknown(stem_degree)
        trace.append(
            f"gamma power {gamma_power} > 0: no nonequivariant formula applies, "
            "class undetermined"
        )

    if not ac:
        equivariant = TriState.YES
        trace.append(
            "no almost complex part: the map has degree one on the fixed locus, "
            "so the equivariant class is nonzero"
        )
    else:
        crit = _criteria_core(ac)
        trace.extend(crit.trace)
        if len(ac) == 1:
            data = ac[0]
            if data.sw is not None:
                base = TriState.YES if data.sw != 0 else TriState.NO
                trace.append(
                    f"single summand: invariant is SW times a generator, SW = {data.sw}"
                )
            elif data.parity is Parity.ODD:
                base = TriState.YES
                trace.append("single summand: odd SW is in particular nonzero")
            else:
                base = TriState.UNKNOWN
                trace.append(
                    "single summand: SW value undetermined beyond parity, "
                    "equivariant verdict unknown"
                )
        else:
            base = crit.verdict
        if gamma_power == 0:
            equivariant = base
        elif base is TriState.NO:
            equivariant = TriState.NO
            trace.append("a vanishing factor makes the whole smash product vanish")
        else:
            equivariant = TriState.UNKNOWN
            trace.append(
                "gamma factors may or may not kill the class: equivariant verdict unknown"
            )

    return InvariantClass(
        total_d=total_d,
        total_b_plus=total_b_plus,
        stem_degree=stem_degree,
        nonequiv_class=nonequiv,
        equivariant_nonzero=equivariant,
        gamma_power=gamma_power,
        trace=tuple(trace),
    )


def nonvanishing_criteria(csum: ConnectedSum) -> CriteriaResult:
    """Summand-count nonvanishing verdict for a sum of almost complex blocks.

    Neutral summands are dropped first.  Any remaining summand that is not
    almost complex puts the sum outside the criteria's regime: the verdict is
    UNKNOWN, never a guess.
    """
    trace: list[str] = []
    ac_summands, negdef_summands = _split_summands(csum, trace)
    if negdef_summands:
        labels = ", ".join(describe_block(s.block) for s in negdef_summands)
        trace.append(f"not almost complex: {labels}; criteria do not apply")
        return CriteriaResult(TriState.UNKNOWN, tuple(trace))
    core = _criteria_core([_ac_data(s) for s in ac_summands])
    return CriteriaResult(core.verdict, tuple(trace) + core.trace)


def blowup(
    inv: InvariantClass, block: NegativeDefinite, spin_c: SpinC | None = None
) -> BlowupResult:
    """Sum an existing invariant with a negative definite block.

    The class gains |d| gamma factors.  The integer SW invariant is reported
    preserved for d = 0 (the class is literally unchanged) and for d < 0
    when total b+ exceeds 1 and 2|d| is at most the expected dimension of the
    original sum; otherwise preservation is unknown.
    """
    if not isinstance(block, NegativeDefinite):
        raise InvalidParameters("blowup blocks must be negative definite")
    d = _negdef_index(block, spin_c)
    k = inv.stem_degree - 1  # expected dimension of the original sum (b1 = 0)
    if d == 0:
        new_trace = inv.trace + (
            f"{describe_block(block)}: d = 0, zero gamma factors, class unchanged",
        )
        new_inv = InvariantClass(
            inv.total_d,
            inv.total_b_plus,
            inv.stem_degree,
            inv.nonequiv_class,
            inv.equivariant_nonzero,
            inv.gamma_power,
            new_trace,
        )
        return BlowupResult(new_inv, TriState.YES)

    stem_degree = inv.stem_degree + 2 * d
    if stem_degree < 0:
        nonequiv = zero(stem_degree)
    else:
        nonequiv = unknown(stem_degree)
    if inv.equivariant_nonzero is TriState.NO:
        equivariant = TriState.NO
    elif inv.total_b_plus == 0 and inv.equivariant_nonzero is TriState.YES:
        # a pure negative definite sum stays one: fixed-locus degree one
        equivariant = TriState.YES
    else:
        equivariant = TriState.UNKNOWN
    if inv.total_b_plus > 1 and 2 * (-d) <= k:
        preserved = TriState.YES
        note = f"2|d| = {2 * (-d)} <= k = {k} and b+ > 1: SW invariants agree"
    else:
        preserved = TriState.UNKNOWN
        note = f"2|d| = {2 * (-d)} exceeds k = {k} or b+ <= 1: SW preservation unknown"
    new_trace = inv.trace + (
        f"{describe_block(block)}: d = {d}, adds {-d} gamma factor(s)",
        note,
    )
    new_inv = InvariantClass(
        inv.total_d + d,
        inv.total_b_plus,
        stem_degree,
        nonequiv,
        equivariant,
        inv.gamma_power + (-d),
        new_trace,
    )
    return BlowupResult(new_inv, preserved)


def split_verdict(csum: ConnectedSum, query: SplitQuery) -> SplitVerdict:
    """Decide whether X can split as X1 # X2 with b+(X1) in the queried
    congruence class, given that the total nonequivariant class is a Hopf
    power eta^j with j in {2, 3}.

    The analysis runs over the stem-degree decompositions j = j1 + j2 with
    these rules: (R1) negative stems vanish, so both degrees are >= 0;
    (R2) the smash of the factors is nonzero, so each factor is nonzero;
    (R3) a nonzero factor in degree 1 forces an almost complex manifold with
    b+ = 3 (mod 4) and odd SW; (R4) a nonzero factor in degree 0 forces
    b+ = 0 on that part, since positive b+ makes its mapping degree zero.
    IMPOSSIBLE means every decomposition is contradicted; the complement is
    forced negative definite when every surviving decomposition pins
    b+(X2) = 0.
    """
    inv = invariant(csum)
    cls = inv.nonequiv_class
    if cls.kind is not StemKind.HOPF or cls.degree not in (2, 3):
        message = (
            f"splitting analysis needs a total class eta^2 or eta^3, got {cls} "
            f"in stem {inv.stem_degree}"
        )
        if inv.stem_degree == 4 and inv.equivariant_nonzero is TriState.YES:
            message += (
                "; the four-summand equivariant nonvanishing does not feed "
                "this obstruction"
            )
        raise PreconditionNotMet(message)

    j = cls.degree
    mod, res = query.modulus, query.residue
    trace: list[str] = [
        f"total class {cls} is nonzero in stem {j}; query: b+(X1) = {res} (mod {mod})",
        "the factors smash to a nonzero class, so both are nonzero (R2)",
        "stem degrees satisfy j1 + j2 = "
        f"{j} with j1, j2 >= 0, since negative stems vanish (R1)",
    ]
    survivors = 0
    all_pin_complement = True
    for j1 in range(j + 1):
        j2 = j - j1
        head = f"decomposition (j1, j2) = ({j1}, {j2})"
        # b1 = 0 on both parts, so j_i = 2 d_i - b+(X_i) has the parity of b+(X_i)
        if j1 % 2 != res % 2:
            trace.append(
                f"{head}: contradicted, j1 has the parity of b+(X1) "
                f"but {j1} and {res} differ mod 2"
            )
            continue
        if j1 == 1 and mod == 4 and res == 1:
            trace.append(
                f"{head}: contradicted, a nonzero degree-1 factor is almost complex "
                "with b+ = 3 (mod 4) (R3), incompatible with b+ = 1 (mod 4)"
            )
            continue
        if j1 == 0 and res != 0:
            trace.append(
                f"{head}: contradicted, a nonzero degree-0 factor forces b+(X1) = 0 "
                f"(R4), incompatible with b+ = {res} (mod {mod})"
            )
            continue
        survivors += 1
        notes = []
        if j1 == 1:
            notes.append("X1 must be almost complex with b+ = 3 (mod 4), odd SW (R3)")
        if j1 == 0:
            notes.append("forces b+(X1) = 0 (R4)")
        if j2 == 1:
            notes.append("X2 must be almost complex with b+ = 3 (mod 4), odd SW (R3)")
        if j2 == 0:
            notes.append("forces b+(X2) = 0 (R4): the complement is negative definite")
        else:
            all_pin_complement = False
        if notes:
            trace.append(f"{head}: survives; " + "; ".join(notes))
        else:
            trace.append(f"{head}: survives without further constraint")

    if survivors == 0:
        trace.append("every decomposition is contradicted: no such splitting exists")
        return SplitVerdict(SplitKind.IMPOSSIBLE, tuple(trace))
    if all_pin_complement:
        trace.append(
            "every surviving decomposition pins b+(X2) = 0: such a splitting "
            "forces a negative definite complement"
        )
        return SplitVerdict(
            SplitKind.FORCES_NEGATIVE_DEFINITE_COMPLEMENT, tuple(trace)
        )
    trace.append("some decomposition survives without constraint: no obstruction found")
    return SplitVerdict(SplitKind.UNKNOWN, tuple(trace))


def odd_basic_fingerprint(csum: ConnectedSum) -> tuple[tuple[int, ...], ...]:
    """Multiset (as a sorted tuple) of the summands' odd-SW class sets.

    Elliptic summands contribute their recognizable multiples, Kaehler
    summands their declared labels; neutral summands contribute nothing.
    Blocks without complete parity data have no fingerprint.
    """
    sets: list[tuple[int, ...]] = []
    for s in csum.summands:
        block = s.block
        if _is_neutral(block):
            continue
        if isinstance(block, EllipticSurface):
            if block.p_g < 1:
                raise UnknownSW(
                    f"{describe_block(block)}: no declared odd basic data for p_g = 0"
                )
            sets.append(recognizable_set(block.p_g, block.m, block.n))
        elif isinstance(block, KaehlerGeneric):
            sets.append(block.odd_basic)
        else:
            raise UnknownSW(
                f"{describe_block(block)} does not declare a complete odd basic set"
            )
    return tuple(sorted(sets))
