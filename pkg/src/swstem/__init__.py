"""Exact invariant arithmetic for connected sums of 4-manifolds.

The library computes Seiberg-Witten basic-class data for catalogued building
blocks, pushes it through the truncated stable stems under connected sum, and
answers nonvanishing, splitting and recognition questions with exact integers
and explicit rule traces.  See the README for a tour; the ``swstem`` command
exposes everything on the command line.
"""

from .blocks import (
    CANONICAL,
    K3,
    BasicClassTable,
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
    odd_binomial,
    profile,
    recognizable_set,
    sw_parity,
    sw_value,
)
from .errors import (
    IndexNotIntegral,
    InvalidParameters,
    ManifoldSemanticError,
    ManifoldSyntaxError,
    NotAnEllipticPattern,
    PositiveIndexOnNegativeDefinite,
    PreconditionNotMet,
    SwStemError,
    UncataloguedBlock,
    UnknownSW,
)
from .invariants import (
    BlowupResult,
    ConnectedSum,
    CriteriaResult,
    InvariantClass,
    SplitKind,
    SplitQuery,
    SplitVerdict,
    Summand,
    blowup,
    connected_sum,
    invariant,
    nonvanishing_criteria,
    odd_basic_fingerprint,
    split_verdict,
)
from .lattice import (
    SpinC,
    TopProfile,
    dirac_index,
    expected_dimension,
    is_almost_complex_profile,
)
from .manifold_io import (
    ManifoldDoc,
    load_manifold,
    parse_manifold,
    serialize_manifold,
)
from .recognize import (
    DistinctionVerdict,
    Pattern,
    RecognitionResult,
    distinguish,
    recognize,
    recognize_oracle,
)
from .stems import (
    ETA,
    ONE,
    StemElement,
    StemKind,
    TriState,
    hopf_power,
    integer_class,
    is_nonzero,
    smash,
    smash_all,
    sq2_detects_hopf,
    unknown,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "BasicClassTable",
    "BlowupResult",
    "BuildingBlock",
    "CANONICAL",
    "ConnectedSum",
    "CriteriaResult",
    "DistinctionVerdict",
    "ETA",
    "EllipticSurface",
    "HomotopySphereLike",
    "IndexNotIntegral",
    "InvalidParameters",
    "InvariantClass",
    "K3",
    "KaehlerGeneric",
    "ManifoldDoc",
    "ManifoldSemanticError",
    "ManifoldSyntaxError",
    "NegativeDefinite",
    "NotAnEllipticPattern",
    "ONE",
    "Parity",
    "Pattern",
    "PositiveIndexOnNegativeDefinite",
    "PreconditionNotMet",
    "RecognitionResult",
    "SpinC",
    "SplitKind",
    "SplitQuery",
    "SplitVerdict",
    "StemElement",
    "StemKind",
    "Summand",
    "SwStemError",
    "SymplecticGeneric",
    "TopProfile",
    "TriState",
    "UncataloguedBlock",
    "UnknownSW",
    "basic_class_table",
    "blowup",
    "connected_sum",
    "describe_block",
    "dirac_index",
    "distinguish",
    "expected_dimension",
    "hopf_power",
    "integer_class",
    "invariant",
    "is_almost_complex_profile",
    "is_nonzero",
    "load_manifold",
    "max_multiple",
    "nonvanishing_criteria",
    "odd_basic_fingerprint",
    "odd_binomial",
    "parse_manifold",
    "profile",
    "recognizable_set",
    "recognize",
    "recognize_oracle",
    "serialize_manifold",
    "smash",
    "smash_all",
    "split_verdict",
    "sq2_detects_hopf",
    "sw_parity",
    "sw_value",
    "unknown",
    "zero",
]
