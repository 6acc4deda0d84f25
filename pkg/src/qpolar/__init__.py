"""Exact quasipolar decompositions over commutative local rings.

The package has three layers: exact ring arithmetic (finite fields,
modular integers, p-local rationals, truncated power series), masked
matrix subrings with constructive spectral idempotents, and a
definition-level brute-force oracle over finite carriers used to verify
the constructions exhaustively.
"""

from .rings import (
    InfiniteRing,
    IntegersMod,
    InvalidElement,
    LocalizedIntegers,
    LocalRing,
    NotAUnit,
    PrimeField,
    QpolarError,
    RingElement,
    RingMismatch,
    RingParseError,
    TruncatedSeriesRing,
    parse_ring,
)
from .matrices import (
    L3,
    LOW3,
    M2,
    M3,
    S1,
    S2,
    SHAPES,
    T2,
    T3,
    TN,
    UP3,
    MatrixParseError,
    QuadraticCharPoly,
    Shape,
    ShapedMatrix,
    ShapeMismatch,
    UnsupportedShape,
    char_poly_2x2,
    matrix_from_json,
    parse_matrix,
    parse_shape,
)
from .witnesses import (
    CheckReport,
    Comm2Evidence,
    QuasipolarWitness,
    RadCleanWitness,
    WitnessInvalid,
    require_valid,
)
from .commutant import (
    BleachedReport,
    CommutantEquation,
    NotBleachedInstance,
    check_bleached,
    check_uniquely_bleached,
    solve_commutant,
    solve_equation,
)
from .triangular import (
    CaseTag,
    classify_case,
    quasipolar_witness_shape,
    quasipolar_witness_t2,
    quasipolar_witness_t3,
    rad_clean_witness_t3,
    scalar_quasipolar,
    spectral_idempotent_t3,
)
from .m2 import (
    M2Classification,
    M2Kind,
    NotQuasipolarError,
    PreconditionViolation,
    classify_m2,
    find_root_split,
    quasipolar_witness_m2,
)
from .series import (
    BadSeed,
    ConstantNotQuasipolar,
    NoConstantSplit,
    PivotNotUnit,
    SeriesQuadratic,
    check_bleached_series,
    constant_term_matrix,
    lift_root,
    lift_split,
    quasipolar_witness_m2_series,
)
from .oracle import (
    FiniteRingView,
    NotIdempotent,
    commutant,
    corner_validate,
    double_commutant,
    get_view,
    is_quasinilpotent,
    quasipolar_search,
    rad_clean_search,
)
from .sweeps import (
    SweepReport,
    corner_equivalence_sweep,
    m2_agreement_sweep,
    t2_exhaustive_sweep,
    t3_case_sweep,
    t3_rad_clean_sweep,
    transport_sweep,
    zloc_shape_sweep,
)
from .worked_examples import all_examples, example_precision2, example_precision8, verify_example

__version__ = "0.1.0"

__all__ = [
    "BadSeed",
    "BleachedReport",
    "CaseTag",
    "CheckReport",
    "Comm2Evidence",
    "CommutantEquation",
    "ConstantNotQuasipolar",
    "FiniteRingView",
    "InfiniteRing",
    "IntegersMod",
    "InvalidElement",
    "L3",
    "LOW3",
    "LocalRing",
    "LocalizedIntegers",
    "M2",
    "M2Classification",
    "M2Kind",
    "M3",
    "MatrixParseError",
    "NoConstantSplit",
    "NotAUnit",
    "NotBleachedInstance",
    "NotIdempotent",
    "NotQuasipolarError",
    "PivotNotUnit",
    "PreconditionViolation",
    "PrimeField",
    "QpolarError",
    "QuadraticCharPoly",
    "QuasipolarWitness",
    "RadCleanWitness",
    "RingElement",
    "RingMismatch",
    "RingParseError",
    "S1",
    "S2",
    "SHAPES",
    "SeriesQuadratic",
    "Shape",
    "ShapeMismatch",
    "ShapedMatrix",
    "SweepReport",
    "T2",
    "T3",
    "TN",
    "TruncatedSeriesRing",
    "UP3",
    "UnsupportedShape",
    "WitnessInvalid",
    "all_examples",
    "char_poly_2x2",
    "check_bleached",
    "check_bleached_series",
    "check_uniquely_bleached",
    "classify_case",
    "classify_m2",
    "commutant",
    "constant_term_matrix",
    "corner_equivalence_sweep",
    "corner_validate",
    "double_commutant",
    "example_precision2",
    "example_precision8",
    "find_root_split",
    "get_view",
    "is_quasinilpotent",
    "lift_root",
    "lift_split",
    "m2_agreement_sweep",
    "matrix_from_json",
    "parse_matrix",
    "parse_ring",
    "parse_shape",
    "quasipolar_search",
    "quasipolar_witness_m2",
    "quasipolar_witness_m2_series",
    "quasipolar_witness_shape",
    "quasipolar_witness_t2",
    "quasipolar_witness_t3",
    "rad_clean_search",
    "rad_clean_witness_t3",
    "require_valid",
    "scalar_quasipolar",
    "solve_commutant",
    "solve_equation",
    "spectral_idempotent_t3",
    "t2_exhaustive_sweep",
    "t3_case_sweep",
    "t3_rad_clean_sweep",
    "transport_sweep",
    "verify_example",
    "zloc_shape_sweep",
]
