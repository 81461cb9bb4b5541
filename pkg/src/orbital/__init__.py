"""Combinatorics of hypersurface orbital varieties.

The pipeline: standard Young tableaux and tau-invariants (tableaux),
Robinson-Schensted words (rs), window restrictions (projections),
classification of codimension-one components (hypersurface), exact
polynomial arithmetic (polyalg), the conjectured defining equation and
characteristic polynomial (generator), and finite-field probes (verify).
"""

from .errors import (
    BadRange,
    BadWindow,
    BoundExceeded,
    ClassificationError,
    ColumnNotIncreasing,
    DegenerateSample,
    DuplicateEntry,
    InconsistentIndexing,
    MissingVariable,
    NotApplicable,
    NotHomogeneousWeight,
    NotNilpotent,
    NotRichardson,
    NotSquare,
    OrbitalError,
    RaggedShape,
    RowNotIncreasing,
    SizeMismatch,
    TableauError,
    TooSmall,
    ZeroPolynomial,
)
from .generator import (
    CharPoly,
    GeneratorReport,
    char_poly,
    cmin_window,
    generator_report,
    generic_richardson_matrix,
    lemma2_threshold,
)
from .hypersurface import (
    HypersurfaceDescriptor,
    classify_hypersurface,
    hypersurface_descendants,
    iter_descriptors,
    sigma_is_full,
)
from .polyalg import (
    MultiPoly,
    PolyMatrix,
    WeightVector,
    determinant,
    format_poly,
    poly_eval,
    t_coefficient,
    t_poly,
    weight_of,
    x,
)
from .projections import (
    project,
    projected_shape,
    remove_largest,
    strip_first,
    strip_first_steps,
)
from .rs import Permutation, find_word_for_tableau, rs_pair
from .tableaux import (
    Chain,
    Partition,
    StandardTableau,
    TauSet,
    chains,
    dominance_le,
    dual_partition,
    render_tableau,
    richardson_tableau,
    tau_invariant,
    validate_syt,
    variety_dim,
)
from .verify import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    Failure,
    FieldMatrix,
    RemarkResult,
    VerificationReport,
    Violation,
    check_power_rank,
    jordan_type,
    matrix_rank,
    rank_bound,
    remark_check,
    remark_minor,
    sample_hypersurface_point,
    sample_variety_point,
    verify_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "BadRange",
    "BadWindow",
    "BoundExceeded",
    "Chain",
    "CharPoly",
    "ClassificationError",
    "ColumnNotIncreasing",
    "DEFAULT_PRIME",
    "DegenerateSample",
    "DuplicateEntry",
    "Failure",
    "FieldMatrix",
    "GeneratorReport",
    "HypersurfaceDescriptor",
    "InconsistentIndexing",
    "MissingVariable",
    "MultiPoly",
    "NotApplicable",
    "NotHomogeneousWeight",
    "NotNilpotent",
    "NotRichardson",
    "NotSquare",
    "OrbitalError",
    "Partition",
    "Permutation",
    "PolyMatrix",
    "RaggedShape",
    "RemarkResult",
    "RowNotIncreasing",
    "SECOND_PRIME",
    "SizeMismatch",
    "StandardTableau",
    "TableauError",
    "TauSet",
    "TooSmall",
    "VerificationReport",
    "Violation",
    "WeightVector",
    "ZeroPolynomial",
    "chains",
    "char_poly",
    "check_power_rank",
    "classify_hypersurface",
    "cmin_window",
    "determinant",
    "dominance_le",
    "dual_partition",
    "find_word_for_tableau",
    "format_poly",
    "generator_report",
    "generic_richardson_matrix",
    "hypersurface_descendants",
    "iter_descriptors",
    "jordan_type",
    "lemma2_threshold",
    "matrix_rank",
    "poly_eval",
    "project",
    "projected_shape",
    "rank_bound",
    "remark_check",
    "remark_minor",
    "remove_largest",
    "render_tableau",
    "richardson_tableau",
    "rs_pair",
    "sample_hypersurface_point",
    "sample_variety_point",
    "sigma_is_full",
    "strip_first",
    "strip_first_steps",
    "t_coefficient",
    "t_poly",
    "tau_invariant",
    "validate_syt",
    "variety_dim",
    "verify_conjecture",
    "weight_of",
    "x",
]
