"""Exact-arithmetic toolkit for Gorenstein non-CI monomial curves in A^4."""

from .errors import (
    AllocationCapError,
    DegenerateAdjugateError,
    IdentityAssertionError,
    InconsistentClassificationError,
    InternalCheckError,
    MonocurveError,
    NegativeQueryError,
    NotApplicableError,
    NotBinomialError,
    NotCoprimeAdjointError,
    NotCoprimeError,
    PreconditionError,
    WrongShapeError,
    ZeroOrNegativeEntryError,
    ZeroVectorError,
)
from .gorenstein import (
    COMPLETE_INTERSECTION,
    GORENSTEIN_NON_CI,
    KIND_DIAGONAL,
    KIND_U,
    KIND_V,
    NON_GORENSTEIN,
    SKIPPED,
    BresinskyForm,
    Certificate,
    Classification,
    Finding,
    PeriodData,
    ScanRow,
    TranslationFamily,
    certify_bresinsky_matrix,
    classify,
    detect_bresinsky_form,
    family_matrix_A,
    family_matrix_B,
    generate_family,
    homogeneous_rows_period,
    is_complete_intersection,
    scan_translations,
    translation_vector_u,
    translation_vector_v,
)
from .intmat import adjugate, adjugate_first_column, det, rank
from .resolution import (
    Binomial,
    Monomial,
    SkewPresentation,
    build_presentation,
    pfaffian,
    presentation_from_dict,
    presentation_to_dict,
    socle_increment,
    translated_presentation,
    verify_complexes,
    verify_homogeneity,
)
from .semigroup import (
    PrincipalMatrix,
    SemigroupProfile,
    Sequence,
    contains,
    inverse_principal,
    is_principal,
    make_sequence,
    principal_matrix,
    principal_row,
    profile,
)

__version__ = "0.1.0"
