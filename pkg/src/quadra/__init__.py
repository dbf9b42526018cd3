"""Classification of strongly quadrangular (0,1)-matrices of small degree,
forbidden-block detection, and numerical unitary witnesses."""

from .binmat import (
    BinMatrix,
    MatrixFormatError,
    has_zero_line,
    is_indecomposable,
    is_quadrangular,
    is_regular,
    is_row_strongly_quadrangular,
    is_strongly_quadrangular,
    row_sum_multiset,
    transpose,
    zero_count,
)
from .census import CensusFilter, CensusTable, count_table, enumerate_classes, enumerate_regular_classes
from .equivalence import (
    ClassRecord,
    are_equivalent,
    aut_group_order,
    canonical_form,
    class_size,
    is_symmetric_equivalent,
    is_transpose_equivalent,
)
from .forbidden import (
    BlockEmbedding,
    EmbeddingKind,
    detect_cond,
    detect_newcond,
    verify_embedding,
    zero_lower_bound,
)
from .witness import (
    WitnessResult,
    WitnessStatus,
    dita_compose,
    dita_row_compose,
    find_witness,
    fourier_matrix,
    is_unitary,
    support,
    verify_witness,
)

__all__ = [
    "BinMatrix",
    "MatrixFormatError",
    "has_zero_line",
    "is_indecomposable",
    "is_quadrangular",
    "is_regular",
    "is_row_strongly_quadrangular",
    "is_strongly_quadrangular",
    "row_sum_multiset",
    "transpose",
    "zero_count",
    "CensusFilter",
    "CensusTable",
    "count_table",
    "enumerate_classes",
    "enumerate_regular_classes",
    "ClassRecord",
    "are_equivalent",
    "aut_group_order",
    "canonical_form",
    "class_size",
    "is_symmetric_equivalent",
    "is_transpose_equivalent",
    "BlockEmbedding",
    "EmbeddingKind",
    "detect_cond",
    "detect_newcond",
    "verify_embedding",
    "zero_lower_bound",
    "WitnessResult",
    "WitnessStatus",
    "dita_compose",
    "dita_row_compose",
    "find_witness",
    "fourier_matrix",
    "is_unitary",
    "support",
    "verify_witness",
]
