"""Classification of ternary mixed sums of squares and triangular numbers."""

from .arith import (
    Factorization,
    factorize,
    hilbert2,
    is_prime,
    is_qr,
    jacobi,
    odd_part,
    squarefree_part,
    v2,
)
from .classify import (
    Classification,
    TriState,
    classify,
    classify_almost,
    classify_asymptotic,
    classify_universal,
    condition3_solver,
    normalize,
)
from .corollaries import corollary_predicate
from .forms import (
    DiagonalQuadratic,
    ExceptionalSetReport,
    FormKind,
    MixedForm,
    associated_quadratic,
    evaluate,
    exceptional_set,
    local_count,
    represents,
    restricted_count,
    triangular,
)
from .local import LocalReport, local_report, odd_locally_universal, two_adic_ok, vf
from .twoadic import (
    ImaginaryField,
    Lattice2,
    SpinorCheck,
    SquareClass,
    SquareClassSet,
    binary_spinor_norm,
    class_mul,
    norm_group,
    schulze_pillot_check,
    square_class,
    ternary_spinor_norm,
)

__all__ = [
    "Classification",
    "DiagonalQuadratic",
    "ExceptionalSetReport",
    "Factorization",
    "FormKind",
    "ImaginaryField",
    "Lattice2",
    "LocalReport",
    "MixedForm",
    "SpinorCheck",
    "SquareClass",
    "SquareClassSet",
    "TriState",
    "associated_quadratic",
    "binary_spinor_norm",
    "class_mul",
    "classify",
    "classify_almost",
    "classify_asymptotic",
    "classify_universal",
    "condition3_solver",
    "corollary_predicate",
    "evaluate",
    "exceptional_set",
    "factorize",
    "hilbert2",
    "is_prime",
    "is_qr",
    "jacobi",
    "local_count",
    "local_report",
    "norm_group",
    "normalize",
    "odd_locally_universal",
    "odd_part",
    "represents",
    "restricted_count",
    "schulze_pillot_check",
    "square_class",
    "squarefree_part",
    "ternary_spinor_norm",
    "triangular",
    "two_adic_ok",
    "v2",
    "vf",
]
