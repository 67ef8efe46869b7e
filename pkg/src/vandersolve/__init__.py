"""Closed-form solvers for square and generalized Vandermonde systems.

Everything mathematical runs over exact rationals; a float lane exists for
the complexity benchmark.  See the README for the CLI.
"""

from .field import (
    CountingNumber,
    OpCounter,
    ScalarParseError,
    add,
    counting,
    exact_div,
    inv,
    mul,
    neg,
    parse_scalar,
    sub,
    values_equal,
)
from .kernel import (
    AffineSolutionSpace,
    KernelBasis,
    OverdeterminedInputError,
    OverdeterminedResult,
    kernel_basis,
    sample_solution,
    solve_general,
    solve_overdetermined,
)
from .poly import Polynomial, evaluate
from .symfuncs import (
    DuplicateNodeError,
    NodeSet,
    SigmaTable,
    check_root_identity,
    compute_sigma,
    deflate,
    deflate_all,
    poly_from_roots,
)
from .vandermonde import (
    DenseMatrix,
    DimensionMismatchError,
    build_matrix,
    determinant,
    interpolate,
    inverse,
    solve_square,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSolutionSpace",
    "CountingNumber",
    "DenseMatrix",
    "DimensionMismatchError",
    "DuplicateNodeError",
    "KernelBasis",
    "NodeSet",
    "OpCounter",
    "OverdeterminedInputError",
    "OverdeterminedResult",
    "Polynomial",
    "ScalarParseError",
    "SigmaTable",
    "add",
    "build_matrix",
    "check_root_identity",
    "compute_sigma",
    "counting",
    "deflate",
    "deflate_all",
    "determinant",
    "exact_div",
    "evaluate",
    "interpolate",
    "inv",
    "inverse",
    "kernel_basis",
    "mul",
    "neg",
    "parse_scalar",
    "poly_from_roots",
    "sample_solution",
    "solve_general",
    "solve_overdetermined",
    "solve_square",
    "sub",
    "values_equal",
]
