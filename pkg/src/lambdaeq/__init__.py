"""Modular equations for the lambda function, built in exact arithmetic.

For any odd prime p, with (p+1)/8 = m/n in lowest terms, the package
constructs the (m+1) x (m+1) integer matrix of the polynomial relation
between X = (lambda(t) lambda(pt))^{n/8} and
Y = ((1-lambda(t)) (1-lambda(pt)))^{n/8}, entirely in exact rational
arithmetic, and verifies every structural identity along the way: the
partition expansion of the q-series coefficients, block determinants,
row-moment formulas, the emergent symmetries of the matrix, and the
nonlinear differential equation satisfied by lambda itself.
"""

from ._backend import BACKEND, rational
from .arith import AlphaContext, alpha_context, is_odd_prime, sigma1
from .bpoly import (
    ENUMERATION_THRESHOLD,
    BContext,
    b_eval,
    b_series,
    binomial_moment,
    c_coeff,
    p_poly,
)
from .exact import Matrix, SingularMatrixError, binomial, factorial
from .modeq import (
    CheckResult,
    IntegralityError,
    ModularMatrix,
    PrimeParams,
    Row1Stats,
    assemble,
    block,
    bordered_determinant,
    closed_form_row1,
    from_doc,
    params_for,
    render_text,
    render_typeset,
    row0,
    row1_stats,
    row2_pipeline,
    solve_row,
    to_doc,
    verify_block_determinants,
    verify_global_vanish,
    verify_row_moments,
    verify_symmetry,
)
from .ode import OdeResidual, ode_residual
from .partitions import Partition, odd_partitions_of, partitions_of
from .qseries import (
    Series,
    euler_product,
    lambda_series,
    one_minus_lambda_series,
    xy_normalized_direct,
    xy_normalized_lemma,
)

__version__ = "0.1.0"
