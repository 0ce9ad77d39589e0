"""qtheta: exact q-series engine and mock theta identity verifier."""

from .appell import (
    GenericityError,
    appell_m,
    delta_term,
    g2,
    geom_inverse,
    lambda_term,
    small_k,
)
from .identities import (
    Identity,
    VerificationReport,
    builtin_registry,
    lookup,
    verify,
    verify_all,
)
from .mock import mt_chi, mt_X
from .monomial import Monomial, Q
from .parser import (
    ArityError,
    EvalError,
    ExprSyntaxError,
    NonMonomialArgumentError,
    eval_expr,
    evaluate,
    parse,
    render,
)
from .series import (
    Coefficient,
    EvalContext,
    InsufficientPrecisionError,
    LaurentSeries,
    NonConvergentError,
    QSeriesError,
    ZeroDivisorError,
)
from .theta import J, Jm, jtheta, pochhammer

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "Coefficient",
    "EvalContext",
    "EvalError",
    "ExprSyntaxError",
    "GenericityError",
    "Identity",
    "InsufficientPrecisionError",
    "J",
    "Jm",
    "LaurentSeries",
    "Monomial",
    "NonConvergentError",
    "NonMonomialArgumentError",
    "Q",
    "QSeriesError",
    "VerificationReport",
    "ZeroDivisorError",
    "appell_m",
    "builtin_registry",
    "delta_term",
    "eval_expr",
    "evaluate",
    "g2",
    "geom_inverse",
    "jtheta",
    "lambda_term",
    "lookup",
    "mt_X",
    "mt_chi",
    "parse",
    "pochhammer",
    "render",
    "small_k",
    "verify",
    "verify_all",
]
