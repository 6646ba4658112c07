"""Special functions and numerical certification of zeta-ratio claims.

The heavy lifting lives in the compiled extension ``zetacert._core``; this
package re-exports its public surface.
"""

from zetacert._core import (
    GridSpec,
    QuadratureResult,
    VerificationReport,
    __version__,
    binom,
    check_proof_identities,
    classify_binomial,
    eta,
    falling_factorial,
    gamma,
    general_derivative,
    integrate_bose_moment,
    integrate_kernel_moment,
    kernel_base,
    kernel_derivative,
    kernel_ratio,
    lambda_,
    log_gamma,
    nth_derivative,
    scan_kernel_positivity,
    scan_log_convexity,
    scan_monotonicity_rule,
    scan_proposition_ratio,
    scan_theorem1_monotone,
    stirling2,
    theorem1_ratio,
    zeta,
)

__all__ = [
    "GridSpec",
    "QuadratureResult",
    "VerificationReport",
    "__version__",
    "binom",
    "check_proof_identities",
    "classify_binomial",
    "eta",
    "falling_factorial",
    "gamma",
    "general_derivative",
    "integrate_bose_moment",
    "integrate_kernel_moment",
    "kernel_base",
    "kernel_derivative",
    "kernel_ratio",
    "lambda_",
    "log_gamma",
    "nth_derivative",
    "scan_kernel_positivity",
    "scan_log_convexity",
    "scan_monotonicity_rule",
    "scan_proposition_ratio",
    "scan_theorem1_monotone",
    "stirling2",
    "theorem1_ratio",
    "zeta",
]
