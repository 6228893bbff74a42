"""Vector-normed fixed-point solvers for hybrid operator equations
x = Ax*Bx + Cx, with Riemann-Liouville fractional-integral applications.

The heavy lifting lives in the compiled extension; this package re-exports
its operations.
"""

from ._core import (
    audit_builtin_json,
    builtin_spec_json,
    check_report_json,
    gamma,
    is_convergent_to_zero,
    neumann_inverse,
    power_vanishes,
    rl_integral,
    solve_builtin_json,
    spectral_radius,
)

__all__ = [
    "audit_builtin_json",
    "builtin_spec_json",
    "check_report_json",
    "gamma",
    "is_convergent_to_zero",
    "neumann_inverse",
    "power_vanishes",
    "rl_integral",
    "solve_builtin_json",
    "spectral_radius",
]
