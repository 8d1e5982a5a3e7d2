"""Symbolic-numeric solver for fractional nonlinear initial-value problems.

The decomposition engine produces truncated fractional power series with
exact Gamma-ratio coefficients; independent numeric oracles (quadrature,
difference sums, RK4, a rational Taylor recurrence) validate every term
rule and the classical limit.
"""

from .adomian import (
    AdomianSequence,
    PolyNonlinearity,
    adomian_closed_form,
    adomian_polynomials,
)
from .coeffs import GammaAtom, GammaCoefficient
from .config import ConfigError, RunConfig, load_config
from .gammafn import gamma
from .oracles import (
    OracleReport,
    Rk4Table,
    gl_derivative,
    quad_jumarie_integral,
    rk4_solve,
    taylor_oracle,
)
from .series import (
    DEFAULT_MAX_GRADE,
    FracSeries,
    jumarie_derivative,
    jumarie_integral,
)
from .solver import AdmSolution, ProblemSpec, adm_iterate, build_y0, residual

__version__ = "0.1.0"

__all__ = [
    "AdmSolution",
    "AdomianSequence",
    "ConfigError",
    "DEFAULT_MAX_GRADE",
    "FracSeries",
    "GammaAtom",
    "GammaCoefficient",
    "OracleReport",
    "PolyNonlinearity",
    "ProblemSpec",
    "Rk4Table",
    "RunConfig",
    "adm_iterate",
    "adomian_closed_form",
    "adomian_polynomials",
    "build_y0",
    "gamma",
    "gl_derivative",
    "jumarie_derivative",
    "jumarie_integral",
    "load_config",
    "quad_jumarie_integral",
    "residual",
    "rk4_solve",
    "taylor_oracle",
]
