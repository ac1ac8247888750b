"""Hilbert-space analysis of the four-outcome consistency paradox.

Three zero-probability statements about the outcomes (a,0), (0,a) and (1,1)
would exclude (a,a) under non-contextual logic, yet the only state meeting
all three gives P_WW(a,a) = 1/12. This package builds the relevant states
and operators exactly, evaluates the closed-form lower bounds on P_WW(a,a)
as a function of the error-probability sum P_S, and checks them against a
numerical frontier and Born-rule sampling.
"""

from .bounds import (
    CONSTANTS,
    OutOfValidityError,
    bound_eq19,
    bound_eq24,
    critical_p_s,
    ps_zero_condition,
)
from .hilbert import (
    ContextProbabilities,
    StateVector,
    basis_state,
    born_probability,
    context_probabilities,
    noncontextual_slack,
    phi0,
    product_state,
)
from .linalg import SpectralDecomposition, hermitian_eigen, inner, kron
from .montecarlo import Context, EstimateReport, ShotRecord, estimate, sample_context
from .optimizer import (
    FrontierPoint,
    OptimizerConfig,
    critical_p_s_numeric,
    frontier_full_space,
    frontier_sweep,
    frontier_theta_family,
    frontier_zero,
)
from .spectral import NuCoefficients, build_pi_s, nu_basis, p_sum_from_nu, p_ww_from_nu, to_nu

__version__ = "0.1.0"
