"""Numerics for the L^p norms of weighted Bergman projections on the unit disk.

Modules:
    specfun     Gamma ratios and the Gauss hypergeometric function 2F1
    diskquad    polar quadrature rules for dA_alpha
    identities  closed-form hypergeometric identities with quadrature oracles
    projection  P_alpha, its maximal version and the test family f_xi
    bounds      upper and lower bounds for the projection norms
    cli         command-line reports
"""

from .bounds import (
    conjectured_norm,
    dostanic_value,
    norm_report,
    rayleigh_quotient_f_xi,
    upper_bound_norm,
)
from .diskquad import QuadRule, SampledField, build_rule, integrate, lp_norm
from .errors import (
    BudgetExceededError,
    CutoffError,
    DivergenceError,
    DomainError,
    InconclusiveError,
    ResolutionError,
)
from .projection import SeriesCoeffs, SpaceParams, TestFunctionXi
from .specfun import Hyp2F1Args, hyp2f1, hyp2f1_eval, ln_gamma, pochhammer

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CutoffError",
    "DivergenceError",
    "DomainError",
    "Hyp2F1Args",
    "InconclusiveError",
    "QuadRule",
    "ResolutionError",
    "SampledField",
    "SeriesCoeffs",
    "SpaceParams",
    "TestFunctionXi",
    "build_rule",
    "conjectured_norm",
    "dostanic_value",
    "hyp2f1",
    "hyp2f1_eval",
    "integrate",
    "ln_gamma",
    "lp_norm",
    "norm_report",
    "pochhammer",
    "rayleigh_quotient_f_xi",
    "upper_bound_norm",
]
