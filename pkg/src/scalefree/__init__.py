"""Numerical laboratory for scale-free calculus near t = 1.

Submodules
----------
fatnum     first-order fat real numbers ``t(1 +- eta)``
solutions  solution families of ``t dtau/dt = tau`` and the infinite product
verify     finite-difference junction classification and ODE residuals
cascade    golden-mean cascade and stochastic growth of infinitesimals
cellsim    replication/annihilation branching process
collide    two-particle collision versus eta-flip swap
cli        command-line front end (``python -m scalefree``)
"""

from .errors import ConvergenceError, DomainError, SingularityError
from .fatnum import FatReal, expectation, invert, make, mul, power, t_minus, t_plus
from .solutions import (
    Asymmetric,
    AsymmetricScaling,
    ExactProduct,
    Fluctuation,
    GeneralizedParams,
    Standard,
    eval_generalized_T,
    eval_solution,
    parity_transform,
    product_factors,
    self_similar_residual,
)
from .verify import classify_junction, numeric_derivative, ode_residual, phi_residual

__version__ = "0.1.0"
