"""Optimal consumption and investment with Epstein-Zin utility under a leverage constraint.

The value function of the constrained problem is computed by finite-difference
policy iteration, checked against closed-form special cases, analysed for its
constrained/unconstrained regions and cross-validated by Monte Carlo.
"""

from .bsde_mc import MCConfig, UtilityEstimate, evaluate_utility_picard, simulate_wealth, validate_solution
from .closed_form import (
    aggregator,
    aggregator_truncated,
    benchmark_solution,
    benchmark_value,
    bond_only_utility,
    proportional_solution,
    value_bounds,
)
from .hjb import (
    SolutionField,
    SolverConfig,
    WealthGrid,
    build_grid,
    check_solution,
    hamiltonian_residual,
    optimal_consumption,
    optimal_portfolio,
    policy_evaluation,
    policy_iteration_solve,
    solve,
)
from .model import (
    DerivedParams,
    Linear,
    MarketParams,
    ModelParams,
    PiecewiseLinear,
    PreferenceParams,
    Unbounded,
    derive_params,
    leverage_eval,
    leverage_validate,
)
from .policy import PolicyField
from .regions import (
    binding_indicator,
    check_bound_chains,
    check_region_odes,
    find_free_boundary,
    homogeneity_check,
    region_map,
)
from .report import ValidationReport

__version__ = "0.1.0"
