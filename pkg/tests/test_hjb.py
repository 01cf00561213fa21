from dataclasses import replace

import numpy as np
import pytest
from conftest import J0_AT_1_K1, LEVERAGES, example_params, solved, x_max_for
from hypothesis import given
from hypothesis import strategies as st

from ezleverage.closed_form import (
    aggregator,
    benchmark_solution,
    proportional_solution,
)
from ezleverage.errors import BadGrid, DomainError, InvalidLeverage, NotConverged
from ezleverage.hjb import (
    CONSTRAINED,
    UNCONSTRAINED,
    SolverConfig,
    build_grid,
    check_solution,
    field_from_closed_form,
    hamiltonian,
    hamiltonian_residual,
    optimal_consumption,
    optimal_portfolio,
    policy_evaluation,
    policy_iteration_solve,
)
from ezleverage.model import Linear, PiecewiseLinear, Unbounded
from ezleverage.policy import PolicyField

# -- grids -------------------------------------------------------------------


def test_grid_examples():
    g = build_grid(0, 1, 11, "uniform")
    assert np.allclose(g.nodes, np.arange(11) / 10)
    g = build_grid(1e-3, 10, 5)
    assert g.nodes[0] == 1e-3 and g.nodes[-1] == 10
    assert np.allclose(np.diff(np.log(g.nodes)), np.log(10), rtol=1e-12)


@pytest.mark.parametrize("args", [(1.0, 1.0, 10), (-1.0, 1.0, 10), (0.0, 1.0, 10, "log"), (0.1, 1.0, 1),
                                  (0.1, 1.0, 10, "cubic"), (0.1, np.inf, 10)])
def test_bad_grids(args):
    with pytest.raises(BadGrid):
        build_grid(*args)


def test_solver_rejects_small_grids(params):
    with pytest.raises(BadGrid):
        policy_iteration_solve(params, Linear(1, 0), build_grid(1e-3, 50, 100))
    with pytest.raises(BadGrid):
        policy_iteration_solve(params, Linear(1, 0), build_grid(1, 5, 200))


def test_solver_config_validation():
    for bad in ({"scheme": "central"}, {"damping": 0.0}, {"tol_value": 0.0}, {"max_iterations": 0},
                {"lower_boundary": "neumann"}, {"upper_boundary": "free"}):
        with pytest.raises(ValueError):
            SolverConfig(**bad)


# -- pointwise controls ------------------------------------------------------


@given(J=st.floats(0.1, 50), Jx=st.floats(0.01, 50))
def test_consumption_maximises_hamiltonian_term(params, J, Jx):
    c = optimal_consumption(J, Jx, params)

    def obj(cc):
        return aggregator(cc, J, params) - cc * Jx

    h = 1e-4 * c
    assert obj(c) >= obj(c + h) - 1e-12 * abs(obj(c))
    assert obj(c) >= obj(c - h) - 1e-12 * abs(obj(c))


def test_consumption_first_order_condition(params):
    J, Jx, h = 4.0, 0.9, 1e-6
    c = optimal_consumption(J, Jx, params)
    df = (aggregator(c + h, J, params) - aggregator(c - h, J, params)) / (2 * h)
    assert df == pytest.approx(Jx, rel=1e-7)


def test_portfolio_matches_brute_force(params):
    a, s2 = params.mu - params.r, params.sigma**2
    for Jx, Jxx, g in [(1.0, -2.0, 0.5), (1.0, -2.0, 5.0), (0.3, -0.05, np.inf), (2.0, -1.0, 0.0)]:
        pi = optimal_portfolio(Jx, Jxx, g, params)
        grid = np.linspace(-min(g, 50), min(g, 50), 100_001)
        vals = grid * a * Jx + 0.5 * s2 * grid**2 * Jxx
        best = grid[np.argmax(vals)]
        assert pi == pytest.approx(best, abs=2 * (grid[1] - grid[0]) + 1e-12)


def test_portfolio_domain(params):
    with pytest.raises(DomainError):
        optimal_portfolio(1.0, 0.5, 1.0, params)
    with pytest.raises(DomainError):
        optimal_consumption(-1.0, 1.0, params)


def test_hamiltonian_convex_branch_is_infinite(params):
    assert hamiltonian(1.0, 1.0, 1.0, 1.0, np.inf, params) == np.inf


# -- residuals of the closed forms --------------------------------------------


@pytest.mark.parametrize("which", ["benchmark", "proportional"])
def test_closed_form_residual(params, which):
    grid = build_grid(0.1, 50, 1000)
    if which == "benchmark":
        sol, lev = benchmark_solution(params), Unbounded()
    else:
        sol, lev = proportional_solution(1.0, params), Linear(1.0, 0.0)
    f = field_from_closed_form(sol, grid, params, lev)
    assert np.max(np.abs(hamiltonian_residual(f, params, lev)) / f.J) < 1e-8


def test_doubled_benchmark_is_a_strict_subsolution(params):
    # 2 J^ez is not a solution: the residual is strictly negative everywhere
    grid = build_grid(0.1, 50, 200)
    f = field_from_closed_form(benchmark_solution(params), grid, params, Unbounded())
    f2 = replace(f, J=2 * f.J, Jx=2 * f.Jx, Jxx=2 * f.Jxx)
    assert np.all(hamiltonian_residual(f2, params, Unbounded()) < 0)


# -- policy evaluation and iteration -----------------------------------------


def test_policy_evaluation_fixed_point(params):
    f = solved()
    pol = PolicyField.from_solution(f)
    J = policy_evaluation(pol, f.J, f.grid, params)
    assert np.max(np.abs(J / f.J - 1)) < 1e-8


def test_policy_evaluation_rejects_negative_consumption(params):
    grid = build_grid(1e-3, 50, 200)
    with pytest.raises(DomainError):
        policy_evaluation((-np.ones(200), np.zeros(200)), np.ones(200), grid, params)


def test_proportional_solution_recovered(params):
    f = solved()
    assert f.converged
    sol = proportional_solution(1.0, params)
    assert np.max(np.abs(f.J / sol.value(f.x) - 1)) < 1e-3
    assert f.value_at(1.0) == pytest.approx(J0_AT_1_K1, rel=1e-3)


def test_first_order_refinement():
    sol = proportional_solution(1.0, example_params())
    errs = [np.max(np.abs(solved(M=M).J / sol.value(solved(M=M).x) - 1)) for M in (500, 1000, 2000)]
    assert errs[0] / errs[1] >= 1.7 and errs[1] / errs[2] >= 1.7


def test_hybrid_scheme_agrees(params):
    up, hy = solved(), solved(scheme="hybrid")
    assert np.max(np.abs(hy.J / up.J - 1)) < 1e-3


def test_tighter_bounds_give_lower_values():
    J = [solved(leverage=Linear(k, 0.0)).J for k in (0.5, 1.0, 1.5)]
    J.append(solved(leverage=Unbounded()).J)
    for lo, hi in zip(J[:-1], J[1:]):
        assert np.all(lo <= hi * (1 + 1e-10))


def test_uniform_grid_from_zero(params):
    f = policy_iteration_solve(params, Linear(1, 0), build_grid(0, 50, 2001, "uniform"))
    assert f.J[0] == 0.0 and f.converged
    assert np.all(np.diff(f.J) > 0)


def test_unbounded_labels_and_oracle(params):
    f = solved(leverage=Unbounded())
    assert np.all(f.region == UNCONSTRAINED)
    assert np.max(np.abs(f.J / benchmark_solution(params).value(f.x) - 1)) < 1e-3


def test_proportional_labels_constrained():
    assert np.all(solved().region == CONSTRAINED)


@pytest.mark.parametrize("name", list(LEVERAGES))
def test_check_solution_passes(params, name):
    lev = LEVERAGES[name]
    rep = check_solution(solved(leverage=lev, x_max=x_max_for(lev)), params, lev)
    assert rep.passed, rep.lines()


def test_increasing_slopes_rejected(params):
    with pytest.raises(InvalidLeverage):
        policy_iteration_solve(params, PiecewiseLinear((1.0,), (0.5, 2.0), 0.1), build_grid(1e-3, 50, 500))


def test_not_converged_carries_iterate(params):
    with pytest.raises(NotConverged) as info:
        policy_iteration_solve(params, Linear(1, 0), build_grid(1e-3, 50, 500), SolverConfig(max_iterations=1))
    assert info.value.field is not None
    assert info.value.field.converged is False


def test_robin_row_kinks_short_domain_for_constant_bound(params):
    # with a constant bound J leaves the x^(1-R) regime slowly, so the
    # homogeneity condition at x_max = 50 bends the last interior node
    lev = Linear(0.0, 0.5)
    assert not check_solution(solved(leverage=lev, x_max=50.0), params, lev)["concave"].passed
    assert check_solution(solved(leverage=lev, x_max=200.0), params, lev)["concave"].passed


def test_value_at_extends_homogeneously(params):
    f = solved()
    assert f.value_at(0.0) == 0.0
    assert f.value_at(100.0) == pytest.approx(f.J[-1] * 2 ** (1 - params.R), rel=1e-12)
    assert f.value_at(f.x[7]) == pytest.approx(f.J[7], rel=1e-12)
