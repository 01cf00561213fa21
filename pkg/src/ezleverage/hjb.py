"""Finite-difference policy iteration for the stationary constrained HJB equation.

The equation solved on a truncated wealth grid is

    delta nu J = sup_{|pi| <= g(x)} [pi (mu-r) J' + sigma^2 pi^2 J''/2]
                 + sup_{c >= 0} [f(c, J) - c J'] + r x J'

Each iteration improves the feedback policy pointwise from the current
discrete derivatives and then solves the linear equation obtained by
freezing the policy and linearising the aggregator in J. The discrete
operator is monotone: drift terms are upwinded (or centred where the
diffusion is strong enough to keep the stencil monotone) and the
linearised aggregator slope f_v <= 0 only adds to the diagonal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.linalg import solve_banded

from .closed_form import ClosedFormSolution, aggregator, aggregator_dv, benchmark_value, value_bounds
from .errors import BadGrid, DomainError, InvalidLeverage, NotConverged, SingularSystem
from .model import LeverageSpec, ModelParams, leverage_validate
from .policy import PolicyField
from .report import ValidationReport

log = logging.getLogger(__name__)

UNCONSTRAINED = "Unconstrained"
CONSTRAINED = "Constrained"


@dataclass(frozen=True)
class WealthGrid:
    nodes: np.ndarray
    spacing: str

    @property
    def x_min(self) -> float:
        return float(self.nodes[0])

    @property
    def x_max(self) -> float:
        return float(self.nodes[-1])

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    def scaled(self, m: float) -> "WealthGrid":
        return WealthGrid(self.nodes * m, self.spacing)


def build_grid(x_min: float, x_max: float, M: int, spacing: str = "log") -> WealthGrid:
    """Grid of ``M`` nodes from ``x_min`` to ``x_max``.

    ``spacing`` is ``"uniform"`` or ``"log"`` (geometric, needs x_min > 0).
    """
    if not (np.isfinite(x_min) and np.isfinite(x_max)) or not 0 <= x_min < x_max:
        raise BadGrid(f"need 0 <= x_min < x_max (got {x_min}, {x_max})")
    if int(M) != M or M < 2:
        raise BadGrid(f"need at least 2 nodes (M={M})")
    M = int(M)
    if spacing == "uniform":
        nodes = np.linspace(x_min, x_max, M)
    elif spacing == "log":
        if x_min <= 0:
            raise BadGrid("log spacing requires x_min > 0")
        nodes = np.geomspace(x_min, x_max, M)
    else:
        raise BadGrid(f"unknown spacing {spacing!r}")
    nodes[0], nodes[-1] = x_min, x_max
    return WealthGrid(nodes, spacing)


def check_solver_grid(grid: WealthGrid) -> None:
    """Size and span requirements for a grid handed to the solver."""
    if grid.size < 101:
        raise BadGrid(f"solver grids need at least 101 nodes (got {grid.size})")
    if grid.x_max / max(grid.x_min, 1e-12) < 10:
        raise BadGrid("x_max / x_min must be at least 10")


@dataclass(frozen=True)
class SolverConfig:
    """Iteration controls for :func:`policy_iteration_solve`.

    ``scheme`` selects the first-derivative stencil: ``"upwind"`` always
    upwinds, ``"hybrid"`` centres wherever the centred stencil is still
    monotone. ``lower_boundary`` is ``"dirichlet"`` (bond-only value at
    x_min) or ``"homogeneous"`` (local power-law closure). ``upper_boundary``
    is ``"robin"`` (J' x = (1-R) J imposed between the last two nodes) or
    ``"closure"`` (the local power-law closure used at x_min).
    """

    tol_value: float = 1e-10
    tol_residual: float = 1e-8
    max_iterations: int = 200
    damping: float = 1.0
    linearize_aggregator: bool = True
    scheme: str = "upwind"
    lower_boundary: str = "homogeneous"
    upper_boundary: str = "robin"

    def __post_init__(self):
        if not (self.tol_value > 0 and self.tol_residual > 0):
            raise ValueError("tolerances must be positive")
        if int(self.max_iterations) < 1:
            raise ValueError("max_iterations must be at least 1")
        if not 0 < self.damping <= 1:
            raise ValueError("damping must lie in (0, 1]")
        if self.scheme not in ("upwind", "hybrid"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.lower_boundary not in ("dirichlet", "homogeneous"):
            raise ValueError(f"unknown lower boundary {self.lower_boundary!r}")
        if self.upper_boundary not in ("robin", "closure"):
            raise ValueError(f"unknown upper boundary {self.upper_boundary!r}")


@dataclass(frozen=True)
class SolutionField:
    grid: WealthGrid
    J: np.ndarray
    Jx: np.ndarray
    Jxx: np.ndarray
    c_star: np.ndarray
    pi_star: np.ndarray
    pi_merton: np.ndarray
    region: np.ndarray
    residual: np.ndarray
    iterations: int
    converged: bool
    params: ModelParams | None = None
    leverage: LeverageSpec | None = None
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def x(self) -> np.ndarray:
        return self.grid.nodes

    def value_at(self, x):
        """J at arbitrary wealth: log-log interpolation inside the grid,
        x^(1-R) extension outside it."""
        x = np.asarray(x, dtype=float)
        nodes, J = self.grid.nodes, self.J
        pos = nodes > 0
        ln, lj = np.log(nodes[pos]), np.log(J[pos])
        one_minus_r = 1.0 - self.params.R
        with np.errstate(divide="ignore"):
            lx = np.log(np.where(x > 0, x, 1.0))
        inside = np.interp(lx, ln, lj)
        below = lj[0] + one_minus_r * (lx - ln[0])
        above = lj[-1] + one_minus_r * (lx - ln[-1])
        out = np.where(lx < ln[0], below, np.where(lx > ln[-1], above, inside))
        out = np.where(x > 0, np.exp(out), 0.0)
        return float(out) if out.ndim == 0 else out


# -- pointwise controls ------------------------------------------------------


def optimal_consumption(J, Jx, params: ModelParams):
    """c* = Jx^(-1/S) ((1-R) J)^(rho/S), the maximiser of c -> f(c, J) - c Jx."""
    J = np.asarray(J, dtype=float)
    Jx = np.asarray(Jx, dtype=float)
    if np.any(J <= 0) or np.any(Jx <= 0):
        raise DomainError("optimal consumption needs J > 0 and Jx > 0")
    S, R, rho = params.S, params.R, params.rho
    out = np.exp(-np.log(Jx) / S + (rho / S) * np.log((1 - R) * J))
    return float(out) if out.ndim == 0 else out


def consumption_gain(J, Jx, params: ModelParams):
    """sup_c [f(c, J) - c Jx] = S/(1-S) ((1-R)J)^(rho/S) Jx^(1-1/S)."""
    S, R, rho = params.S, params.R, params.rho
    J = np.asarray(J, dtype=float)
    Jx = np.asarray(Jx, dtype=float)
    out = S / (1 - S) * np.exp((rho / S) * np.log((1 - R) * J) + (1 - 1 / S) * np.log(Jx))
    return float(out) if out.ndim == 0 else out


def merton_position(Jx, Jxx, params: ModelParams):
    """Unclipped optimal dollar position -(mu-r) Jx / (sigma^2 Jxx)."""
    return -(params.mu - params.r) * np.asarray(Jx) / (params.sigma**2 * np.asarray(Jxx))


def optimal_portfolio(Jx, Jxx, bound, params: ModelParams):
    """pi* = min(pi_M, g); ties resolve to g. ``bound`` may be ``np.inf``."""
    Jx = np.asarray(Jx, dtype=float)
    Jxx = np.asarray(Jxx, dtype=float)
    if np.any(Jx <= 0) or np.any(Jxx >= 0):
        raise DomainError("optimal portfolio needs Jx > 0 and Jxx < 0")
    out = np.minimum(merton_position(Jx, Jxx, params), np.asarray(bound, dtype=float))
    return float(out) if out.ndim == 0 else out


def hamiltonian(x, J, Jx, Jxx, bound, params: ModelParams):
    """H(x, J, Jx, Jxx) with the supremum over |pi| <= bound evaluated exactly."""
    x, J, p, q = (np.asarray(a, dtype=float) for a in (x, J, Jx, Jxx))
    g = np.broadcast_to(np.asarray(bound, dtype=float), x.shape)
    a = params.mu - params.r
    s2 = params.sigma**2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        concave = q < 0
        pi_hat = np.where(concave, np.clip(-a * p / (s2 * np.where(concave, q, -1.0)), -g, g), np.sign(p) * g)
        port = pi_hat * a * p + 0.5 * s2 * pi_hat**2 * q
        port = np.where(np.isnan(port), np.inf, port)
        ok = (p > 0) & (J > 0)
        cons = np.where(ok, consumption_gain(np.where(ok, J, 1.0), np.where(ok, p, 1.0), params), np.inf)
    return port + cons + params.r * x * p


def hamiltonian_residual(field: SolutionField, params: ModelParams, leverage: LeverageSpec):
    """-delta nu J + H evaluated with the derivatives stored on ``field``."""
    x = field.grid.nodes
    g = leverage(x)
    out = -params.delta * params.nu * field.J + hamiltonian(x, field.J, field.Jx, field.Jxx, g, params)
    return np.where(x > 0, out, 0.0)


def field_from_closed_form(sol: ClosedFormSolution, grid: WealthGrid, params: ModelParams,
                           leverage: LeverageSpec, derivatives: str = "analytic") -> SolutionField:
    """Sample a closed-form solution on ``grid``.

    ``derivatives="analytic"`` stores exact Jx, Jxx; ``"discrete"`` stores
    the same centred differences the solver uses.
    """
    x = grid.nodes
    J = np.asarray(sol.value(x), dtype=float)
    if derivatives == "analytic":
        Jx, Jxx = np.asarray(sol.value_x(x)), np.asarray(sol.value_xx(x))
    elif derivatives == "discrete":
        Jx, Jxx = _central_derivatives(x, J)
        Jx[0], Jxx[0] = sol.value_x(x[0]), sol.value_xx(x[0])
        Jx[-1], Jxx[-1] = sol.value_x(x[-1]), sol.value_xx(x[-1])
    else:
        raise ValueError(derivatives)
    with np.errstate(divide="ignore", invalid="ignore"):
        pi_m = merton_position(Jx, Jxx, params)
    g = leverage(x)
    pi = np.minimum(pi_m, g)
    c = np.asarray(sol.consumption(x), dtype=float)
    f = SolutionField(grid, J, Jx, Jxx, c, pi, pi_m, _labels(pi_m, g), np.zeros_like(x), 0, True,
                      params, leverage)
    return replace(f, residual=hamiltonian_residual(f, params, leverage))


def _labels(pi_m, g):
    return np.where(np.asarray(pi_m) >= np.asarray(g), CONSTRAINED, UNCONSTRAINED)


# -- stencils ----------------------------------------------------------------


def _spacings(x):
    hm = x[1:-1] - x[:-2]
    hp = x[2:] - x[1:-1]
    return hm, hp


def _central_derivatives(x, J):
    """Three-point first and second differences on a non-uniform grid.

    Boundary entries are left as NaN for the caller to fill.
    """
    hm, hp = _spacings(x)
    s = hm + hp
    Jx = np.full_like(J, np.nan)
    Jxx = np.full_like(J, np.nan)
    Jx[1:-1] = (hm**2 * J[2:] - hp**2 * J[:-2] + (hp**2 - hm**2) * J[1:-1]) / (hm * hp * s)
    Jxx[1:-1] = 2.0 * (hm * J[2:] - s * J[1:-1] + hp * J[:-2]) / (hm * hp * s)
    return Jx, Jxx


def _one_sided_left(x, J):
    """Second-order forward differences at the first node."""
    h1, h2 = x[1] - x[0], x[2] - x[1]
    s = h1 + h2
    d1 = -(2 * h1 + h2) / (h1 * s) * J[0] + s / (h1 * h2) * J[1] - h1 / (h2 * s) * J[2]
    d2 = 2.0 * (J[0] / (h1 * s) - J[1] / (h1 * h2) + J[2] / (h2 * s))
    return d1, d2


def _operator_weights(x, b, a, scheme):
    """Weights (lower, diag, upper) of b J' + a J'' at interior nodes.

    All off-diagonal weights are non-negative (monotone stencil).
    """
    hm, hp = _spacings(x)
    s = hm + hp
    b_i, a_i = b[1:-1], a[1:-1]
    lo2, up2 = 2.0 / (hm * s), 2.0 / (hp * s)
    wl = a_i * lo2
    wu = a_i * up2
    wd = -(wl + wu)
    # upwind first differences
    fwd = b_i >= 0
    ul = np.where(fwd, 0.0, -b_i / hm)
    uu = np.where(fwd, b_i / hp, 0.0)
    ud = -(ul + uu)
    if scheme == "hybrid":
        cl = -b_i * hp / (hm * s)
        cu = b_i * hm / (hp * s)
        cd = b_i * (hp - hm) / (hm * hp)
        use_c = (wl + cl >= 0) & (wu + cu >= 0)
        ul = np.where(use_c, cl, ul)
        uu = np.where(use_c, cu, uu)
        ud = np.where(use_c, cd, ud)
    return wl + ul, wd + ud, wu + uu


# -- policy improvement / evaluation -----------------------------------------


@dataclass
class _Policy:
    c: np.ndarray
    pi: np.ndarray
    pi_m: np.ndarray
    Jx: np.ndarray
    Jxx: np.ndarray


def _closure_derivs(x, J, R):
    """Derivatives of the local power law J ~ x^(1-R) through (x, J)."""
    Jx = (1 - R) * J / x
    return Jx, -R * Jx / x


def _lower_mode(grid, config):
    if grid.x_min == 0:
        return "zero"
    return config.lower_boundary


def _improve(J, grid, params, leverage, config) -> _Policy:
    x = grid.nodes
    R = params.R
    Jx, Jxx = _central_derivatives(x, J)
    Jx[-1], Jxx[-1] = _closure_derivs(x[-1], J[-1], R)
    mode = _lower_mode(grid, config)
    if mode == "homogeneous":
        Jx[0], Jxx[0] = _closure_derivs(x[0], J[0], R)
    elif mode == "dirichlet":
        Jx[0], Jxx[0] = _one_sided_left(x, J)
    else:
        Jx[0], Jxx[0] = np.inf, -np.inf

    g = leverage(x)
    tiny = np.finfo(float).tiny
    pos = x > 0
    Jx_safe = np.where(pos, np.maximum(Jx, tiny), 1.0)
    J_safe = np.where(pos, np.maximum(J, tiny), 1.0)
    c = np.where(pos, optimal_consumption(J_safe, Jx_safe, params), 0.0)
    # a non-concave stencil sends pi_M to +inf, i.e. the bound binds
    q = np.where(pos, np.minimum(Jxx, -tiny), -1.0)
    with np.errstate(over="ignore"):
        pi_m = np.where(pos, merton_position(Jx_safe, q, params), 0.0)
    pi = np.minimum(pi_m, g)
    if not np.all(np.isfinite(pi[pos])):
        raise SingularSystem("unbounded portfolio: value iterate lost concavity")
    return _Policy(c, pi, pi_m, Jx, Jxx)


def _assemble(c, pi, J_prev, grid, params, config):
    """Banded matrix and right-hand side of the frozen-policy system."""
    x = grid.nodes
    n = x.size
    mu, r, sigma = params.mu, params.r, params.sigma
    R, dnu = params.R, params.delta * params.nu
    b = r * x + (mu - r) * pi - c
    a = 0.5 * sigma**2 * pi**2
    pos = x > 0
    Jp = np.where(pos, J_prev, 1.0)
    f = np.where(pos, aggregator(c, Jp, params), 0.0)
    fv = np.where(pos, aggregator_dv(c, Jp, params), 0.0) if config.linearize_aggregator else np.zeros(n)

    lower = np.zeros(n)
    diag = np.zeros(n)
    upper = np.zeros(n)
    rhs = f - fv * J_prev

    wl, wd, wu = _operator_weights(x, b, a, config.scheme)
    diag[1:-1] = dnu - fv[1:-1] - wd
    lower[1:-1] = -wl
    upper[1:-1] = -wu

    def closure(i):
        xi = x[i]
        return dnu - fv[i] - b[i] * (1 - R) / xi + a[i] * R * (1 - R) / xi**2

    if config.upper_boundary == "robin":
        # integrated form J_N = (x_N / x_{N-1})^(1-R) J_{N-1}, exact for power laws
        diag[-1] = 1.0
        lower[-1] = -((x[-1] / x[-2]) ** (1 - R))
        rhs[-1] = 0.0
    else:
        diag[-1] = closure(n - 1)
    mode = _lower_mode(grid, config)
    if mode == "homogeneous":
        diag[0] = closure(0)
    else:
        diag[0] = 1.0
        rhs[0] = 0.0 if mode == "zero" else value_bounds(x[0], params)[0]

    # the Robin row is a Z-matrix row but not diagonally dominant
    skip_last = config.upper_boundary == "robin"
    _check_monotone(lower[:-1] if skip_last else lower, diag[:-1] if skip_last else diag,
                    upper[:-1] if skip_last else upper)
    ab = np.zeros((3, n))
    ab[0, 1:] = upper[:-1]
    ab[1] = diag
    ab[2, :-1] = lower[1:]
    return ab, rhs, (lower, diag, upper)


def _check_monotone(lower, diag, upper):
    if np.any(lower > 0) or np.any(upper > 0):
        raise SingularSystem("positive off-diagonal: stencil is not monotone")
    if np.any(diag <= 0):
        i = int(np.argmin(diag))
        raise SingularSystem(f"non-positive diagonal at node {i}")
    slack = diag - np.abs(lower) - np.abs(upper)
    if np.any(slack < -1e-12 * diag):
        raise SingularSystem("system is not diagonally dominant")


def policy_evaluation(policy, J_prev, grid: WealthGrid, params: ModelParams,
                      config: SolverConfig | None = None):
    """Solve the linear equation for J with the policy frozen.

    ``policy`` is a :class:`PolicyField` tabulated on ``grid`` or a ``(c, pi)``
    pair of node arrays. The aggregator is linearised around ``J_prev``.
    """
    config = config or SolverConfig()
    if isinstance(policy, PolicyField):
        c, pi = policy.consumption_at(grid.nodes), policy.portfolio_at(grid.nodes)
    else:
        c, pi = (np.asarray(v, dtype=float) for v in policy)
    if np.any(c < 0):
        raise DomainError("consumption must be non-negative")
    ab, rhs, _ = _assemble(c, pi, np.asarray(J_prev, dtype=float), grid, params, config)
    return solve_banded((1, 1), ab, rhs)


def _discrete_residual(J, pol, grid, params, config):
    """Scaled residual of the discrete equation at J under policy ``pol``."""
    cfg = replace(config, linearize_aggregator=False)
    _, rhs, (lower, diag, upper) = _assemble(pol.c, pol.pi, J, grid, params, cfg)
    AJ = diag * J
    AJ[1:] += lower[1:] * J[:-1]
    AJ[:-1] += upper[:-1] * J[1:]
    res = AJ - rhs
    mode = _lower_mode(grid, config)
    if mode in ("dirichlet", "zero"):
        res[0] = 0.0
    scale = params.delta * params.nu * np.where(J > 0, J, 1.0)
    return float(np.max(np.abs(res) / scale))


def policy_iteration_solve(params: ModelParams, leverage: LeverageSpec, grid: WealthGrid,
                           config: SolverConfig | None = None) -> SolutionField:
    """Solve the constrained HJB equation on ``grid``.

    Starts from the unconstrained value clipped to the growth bounds and
    alternates policy improvement and policy evaluation until the relative
    sup-norm change falls below ``tol_value`` and the scaled discrete
    residual below ``tol_residual``.

    Raises
    ------
    NotConverged
        after ``max_iterations``; the exception carries the last iterate.
    """
    config = config or SolverConfig()
    check_solver_grid(grid)
    report = leverage_validate(leverage, grid.nodes)
    if not report.passed:
        raise InvalidLeverage("leverage bound fails: " + ", ".join(c.name for c in report.failures))

    x = grid.nodes
    lo, hi = value_bounds(x, params)
    J = np.clip(benchmark_value(x, params), lo, hi)
    mode = _lower_mode(grid, config)
    if mode == "dirichlet":
        # a benchmark start with the lower-bound datum at x_min has a kink
        # at the first node that wrecks the first policy
        J = lo.copy()
    elif mode == "zero":
        J[0] = 0.0

    history = []
    converged = False
    pol = _improve(J, grid, params, leverage, config)
    it = 0
    for it in range(1, int(config.max_iterations) + 1):
        ab, rhs, _ = _assemble(pol.c, pol.pi, J, grid, params, config)
        J_new = solve_banded((1, 1), ab, rhs)
        if config.damping < 1:
            J_new = config.damping * J_new + (1 - config.damping) * J
        with np.errstate(divide="ignore", invalid="ignore"):
            rel = np.where(J_new > 0, np.abs(J_new - J) / J_new, np.abs(J_new - J))
        change = float(np.max(rel))
        J = J_new
        pol = _improve(J, grid, params, leverage, config)
        res = _discrete_residual(J, pol, grid, params, config)
        history.append({"iteration": it, "change": change, "residual": res})
        log.debug("iteration %d: change %.3e residual %.3e", it, change, res)
        if change < config.tol_value and res < config.tol_residual:
            converged = True
            break

    g = leverage(x)
    sol = SolutionField(
        grid=grid, J=J, Jx=pol.Jx, Jxx=pol.Jxx, c_star=pol.c, pi_star=pol.pi,
        pi_merton=pol.pi_m, region=_labels(pol.pi_m, g), residual=np.zeros_like(J),
        iterations=it, converged=converged, params=params, leverage=leverage,
        diagnostics={"history": history, "scheme": config.scheme, "lower_boundary": mode},
    )
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        sol = replace(sol, residual=hamiltonian_residual(sol, params, leverage))
    if not converged:
        last = history[-1] if history else {}
        raise NotConverged(
            f"policy iteration stopped after {it} iterations "
            f"(change={last.get('change', float('nan')):.3e}, residual={last.get('residual', float('nan')):.3e})",
            field=sol, diagnostics={"history": history},
        )
    return sol


def solve(params: ModelParams, leverage: LeverageSpec, grid: WealthGrid | None = None,
          config: SolverConfig | None = None) -> SolutionField:
    """Convenience wrapper with the default log grid [1e-3, 50], 2000 nodes."""
    grid = grid or build_grid(1e-3, 50.0, 2000, "log")
    return policy_iteration_solve(params, leverage, grid, config)


def check_solution(field: SolutionField, params: ModelParams, leverage: LeverageSpec,
                   bound_slack: float = 1e-6, head_ratio: float = 1e-2) -> ValidationReport:
    """Structural checks on a solved field.

    Growth bounds at every node (relative slack ``bound_slack``), strict
    monotonicity and discrete concavity of J, 0 <= pi* <= g, c* > 0 away
    from x_min and c*(x_min) <= ``head_ratio`` * c*(1).
    """
    x, J = field.grid.nodes, field.J
    report = ValidationReport("solution")
    report.add("converged", field.converged, iterations=field.iterations)
    lo, hi = value_bounds(x, params)
    pos = x > 0
    below = np.max((lo[pos] - J[pos]) / lo[pos])
    above = np.max((J[pos] - hi[pos]) / hi[pos])
    report.add("sandwich", below <= bound_slack and above <= bound_slack,
               max_rel_below_lower=float(below), max_rel_above_upper=float(above), slack=bound_slack)
    dJ = np.diff(J)
    report.add("increasing", bool(np.all(dJ > 0)), min_increment=float(dJ.min()))
    _, Jxx = _central_derivatives(x, J)
    report.add("concave", bool(np.all(Jxx[1:-1] < 0)), max_second_difference=float(np.max(Jxx[1:-1])))
    g = leverage(x)
    pi = field.pi_star
    report.add("portfolio_in_range", bool(np.all(pi >= 0) and np.all(pi <= g * (1 + 1e-12))),
               min_pi=float(pi.min()), max_excess=float(np.max(pi - g)) if np.all(np.isfinite(g)) else float("-inf"))
    c = field.c_star
    report.add("consumption_positive", bool(np.all(c[1:] > 0)), min_c=float(c[1:].min()))
    if x[0] < 1.0 < x[-1]:
        c_one = float(np.interp(1.0, x, c))
        report.add("consumption_head", c[0] <= head_ratio * c_one, c_min=float(c[0]), c_at_1=c_one)
    else:
        report.skip("consumption_head", "grid does not contain x = 1")
    return report
