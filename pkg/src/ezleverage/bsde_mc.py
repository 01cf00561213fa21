"""Monte Carlo evaluation of Epstein-Zin utility for feedback policies.

Wealth paths are simulated by Euler-Maruyama under a feedback policy and the
utility is computed from the discounted recursion

    dY = [delta nu Y - f_m(c, Y)] dt + Z dB,    Y_T = terminal,

whose value at time 0 equals the utility V_0. The recursion is solved
backwards in time. On each slice the conditional expectation of the
pathwise continuation value is estimated by least-squares regression on
polynomials of standardised log-wealth, and the implicit step

    (1 + delta nu dt) y = E_i + f_m(c_i, y) dt

is solved per path by Newton's method started below the root. The
inner iteration count and final update size are reported as the Picard
iterations and gap.

Random numbers come from a counter-based generator (Philox) keyed by the
seed and the block of path indices, so every path's increments depend only
on (seed, path index) and not on how many paths are drawn.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace

import numpy as np
from scipy import stats

from .closed_form import aggregator_truncated, value_bounds
from .errors import PicardNotConverged
from .model import LeverageSpec, ModelParams, Unbounded
from .policy import PolicyField
from .report import ValidationReport

__all__ = [
    "MCConfig",
    "PathEnsemble",
    "PolicyField",
    "UtilityEstimate",
    "brownian_increments",
    "coarsen_increments",
    "evaluate_utility_picard",
    "simulate_wealth",
    "validate_solution",
]

BLOCK_SIZE = 4096


@dataclass(frozen=True)
class MCConfig:
    """Monte Carlo settings.

    ``horizon`` must make the discounted tail negligible,
    exp(-delta nu T) <= 0.01, which is checked by :meth:`check`, because
    the discount rate depends on the preferences. ``truncation_m=None``
    picks 10 times the largest consumption on the policy grid.
    """

    n_paths: int = 100_000
    horizon: float = 120.0
    dt: float = 0.24
    seed: int = 0
    picard_iterations: int = 50
    picard_tol: float = 1e-10
    regression_degree: int = 3
    truncation_m: float | None = None
    x0: float = 1.0
    bootstrap_resamples: int = 400

    def __post_init__(self):
        if int(self.n_paths) < 2:
            raise ValueError("need at least two paths")
        if not (self.horizon > 0 and self.dt > 0):
            raise ValueError("horizon and dt must be positive")
        if self.dt > self.horizon / 500 * (1 + 1e-12):
            raise ValueError(f"dt <= T/500 violated (dt={self.dt}, T={self.horizon})")
        if int(self.picard_iterations) < 3:
            raise ValueError("picard_iterations must be at least 3")
        if self.regression_degree < 0:
            raise ValueError("regression_degree must be non-negative")
        if self.truncation_m is not None and not self.truncation_m > 0:
            raise ValueError("truncation_m must be positive")
        if not self.x0 > 0:
            raise ValueError("x0 must be positive")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def n_steps(self) -> int:
        return int(round(self.horizon / self.dt))

    def check(self, params: ModelParams) -> None:
        """Raise ValueError if the horizon leaves a tail weight above 1%."""
        tail = np.exp(-params.delta * params.nu * self.horizon)
        if tail > 0.01:
            raise ValueError(f"exp(-delta nu T) = {tail:.4g} > 0.01; lengthen the horizon")


@dataclass(frozen=True)
class PathEnsemble:
    t: np.ndarray  # (n_steps + 1,)
    X: np.ndarray  # (n_steps + 1, n_paths), absorbed paths stay at 0
    dt: float

    @property
    def n_paths(self) -> int:
        return self.X.shape[1]

    def to_csv(self, path, policy: PolicyField, max_paths: int = 100) -> None:
        """Write ``path_id,t,X,c,pi`` rows for the first ``max_paths`` paths."""
        k = min(max_paths, self.n_paths)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["path_id", "t", "X", "c", "pi"])
            for j in range(k):
                x = self.X[:, j]
                c, pi = policy.consumption_at(x), policy.portfolio_at(x)
                for i in range(x.size):
                    w.writerow([j, repr(float(self.t[i])), repr(float(x[i])), repr(float(c[i])), repr(float(pi[i]))])


@dataclass(frozen=True)
class UtilityEstimate:
    v0: float
    ci_halfwidth: float
    picard_gap: float
    converged: bool = True
    inner_iterations: int = 0
    truncation_m: float = float("nan")
    n_paths: int = 0

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


# -- simulation --------------------------------------------------------------


def brownian_increments(mc: MCConfig, n_steps: int | None = None, dt: float | None = None) -> np.ndarray:
    """Brownian increments of shape (n_steps, n_paths).

    Path j's increments are read from the stream of block j // BLOCK_SIZE,
    so they are unchanged when ``n_paths`` grows.
    """
    n_steps = mc.n_steps if n_steps is None else n_steps
    dt = mc.dt if dt is None else dt
    n = int(mc.n_paths)
    out = np.empty((n_steps, n))
    for b, start in enumerate(range(0, n, BLOCK_SIZE)):
        size = min(BLOCK_SIZE, n - start)
        gen = np.random.Generator(np.random.Philox(np.random.SeedSequence(int(mc.seed), spawn_key=(b,))))
        # one row of draws per path keeps a path's draws contiguous in the stream
        out[:, start:start + size] = gen.standard_normal((size, n_steps)).T
    return out * np.sqrt(dt)


def coarsen_increments(dB: np.ndarray) -> np.ndarray:
    """Sum consecutive pairs of increments: the same paths at twice the step."""
    if dB.shape[0] % 2:
        raise ValueError("need an even number of steps")
    return dB.reshape(dB.shape[0] // 2, 2, -1).sum(axis=1)


def simulate_wealth(policy: PolicyField, x0: float, market, leverage: LeverageSpec | None,
                    mc: MCConfig, increments: np.ndarray | None = None) -> PathEnsemble:
    """Euler-Maruyama paths of dX = [r X + (mu - r) pi(X) - c(X)] dt + sigma pi(X) dB.

    Zero is absorbing. ``market`` is anything with ``mu``, ``sigma`` and
    ``r`` attributes. Pre-drawn ``increments`` (n_steps, n_paths) override
    the generator, which is how refinement studies couple two step sizes.
    """
    if not x0 > 0:
        raise ValueError("x0 must be positive")
    policy.check_admissible(leverage)
    dB = brownian_increments(mc) if increments is None else np.asarray(increments, dtype=float)
    n_steps, n = dB.shape
    dt = mc.horizon / n_steps
    mu, sigma, r = market.mu, market.sigma, market.r
    X = np.empty((n_steps + 1, n))
    X[0] = x0
    x = np.full(n, float(x0))
    for i in range(n_steps):
        c = policy.consumption_at(x)
        pi = policy.portfolio_at(x)
        nxt = x + (r * x + (mu - r) * pi - c) * dt + sigma * pi * dB[i]
        x = np.where((x > 0) & (nxt > 0), nxt, 0.0)
        X[i + 1] = x
    return PathEnsemble(np.arange(n_steps + 1) * dt, X, dt)


# -- utility recursion -------------------------------------------------------


def _basis(x, degree):
    z = np.log(x)
    sd = z.std()
    if degree == 0 or sd < 1e-12 * (1.0 + abs(z.mean())):
        return np.ones((x.size, 1))
    z = (z - z.mean()) / sd
    return np.vander(z, degree + 1, increasing=True)


def _conditional_mean(x, target, degree):
    if x.size == 0:
        return target
    A = _basis(x, degree)
    coef, *_ = np.linalg.lstsq(A, target, rcond=None)
    return A @ coef


def _implicit_step(E, c, a, dt, m, params, max_iter):
    """Solve a y = E + f_m(c, y) dt per path; returns (y, last update, iterations).

    F(y) = a y - f_m(c, y) dt - E is increasing, linear below the
    truncation level y_flat and concave above it, so Newton's method started
    at max(E / a, y_flat) with F < 0 climbs monotonically to the root.
    """
    y_flat = 1.0 / (m * (1 - params.R))
    rho = params.rho
    y = np.maximum(E / a, y_flat)
    F = a * y - aggregator_truncated(c, y, m, params) * dt - E
    # a root on the flat part is explicit
    flat = F >= 0
    f_flat = aggregator_truncated(c, np.full_like(E, y_flat), m, params)
    y = np.where(flat, (E + f_flat * dt) / a, y)
    active = ~flat
    gap = 0.0
    it = 0
    for it in range(1, max_iter + 1):
        if not active.any():
            gap = 0.0
            break
        ya, ca = y[active], c[active]
        f = aggregator_truncated(ca, ya, m, params)
        F = a * ya - f * dt - E[active]
        # right derivative, also at y_flat itself
        step = -F / (a - rho * f / ya * dt)
        y[active] = ya + step
        gap = float(np.max(np.abs(step) / y[active]))
        if gap <= 1e-15:
            break
    return y, gap, it


def _terminal_values(terminal, x_T):
    if terminal is None:
        return np.zeros_like(x_T)
    if callable(terminal):
        out = np.asarray(terminal(x_T), dtype=float)
    else:
        out = np.asarray(terminal, dtype=float)
    out = np.broadcast_to(out, x_T.shape).astype(float)
    if np.any(out < 0) or not np.isfinite(out).all():
        raise ValueError("terminal values must be finite and non-negative")
    return np.where(x_T > 0, out, 0.0)


def default_truncation(policy: PolicyField) -> float:
    return 10.0 * max(float(np.max(policy.consumption)), np.finfo(float).tiny)


def evaluate_utility_picard(paths: PathEnsemble, policy: PolicyField, params: ModelParams,
                            mc: MCConfig, terminal=None) -> UtilityEstimate:
    """Utility at time 0 of following ``policy`` along ``paths``.

    ``terminal`` is a callable of terminal wealth, a per-path array or None
    (zero). Returns the mean of the pathwise continuation values at t = 0
    with a 95% bootstrap half-width.

    Raises
    ------
    PicardNotConverged
        if any slice's implicit step has a relative update above
        ``mc.picard_tol`` after ``mc.picard_iterations`` iterations.
    """
    X = paths.X
    dt = paths.dt
    m = mc.truncation_m if mc.truncation_m is not None else default_truncation(policy)
    a = 1.0 + params.delta * params.nu * dt
    P = _terminal_values(terminal, X[-1])
    worst_gap, worst_it = 0.0, 0
    y = P
    for i in range(X.shape[0] - 2, -1, -1):
        x = X[i]
        alive = x > 0
        E = np.zeros_like(P)
        # the target is non-negative, so is its conditional mean
        E[alive] = np.maximum(_conditional_mean(x[alive], P[alive], mc.regression_degree), 0.0)
        c = policy.consumption_at(x)
        y = np.zeros_like(P)
        if alive.any():
            y_a, gap, it = _implicit_step(E[alive], c[alive], a, dt, m, params, int(mc.picard_iterations))
            y[alive] = y_a
            worst_gap, worst_it = max(worst_gap, gap), max(worst_it, it)
        drive = np.where(alive, aggregator_truncated(c, np.where(alive, y, 1.0), m, params), 0.0)
        P = (P + drive * dt) / a
    v0 = float(np.mean(P))
    if np.ptp(P) > 0 and mc.bootstrap_resamples > 0:
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(int(mc.seed), spawn_key=(2**32,))))
        res = stats.bootstrap((P,), np.mean, n_resamples=int(mc.bootstrap_resamples), confidence_level=0.95,
                              method="percentile", random_state=rng, batch=20)
        lo, hi = res.confidence_interval
        half = float(0.5 * (hi - lo))
    else:
        half = 0.0
    converged = worst_gap <= mc.picard_tol
    est = UtilityEstimate(v0, half, worst_gap, converged, worst_it, float(m), X.shape[1])
    if not converged:
        raise PicardNotConverged(
            f"implicit step gap {worst_gap:.3e} above {mc.picard_tol:.1e} after {mc.picard_iterations} iterations",
            estimate=est,
        )
    return est


# -- validation --------------------------------------------------------------


def _field_policy(field, leverage):
    return PolicyField(field.grid.nodes, field.c_star, field.pi_star, leverage)


def validate_solution(field, params: ModelParams, leverage: LeverageSpec, mc: MCConfig,
                      gap_tol: float = 0.02, slack: float = 0.0) -> ValidationReport:
    """Monte Carlo cross-check of a solved value function at ``mc.x0``.

    Checks that the solver's policy attains J(x0) within ``gap_tol``
    (relative, widened by two CI half-widths), that three perturbed
    admissible policies score below J(x0) by more than two half-widths,
    and that no estimate exceeds the unconstrained upper bound. The
    terminal-value and truncation sensitivities are reported as well.
    """
    mc.check(params)
    report = ValidationReport("monte_carlo")
    x0 = mc.x0
    J0 = float(field.value_at(x0))
    upper = float(value_bounds(x0, params)[1])
    lev = None if isinstance(leverage, Unbounded) else leverage
    optimal = _field_policy(field, leverage)
    dB = brownian_increments(mc)

    def run(policy, terminal=field.value_at, cfg=mc):
        paths = simulate_wealth(policy, x0, params, lev, cfg, increments=dB)
        return evaluate_utility_picard(paths, policy, params, cfg, terminal=terminal)

    opt = run(optimal)
    gap = abs(opt.v0 - J0) / J0
    report.add("optimal_gap", abs(opt.v0 - J0) <= gap_tol * J0 + 2 * opt.ci_halfwidth,
               v0=opt.v0, ci_halfwidth=opt.ci_halfwidth, J_x0=J0, rel_gap=gap, tol=gap_tol)

    estimates = {"optimal": opt}
    perturbed = {
        "consumption_0.8": optimal.scaled(c_scale=0.8),
        "portfolio_0.5": optimal.scaled(pi_scale=0.5),
        "bond_only": PolicyField(field.grid.nodes, params.r * field.grid.nodes, np.zeros(field.grid.size), leverage),
    }
    for name, pol in perturbed.items():
        est = run(pol)
        estimates[name] = est
        report.add(f"suboptimal.{name}", est.v0 + 2 * est.ci_halfwidth <= J0 * (1 + slack),
                   v0=est.v0, ci_halfwidth=est.ci_halfwidth, J_x0=J0, shortfall=(J0 - est.v0) / J0)

    worst = max(estimates.values(), key=lambda e: e.v0 - 2 * e.ci_halfwidth)
    report.add("below_upper_bound", worst.v0 - 2 * worst.ci_halfwidth <= upper, max_v0=worst.v0, upper=upper)

    hi = run(optimal, terminal=lambda x: value_bounds(x, params)[1])
    lo = run(optimal, terminal=lambda x: value_bounds(x, params)[0])
    spread = (hi.v0 - lo.v0) / J0
    report.add("terminal_sensitivity", 0 <= spread <= gap_tol, v0_upper_terminal=hi.v0,
               v0_lower_terminal=lo.v0, rel_spread=spread)

    m = opt.truncation_m
    big = run(optimal, cfg=replace(mc, truncation_m=10 * m))
    report.add("truncation_monotone", opt.v0 <= big.v0 + 2 * big.ci_halfwidth, m=m, v0_m=opt.v0,
               v0_10m=big.v0, rel_change=(big.v0 - opt.v0) / J0)
    return report
