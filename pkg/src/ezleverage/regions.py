"""Constrained/unconstrained regions, free boundaries and structural checks.

A node is constrained when the unclipped Merton position pi_M reaches the
leverage bound (ties count as constrained, matching the solver). Free
boundaries are the sign changes of pi_M - g, located by linear
interpolation between neighbouring nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .closed_form import benchmark_solution, proportional_solution
from .errors import StructureViolation
from .hjb import CONSTRAINED, UNCONSTRAINED, SolutionField, consumption_gain
from .model import LeverageSpec, Linear, ModelParams, Unbounded
from .report import ValidationReport


@dataclass(frozen=True)
class BindingIndicator:
    x: np.ndarray
    values: np.ndarray  # pi_M - g per node; -inf when g is unbounded

    def labels(self) -> np.ndarray:
        return np.where(self.values >= 0, CONSTRAINED, UNCONSTRAINED)


@dataclass(frozen=True)
class FreeBoundary:
    x_star: float
    bound: float  # g(x*)
    left_estimate: float  # pi_M extrapolated to x* from the left
    right_estimate: float  # pi_M extrapolated to x* from the right
    smooth_fit_residual: float  # worst of the two, relative to g(x*)
    direction: str  # "U->B" or "B->U"


@dataclass(frozen=True)
class RegionMap:
    intervals: list = field(default_factory=list)  # (x_lo, x_hi, label)
    boundaries: list = field(default_factory=list)  # FreeBoundary

    def label_at(self, x: float) -> str:
        for lo, hi, label in self.intervals:
            if lo <= x <= hi:
                return label
        raise ValueError(f"x={x} is outside the mapped domain")


def binding_indicator(field: SolutionField, leverage: LeverageSpec) -> BindingIndicator:
    x = field.grid.nodes
    if isinstance(leverage, Unbounded):
        return BindingIndicator(x, np.full(x.shape, -np.inf))
    return BindingIndicator(x, field.pi_merton - leverage(x))


def _linear_at(x0, x1, y0, y1, xs):
    return y0 + (y1 - y0) * (xs - x0) / (x1 - x0)


def _crossings(x, ind, pi_m, g):
    out = []
    constrained = ind >= 0
    for i in np.flatnonzero(constrained[1:] != constrained[:-1]):
        x0, x1, y0, y1 = x[i], x[i + 1], ind[i], ind[i + 1]
        xs = x0 if y1 == y0 else x0 - y0 * (x1 - x0) / (y1 - y0)
        gs = float(np.interp(xs, x, g))
        # pi_M continued to x* from two nodes on each side
        left = _linear_at(x[i - 1], x[i], pi_m[i - 1], pi_m[i], xs) if i >= 1 else pi_m[i]
        right = _linear_at(x[i + 1], x[i + 2], pi_m[i + 1], pi_m[i + 2], xs) if i + 2 < x.size else pi_m[i + 1]
        resid = max(abs(left - gs), abs(right - gs)) / gs if gs > 0 else np.inf
        direction = "B->U" if constrained[i] else "U->B"
        out.append(FreeBoundary(float(xs), gs, float(left), float(right), float(resid), direction))
    return out


def region_map(field: SolutionField, leverage: LeverageSpec) -> RegionMap:
    ind = binding_indicator(field, leverage)
    x = ind.x
    labels = ind.labels()
    if isinstance(leverage, Unbounded):
        return RegionMap([(float(x[0]), float(x[-1]), UNCONSTRAINED)], [])
    bounds = _crossings(x, ind.values, field.pi_merton, leverage(x))
    edges = [float(x[0])] + [b.x_star for b in bounds] + [float(x[-1])]
    intervals = []
    start_labels = [labels[0]] + [CONSTRAINED if b.direction == "U->B" else UNCONSTRAINED for b in bounds]
    for lo, hi, lab in zip(edges[:-1], edges[1:], start_labels):
        intervals.append((lo, hi, str(lab)))
    return RegionMap(intervals, bounds)


def find_free_boundary(field: SolutionField, leverage: LeverageSpec,
                       smooth_fit_tol: float = 1e-2) -> list[FreeBoundary]:
    """Locate every sign change of pi_M - g.

    For a constant bound (k = 0, L > 0) exactly one U->B crossing with a
    smooth fit within ``smooth_fit_tol`` is required; anything else raises
    :class:`StructureViolation`, because it can only come from a bad solve.
    """
    bounds = region_map(field, leverage).boundaries
    if isinstance(leverage, Linear) and leverage.k == 0 and leverage.L > 0:
        x = field.grid.nodes
        if len(bounds) != 1:
            raise StructureViolation(f"constant bound must give one crossing, found {len(bounds)}")
        b = bounds[0]
        if b.direction != "U->B" or not (x[0] < b.x_star < x[-1]):
            raise StructureViolation(f"crossing at {b.x_star:.6g} is not an interior U->B switch")
        if b.smooth_fit_residual > smooth_fit_tol:
            raise StructureViolation(f"smooth fit residual {b.smooth_fit_residual:.3e} exceeds {smooth_fit_tol}")
    return bounds


def _ode_residuals(field, params, leverage):
    x, J, p, q = field.grid.nodes, field.J, field.Jx, field.Jxx
    dnu = params.delta * params.nu
    g = leverage(x)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        cons = consumption_gain(J, p, params)
        common = cons + params.r * x * p - dnu * J
        res_u = -params.kappa * p**2 / q + common
        res_b = (params.mu - params.r) * g * p + 0.5 * params.sigma**2 * g**2 * q + common
    scale = dnu * J
    return res_u / scale, res_b / scale


def check_region_odes(field: SolutionField, region_map: RegionMap | np.ndarray, params: ModelParams,
                      leverage: LeverageSpec, tol: float | None = None) -> ValidationReport:
    """Residual of the unconstrained ODE on U nodes and of the constrained ODE on B nodes.

    ``region_map`` may also be an explicit per-node label array, which is
    how mislabelled negative controls are injected. Residuals are scaled by
    delta nu J. Boundary nodes and their neighbours (whose stencils reach
    the boundary rows) are excluded. Without ``tol`` each node is
    allowed 1e-3 plus its relative grid spacing, since the upwind scheme is
    first-order consistent.
    """
    x = field.grid.nodes
    tol_nodes = np.full(x.size, np.inf)
    if tol is None:
        tol_nodes[1:-1] = 1e-3 + np.maximum(x[2:] - x[1:-1], x[1:-1] - x[:-2]) / np.where(x[1:-1] > 0, x[1:-1], 1.0)
    else:
        tol_nodes[:] = tol
    if isinstance(region_map, RegionMap):
        labels = np.array([region_map.label_at(v) for v in x])
    else:
        labels = np.asarray(region_map)
    res_u, res_b = _ode_residuals(field, params, leverage)
    interior = np.zeros(x.size, dtype=bool)
    interior[2:-2] = True
    interior &= x > 0
    report = ValidationReport("region_odes")
    for label, res, name in ((UNCONSTRAINED, res_u, "unconstrained_ode"), (CONSTRAINED, res_b, "constrained_ode")):
        sel = interior & (labels == label)
        if not sel.any():
            report.skip(name, f"no {label} nodes")
            continue
        r = np.abs(res[sel])
        r = np.where(np.isfinite(r), r, np.inf)
        report.add(name, bool(np.all(r <= tol_nodes[sel])), max_scaled_residual=float(r.max()),
                   max_excess=float(np.max(r - tol_nodes[sel])), nodes=int(sel.sum()))
    return report


def check_bound_chains(field: SolutionField, params: ModelParams, leverage: LeverageSpec,
                       abs_slack: float = 1e-6, disc_slack: float | None = None,
                       tail_tol: float = 0.02, head_ratio: float = 1e-2) -> ValidationReport:
    """Verify the comparison bounds for g(x) = k (x + Lbar) with 0 < k < Merton ratio.

    Each inequality holds at every node up to ``abs_slack`` plus a
    discretisation allowance ``disc_slack`` (relative to the magnitudes
    compared; defaults to the largest relative grid spacing).
    """
    report = ValidationReport("bound_chains")
    if not (isinstance(leverage, Linear) and leverage.k > 0 and leverage.L > 0):
        report.skip("applicable", "needs Linear(k > 0, L > 0)")
        return report
    k, L = leverage.k, leverage.L
    if k >= params.merton_ratio:
        report.skip("applicable", "k at or above the Merton ratio")
        return report
    x = field.grid.nodes
    if disc_slack is None:
        disc_slack = float(np.max(np.diff(x) / x[1:]))
    Lbar = L / k
    ez = benchmark_solution(params)
    p0 = proportional_solution(k, params)
    eta0, S, R = p0.consumption_rate, params.S, params.R
    J, c, pi = field.J, field.c_star, field.pi_star
    pos = x > 0

    def holds(lhs, rhs):
        """lhs <= rhs within slack, elementwise; returns (ok, worst violation)."""
        lhs, rhs = np.asarray(lhs, float), np.asarray(rhs, float)
        allow = abs_slack + disc_slack * np.maximum(np.abs(lhs), np.abs(rhs))
        viol = lhs - rhs - allow
        return bool(np.all(viol <= 0)), float(np.max(lhs - rhs)) if lhs.size else 0.0

    ok, w = holds(p0.value(x[pos]), J[pos])
    report.add("J0_le_J", ok, worst=w)
    ok, w = holds(J[pos], ez.value(x[pos]))
    report.add("J_le_Jez", ok, worst=w)
    ok, w = holds(J[pos], p0.value(x[pos] + Lbar))
    report.add("J_le_J0_shifted", ok, worst=w)

    xp = x[pos]
    lower_c = np.maximum(ez.consumption(xp), eta0 * xp * (xp / (xp + Lbar)) ** (1 / S - 1))
    upper_c = eta0 * xp * ((xp + Lbar) / xp) ** (1 / S)
    ok, w = holds(lower_c, c[pos])
    report.add("consumption_lower", ok, worst=w)
    ok, w = holds(c[pos], upper_c)
    report.add("consumption_upper", ok, worst=w)

    tail = c[-1] / x[-1]
    report.add("consumption_tail", abs(tail / eta0 - 1) <= tail_tol, ratio=tail, eta0=eta0, tol=tail_tol)
    c_one = float(np.interp(1.0, x, c))
    report.add("consumption_head", c[0] <= head_ratio * c_one, c_min=float(c[0]), c_at_1=c_one)

    u = pos & (field.region == UNCONSTRAINED)
    if u.any():
        xu = x[u]
        dnu = params.delta * params.nu
        up = params.merton_ratio * xu + 2 * dnu * Lbar / ((1 - R) * (params.mu - params.r))
        lowp = k * xu + (2 / (params.mu - params.r)) * (S * eta0 / (1 - S)) * (1 - ((xu + Lbar) / xu) ** (1 / S))
        ok, w = holds(pi[u], up)
        report.add("portfolio_upper_U", ok, worst=w)
        ok, w = holds(lowp, pi[u])
        report.add("portfolio_lower_U", ok, worst=w)
    else:
        report.skip("portfolio_upper_U", "no unconstrained nodes")
        report.skip("portfolio_lower_U", "no unconstrained nodes")
    return report


def homogeneity_check(solve_fn: Callable[[float, float], SolutionField], params: ModelParams,
                      k: float, L: float, x_pairs: Iterable[tuple[float, float]],
                      tol: float) -> ValidationReport:
    """Compare J(m x; k, m L) with m^(1-R) J(x; k, L) across independent solves.

    ``solve_fn(k, L, m)`` must return a solved field for bound k x + L whose
    grid is appropriate for scale ``m``; ``x_pairs`` holds (x, m) tuples.
    """
    report = ValidationReport("homogeneity")
    cache = {}

    def get(Lv, m):
        key = (float(Lv), float(m))
        if key not in cache:
            cache[key] = solve_fn(k, Lv, m)
        return cache[key]

    for x, m in x_pairs:
        base = get(L, 1.0)
        scaled = get(m * L, m)
        lhs = scaled.value_at(m * x)
        rhs = m ** (1 - params.R) * base.value_at(x)
        rel = abs(lhs - rhs) / abs(lhs)
        report.add(f"x={x:g},m={m:g}", rel <= tol, lhs=lhs, rhs=rhs, rel_diff=rel, tol=tol)
    return report
