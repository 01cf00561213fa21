"""Exact analytic solutions used as oracles for the numerical solver.

Covers the Epstein-Zin aggregator and its truncated version, the
unconstrained (Merton-type) solution, the proportional-leverage solution,
the bond-only utility and the two-sided growth bounds on the value function.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstraintNotBinding, DomainError
from .model import ModelParams


def _pow(base, expo):
    """base**expo for base >= 0 via exp/log, with an explicit zero branch."""
    base = np.asarray(base, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = np.exp(expo * np.log(np.where(base > 0, base, 1.0)))
    if expo > 0:
        zero = 0.0
    elif expo < 0:
        zero = np.inf
    else:
        zero = 1.0
    return np.where(base > 0, out, zero)


def _scalar(a):
    return float(a) if np.ndim(a) == 0 else a


def aggregator(c, v, params: ModelParams):
    """f(c, v) = c^(1-S)/(1-S) * ((1-R) v)^rho.

    With 0 < R < 1 and rho < 0, f(0, v) = 0 for every v >= 0 (including
    f(0, 0) = 0) and f(c, 0) = +inf for c > 0.
    """
    c = np.asarray(c, dtype=float)
    v = np.asarray(v, dtype=float)
    R, S, rho = params.R, params.S, params.rho
    if np.any(c < 0):
        raise DomainError("consumption must be non-negative")
    if np.any((1 - R) * v < 0):
        raise DomainError("(1-R) v must be non-negative")
    head = _pow(c, 1 - S) / (1 - S)
    tail = _pow((1 - R) * v, rho)
    with np.errstate(invalid="ignore"):
        out = head * tail
    out = np.where(c == 0, 0.0, out)
    return _scalar(out)


def aggregator_dv(c, v, params: ModelParams):
    """Partial derivative of the aggregator in v; non-positive since rho < 0."""
    c = np.asarray(c, dtype=float)
    v = np.asarray(v, dtype=float)
    f = np.asarray(aggregator(c, v, params))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(c == 0, 0.0, params.rho * f / v)
    return _scalar(out)


def aggregator_truncated(c, v, m: float, params: ModelParams):
    """f_m(c, v) = min(c, m)^(1-S)/(1-S) * max((1-R) v, 1/m)^rho.

    Bounded by m^(1-S-rho)/(1-S) and globally Lipschitz in v.
    """
    if not m > 0:
        raise DomainError(f"truncation level must be positive (m={m})")
    c = np.asarray(c, dtype=float)
    if np.any(c < 0):
        raise DomainError("consumption must be non-negative")
    v = np.asarray(v, dtype=float)
    R, S, rho = params.R, params.S, params.rho
    head = _pow(np.minimum(c, m), 1 - S) / (1 - S)
    tail = _pow(np.maximum((1 - R) * v, 1.0 / m), rho)
    return _scalar(head * tail)


def aggregator_truncated_dv(c, v, m: float, params: ModelParams):
    """Derivative of f_m in v (zero on the flat part (1-R) v < 1/m)."""
    c = np.asarray(c, dtype=float)
    v = np.asarray(v, dtype=float)
    R, rho = params.R, params.rho
    active = (1 - R) * v > 1.0 / m
    f = np.asarray(aggregator_truncated(c, v, m, params))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(active, rho * f / np.where(active, v, 1.0), 0.0)
    return _scalar(out)


@dataclass(frozen=True)
class ClosedFormSolution:
    """J(x) = value_coefficient * x^(1-R)/(1-R) with proportional policies.

    ``kind`` is one of ``"unconstrained"``, ``"proportional"``, ``"bond_only"``.
    """

    value_coefficient: float
    consumption_rate: float
    portfolio_rate: float
    kind: str
    R: float
    k: float | None = None

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return _scalar(self.value_coefficient * _pow(x, 1 - self.R) / (1 - self.R))

    def value_x(self, x):
        x = np.asarray(x, dtype=float)
        return _scalar(self.value_coefficient * _pow(x, -self.R))

    def value_xx(self, x):
        x = np.asarray(x, dtype=float)
        return _scalar(-self.R * self.value_coefficient * _pow(x, -self.R - 1))

    def consumption(self, x):
        return _scalar(self.consumption_rate * np.asarray(x, dtype=float))

    def portfolio(self, x):
        return _scalar(self.portfolio_rate * np.asarray(x, dtype=float))


def benchmark_solution(params: ModelParams) -> ClosedFormSolution:
    """Unconstrained optimum: J = eta^(-nu S) x^(1-R)/(1-R), c = eta x."""
    eta, nu, S = params.eta, params.nu, params.S
    return ClosedFormSolution(
        value_coefficient=float(_pow(eta, -nu * S)),
        consumption_rate=eta,
        portfolio_rate=params.merton_ratio,
        kind="unconstrained",
        R=params.R,
    )


def benchmark_value(x, params: ModelParams):
    return benchmark_solution(params).value(x)


def proportional_eta(k: float, params: ModelParams) -> float:
    """Consumption rate of the proportional-leverage solution for slope k."""
    mu, sigma, r = params.mu, params.sigma, params.r
    R, S, delta, nu = params.R, params.S, params.delta, params.nu
    quad = k * (mu - r) - 0.5 * sigma**2 * R * k**2
    return (S - 1) / S * (quad + r - delta * nu / (1 - R))


def proportional_solution(k: float, params: ModelParams, allow_zero: bool = False) -> ClosedFormSolution:
    """Optimum under g(x) = k x with 0 < k < Merton ratio.

    ``allow_zero=True`` extends the formula to k = 0 (bond holdings with
    optimal consumption); this is used only as a test oracle.
    """
    if k < 0 or (k == 0 and not allow_zero):
        raise DomainError(f"proportional slope must be positive (k={k})")
    if k >= params.merton_ratio:
        raise ConstraintNotBinding(
            f"k={k} >= Merton ratio {params.merton_ratio:.6g}; the unconstrained solution applies"
        )
    eta0 = proportional_eta(k, params)
    return ClosedFormSolution(
        value_coefficient=float(_pow(eta0, -params.nu * params.S)),
        consumption_rate=eta0,
        portfolio_rate=float(k),
        kind="proportional",
        R=params.R,
        k=float(k),
    )


def bond_only_solution(params: ModelParams) -> ClosedFormSolution:
    """Utility of holding only bonds and consuming the interest, (pi, c) = (0, r x)."""
    coeff = float(_pow(params.delta, -params.nu) * _pow(params.r, 1 - params.R))
    return ClosedFormSolution(coeff, params.r, 0.0, "bond_only", params.R)


def bond_only_utility(x, params: ModelParams):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("wealth must be non-negative")
    return bond_only_solution(params).value(x)


def value_bounds(x, params: ModelParams):
    """(lower, upper) growth bounds on the constrained value function."""
    return bond_only_utility(x, params), benchmark_value(x, params)
