"""Market and preference parameters, derived constants and leverage bounds.

All containers are frozen dataclasses validated at construction, so the
solver and the Monte Carlo code can assume they are well formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import (
    InvalidLeverage,
    InvalidMarket,
    InvalidPreference,
    NegativeWealth,
    NoWellPosedSolution,
)
from .report import ValidationReport


@dataclass(frozen=True)
class MarketParams:
    """Black-Scholes market: risky drift ``mu``, volatility ``sigma``, rate ``r``."""

    mu: float
    sigma: float
    r: float

    def __post_init__(self):
        if not np.isfinite([self.mu, self.sigma, self.r]).all():
            raise InvalidMarket("market parameters must be finite")
        if self.sigma <= 0:
            raise InvalidMarket(f"sigma > 0 violated (sigma={self.sigma})")
        if not 0 < self.r < self.mu:
            raise InvalidMarket(f"0 < r < mu violated (r={self.r}, mu={self.mu})")


@dataclass(frozen=True)
class PreferenceParams:
    """Epstein-Zin preferences.

    R is relative risk aversion, S the reciprocal of the EIS and ``delta``
    the subjective discount rate. Only 0 < R < 1, 0 < S < 1 is supported.
    """

    R: float
    S: float
    delta: float

    def __post_init__(self):
        if not np.isfinite([self.R, self.S, self.delta]).all():
            raise InvalidPreference("preference parameters must be finite")
        if not 0 < self.R < 1:
            raise InvalidPreference(f"0 < R < 1 violated (R={self.R})")
        if not 0 < self.S < 1:
            raise InvalidPreference(f"0 < S < 1 violated (S={self.S})")
        if self.S == self.R:
            raise InvalidPreference("S != R violated: the CRRA case rho = 0 is excluded")
        if self.delta <= 0:
            raise InvalidPreference(f"delta > 0 violated (delta={self.delta})")


@dataclass(frozen=True)
class DerivedParams:
    nu: float
    rho: float
    kappa: float
    eta: float
    merton_ratio: float


def derive_params(market: MarketParams, prefs: PreferenceParams) -> DerivedParams:
    """Compute nu, rho, kappa, eta and the Merton ratio.

    Raises
    ------
    InvalidPreference
        if nu falls outside (0, 1), i.e. S > R.
    NoWellPosedSolution
        if eta <= 0.
    """
    mu, sigma, r = market.mu, market.sigma, market.r
    R, S, delta = prefs.R, prefs.S, prefs.delta
    if sigma <= 0 or mu <= r:
        raise InvalidMarket(f"need sigma > 0 and mu > r (mu={mu}, r={r}, sigma={sigma})")
    nu = (1.0 - R) / (1.0 - S)
    if not 0.0 < nu < 1.0:
        raise InvalidPreference(f"nu = (1-R)/(1-S) = {nu:.6g} is outside (0, 1); need S < R")
    rho = (S - R) / (1.0 - R)
    kappa = (mu - r) ** 2 / (2.0 * sigma**2)
    eta = (delta + (S - 1.0) * (r + kappa / R)) / S
    if eta <= 0:
        raise NoWellPosedSolution(f"eta = {eta:.6g} <= 0; no finite unconstrained value")
    merton_ratio = (mu - r) / (R * sigma**2)
    return DerivedParams(nu=nu, rho=rho, kappa=kappa, eta=eta, merton_ratio=merton_ratio)


@dataclass(frozen=True)
class ModelParams:
    """Market plus preferences with the derived constants attached.

    Attribute access is flattened for convenience: ``params.mu``,
    ``params.R``, ``params.eta`` and so on.
    """

    market: MarketParams
    prefs: PreferenceParams
    derived: DerivedParams = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "derived", derive_params(self.market, self.prefs))

    @classmethod
    def create(cls, mu, sigma, r, R, S, delta) -> "ModelParams":
        return cls(MarketParams(mu, sigma, r), PreferenceParams(R, S, delta))

    def replace(self, **changes) -> "ModelParams":
        values = dict(mu=self.mu, sigma=self.sigma, r=self.r, R=self.R, S=self.S, delta=self.delta)
        values.update(changes)
        return ModelParams.create(**values)

    def __getattr__(self, name):
        # only reached for names not found normally
        for part in ("market", "prefs", "derived"):
            obj = self.__dict__.get(part)
            if obj is not None and hasattr(obj, name):
                return getattr(obj, name)
        raise AttributeError(name)

    def as_dict(self) -> dict:
        return dict(mu=self.mu, sigma=self.sigma, r=self.r, R=self.R, S=self.S, delta=self.delta)


# -- leverage bounds ---------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """g(x) = k x + L."""

    k: float
    L: float

    def __post_init__(self):
        if not (np.isfinite(self.k) and np.isfinite(self.L)):
            raise InvalidLeverage("k and L must be finite; use Unbounded() for no constraint")
        if self.k < 0 or self.L < 0:
            raise InvalidLeverage(f"need k >= 0 and L >= 0 (k={self.k}, L={self.L})")

    @property
    def lipschitz(self) -> float:
        return float(self.k)

    def __call__(self, x):
        return self.k * np.asarray(x, dtype=float) + self.L


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear bound with slope changes at ``thresholds``.

    ``slopes[i]`` applies on (W_i, W_{i+1}) with W_0 = 0, W_{N+1} = inf, and
    g(0) = ``offset``. Segment intercepts are recomputed so that g is
    continuous. Slopes are expected to decrease; this is checked by
    :func:`leverage_validate`, not here.
    """

    thresholds: tuple
    slopes: tuple
    offset: float

    def __post_init__(self):
        w = np.asarray(self.thresholds, dtype=float)
        k = np.asarray(self.slopes, dtype=float)
        if w.ndim != 1 or k.ndim != 1 or len(k) != len(w) + 1:
            raise InvalidLeverage("need len(slopes) == len(thresholds) + 1")
        if len(w) and (w[0] <= 0 or np.any(np.diff(w) <= 0)):
            raise InvalidLeverage("thresholds must be positive and strictly increasing")
        if np.any(k < 0) or self.offset < 0 or not np.isfinite(k).all():
            raise InvalidLeverage("slopes and offset must be finite and non-negative")
        object.__setattr__(self, "thresholds", tuple(float(v) for v in w))
        object.__setattr__(self, "slopes", tuple(float(v) for v in k))
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def lipschitz(self) -> float:
        return max(self.slopes)

    def knots(self) -> np.ndarray:
        """g evaluated at 0 and at every threshold."""
        w = np.concatenate([[0.0], self.thresholds])
        widths = np.diff(w)
        return self.offset + np.concatenate([[0.0], np.cumsum(np.asarray(self.slopes[:-1]) * widths)])

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        w = np.concatenate([[0.0], self.thresholds])
        seg = np.searchsorted(w, x, side="right") - 1
        seg = np.clip(seg, 0, len(w) - 1)
        return self.knots()[seg] + np.asarray(self.slopes)[seg] * (x - w[seg])


@dataclass(frozen=True)
class Unbounded:
    """No leverage constraint; evaluates to +inf everywhere."""

    @property
    def lipschitz(self) -> float:
        return float("inf")

    def __call__(self, x):
        return np.full(np.shape(x), np.inf) if np.ndim(x) else np.inf


LeverageSpec = Union[Linear, PiecewiseLinear, Unbounded]


def leverage_eval(spec: LeverageSpec, x):
    """Evaluate g(x); ``np.inf`` is the sentinel for an unbounded spec."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0):
        raise NegativeWealth("leverage bound requested at negative wealth")
    out = spec(xa)
    return float(out) if np.ndim(out) == 0 else out


def leverage_validate(spec: LeverageSpec, sample_grid) -> ValidationReport:
    """Check monotonicity, midpoint concavity, the Lipschitz bound and positivity.

    The checks run on the supplied sample points; an unbounded spec passes
    trivially.
    """
    report = ValidationReport(f"leverage:{type(spec).__name__}")
    x = np.asarray(sample_grid, dtype=float)
    if isinstance(spec, Unbounded):
        for name in ("monotone", "concave", "lipschitz", "positive"):
            report.add(name, True, note="unbounded")
        return report
    g = spec(x)
    tol = 1e-12 * max(1.0, float(np.max(np.abs(g))) if g.size else 1.0)
    dg = np.diff(g)
    report.add("monotone", bool(np.all(dg >= -tol)), min_increment=float(dg.min()) if dg.size else 0.0)

    # midpoint concavity on every triple (x_i, (x_i+x_j)/2, x_j) from the sample
    if x.size >= 2:
        xs = x if x.size <= 300 else x[np.linspace(0, x.size - 1, 300).astype(int)]
        gs = spec(xs)
        i, j = np.triu_indices(xs.size, k=1)
        mid = spec(0.5 * (xs[i] + xs[j]))
        gap = mid - 0.5 * (gs[i] + gs[j])
        worst = float(gap.min())
        report.add("concave", worst >= -tol, worst_midpoint_gap=worst)
    else:
        report.add("concave", True)

    dx = np.diff(x)
    keep = dx > 0
    quotients = np.abs(dg[keep] / dx[keep]) if keep.any() else np.zeros(0)
    qmax = float(quotients.max()) if quotients.size else 0.0
    # rounding in g(x_j) - g(x_i) is amplified by 1/dx
    q_tol = 1e-9 * spec.lipschitz + 8 * np.finfo(float).eps * float(np.max(np.abs(g))) / float(dx[keep].min()) if keep.any() else 0.0
    report.add("lipschitz", qmax <= spec.lipschitz + q_tol, max_quotient=qmax, declared=spec.lipschitz)

    pos = x > 0
    report.add("positive", bool(np.all(g[pos] > 0)), min_value=float(g[pos].min()) if pos.any() else None)
    return report
