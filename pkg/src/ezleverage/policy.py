"""Feedback policies (c(x), pi(x)) tabulated on a wealth grid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InadmissiblePolicy
from .model import LeverageSpec, Unbounded


@dataclass(frozen=True)
class PolicyField:
    """Consumption and risky dollar position tabulated at ``nodes``.

    Between nodes values are linearly interpolated. Outside the grid the
    policy is extended proportionally to wealth (homogeneous of degree one),
    and the portfolio is clipped to the leverage bound when one is given.
    """

    nodes: np.ndarray
    consumption: np.ndarray
    portfolio: np.ndarray
    leverage: LeverageSpec | None = None

    def __post_init__(self):
        for name in ("nodes", "consumption", "portfolio"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if not (self.nodes.shape == self.consumption.shape == self.portfolio.shape):
            raise ValueError("nodes, consumption and portfolio must share one shape")
        if self.nodes.ndim != 1 or self.nodes.size < 2 or np.any(np.diff(self.nodes) <= 0):
            raise ValueError("nodes must be a strictly increasing 1-D array")

    @classmethod
    def from_functions(cls, c_fn, pi_fn, nodes, leverage=None) -> "PolicyField":
        nodes = np.asarray(nodes, dtype=float)
        return cls(nodes, np.broadcast_to(c_fn(nodes), nodes.shape).copy(),
                   np.broadcast_to(pi_fn(nodes), nodes.shape).copy(), leverage)

    @classmethod
    def from_solution(cls, field) -> "PolicyField":
        return cls(field.grid.nodes, field.c_star, field.pi_star, field.leverage)

    def scaled(self, c_scale: float = 1.0, pi_scale: float = 1.0) -> "PolicyField":
        return PolicyField(self.nodes, c_scale * self.consumption, pi_scale * self.portfolio, self.leverage)

    def _extend(self, x, values):
        x = np.asarray(x, dtype=float)
        lo, hi = self.nodes[0], self.nodes[-1]
        out = np.interp(x, self.nodes, values)
        if lo > 0:
            below = x < lo
            out = np.where(below, values[0] * x / lo, out)
        above = x > hi
        out = np.where(above, values[-1] * x / hi, out)
        return np.where(x > 0, out, 0.0)

    def consumption_at(self, x):
        return self._extend(x, self.consumption)

    def portfolio_at(self, x):
        out = self._extend(x, self.portfolio)
        if self.leverage is not None and not isinstance(self.leverage, Unbounded):
            out = np.minimum(out, self.leverage(np.maximum(x, 0.0)))
        return out

    def check_admissible(self, leverage: LeverageSpec | None = None, tol: float = 1e-9) -> None:
        """Raise :class:`InadmissiblePolicy` if c < 0 or |pi| > g + tol on the nodes."""
        leverage = leverage if leverage is not None else self.leverage
        if np.any(self.consumption < 0) or not np.isfinite(self.consumption).all():
            raise InadmissiblePolicy("consumption must be finite and non-negative")
        if leverage is not None and not isinstance(leverage, Unbounded):
            g = leverage(self.nodes)
            excess = np.abs(self.portfolio) - g
            if np.any(excess > tol * np.maximum(1.0, g)):
                i = int(np.argmax(excess))
                raise InadmissiblePolicy(
                    f"|pi| exceeds g at x={self.nodes[i]:.6g}: {self.portfolio[i]:.6g} > {g[i]:.6g}"
                )
