import functools

import pytest

from ezleverage.hjb import SolverConfig, build_grid, policy_iteration_solve
from ezleverage.model import Linear, ModelParams, Unbounded

# frozen with an independent 30-digit evaluation of the closed forms
JEZ_AT_1 = 7.59383161350690518550200494649
BOND_AT_1 = 5.74349177498517503399313473389
LAMBDA0_K1 = 1.49036354279376451394931443526
J0_AT_1_K1 = 7.45181771396882256974657217629
ETA0_K0 = 0.18
LAMBDA0_K0 = 1.40911195330433297833443478876


def example_params():
    return ModelParams.create(mu=0.08, sigma=0.2, r=0.02, R=0.8, S=0.5, delta=0.1)


@pytest.fixture(scope="session")
def params():
    return example_params()


@functools.lru_cache(maxsize=None)
def solved(leverage=Linear(1.0, 0.0), M=2000, x_min=1e-3, x_max=50.0, spacing="log", scheme="upwind"):
    """Cached solves on the example parameters; fields are immutable."""
    grid = build_grid(x_min, x_max, M, spacing)
    return policy_iteration_solve(example_params(), leverage, grid, SolverConfig(scheme=scheme))


LEVERAGES = {
    "proportional": Linear(1.0, 0.0),
    "constant": Linear(0.0, 0.5),
    "affine": Linear(1.0, 0.5),
    "slack": Linear(2.0, 0.0),
    "unbounded": Unbounded(),
}


def x_max_for(leverage):
    """Upper domain edge large enough for the homogeneity condition there."""
    if isinstance(leverage, Linear) and leverage.k == 0:
        return 200.0
    return 50.0
