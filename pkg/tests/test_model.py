import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ezleverage.errors import (
    InvalidLeverage,
    InvalidMarket,
    InvalidPreference,
    NegativeWealth,
    NoWellPosedSolution,
)
from ezleverage.model import (
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


def test_derived_constants_for_example_params(params):
    assert params.nu == pytest.approx(0.4, abs=1e-15)
    assert params.rho == pytest.approx(-1.5, abs=1e-15)
    assert params.kappa == pytest.approx(0.045, abs=1e-15)
    assert params.eta == pytest.approx(0.12375, abs=1e-15)
    assert params.merton_ratio == pytest.approx(1.875, abs=1e-14)


def test_derive_params_is_deterministic(params):
    a = derive_params(params.market, params.prefs)
    b = derive_params(params.market, params.prefs)
    assert a == b


def test_equal_R_and_S_rejected():
    with pytest.raises(InvalidPreference):
        PreferenceParams(R=0.5, S=0.5, delta=0.1)


def test_small_discount_has_no_solution():
    with pytest.raises(NoWellPosedSolution):
        ModelParams.create(0.08, 0.2, 0.02, 0.8, 0.5, 0.01)


def test_S_above_R_puts_nu_outside_unit_interval():
    with pytest.raises(InvalidPreference):
        ModelParams.create(0.08, 0.2, 0.02, 0.5, 0.8, 0.1)


@pytest.mark.parametrize("mu,sigma,r", [(0.02, 0.2, 0.02), (0.08, 0.0, 0.02), (0.08, 0.2, 0.0), (0.01, 0.2, 0.02)])
def test_bad_market_rejected(mu, sigma, r):
    with pytest.raises(InvalidMarket):
        MarketParams(mu, sigma, r)


@pytest.mark.parametrize("R,S,delta", [(1.0, 0.5, 0.1), (0.8, 0.0, 0.1), (0.8, 0.5, 0.0), (float("nan"), 0.5, 0.1)])
def test_bad_preferences_rejected(R, S, delta):
    with pytest.raises(InvalidPreference):
        PreferenceParams(R, S, delta)


def test_flattened_attribute_access(params):
    assert params.mu == 0.08 and params.R == 0.8 and params.eta == params.derived.eta
    with pytest.raises(AttributeError):
        params.not_a_field


def test_replace_revalidates(params):
    assert params.replace(R=0.7).R == 0.7
    with pytest.raises(InvalidPreference):
        params.replace(R=1.2)


@given(S=st.floats(0.01, 0.98), gap=st.floats(0.001, 0.99))
def test_nu_in_unit_interval_and_rho_negative(S, gap):
    R = S + gap * (1 - S)
    if not S < R < 1:
        return
    prefs = PreferenceParams(R, S, 0.5)
    try:
        d = derive_params(MarketParams(0.08, 0.2, 0.02), prefs)
    except NoWellPosedSolution:
        return
    assert 0 < d.nu < 1
    assert d.rho < 0
    assert d.rho == pytest.approx(1 - 1 / d.nu, rel=1e-9, abs=1e-12)


@given(R1=st.floats(0.1, 0.9), R2=st.floats(0.1, 0.9), s1=st.floats(0.05, 0.5), s2=st.floats(0.05, 0.5))
def test_merton_ratio_decreasing_in_R_and_sigma(R1, R2, s1, s2):
    def ratio(R, sigma):
        return 0.06 / (R * sigma**2)

    if R1 < R2:
        assert ratio(R1, 0.2) > ratio(R2, 0.2)
    if s1 < s2:
        assert ratio(0.5, s1) > ratio(0.5, s2)
    # and the library agrees with the formula
    p = ModelParams.create(0.08, s1, 0.02, max(R1, 0.5 + 1e-3), 0.5, 5.0)
    assert p.merton_ratio == pytest.approx(0.06 / (p.R * s1**2), rel=1e-12)


# -- leverage bounds ---------------------------------------------------------


def test_linear_examples():
    assert leverage_eval(Linear(0, 1), 5.0) == 1.0
    assert leverage_eval(Linear(1, 0), 0.25) == 0.25


@given(k=st.floats(0, 10), L=st.floats(0, 10), x=st.floats(0, 1e6))
def test_linear_is_exact(k, L, x):
    assert leverage_eval(Linear(k, L), x) == k * x + L


def test_piecewise_against_integrated_slopes():
    spec = PiecewiseLinear((1.0,), (2.0, 1.0), 0.5)
    # g(3) = 0.5 + 2*1 + 1*2
    assert leverage_eval(spec, 3.0) == pytest.approx(4.5, abs=1e-15)
    xs = np.linspace(0, 10, 1001)
    # brute force: integrate the slope function on a fine grid
    fine = np.linspace(0, 10, 100_001)
    slope = np.where(fine < 1.0, 2.0, 1.0)
    integral = 0.5 + np.concatenate([[0.0], np.cumsum(0.5 * (slope[1:] + slope[:-1]) * np.diff(fine))])
    assert np.allclose(spec(xs), np.interp(xs, fine, integral), atol=1e-4)


def test_piecewise_is_continuous_at_thresholds():
    spec = PiecewiseLinear((1.0, 4.0), (3.0, 1.0, 0.25), 0.2)
    for w in spec.thresholds:
        assert spec(w - 1e-12) == pytest.approx(spec(w + 1e-12), abs=1e-10)


def test_negative_wealth_rejected():
    with pytest.raises(NegativeWealth):
        leverage_eval(Linear(1, 0), -1.0)


def test_unbounded_is_infinite():
    assert leverage_eval(Unbounded(), 3.0) == np.inf
    assert np.all(np.isinf(leverage_eval(Unbounded(), np.array([0.0, 1.0]))))


@pytest.mark.parametrize("k,L", [(-1, 0), (0, -1), (np.inf, 0)])
def test_bad_linear_rejected(k, L):
    with pytest.raises(InvalidLeverage):
        Linear(k, L)


def test_validate_linear_passes():
    rep = leverage_validate(Linear(1, 0), [0, 1, 2])
    assert rep.passed
    assert [c.name for c in rep.checks] == ["monotone", "concave", "lipschitz", "positive"]


def test_validate_increasing_slopes_fails_concavity():
    rep = leverage_validate(PiecewiseLinear((1.0,), (1.0, 2.0), 0.0), np.linspace(0, 3, 31))
    assert rep["concave"].passed is False
    assert rep["monotone"].passed


def test_validate_zero_bound_fails_positivity():
    rep = leverage_validate(Linear(0, 0), np.linspace(0, 3, 31))
    assert rep["positive"].passed is False


def test_validate_lipschitz_on_fine_log_grid():
    # rounding in g(x_j) - g(x_i) must not trip the Lipschitz check
    rep = leverage_validate(Linear(0.5, 1.0), np.geomspace(1e-3, 50, 2000))
    assert rep.passed
