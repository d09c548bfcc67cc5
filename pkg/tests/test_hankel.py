"""Unit tests for the transform pair and the integrability condition."""

import math

import numpy as np
import pytest
import scipy.special as sp

from hankel_dual.errors import AdmissibilityError, InconclusiveConditionError
from hankel_dual.hankel import (
    SeedFunction,
    check_condition,
    dual_roundtrip,
    hankel_forward,
    hankel_inverse,
)


def gaussian_seed():
    return SeedFunction(lambda x: np.exp(-x * x), 0.0, -math.inf, name="gaussian")


def k0_seed():
    return SeedFunction(
        lambda x: sp.kv(0.0, np.maximum(x, 1e-300)), 0.0, -math.inf, name="K0"
    )


def power_exp_seed(nu):
    return SeedFunction(
        lambda x: x**nu * np.exp(-x), float(nu), -math.inf, name=f"x^{nu} exp(-x)"
    )


def truncated_power_seed():
    return SeedFunction(
        lambda x: np.where(x <= 1.0, 1.0 - x * x, 0.0),
        0.0,
        None,
        support_upper=1.0,
        name="(1-x^2)+",
    )


def indicator_seed():
    return SeedFunction(
        lambda x: np.where(x <= 1.0, 1.0, 0.0),
        0.0,
        None,
        support_upper=1.0,
        name="1_[0,1]",
    )


SMOOTH_SEEDS = [
    (gaussian_seed(), 0.0),
    (k0_seed(), 0.0),
    (power_exp_seed(0.0), 0.0),
    (power_exp_seed(1.0), 1.0),
    (truncated_power_seed(), 0.0),
]


def test_forward_known_gaussian():
    # G(b) = (1/2) exp(-b^2/4) for F = exp(-x^2), nu = 0
    for b in (0.5, 1.0, 2.0):
        res = hankel_forward(gaussian_seed(), 0.0, b, tol=1e-10)
        truth = 0.5 * math.exp(-b * b / 4.0)
        assert res.converged
        assert abs(res.value - truth) <= 5.0 * res.abs_err
        assert abs(res.value - truth) < 1e-10


def test_forward_known_exponential():
    # G(b) = (1 + b^2)^{-3/2} for F = exp(-x), nu = 0
    for b in (0.5, 1.0, 2.0):
        res = hankel_forward(power_exp_seed(0.0), 0.0, b, tol=1e-10)
        truth = (1.0 + b * b) ** -1.5
        assert res.converged
        assert abs(res.value - truth) <= 5.0 * res.abs_err


def test_forward_known_indicator():
    # G(b) = J_1(b)/b for the indicator of [0, 1], nu = 0
    for b in (0.7, 2.3):
        res = hankel_forward(indicator_seed(), 0.0, b, tol=1e-9)
        assert abs(res.value - sp.jv(1.0, b) / b) <= 5.0 * res.abs_err


@pytest.mark.parametrize("F,nu", SMOOTH_SEEDS, ids=[s.name for s, _ in SMOOTH_SEEDS])
def test_dual_roundtrip_smooth_seeds(F, nu):
    for r, resid in dual_roundtrip(F, nu, [0.5, 1.0, 2.0], tol=1e-6):
        assert resid <= 1e-6, (F.name, r, resid)


def test_roundtrip_jump_recovers_midpoint():
    # at the support edge the inverse converges to the jump midpoint
    ((r, resid),) = dual_roundtrip(indicator_seed(), 0.0, [1.0], tol=1e-6)
    assert r == 1.0
    assert abs(resid - 0.5) <= 1e-5


def test_scale_covariance():
    # F_s(x) = F(s x)  =>  G_s(b) = s^{-2} G(b/s)
    F = gaussian_seed()
    for s in (0.5, 2.0):
        Fs = SeedFunction(lambda x, s=s: np.exp(-((s * x) ** 2)), 0.0, -math.inf)
        for b in (0.7, 1.3):
            lhs = hankel_forward(Fs, 0.0, b, tol=1e-10).value
            rhs = hankel_forward(F, 0.0, b / s, tol=1e-10).value / s**2
            assert abs(lhs - rhs) < 1e-8


def test_forward_rejects_inadmissible_before_quadrature():
    calls = []

    def f(x):
        calls.append(x)
        return np.ones_like(x)

    bad = SeedFunction(f, 0.0, 0.0)  # constant: fails at infinity
    with pytest.raises(AdmissibilityError) as exc:
        hankel_forward(bad, 0.0, 1.0)
    assert exc.value.verdict.failing_endpoint == "Infinity"
    assert not calls  # declared exponents decide without evaluating F


def test_forward_argument_validation():
    with pytest.raises(ValueError):
        hankel_forward(gaussian_seed(), 0.0, 0.0)
    with pytest.raises(ValueError):
        hankel_inverse(lambda u: np.exp(-u), 0.0, -1.0)


def test_condition_declared_endpoints():
    combos = [
        (0.0, -2.0, True, None),
        (-2.0, -3.0, False, "Zero"),
        (0.0, -1.0, False, "Infinity"),
        (-2.0, -1.0, False, "Both"),
    ]
    for p0, pinf, admissible, endpoint in combos:
        v = check_condition(SeedFunction(lambda x: x, p0, pinf))
        assert v.admissible == admissible
        assert v.failing_endpoint == endpoint


def test_condition_estimates_undeclared_exponents():
    # 1/(1+x^2): exponent 0 at zero, -2 at infinity
    v = check_condition(SeedFunction(lambda x: 1.0 / (1.0 + x * x)))
    assert v.admissible
    assert abs(v.zero_exponent - 0.0) < 0.02
    assert abs(v.inf_exponent + 2.0) < 0.02


def test_condition_estimator_detects_slow_decay():
    v = check_condition(SeedFunction(lambda x: (1.0 + x) ** -1.2))
    assert not v.admissible
    assert v.failing_endpoint == "Infinity"
    assert abs(v.inf_exponent + 1.2) < 0.02


def test_condition_estimator_oscillatory_envelope():
    # |J_0(x)| ~ x^{-1/2} envelope at infinity: x^{-1} J_0(x) decays
    # like x^{-3/2} times oscillation -- but a shifted power is clear
    F = SeedFunction(
        lambda x: np.cos(5.0 * x) / (1.0 + x) ** 2, oscillatory_envelope=True
    )
    v = check_condition(F)
    assert v.admissible
    assert abs(v.inf_exponent + 2.0) < 0.05


def test_condition_borderline_raises_inconclusive():
    with pytest.raises(InconclusiveConditionError) as exc:
        check_condition(SeedFunction(lambda x: x**-1.5))
    assert abs(exc.value.exponent + 1.5) <= 0.05


def test_compact_support_skips_infinity_estimate():
    v = check_condition(indicator_seed())
    assert v.admissible
    assert v.inf_exponent == -math.inf


def test_roundtrip_rejects_inadmissible():
    with pytest.raises(AdmissibilityError):
        dual_roundtrip(SeedFunction(lambda x: np.ones_like(x), 0.0, 0.0), 0.0, [1.0])
