import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wmorrey.geometry import Annulus, Ball, BallFamily
from wmorrey.discretize import GridSpec
from wmorrey.weights import (INF, PowerWeight, ShiftedPowerWeight, a1_constant_estimate,
                             ap_constant_estimate, ap_membership_power, conjugate,
                             constant_weight, measure_comparison_defect, power_interval_mass,
                             power_interval_masses, radial_power_mass, rh_check, sigma_w_power,
                             theta_power)

ORIGIN_BALLS = [Ball(0, 2.0**-k) for k in range(0, 12)]


def test_power_weight_rejects_non_integrable_exponent():
    with pytest.raises(ValueError):
        PowerWeight(-1.0, 1)
    with pytest.raises(ValueError):
        PowerWeight(-2.5, 2)
    assert PowerWeight(-1.5, 2).exponent == -1.5


def test_shifted_weight_evaluates_as_product():
    w = ShiftedPowerWeight(0.5, PowerWeight(-0.25))
    assert w.exponent == 0.25
    assert w(np.array([4.0]))[0] == pytest.approx(4.0**0.5 * 4.0**-0.25)
    with pytest.raises(ValueError):
        ShiftedPowerWeight(-0.1)


@pytest.mark.parametrize("beta,p,n,expected", [
    (0.0, 2, 1, True), (-0.5, 1, 1, True), (1.5, 2, 1, False), (0.2, 1, 1, False),
    (-1.0, 1, 2, True), (1.99, 2, 2, True), (2.0, 2, 2, False),
])
def test_ap_membership_for_powers(beta, p, n, expected):
    assert ap_membership_power(beta, p, n) is expected


def test_ap_membership_rejects_p_below_one():
    with pytest.raises(ValueError):
        ap_membership_power(0.0, 0.5, 1)


def test_ap_constant_of_constant_weight_is_one():
    assert ap_constant_estimate(constant_weight(), 2.0, ORIGIN_BALLS) == pytest.approx(1.0)
    fam = ap_constant_estimate(constant_weight(2), 3.0, BallFamily(levels=6), GridSpec(2, 16, 64))
    assert fam == pytest.approx(1.0)


def test_ap_constant_is_scale_invariant_at_origin():
    w = PowerWeight(0.5)
    vals = [ap_constant_estimate(w, 2.0, [b]) for b in ORIGIN_BALLS]
    # (r^{1/2}/(3/2)) (r^{-1/2}/(1/2)) = 4/3 on every ball B(0, r)
    assert np.allclose(vals, 4 / 3, rtol=1e-12)


def test_ap_constant_diverges_when_dual_weight_is_not_integrable():
    assert ap_constant_estimate(PowerWeight(1.5), 2.0, ORIGIN_BALLS) == INF


@pytest.mark.parametrize("beta", [-0.9, -0.5, 0.0, 0.5, 0.9, 1.0, 1.2, 2.0])
def test_ap_membership_matches_estimator_divergence(beta):
    # balls centered near 0 at shrinking scales: finite constant iff member
    balls = ORIGIN_BALLS + [Ball(2.0**-k, 2.0**-k) for k in range(12)]
    est = ap_constant_estimate(PowerWeight(beta), 2.0, balls)
    assert math.isfinite(est) == ap_membership_power(beta, 2.0, 1)


def test_a1_constant_closed_forms():
    assert a1_constant_estimate(constant_weight(), ORIGIN_BALLS) == pytest.approx(1.0)
    assert a1_constant_estimate(PowerWeight(-0.5), [Ball(0, 1)]) == pytest.approx(2.0)
    assert a1_constant_estimate(PowerWeight(0.5), ORIGIN_BALLS, GridSpec(1, 16, 256)) == INF


def test_a1_constant_uses_grid_minimum():
    grid = GridSpec(1, 16, 1024)
    w = PowerWeight(-0.5)
    b = Ball(3.0, 1.0)
    exact = (power_interval_mass(2, 4, -0.5) / 2) / 4**-0.5
    assert a1_constant_estimate(w, [b], grid) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("beta,n,expected", [(0.0, 1, INF), (-1.0, 2, 2.0), (1.0, 1, INF), (-0.5, 1, 2.0)])
def test_sigma_w_values(beta, n, expected):
    assert sigma_w_power(beta, n) == expected


def test_sigma_w_and_theta_reject_non_integrable():
    with pytest.raises(ValueError):
        sigma_w_power(-1.0, 1)
    with pytest.raises(ValueError):
        theta_power(-2.0, 2)


@pytest.mark.parametrize("beta,n,expected", [(0.0, 1, 1.0), (1.0, 1, 2.0), (-1.0, 2, 0.5)])
def test_theta_values(beta, n, expected):
    assert theta_power(beta, n) == expected


def test_rh_check_closed_forms():
    assert rh_check(constant_weight(), 3.0, ORIGIN_BALLS) == pytest.approx(1.0)
    assert rh_check(PowerWeight(-0.5), 1.5, [Ball(0, 1)]) == pytest.approx(4 ** (2 / 3) / 2, rel=1e-12)
    assert rh_check(PowerWeight(-0.5), 2.5, ORIGIN_BALLS) == INF
    with pytest.raises(ValueError):
        rh_check(constant_weight(), 1.0, ORIGIN_BALLS)


@pytest.mark.parametrize("beta", [-0.8, -0.5, -0.2])
def test_rh_bounded_below_sigma_w_and_divergent_above(beta):
    sw = sigma_w_power(beta, 1)
    coarse = [Ball(0, 2.0**-k) for k in range(6)] + [Ball(2.0**-k, 2.0**-k) for k in range(6)]
    fine = [Ball(0, 2.0**-k) for k in range(14)] + [Ball(2.0**-k, 2.0**-k) for k in range(14)]
    below = [rh_check(PowerWeight(beta), sw - 0.2, fam) for fam in (coarse, fine)]
    assert all(math.isfinite(v) for v in below)
    assert below[1] == pytest.approx(below[0], rel=1e-9)
    assert rh_check(PowerWeight(beta), sw + 0.2, fine) == INF


def test_rh_survives_positive_power_shift():
    base = PowerWeight(-0.5)
    shifted = ShiftedPowerWeight(0.7, base)
    balls = ORIGIN_BALLS + [Ball(2.0**-k, 2.0**-k / 4) for k in range(12)]
    assert math.isfinite(rh_check(shifted, 1.8, balls))


def test_measure_comparison_defect():
    assert measure_comparison_defect(PowerWeight(0.3), 2.0, [(Ball(0, 1), Ball(0, 1))]) == pytest.approx(1.0)
    sigma = 1.5
    pairs = [(Ball(0, r), Ball(0, 1)) for r in (0.5, 0.1, 0.01)]
    got = measure_comparison_defect(constant_weight(), sigma, pairs)
    assert got == pytest.approx(0.5 ** (1 / sigma), rel=1e-12)
    # |x|^{-1/2}: r^{1/2} / r^{1/3} = r^{1/6}
    got = measure_comparison_defect(PowerWeight(-0.5), sigma, pairs)
    assert got == pytest.approx(0.5 ** (1 / 6), rel=1e-12)
    with pytest.raises(ValueError):
        measure_comparison_defect(constant_weight(), sigma, [(Ball(2, 1), Ball(0, 1))])


def test_measure_comparison_bounded_for_annuli_and_offcenter_sets():
    w = PowerWeight(-0.6)
    sigma = sigma_w_power(-0.6, 1) - 0.3
    pairs = []
    for k in range(10):
        r = 2.0**-k
        pairs.append((Annulus(0, r / 2, r), Ball(0, 2 * r)))
        pairs.append((Ball(r, r / 4), Ball(0, 2 * r)))
    assert measure_comparison_defect(w, sigma, pairs) < 3.0


def test_theta_ratio_bound_holds_on_sampled_pairs():
    for beta, n in [(-0.5, 1), (1.0, 1), (-1.2, 2), (0.7, 2)]:
        w = PowerWeight(beta, n)
        theta = w.meta().theta
        origin = (0.0,) * n
        for r, R in [(0.1, 1.0), (0.01, 2.0), (1e-4, 1.0)]:
            ratio = w.mass(Ball(origin, r)) / w.mass(Ball(origin, R))
            assert ratio <= 1.0001 * (r / R) ** (n * theta)


def test_conjugate_exponent():
    assert conjugate(2.0) == 2.0
    assert conjugate(INF) == 1.0
    assert conjugate(1.0) == INF


def test_radial_mass_2d_matches_closed_forms():
    assert radial_power_mass(Ball((0, 0), 2.0), 0.0) == pytest.approx(4 * math.pi)
    # |y|^{-1} over B(0, r): 2 pi r
    assert radial_power_mass(Ball((0, 0), 3.0), -1.0) == pytest.approx(6 * math.pi)
    # disc off the origin, constant weight -> area
    assert radial_power_mass(Ball((3.0, 1.0), 0.5), 0.0) == pytest.approx(math.pi / 4, rel=1e-9)
    # lens of two unit discs at distance 1
    lens = 2 * math.acos(0.5) - 0.5 * math.sqrt(3)
    assert radial_power_mass(Ball((1.0, 0.0), 1.0), 0.0, support=1.0) == pytest.approx(lens, rel=1e-9)
    assert radial_power_mass(Ball((0.1, 0.0), 0.5), -2.0) == INF
    assert radial_power_mass(Annulus((0, 0), 1.0, 2.0), -2.0) == pytest.approx(2 * math.pi * math.log(2))


def test_radial_mass_2d_against_polar_quadrature():
    from scipy import integrate
    c, r, e = (0.7, -0.2), 0.5, -1.3
    d = math.hypot(*c)

    def inner(s):
        cosang = (s * s + d * d - r * r) / (2 * s * d)
        return s ** (e + 1) * 2 * math.acos(max(-1, min(1, cosang)))
    ref, _ = integrate.quad(inner, d - r, d + r, epsrel=1e-12)
    assert radial_power_mass(Ball(c, r), e) == pytest.approx(ref, rel=1e-9)


@given(a=st.floats(-5, 5), length=st.floats(1e-3, 5), e=st.floats(-0.95, 3))
def test_interval_mass_is_additive(a, length, e):
    b = a + length
    mid = a + length / 3
    whole = power_interval_mass(a, b, e)
    parts = power_interval_mass(a, mid, e) + power_interval_mass(mid, b, e)
    assert whole == pytest.approx(parts, rel=1e-9, abs=1e-12)


@given(e=st.floats(-3, 2), lo=st.floats(-4, 4), length=st.floats(1e-3, 4))
def test_vectorized_interval_mass_matches_scalar(e, lo, length):
    hi = lo + length
    vec = float(power_interval_masses(np.array([lo]), np.array([hi]), e)[0])
    ref = power_interval_mass(lo, hi, e)
    if ref == INF:
        assert vec == INF
    else:
        assert vec == pytest.approx(ref, rel=1e-9, abs=1e-12)
