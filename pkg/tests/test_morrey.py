import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wmorrey.discretize import (CharBall, GridFunction, GridSpec, OffsetBump, RadialPower, SingularPower,
                                Tent, build_witness, dilate)
from wmorrey.geometry import Ball, BallFamily, Strategy, enumerate_balls
from wmorrey.morrey import (ball_functional, lebesgue_norm, morrey_norm, normalizer, two_weight_norm,
                            weak_morrey_norm, weight_power)
from wmorrey.params import MorreyParams
from wmorrey.weights import PowerWeight, constant_weight

ONE = constant_weight()
S = GridSpec(1, 16, 4096)
FAM = BallFamily(Strategy.ALL, levels=10)


def _chi(spec=S):
    return build_witness(CharBall(0.0, 1.0), spec)


def test_zero_function_has_zero_norms():
    z = GridFunction(S, np.zeros(S.m))
    params = MorreyParams(2, 0.5, 0.0)
    assert morrey_norm(z, ONE, params, FAM).value == 0
    assert weak_morrey_norm(z, ONE, params, FAM).value == 0
    assert ball_functional(z, ONE, params, Ball(0.0, 1.0)) == 0


def test_ball_functional_examples():
    assert ball_functional(_chi(), ONE, MorreyParams(1, 0.5, 0), Ball(0.0, 1.0)) == pytest.approx(2.0)
    assert ball_functional(_chi(), ONE, MorreyParams(1, 0, 0), Ball(0.0, 4.0)) == pytest.approx(2.0)


def test_morrey_norm_example_and_argmax():
    est = morrey_norm(_chi(), ONE, MorreyParams(1, 0.5, 0), FAM)
    assert est.value == pytest.approx(2.0)
    assert est.argmax_ball == Ball(0.0, 1.0)
    assert est.one_sided == "lower bound"
    assert est.balls_examined == len(enumerate_balls(FAM, S))


def test_norm_over_explicit_balls_and_empty_family():
    est = morrey_norm(_chi(), ONE, MorreyParams(1, 0.5, 0), [Ball(0.0, 0.25), Ball(0.0, 4.0)])
    assert est.value == pytest.approx(max(0.5 / 0.5, 2 / 2))
    with pytest.raises(ValueError):
        morrey_norm(_chi(), ONE, MorreyParams(1, 0.5, 0), [])


@given(c=st.floats(0.01, 100), p=st.sampled_from([1.0, 2.0, 3.5]), l1=st.floats(0, 0.9))
@settings(max_examples=20)
def test_homogeneity(c, p, l1):
    f = build_witness(Tent(0.5, 1.0), GridSpec(1, 8, 512))
    params = MorreyParams(p, l1, 0.0)
    fam = BallFamily(Strategy.ALL, levels=6)
    w = PowerWeight(0.5)
    assert morrey_norm(f * c, w, params, fam).value == pytest.approx(c * morrey_norm(f, w, params, fam).value,
                                                                      rel=1e-12)


def test_normalizations_differ_by_exact_factor_per_ball():
    params = MorreyParams(2, 0.6, 0.2, 2)
    s = GridSpec(2, 4, 64)
    f = build_witness(Tent((0.5, 0.0), 1.0), s)
    w = PowerWeight(0.5, 2)
    factor = math.pi ** (params.lambda1 / (2 * params.p))
    for b in enumerate_balls(BallFamily(Strategy.ALL, levels=4), s)[:40]:
        r_val = ball_functional(f, w, params, b, "r")
        m_val = ball_functional(f, w, params, b, "measure")
        if r_val > 0:
            assert r_val / m_val == pytest.approx(factor, rel=1e-12)


def test_normalizer_rejects_unknown_flag():
    with pytest.raises(ValueError):
        normalizer(ONE, MorreyParams(2, 0, 0), Ball(0.0, 1.0), "cube")


def test_singular_cell_divergence_propagates():
    f = build_witness(SingularPower(), S)
    est = morrey_norm(f, ONE, MorreyParams(2, 0.5, 0), FAM)
    assert est.divergent and est.argmax_ball.center == (0.0,)


def test_triviality_is_reported_alongside_the_estimate():
    est = morrey_norm(_chi(), PowerWeight(0.5), MorreyParams(2, -0.5, 0.25), FAM)
    assert est.triviality.verdict == "trivial-space"
    assert est.value > 0


def test_weak_norm_examples():
    params = MorreyParams(1, 0.5, 0)
    assert weak_morrey_norm(_chi(), ONE, params, FAM, normalization="r").value == pytest.approx(2.0)
    assert weak_morrey_norm(_chi(), ONE, params, FAM).value == pytest.approx(2.0 / math.sqrt(2))
    assert weak_morrey_norm(_chi(), ONE, params, FAM, levels=[0.5]).value == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(ValueError):
        weak_morrey_norm(_chi(), ONE, params, FAM, levels=[])


@pytest.mark.parametrize("kind", [CharBall(0.0, 1.0), OffsetBump(), Tent(0.3, 2.0), RadialPower(-0.3),
                                  RadialPower(0.7, 2.0)])
@pytest.mark.parametrize("beta", [0.0, -0.5, 1.0])
def test_weak_is_below_strong(kind, beta):
    f = build_witness(kind, GridSpec(1, 8, 1024))
    params = MorreyParams(2, 0.3, 0.2)
    w = PowerWeight(beta)
    for norm in ("r", "measure"):
        strong = morrey_norm(f, w, params, FAM, normalization=norm).value
        weak = weak_morrey_norm(f, w, params, FAM, normalization=norm).value
        assert weak <= strong * (1 + 1e-12)


def test_two_weight_examples():
    params = MorreyParams(2, 0.5, 0.25)
    w = PowerWeight(0.5)
    f = build_witness(Tent(0.5, 1.0), S)
    fam = BallFamily(Strategy.ALL, levels=8)
    u = lambda b: b.radius**params.lambda1 * w.mass(b) ** params.lambda2
    assert two_weight_norm(f, u, w, 2, fam).value == pytest.approx(morrey_norm(f, w, params, fam).value,
                                                                  rel=1e-12)
    plain = two_weight_norm(_chi(), lambda b: 1.0, ONE, 1, [Ball(0.0, 4.0)]).value
    assert plain == pytest.approx(2.0)
    avg = two_weight_norm(_chi(), lambda b: b.measure, ONE, 1, [Ball(0.0, 0.5), Ball(0.0, 2.0)]).value
    assert avg == pytest.approx(1.0)
    with pytest.raises(ValueError):
        two_weight_norm(_chi(), lambda b: 0.0, ONE, 1, [Ball(0.0, 1.0)])


def test_dilation_law_on_scale_closed_family():
    s = GridSpec(1, 16, 4096)
    params, beta = MorreyParams(2, 0.25, 0.5), 0.5
    w = PowerWeight(beta)
    fam = BallFamily(Strategy.TYPE_I_II, levels=14)
    f = build_witness(CharBall(0.0, 1.0), s)
    pred = (params.lambda1 + params.lambda2 * (1 + beta) - (1 + beta)) / params.p
    a = morrey_norm(f, w, params, fam).value
    b = morrey_norm(dilate(f, 2.0), w, params, fam).value
    assert math.log2(b / a) == pytest.approx(pred, rel=0.03)


def test_embedding_holds_with_constant_one():
    params = MorreyParams(2, 0.25, 0.25)
    w = PowerWeight(0.5)
    q, sexp = 4.0, 1.5
    for kind in (CharBall(0.0, 1.0), Tent(0.5, 1.0), RadialPower(-0.2)):
        f = build_witness(kind, S)
        lhs = morrey_norm(f, w, params, FAM, normalization="measure").value
        assert lhs <= lebesgue_norm(f, weight_power(w, sexp), q) * 1.02


def test_lebesgue_norm_examples():
    assert lebesgue_norm(_chi(), ONE, 2) == pytest.approx(math.sqrt(2))
    assert lebesgue_norm(_chi(), PowerWeight(1.0), 1) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        lebesgue_norm(_chi(), ONE, 0.5)


def test_quasi_monotone_normalizer():
    params, beta = MorreyParams(2, -0.25, 0.5), 1.0
    w = PowerWeight(beta)
    worst = 0.0
    for x in (0.0, 0.3, 1.0, 5.0):
        radii = np.geomspace(1e-3, 50, 60)
        vals = [normalizer(w, params, Ball(x, r)) for r in radii]
        for i in range(len(radii)):
            for j in range(i + 1, len(radii)):
                worst = max(worst, vals[i] / vals[j])
    assert worst < 10
