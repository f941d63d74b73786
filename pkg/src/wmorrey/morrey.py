"""Strong, weak and two-weight Morrey functionals over finite ball families.

Every estimate is a supremum over the balls actually examined, hence a lower
bound for the norm over all balls.  A single divergent ball integral makes
the estimate ``inf`` and the offending ball is kept as the argmax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .discretize import (BallIntegrator, GridFunction, GridWeight, IndicatorTag, PowerTag,
                         _tag_mass, cell_weight_masses)
from .geometry import Ball, BallFamily, enumerate_balls
from .params import MorreyParams
from .ranges import RangeVerdict, space_is_trivial
from .weights import INF, RadialPowerWeight, Weight, radial_power_mass

NORMALIZATIONS = ("r", "measure")


@dataclass(frozen=True)
class NormEstimate:
    value: float
    argmax_ball: Ball | None
    balls_examined: int
    strategy: str
    one_sided: str = "lower bound"
    triviality: RangeVerdict | None = None

    @property
    def divergent(self) -> bool:
        return self.value == INF

    def __float__(self) -> float:
        return float(self.value)


def _balls(family, f: GridFunction) -> tuple[list[Ball], str]:
    if isinstance(family, BallFamily):
        return enumerate_balls(family, f.spec), family.describe()
    balls = list(family)
    if not balls:
        raise ValueError("ball family is empty")
    return balls, f"explicit({len(balls)})"


def _screen(w: Weight, params: MorreyParams) -> RangeVerdict | None:
    e = w.exponent
    if e is None or not e > -params.n:
        return None
    return space_is_trivial(params, e)


def normalizer(w: Weight, params: MorreyParams, ball: Ball, normalization: str = "r") -> float:
    """``N(B) w(B)^{l2/n}`` with ``N(B) = r^{l1}`` or ``|B|^{l1/n}``."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    wb = w.mass(ball)
    if not wb > 0:
        raise ValueError(f"w({ball}) = {wb}: the weight must be positive on every ball")
    n = params.n
    size = ball.radius ** params.lambda1 if normalization == "r" else ball.measure ** (params.lambda1 / n)
    return size * wb ** (params.lambda2 / n)


def _root(integral: float, norm: float, p: float) -> float:
    if integral == INF:
        return INF
    if integral <= 0:
        return 0.0
    return (integral / norm) ** (1 / p)


def ball_functional(f: GridFunction, w: Weight, params: MorreyParams, ball: Ball,
                    normalization: str = "r", integrator: BallIntegrator | None = None) -> float:
    """``(int_B |f|^p w / (N(B) w(B)^{l2/n}))^{1/p}``."""
    integ = integrator or BallIntegrator(f, w, params.p)
    return _root(integ(ball), normalizer(w, params, ball, normalization), params.p)


def _argmax(values: Iterable[tuple[float, Ball]], strategy: str, count: int,
            triv: RangeVerdict | None) -> NormEstimate:
    best, arg = -1.0, None
    for val, b in values:
        if val > best:
            best, arg = val, b
            if val == INF:
                break
    return NormEstimate(max(best, 0.0), arg, count, strategy, triviality=triv)


def morrey_norm(f: GridFunction, w: Weight, params: MorreyParams, family,
                normalization: str = "r") -> NormEstimate:
    """Maximum of :func:`ball_functional` over ``family`` (a :class:`BallFamily` or balls)."""
    balls, desc = _balls(family, f)
    integ = BallIntegrator(f, w, params.p)
    vals = ((ball_functional(f, w, params, b, normalization, integ), b) for b in balls)
    return _argmax(vals, desc, len(balls), _screen(w, params))


# -- weak norms ------------------------------------------------------------


def _grid_level_sup(vals: np.ndarray, masses: np.ndarray, p: float, levels) -> float:
    """``sup_t t^p w({|f| > t} cap B)`` from cell values and cell masses."""
    keep = masses > 0
    vals, masses = vals[keep], masses[keep]
    if vals.size == 0:
        return 0.0
    if levels is None:
        order = np.argsort(-vals, kind="stable")
        v = vals[order]
        if v[0] == INF:
            return INF
        cum = np.cumsum(masses[order])
        if not np.isfinite(cum[-1]):
            return INF
        with np.errstate(over="ignore"):
            return float(np.max(v**p * cum))
    best = 0.0
    for t in levels:
        m = float(np.sum(masses[vals > t]))
        best = max(best, INF if m == INF else t**p * m)
    return best


def _power_tag_candidates(tag: PowerTag, ball: Ball) -> np.ndarray:
    """Superlevel radii worth testing for a radial profile inside ``ball``."""
    d, r = ball.center_norm, ball.radius
    count = 48 if ball.n == 1 else 12
    lo = max(d - r, 0.0)
    hi = min(d + r, tag.radius)
    if hi <= 0:
        return np.empty(0)
    lo_eff = max(lo, hi * 2.0**-40)
    pts = np.geomspace(lo_eff, hi, count) if lo == 0 else np.linspace(lo_eff, hi, count)
    return np.unique(np.concatenate([pts, [hi, lo_eff]]))


def _power_tag_sup(tag: PowerTag, e: float, ball: Ball, p: float, levels) -> float:
    """Exact superlevel masses for ``coef |y|^gamma chi_{B(0, rho)}``."""
    coef, g, rho = abs(tag.coef), tag.gamma, tag.radius
    if coef == 0:
        return 0.0
    full = radial_power_mass(ball, e, support=rho)

    def mass_at(s: float) -> float:
        # w({|f| > coef s^g} cap B)
        if g < 0:
            return radial_power_mass(ball, e, support=min(s, rho))
        return full - radial_power_mass(ball, e, support=min(s, rho))

    if g == 0:
        if levels is None:
            return coef**p * full
        return max((t**p * full for t in levels if t < coef), default=0.0)
    if levels is not None:
        best = 0.0
        for t in levels:
            if t <= 0:
                continue
            s = (t / coef) ** (1 / g)
            if g < 0 and s >= rho:
                m = full
            elif g > 0 and s >= rho:
                m = 0.0
            else:
                m = mass_at(s)
            best = max(best, INF if m == INF else t**p * m)
        return best
    best = 0.0
    for s in _power_tag_candidates(tag, ball):
        t = coef * s**g
        # limit from below: for g < 0, {|f| >= t} = B(0, s); for g > 0, {|f| >= t} = {|y| >= s}
        m = mass_at(s)
        if m == INF:
            return INF
        best = max(best, t**p * m)
    return best


def _weak_ball(integ: BallIntegrator, f: GridFunction, w: Weight, ball: Ball, p: float, levels) -> float:
    tag = f.tag
    if tag is not None and w.exponent is not None:
        e = w.exponent
        if isinstance(tag, PowerTag):
            return _power_tag_sup(tag, e, ball, p, levels)
        mass = _tag_mass(IndicatorTag(tag.center, tag.radius, 1.0), e, ball)
        if mass is not None:
            v = abs(tag.value)
            if levels is None:
                return v**p * mass if mass > 0 else 0.0
            return max((t**p * mass for t in levels if t < v), default=0.0)
    vals, masses = integ.cell_masses_in(ball)
    return _grid_level_sup(vals, masses, p, levels)


def weak_morrey_norm(f: GridFunction, w: Weight, params: MorreyParams, family,
                     levels: Sequence[float] | None = None,
                     normalization: str = "measure") -> NormEstimate:
    """``sup_{B, t} (t^p w({|f| > t} cap B) / (N(B) w(B)^{l2/n}))^{1/p}``.

    Without explicit ``levels`` the supremum in ``t`` is taken exactly, as
    the limit from below at every value of ``|f|``.
    """
    if levels is not None:
        levels = [float(t) for t in levels]
        if not levels or min(levels) <= 0:
            raise ValueError("levels must be a nonempty sequence of positive numbers")
    balls, desc = _balls(family, f)
    integ = BallIntegrator(f, w, params.p)
    p = params.p

    def gen():
        for b in balls:
            yield _root(_weak_ball(integ, f, w, b, p, levels), normalizer(w, params, b, normalization), p), b

    return _argmax(gen(), desc, len(balls), _screen(w, params))


# -- two-weight and Lebesgue norms -----------------------------------------


def two_weight_norm(f: GridFunction, u: Callable[[Ball], float], w: Weight, p: float,
                    family) -> NormEstimate:
    """``sup_B (u(B)^{-1} int_B |f|^p w)^{1/p}``."""
    balls, desc = _balls(family, f)
    integ = BallIntegrator(f, w, p)

    def gen():
        for b in balls:
            ub = float(u(b))
            if not ub > 0:
                raise ValueError(f"u({b}) = {ub} must be positive")
            yield _root(integ(b), ub, p), b

    return _argmax(gen(), desc, len(balls), None)


def weight_power(w: Weight, s: float) -> Weight:
    """The weight ``w^s``."""
    if w.exponent is not None:
        return RadialPowerWeight(w.exponent * s, w.n)
    if isinstance(w, GridWeight):
        return GridWeight(GridFunction(w.spec, w.f.values**s))
    raise TypeError(f"cannot raise {type(w).__name__} to a power")


def lebesgue_norm(f: GridFunction, w: Weight, q: float) -> float:
    """``(int |f|^q w)^{1/q}`` over the whole domain (all of R^n for tagged data)."""
    if q < 1 and q != INF:
        raise ValueError("q must be >= 1")
    if f.tag is not None and w.exponent is not None:
        tag = f.tag
        ext = tag.extent
        center = (0.0,) * f.n
        val = _tag_mass(tag.abs_pow(q), w.exponent, Ball(center, ext * (1 + 1e-12)))
        if val is not None:
            return _root(val, 1.0, q)
    with np.errstate(over="ignore", invalid="ignore"):
        g = np.abs(f.values) ** q
        cm = cell_weight_masses(f.spec, w)
        contrib = np.where((cm > 0) & (g > 0), g * cm, 0.0)
    total = float(np.sum(contrib))
    return _root(total if math.isfinite(total) else INF, 1.0, q)
