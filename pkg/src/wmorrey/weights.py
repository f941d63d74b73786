"""Power weights, ``|x|^alpha`` shifts, and Muckenhoupt / reverse Holder estimators.

Power weights are integrated in closed form (1D intervals) or through a
one-dimensional radial integral (2D discs), so the singularity at the
origin is never smeared by quadrature.  Estimators return ``inf`` as a
verdict for divergent quantities instead of raising; sweeps must run past
divergent cells.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import integrate

from .geometry import Annulus, Ball, BallFamily, enumerate_balls

INF = math.inf
_DEFAULT_AP_PROBES = (1.0, 1.5, 2.0, 3.0, 4.0)


# -- closed-form radial integrals ------------------------------------------


def _abs_power_antiderivative(t, e: float):
    """Antiderivative of ``|t|^e`` vanishing at 0; requires ``e > -1``."""
    t = np.asarray(t, dtype=float)
    return np.sign(t) * np.abs(t) ** (e + 1) / (e + 1)


def power_interval_mass(a: float, b: float, e: float) -> float:
    """``int_a^b |t|^e dt`` for ``a <= b``; ``inf`` when divergent at 0."""
    if b <= a:
        return 0.0
    if e > -1:
        return float(_abs_power_antiderivative(b, e) - _abs_power_antiderivative(a, e))
    if a <= 0.0 <= b:
        return INF
    lo, hi = (a, b) if a > 0 else (-b, -a)
    if e == -1:
        return math.log(hi / lo)
    try:
        return (hi ** (e + 1) - lo ** (e + 1)) / (e + 1)
    except OverflowError:
        # lo is so close to 0 that the mass exceeds the float range
        return INF


def power_interval_masses(lo, hi, e: float) -> np.ndarray:
    """Vectorized :func:`power_interval_mass` over interval arrays."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    valid = hi > lo
    out = np.zeros(np.broadcast(lo, hi).shape)
    if e > -1:
        out = _abs_power_antiderivative(hi, e) - _abs_power_antiderivative(lo, e)
        return np.where(valid, out, 0.0)
    touching = valid & (lo <= 0) & (hi >= 0)
    a = np.minimum(np.abs(lo), np.abs(hi))
    b = np.maximum(np.abs(lo), np.abs(hi))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        side = np.log(b / a) if e == -1 else (b ** (e + 1) - a ** (e + 1)) / (e + 1)
    out = np.where(valid, side, 0.0)
    return np.where(touching, INF, out)


def _disc_power_mass(center: Sequence[float], r: float, e: float, support: float) -> float:
    """``int`` of ``|y|^e`` over ``B(center, r) cap B(0, support)`` in R^2."""
    d = math.hypot(*center)
    if d <= r and e <= -2:
        return INF
    full_hi = min(max(r - d, 0.0), support)
    total = 2 * math.pi * full_hi ** (e + 2) / (e + 2) if full_hi > 0 else 0.0
    if d == 0.0:
        return total
    lo = max(abs(d - r), full_hi)
    hi = min(d + r, support)
    if hi <= lo:
        return total

    def integrand(s: float) -> float:
        c = (s * s + d * d - r * r) / (2 * s * d)
        return s ** (e + 1) * 2 * math.acos(min(1.0, max(-1.0, c)))

    val, _ = integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=1e-11, limit=200)
    return total + val


def radial_power_mass(region, e: float, support: float = INF) -> float:
    """``int`` of ``|y|^e`` over ``region cap B(0, support)``.

    ``region`` is a :class:`Ball` or an :class:`Annulus`.
    """
    if isinstance(region, Annulus):
        if all(c == 0.0 for c in region.center):
            return _origin_shell_mass(region.n, region.inner, min(region.outer, support), e)
        outer = radial_power_mass(region.outer_ball, e, support)
        if region.inner == 0.0:
            return outer
        inner = radial_power_mass(Ball(region.center, region.inner), e, support)
        return outer - inner
    if region.n == 1:
        c, r = region.center[0], region.radius
        a, b = max(c - r, -support), min(c + r, support)
        return power_interval_mass(a, b, e)
    return _disc_power_mass(region.center, region.radius, e, support)


def _origin_shell_mass(n: int, r0: float, r1: float, e: float) -> float:
    if r1 <= r0:
        return 0.0
    if n == 1:
        return 2 * power_interval_mass(r0, r1, e)
    if r0 == 0.0 and e <= -2:
        return INF
    if e == -2:
        return 2 * math.pi * math.log(r1 / r0)
    return 2 * math.pi * (r1 ** (e + 2) - r0 ** (e + 2)) / (e + 2)


def _radial_inf(region: Ball, e: float) -> float:
    """Infimum of ``|y|^e`` over the closed ball."""
    d, r = region.center_norm, region.radius
    if e == 0:
        return 1.0
    if e < 0:
        return (d + r) ** e
    return 0.0 if d <= r else (d - r) ** e


# -- weight types ----------------------------------------------------------


@dataclass(frozen=True)
class WeightMeta:
    """Analytic facts about a weight.

    ``ap_class`` maps probed exponents p to membership in A_p; ``sigma_w`` is
    the supremal reverse Holder exponent; ``theta`` the exponent in
    ``w(B(0,r))/w(B(0,R)) <= c (r/R)^(n theta)``.
    """

    ap_class: dict
    sigma_w: float
    theta: float


class Weight(ABC):
    """Nonnegative locally integrable function on R^n."""

    n: int

    @property
    def exponent(self) -> float | None:
        """Radial power exponent when the weight is ``|x|^e``, else ``None``."""
        return None

    @abstractmethod
    def __call__(self, y) -> np.ndarray: ...

    @abstractmethod
    def power_mass(self, region, q: float = 1.0) -> float:
        """``int_region w^q``."""

    def mass(self, region) -> float:
        return self.power_mass(region, 1.0)

    @abstractmethod
    def essinf(self, ball: Ball, grid=None) -> float: ...

    def meta(self) -> WeightMeta | None:
        return None


class _RadialPower(Weight):
    """Shared machinery for weights equal to ``|x|^exponent``."""

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        r = np.abs(y) if self.n == 1 else np.hypot(y[..., 0], y[..., 1])
        with np.errstate(divide="ignore"):
            return r ** self.exponent

    def power_mass(self, region, q: float = 1.0) -> float:
        return radial_power_mass(region, self.exponent * q)

    def antiderivative_1d(self, t):
        return _abs_power_antiderivative(t, self.exponent)

    def essinf(self, ball: Ball, grid=None) -> float:
        val = _radial_inf(ball, self.exponent)
        if grid is not None:
            pts = grid.midpoints_in_ball(ball)
            if len(pts):
                val = min(val, float(np.min(self(pts))))
        return val

    def meta(self) -> WeightMeta:
        e = self.exponent
        return WeightMeta(
            ap_class={p: ap_membership_power(e, p, self.n) for p in _DEFAULT_AP_PROBES},
            sigma_w=sigma_w_power(e, self.n),
            theta=theta_power(e, self.n),
        )


@dataclass(frozen=True)
class PowerWeight(_RadialPower):
    """``w(y) = |y|^beta`` with ``beta > -n``."""

    beta: float
    n: int = 1

    def __post_init__(self) -> None:
        if self.n not in (1, 2):
            raise ValueError("dimension must be 1 or 2")
        if not self.beta > -self.n:
            raise ValueError(f"power weight needs beta > -n (beta={self.beta}, n={self.n})")

    @property
    def exponent(self) -> float:
        return float(self.beta)


@dataclass(frozen=True)
class RadialPowerWeight(_RadialPower):
    """``|y|^e`` without the local integrability check (used for ``w^s``)."""

    e: float
    n: int = 1

    @property
    def exponent(self) -> float:
        return float(self.e)


def constant_weight(n: int = 1) -> PowerWeight:
    return PowerWeight(0.0, n)


@dataclass(frozen=True)
class ShiftedPowerWeight(_RadialPower):
    """``|y|^alpha * base(y)`` with ``alpha >= 0`` and a power (or constant) base."""

    alpha: float
    base: PowerWeight = field(default_factory=constant_weight)

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def exponent(self) -> float:
        return float(self.alpha + self.base.beta)


# -- analytic predicates ---------------------------------------------------


def ap_membership_power(beta: float, p: float, n: int) -> bool:
    """Whether ``|x|^beta`` belongs to A_p."""
    if p < 1:
        raise ValueError(f"A_p needs p >= 1, got {p}")
    if p == 1:
        return -n < beta <= 0
    return -n < beta < n * (p - 1)


def sigma_w_power(beta: float, n: int) -> float:
    """``sup{sigma : |x|^beta in RH_sigma}``: ``inf`` for beta >= 0, ``-n/beta`` otherwise."""
    if beta <= -n:
        raise ValueError(f"beta must exceed -n (beta={beta}, n={n})")
    return INF if beta >= 0 else -n / beta


def theta_power(beta: float, n: int) -> float:
    if beta <= -n:
        raise ValueError(f"beta must exceed -n (beta={beta}, n={n})")
    return 1 + beta / n


def conjugate(s: float) -> float:
    """Holder conjugate ``s' = s/(s-1)``, with ``inf' = 1`` and ``1' = inf``."""
    if s == INF:
        return 1.0
    if s == 1:
        return INF
    return s / (s - 1)


# -- numerical estimators (lower bounds over a finite family) --------------


def _resolve_balls(balls, grid) -> list:
    if isinstance(balls, BallFamily):
        if grid is None:
            raise ValueError("a BallFamily needs a grid spec to enumerate")
        balls = enumerate_balls(balls, grid)
    balls = list(balls)
    if not balls:
        raise ValueError("ball family is empty")
    return balls


def _safe(fn):
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        try:
            v = fn()
        except (OverflowError, ZeroDivisionError):
            return INF
    return INF if (v != v) else v


def ap_constant_estimate(w: Weight, p: float, balls, grid=None) -> float:
    """``max_B (w(B)/|B|) (w^{1-p'}(B)/|B|)^{p-1}`` over the family."""
    if p <= 1:
        raise ValueError("use a1_constant_estimate for p = 1")
    q = 1 - conjugate(p)
    best = 0.0
    for b in _resolve_balls(balls, grid):
        vol = b.measure
        val = _safe(lambda: (w.mass(b) / vol) * (w.power_mass(b, q) / vol) ** (p - 1))
        best = max(best, val)
    return best


def a1_constant_estimate(w: Weight, balls, grid=None) -> float:
    """``max_B (w(B)/|B|) / essinf_B w`` over the family."""
    best = 0.0
    for b in _resolve_balls(balls, grid):
        lo = w.essinf(b, grid)
        avg = w.mass(b) / b.measure
        best = max(best, INF if lo <= 0 else _safe(lambda: avg / lo))
    return best


def rh_check(w: Weight, sigma: float, balls, grid=None) -> float:
    """``max_B (avg_B w^sigma)^{1/sigma} / avg_B w`` over the family."""
    if sigma <= 1:
        raise ValueError("reverse Holder exponent must exceed 1")
    best = 0.0
    for b in _resolve_balls(balls, grid):
        vol = b.measure
        val = _safe(lambda: (w.power_mass(b, sigma) / vol) ** (1 / sigma) / (w.mass(b) / vol))
        best = max(best, val)
    return best


def _inside(e, b: Ball) -> bool:
    if isinstance(e, Annulus):
        return b.contains_ball(e.outer_ball)
    return b.contains_ball(e)


def measure_comparison_defect(w: Weight, sigma: float, pairs: Iterable, grid=None) -> float:
    """``max [w(E)/w(B)] / (|E|/|B|)^{1/sigma'}`` over ``(E, B)`` pairs."""
    exp = 1 / conjugate(sigma)
    best = 0.0
    for e, b in pairs:
        if not _inside(e, b):
            raise ValueError(f"{e} is not contained in {b}")
        val = _safe(lambda: (w.mass(e) / w.mass(b)) / (e.measure / b.measure) ** exp)
        best = max(best, val)
    return best
