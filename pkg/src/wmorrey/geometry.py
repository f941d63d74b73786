"""Balls, the type I/II/III classification and deterministic ball families.

Every supremum in this package is taken over a finite family, so a
computed norm is a lower bound of the true one.  The families here follow
a dyadic radial lattice: centers at ``|x| = R * base**-k`` and radii tied
to ``|x|`` so that the extremal type II shape ``r = |x|/4`` is always
present.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

_TOL = 1e-12


class BallType(str, Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class Ball:
    """Euclidean ball ``B(center, radius)`` in R^n, n = len(center)."""

    center: tuple[float, ...]
    radius: float

    def __post_init__(self) -> None:
        c = tuple(float(v) for v in np.atleast_1d(self.center))
        object.__setattr__(self, "center", c)
        if not self.radius > 0:
            raise ValueError(f"ball radius must be positive, got {self.radius}")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def center_norm(self) -> float:
        return math.hypot(*self.center) if self.n > 1 else abs(self.center[0])

    @property
    def measure(self) -> float:
        return ball_volume(self.n, self.radius)

    def dilate(self, factor: float) -> "Ball":
        """Image of the ball under ``x -> factor * x``."""
        return Ball(tuple(factor * c for c in self.center), factor * self.radius)

    def contains_ball(self, other: "Ball") -> bool:
        d = math.dist(self.center, other.center)
        return d + other.radius <= self.radius * (1 + _TOL)


@dataclass(frozen=True)
class Annulus:
    """``B(center, outer) minus B(center, inner)``; used as a subset E of a ball."""

    center: tuple[float, ...]
    inner: float
    outer: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", tuple(float(v) for v in np.atleast_1d(self.center)))
        if not 0 <= self.inner < self.outer:
            raise ValueError("annulus needs 0 <= inner < outer")

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def measure(self) -> float:
        return ball_volume(self.n, self.outer) - ball_volume(self.n, self.inner)

    @property
    def outer_ball(self) -> Ball:
        return Ball(self.center, self.outer)


def ball_volume(n: int, r: float) -> float:
    """Lebesgue measure of a ball of radius r in R^n."""
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1) * r**n


def classify(ball: Ball) -> BallType:
    x = ball.center_norm
    if x == 0.0:
        return BallType.I
    if ball.radius <= x / 4 * (1 + _TOL):
        return BallType.II
    return BallType.III


class Strategy(str, Enum):
    ALL = "All"
    TYPE_I_II = "TypeI_II"
    TYPE_II_ONLY = "TypeII_only"


@dataclass(frozen=True)
class BallFamily:
    """Deterministic radial lattice of balls.

    centers: ``|x| = R * base**-k`` for ``k = 1..levels`` (8 angles in 2D,
    both signs in 1D); type II radii ``|x|/4 * base**-j`` for
    ``j = 0..type2_depth``; type III radii ``|x| * c`` for ``c`` in
    ``type3_factors`` (only kept while the ball stays inside the domain);
    type I radii ``R * base**-k`` for ``k = 0..levels``.
    """

    strategy: Strategy = Strategy.ALL
    base: float = 2.0
    levels: int = 20
    type2_depth: int = 2
    type3_factors: tuple[float, ...] = (0.5, 1.0)
    angles: int = 8

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.base <= 1 or self.levels < 1 or self.type2_depth < 0 or self.angles < 1:
            raise ValueError("lattice parameters must be positive (base > 1)")

    def describe(self) -> str:
        return (f"{self.strategy.value}(base={self.base:g}, K={self.levels}, "
                f"J={self.type2_depth}, angles={self.angles})")


def _directions(n: int, angles: int) -> list[tuple[float, ...]]:
    if n == 1:
        return [(1.0,), (-1.0,)]
    out = []
    for a in range(angles):
        t = 2 * math.pi * a / angles
        out.append((math.cos(t), math.sin(t)))
    return out


def enumerate_balls(family: BallFamily, spec) -> list[Ball]:
    """Enumerate the family on the domain ``[-R, R]^n`` of ``spec``.

    ``spec`` only needs ``n`` and ``R`` attributes.
    """
    n, R = spec.n, spec.R
    balls: list[Ball] = []
    origin = (0.0,) * n
    if family.strategy is not Strategy.TYPE_II_ONLY:
        for k in range(family.levels + 1):
            balls.append(Ball(origin, R * family.base**-k))
    dirs = _directions(n, family.angles)
    for k in range(1, family.levels + 1):
        rho = R * family.base**-k
        for d in dirs:
            c = tuple(rho * v for v in d)
            for j in range(family.type2_depth + 1):
                balls.append(Ball(c, rho / 4 * family.base**-j))
            if family.strategy is Strategy.ALL:
                for fac in family.type3_factors:
                    r = rho * fac
                    if r > rho / 4 and rho + r <= R * (1 + _TOL):
                        balls.append(Ball(c, r))
    return balls


def iter_type2_extremal(n: int, k_range: Sequence[int], angles: int = 8) -> Iterator[tuple[int, list[Ball]]]:
    """Yield ``(k, balls)`` with the balls ``B(x, |x|/4)``, ``|x| = 2**-k``."""
    for k in k_range:
        rho = 2.0**-k
        yield k, [Ball(tuple(rho * v for v in d), rho / 4) for d in _directions(n, angles)]


def reduction_admissible(params, w) -> bool:
    """Whether the supremum may be restricted to type II balls.

    Uses the power form ``l1 + l2 (1 + beta/n) > 0`` when ``w`` is a radial
    power, the ``sigma_w`` form otherwise.
    """
    from .ranges import TOL, reduction_condition

    beta = getattr(w, "exponent", None)
    if beta is not None:
        return reduction_condition(params, beta=beta) > TOL
    meta = w.meta() if hasattr(w, "meta") else None
    if meta is None:
        raise ValueError("weight carries neither a power exponent nor sigma_w metadata")
    return reduction_condition(params, sigma_w=meta.sigma_w) > TOL
