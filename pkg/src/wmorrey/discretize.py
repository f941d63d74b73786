"""Grid functions on ``[-R, R]^n`` (n = 1, 2), weighted ball integrals, witnesses.

A :class:`GridFunction` stores midpoint samples.  When it was built from
a closed-form radial profile it also carries a tag, and integrals against
power weights then go through the exact radial formulas of
:mod:`wmorrey.weights`.  Cells whose closure contains the origin of a
singular profile store the cell average instead of the midpoint sample;
for a non-integrable profile that average is ``+inf``.
"""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np
from scipy import integrate as _quad
from scipy.ndimage import map_coordinates

from .geometry import Annulus, Ball
from .params import MorreyParams
from .weights import (INF, PowerWeight, Weight, power_interval_mass, power_interval_masses,
                      radial_power_mass)


class DomainTruncationWarning(UserWarning):
    """A ball leaves the grid domain by more than one cell."""


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid of ``m`` cells per axis on ``[-R, R]^n``."""

    n: int = 1
    R: float = 16.0
    m: int = 4096

    def __post_init__(self) -> None:
        if self.n not in (1, 2):
            raise ValueError("only n = 1 and n = 2 are supported")
        if self.m < 16 or self.m & (self.m - 1):
            raise ValueError(f"m must be a power of two >= 16, got {self.m}")
        if not self.R > 0:
            raise ValueError("R must be positive")

    @classmethod
    def default(cls, n: int = 1) -> "GridSpec":
        return cls(n=n, R=16.0, m=2**12 if n == 1 else 2**9)

    @property
    def h(self) -> float:
        return 2 * self.R / self.m

    @property
    def cell_volume(self) -> float:
        return self.h**self.n

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.m,) * self.n

    @property
    def edges(self) -> np.ndarray:
        return -self.R + self.h * np.arange(self.m + 1)

    @property
    def axis(self) -> np.ndarray:
        return -self.R + self.h * (np.arange(self.m) + 0.5)

    def midpoints(self) -> np.ndarray:
        """Shape ``(m,)`` in 1D, ``(m, m, 2)`` in 2D (``[..., 0]`` is x)."""
        ax = self.axis
        if self.n == 1:
            return ax
        X, Y = np.meshgrid(ax, ax, indexing="ij")
        return np.stack([X, Y], axis=-1)

    def refine(self, factor: int = 2) -> "GridSpec":
        return GridSpec(self.n, self.R, self.m * factor)

    def enlarge(self, factor: int = 2) -> "GridSpec":
        """Same cell size on a domain ``factor`` times wider."""
        return GridSpec(self.n, self.R * factor, self.m * factor)

    def cell_index(self, x: float) -> int:
        return int(min(max(math.floor((x + self.R) / self.h), 0), self.m - 1))

    def _box(self, ball: Ball) -> tuple[slice, ...]:
        sl = []
        for c in ball.center:
            lo = self.cell_index(c - ball.radius)
            hi = self.cell_index(c + ball.radius)
            sl.append(slice(lo, hi + 1))
        return tuple(sl)

    def ball_mask(self, ball: Ball) -> tuple[tuple[slice, ...], np.ndarray]:
        """Bounding-box slices and the mask of midpoints in the closed ball."""
        box = self._box(ball)
        ax = self.axis
        if self.n == 1:
            x = ax[box[0]]
            return box, np.abs(x - ball.center[0]) <= ball.radius * (1 + 1e-12)
        x = ax[box[0]][:, None] - ball.center[0]
        y = ax[box[1]][None, :] - ball.center[1]
        return box, x * x + y * y <= (ball.radius * (1 + 1e-12)) ** 2

    def midpoints_in_ball(self, ball: Ball) -> np.ndarray:
        box, mask = self.ball_mask(ball)
        pts = self.midpoints()[box]
        return pts[mask]

    def escapes(self, ball: Ball) -> bool:
        return any(abs(c) + ball.radius > self.R + self.h for c in ball.center)


# -- closed-form profiles --------------------------------------------------


@dataclass(frozen=True)
class IndicatorTag:
    """``value * chi_{B(center, radius)}``."""

    center: tuple[float, ...]
    radius: float
    value: float = 1.0

    def evaluate(self, pts: np.ndarray, n: int) -> np.ndarray:
        d = _dist(pts, self.center, n)
        return np.where(d < self.radius, self.value, 0.0)

    def abs_pow(self, p: float) -> "IndicatorTag":
        return IndicatorTag(self.center, self.radius, abs(self.value) ** p)

    def scaled(self, c: float) -> "IndicatorTag":
        return IndicatorTag(self.center, self.radius, self.value * c)

    def dilated(self, delta: float) -> "IndicatorTag":
        return IndicatorTag(tuple(v / delta for v in self.center), self.radius / delta, self.value)

    @property
    def extent(self) -> float:
        return math.hypot(*self.center) + self.radius

    @property
    def ball(self) -> Ball:
        return Ball(self.center, self.radius)


@dataclass(frozen=True)
class PowerTag:
    """``coef * |y|^gamma * chi_{B(0, radius)}``."""

    coef: float
    gamma: float
    radius: float

    def evaluate(self, pts: np.ndarray, n: int) -> np.ndarray:
        d = _dist(pts, (0.0,) * n, n)
        with np.errstate(divide="ignore"):
            return np.where(d < self.radius, self.coef * d**self.gamma, 0.0)

    def abs_pow(self, p: float) -> "PowerTag":
        return PowerTag(abs(self.coef) ** p, self.gamma * p, self.radius)

    def scaled(self, c: float) -> "PowerTag":
        return PowerTag(self.coef * c, self.gamma, self.radius)

    def dilated(self, delta: float) -> "PowerTag":
        return PowerTag(self.coef * delta**self.gamma, self.gamma, self.radius / delta)

    @property
    def extent(self) -> float:
        return self.radius


Tag = Union[IndicatorTag, PowerTag]


def _dist(pts, center, n):
    pts = np.asarray(pts, dtype=float)
    if n == 1:
        return np.abs(pts - center[0])
    return np.hypot(pts[..., 0] - center[0], pts[..., 1] - center[1])


def _origin_cell_average(gamma: float, h: float, n: int) -> float:
    """Average of ``|y|^gamma`` over a cell with a corner at the origin."""
    if n == 1:
        return power_interval_mass(0.0, h, gamma) / h
    if gamma <= -2:
        return INF
    val, _ = _quad.quad(lambda phi: (h / math.cos(phi)) ** (gamma + 2) / (gamma + 2),
                        0.0, math.pi / 4, epsrel=1e-12)
    return 2 * val / h**2


# -- grid functions --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Sampled function on a :class:`GridSpec`."""

    spec: GridSpec
    values: np.ndarray
    tag: Tag | None = None
    singular: np.ndarray | None = field(default=None, repr=False)
    name: str = ""

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=float)
        if vals.shape != self.spec.shape:
            raise ValueError(f"values shape {vals.shape} does not match grid {self.spec.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        bad = ~np.isfinite(vals)
        if bad.any():
            flagged = np.zeros_like(bad) if self.singular is None else np.asarray(self.singular, bool)
            if (bad & ~flagged).any() and self.tag is None:
                raise ValueError("non-finite values outside the flagged singular cells")

    @classmethod
    def from_tag(cls, spec: GridSpec, tag: Tag, name: str = "") -> "GridFunction":
        vals = tag.evaluate(spec.midpoints(), spec.n).astype(float)
        singular = None
        if isinstance(tag, PowerTag) and tag.gamma < 0 and tag.radius > spec.h:
            singular = np.zeros(spec.shape, dtype=bool)
            mid = spec.m // 2
            idx = tuple(slice(mid - 1, mid + 1) for _ in range(spec.n))
            singular[idx] = True
            vals[idx] = tag.coef * _origin_cell_average(tag.gamma, spec.h, spec.n)
        return cls(spec, vals, tag, singular, name)

    @classmethod
    def from_callable(cls, spec: GridSpec, fn, name: str = "") -> "GridFunction":
        return cls(spec, np.asarray(fn(spec.midpoints()), dtype=float), None, None, name)

    @classmethod
    def constant(cls, spec: GridSpec, c: float = 1.0) -> "GridFunction":
        return cls(spec, np.full(spec.shape, float(c)), None, None, f"const({c:g})")

    @property
    def n(self) -> int:
        return self.spec.n

    def abs(self) -> "GridFunction":
        tag = self.tag.abs_pow(1.0) if self.tag is not None else None
        return GridFunction(self.spec, np.abs(self.values), tag, self.singular, self.name)

    def abs_pow(self, p: float) -> "GridFunction":
        tag = self.tag.abs_pow(p) if self.tag is not None else None
        with np.errstate(over="ignore"):
            vals = np.abs(self.values) ** p
        return GridFunction(self.spec, vals, tag, self.singular, self.name)

    def __mul__(self, c: float) -> "GridFunction":
        tag = self.tag.scaled(c) if self.tag is not None else None
        return GridFunction(self.spec, self.values * c, tag, self.singular, self.name)

    __rmul__ = __mul__

    def __add__(self, other: "GridFunction") -> "GridFunction":
        if other.spec != self.spec:
            raise ValueError("grid mismatch")
        return GridFunction(self.spec, self.values + other.values, None, _or(self.singular, other.singular))

    def evaluate(self, x) -> float:
        """Point value: the analytic profile when tagged, else the containing cell."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if self.tag is not None:
            pt = x[0] if self.n == 1 else x
            return float(self.tag.evaluate(pt, self.n))
        idx = tuple(self.spec.cell_index(c) for c in x)
        return float(self.values[idx])

    @property
    def support_extent(self) -> float:
        """Largest ``|y|`` in the support (cell-resolution bound for untagged data)."""
        if self.tag is not None:
            return self.tag.extent
        nz = self.values != 0
        if not nz.any():
            return 0.0
        pts = self.spec.midpoints()[nz]
        r = np.abs(pts) if self.n == 1 else np.hypot(pts[:, 0], pts[:, 1])
        return float(r.max() + self.spec.h * math.sqrt(self.n) / 2)

    def to_csv(self, path) -> None:
        path = Path(path)
        cols = ["x", "value"] if self.n == 1 else ["x", "y", "value"]
        with path.open("w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(cols)
            pts = self.spec.midpoints()
            if self.n == 1:
                for x, v in zip(pts, self.values):
                    wr.writerow([repr(float(x)), repr(float(v))])
            else:
                for (x, y), v in zip(pts.reshape(-1, 2), self.values.reshape(-1)):
                    wr.writerow([repr(float(x)), repr(float(y)), repr(float(v))])

    @classmethod
    def from_csv(cls, path) -> "GridFunction":
        with Path(path).open() as fh:
            rows = list(csv.reader(fh))
        header, data = rows[0], np.array(rows[1:], dtype=float)
        n = len(header) - 1
        xs = np.unique(data[:, 0])
        m = len(xs)
        h = xs[1] - xs[0]
        spec = GridSpec(n, float(m * h / 2), m)
        vals = data[:, -1].reshape(spec.shape)
        return cls(spec, vals, None, ~np.isfinite(vals) if not np.isfinite(vals).all() else None)


def _or(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a | b


class GridWeight(Weight):
    """Weight given by the (nonnegative) samples of a grid function."""

    def __init__(self, f: GridFunction) -> None:
        if (f.values < 0).any():
            raise ValueError("weights must be nonnegative")
        self.f = f
        self.n = f.n

    @property
    def spec(self) -> GridSpec:
        return self.f.spec

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        s = self.spec
        idx = np.clip(np.floor((y + s.R) / s.h).astype(int), 0, s.m - 1)
        if self.n == 1:
            return self.f.values[idx]
        return self.f.values[idx[..., 0], idx[..., 1]]

    def antiderivative_1d(self, t):
        s = self.spec
        cum = np.concatenate([[0.0], np.cumsum(self.f.values * s.h)])
        return np.interp(t, s.edges, cum)

    def power_mass(self, region, q: float = 1.0) -> float:
        if isinstance(region, Annulus):
            inner = 0.0 if region.inner == 0 else self.power_mass(Ball(region.center, region.inner), q)
            return self.power_mass(region.outer_ball, q) - inner
        s = self.spec
        vals = self.f.values ** q
        if self.n == 1:
            e = s.edges
            a = region.center[0] - region.radius
            b = region.center[0] + region.radius
            overlap = np.clip(np.minimum(e[1:], b) - np.maximum(e[:-1], a), 0.0, None)
            return float(np.sum(vals * overlap))
        box, mask = s.ball_mask(region)
        return float(np.sum(vals[box][mask]) * s.cell_volume)

    def essinf(self, ball: Ball, grid=None) -> float:
        s = self.spec
        box, mask = s.ball_mask(ball)
        vals = self.f.values[box][mask]
        if vals.size == 0:
            return float(self.f.values[tuple(s.cell_index(c) for c in ball.center)])
        return float(vals.min())


# -- weighted ball integrals -----------------------------------------------


def cell_weight_masses(spec: GridSpec, w: Weight) -> np.ndarray:
    """``w(cell)`` for every cell; exact in 1D and for the origin cells in 2D."""
    if spec.n == 1:
        if w.exponent is not None:
            return power_interval_masses(spec.edges[:-1], spec.edges[1:], w.exponent)
        if isinstance(w, GridWeight):
            return np.diff(w.antiderivative_1d(spec.edges))
        return w(spec.axis) * spec.h
    if isinstance(w, GridWeight):
        return w.f.values * spec.cell_volume
    with np.errstate(divide="ignore"):
        cm = w(spec.midpoints()) * spec.cell_volume
    if w.exponent is not None:
        mid = spec.m // 2
        cm[mid - 1:mid + 1, mid - 1:mid + 1] = (
            _origin_cell_average(w.exponent, spec.h, 2) * spec.cell_volume)
    return cm


def _tag_mass(tag: Tag, e: float, ball: Ball) -> float | None:
    """``int_B tag * |y|^e`` in closed form, or ``None`` if unavailable."""
    if isinstance(tag, PowerTag):
        if tag.coef == 0:
            return 0.0
        return tag.coef * radial_power_mass(ball, tag.gamma + e, support=tag.radius)
    if tag.value == 0:
        return 0.0
    n = len(tag.center)
    if n == 1:
        a = max(ball.center[0] - ball.radius, tag.center[0] - tag.radius)
        b = min(ball.center[0] + ball.radius, tag.center[0] + tag.radius)
        return tag.value * power_interval_mass(a, b, e)
    if all(c == 0 for c in tag.center):
        return tag.value * radial_power_mass(ball, e, support=tag.radius)
    ind = tag.ball
    if ind.contains_ball(ball):
        return tag.value * radial_power_mass(ball, e)
    if ball.contains_ball(ind):
        return tag.value * radial_power_mass(ind, e)
    if math.dist(ball.center, ind.center) >= ball.radius + ind.radius:
        return 0.0
    return None


class BallIntegrator:
    """``B -> int_B |f|^power w`` with shared precomputation across many balls.

    ``mode`` is ``"auto"`` (closed form when ``f`` is tagged and ``w`` is a
    radial power, exact cell overlaps otherwise) or ``"midpoint"`` (pure
    midpoint rule: cells whose midpoint lies in the ball, ``w`` sampled at
    the midpoint).
    """

    def __init__(self, f: GridFunction, w: Weight, power: float = 1.0, mode: str = "auto") -> None:
        if mode not in ("auto", "midpoint"):
            raise ValueError(f"unknown mode {mode!r}")
        self.f, self.w, self.power, self.mode = f, w, power, mode
        self.spec = f.spec
        self.tag = f.tag.abs_pow(power) if (f.tag is not None and mode == "auto") else None
        self.analytic = self.tag is not None and w.exponent is not None
        with np.errstate(over="ignore"):
            self.g = np.abs(f.values) ** power
        self._prepared = False

    def _prepare(self) -> None:
        s = self.spec
        if self.mode == "midpoint":
            with np.errstate(divide="ignore"):
                self.cm = self.w(s.midpoints()) * s.cell_volume
        else:
            self.cm = cell_weight_masses(s, self.w)
        with np.errstate(invalid="ignore"):
            contrib = np.where((self.cm > 0) & (self.g > 0), self.g * self.cm, 0.0)
        self.contrib = contrib
        self._prepared = True

    def _partial(self, a, b):
        """Exact ``w`` mass of the intervals ``[a, b]`` (arrays allowed)."""
        if self.w.exponent is not None:
            return power_interval_masses(a, b, self.w.exponent)
        if isinstance(self.w, GridWeight):
            return np.clip(self.w.antiderivative_1d(b) - self.w.antiderivative_1d(a), 0.0, None)
        mid = 0.5 * (np.asarray(a) + np.asarray(b))
        return self.w(mid) * (np.asarray(b) - np.asarray(a))

    def __call__(self, ball: Ball) -> float:
        if self.analytic:
            val = _tag_mass(self.tag, self.w.exponent, ball)
            if val is not None:
                return val
        if self.spec.escapes(ball):
            warnings.warn(f"{ball} leaves the domain [-{self.spec.R}, {self.spec.R}]^{self.spec.n}",
                          DomainTruncationWarning, stacklevel=2)
        if not self._prepared:
            self._prepare()
        if self.spec.n == 1 and self.mode == "auto":
            return self._interval(ball)
        box, mask = self.spec.ball_mask(ball)
        vals = self.contrib[box][mask]
        return float(np.sum(vals)) if vals.size else 0.0

    def _interval(self, ball: Ball) -> float:
        s = self.spec
        a = max(ball.center[0] - ball.radius, -s.R)
        b = min(ball.center[0] + ball.radius, s.R)
        if b <= a:
            return 0.0
        ia, ib = s.cell_index(a), s.cell_index(b)
        e = s.edges
        if ia == ib:
            return self._piece(ia, a, b)
        total = self._piece(ia, a, e[ia + 1]) + self._piece(ib, e[ib], b)
        if ib > ia + 1:
            total += float(np.sum(self.contrib[ia + 1:ib]))
        return float(total)

    def _piece(self, i: int, a: float, b: float) -> float:
        mass = float(self._partial(a, b))
        if mass <= 0 or self.g[i] == 0:
            return 0.0
        return float(self.g[i] * mass)

    def cell_masses_in(self, ball: Ball) -> tuple[np.ndarray, np.ndarray]:
        """``(|f| values, w(cell cap B))`` for the cells meeting the ball."""
        if not self._prepared:
            self._prepare()
        s = self.spec
        vals = np.abs(self.f.values)
        if s.n == 1 and self.mode == "auto":
            a = max(ball.center[0] - ball.radius, -s.R)
            b = min(ball.center[0] + ball.radius, s.R)
            if b <= a:
                return np.empty(0), np.empty(0)
            ia, ib = s.cell_index(a), s.cell_index(b)
            e = s.edges[ia:ib + 2]
            lo = np.maximum(e[:-1], a)
            hi = np.minimum(e[1:], b)
            masses = self._partial(lo, hi)
            return vals[ia:ib + 1], masses
        box, mask = s.ball_mask(ball)
        return vals[box][mask], self.cm[box][mask]


def integrate(f: GridFunction, w: Weight, ball: Ball, power: float = 1.0, mode: str = "auto") -> float:
    """``int_B |f|^power w``; ``inf`` when a flagged singular cell diverges."""
    return BallIntegrator(f, w, power, mode)(ball)


# -- witnesses -------------------------------------------------------------


@dataclass(frozen=True)
class CharBall:
    center: tuple[float, ...] | float = 0.0
    radius: float = 1.0


@dataclass(frozen=True)
class SingularPower:
    """``|x|^{-n} chi_{B(0,1)}``."""


@dataclass(frozen=True)
class DualPower:
    """``((w + eps)/(1 + eps))^{-(n - l2)/(pn - n + l1 + l2)} chi_{B(0,1)}``."""

    eps: float = 0.0


@dataclass(frozen=True)
class OffsetBump:
    """``chi_{B(2 e_1, 1/2)}``."""


@dataclass(frozen=True)
class RadialPower:
    """``|x|^gamma chi_{B(0, radius)}``."""

    gamma: float
    radius: float = 1.0


@dataclass(frozen=True)
class Tent:
    """``max(0, 1 - |x - center|/radius)`` (sampled, no closed-form tag)."""

    center: tuple[float, ...] | float = 0.0
    radius: float = 1.0


WitnessKind = Union[CharBall, SingularPower, DualPower, OffsetBump, RadialPower, Tent]


def _as_point(c, n: int) -> tuple[float, ...]:
    c = tuple(float(v) for v in np.atleast_1d(c))
    if len(c) == 1 and n == 2:
        c = (c[0], 0.0)
    if len(c) != n:
        raise ValueError(f"center {c} does not live in R^{n}")
    return c


def dual_power_exponent(params: MorreyParams) -> float:
    n, p, l1, l2 = params.n, params.p, params.lambda1, params.lambda2
    den = p * n - n + l1 + l2
    if den == 0:
        raise ValueError("pn - n + lambda1 + lambda2 = 0: dual power witness undefined")
    return -(n - l2) / den


def witness_name(kind: WitnessKind) -> str:
    if isinstance(kind, CharBall):
        c = ",".join(f"{v:g}" for v in np.atleast_1d(kind.center))
        return f"char_ball({c};{kind.radius:g})"
    if isinstance(kind, SingularPower):
        return "singular_power"
    if isinstance(kind, DualPower):
        return f"dual_power({kind.eps:g})"
    if isinstance(kind, OffsetBump):
        return "offset_bump"
    if isinstance(kind, RadialPower):
        return f"radial_power({kind.gamma:g};{kind.radius:g})"
    c = ",".join(f"{v:g}" for v in np.atleast_1d(kind.center))
    return f"tent({c};{kind.radius:g})"


def build_witness(kind: WitnessKind, spec: GridSpec, params: MorreyParams | None = None,
                  w: Weight | None = None) -> GridFunction:
    """Sample a witness function on ``spec``."""
    n = spec.n
    name = witness_name(kind)
    if isinstance(kind, CharBall):
        return GridFunction.from_tag(spec, IndicatorTag(_as_point(kind.center, n), kind.radius), name)
    if isinstance(kind, OffsetBump):
        return GridFunction.from_tag(spec, IndicatorTag(_as_point(2.0, n), 0.5), name)
    if isinstance(kind, SingularPower):
        return GridFunction.from_tag(spec, PowerTag(1.0, -float(n), 1.0), name)
    if isinstance(kind, RadialPower):
        return GridFunction.from_tag(spec, PowerTag(1.0, kind.gamma, kind.radius), name)
    if isinstance(kind, Tent):
        c = _as_point(kind.center, n)
        return GridFunction.from_callable(
            spec, lambda pts: np.clip(1 - _dist(pts, c, n) / kind.radius, 0.0, None), name)
    if isinstance(kind, DualPower):
        if params is None:
            raise ValueError("the dual power witness needs Morrey parameters")
        c = dual_power_exponent(params)
        w = w if w is not None else PowerWeight(0.0, n)
        if kind.eps == 0 and w.exponent is not None:
            return GridFunction.from_tag(spec, PowerTag(1.0, w.exponent * c, 1.0), name)
        pts = spec.midpoints()
        inside = _dist(pts, (0.0,) * n, n) < 1.0
        with np.errstate(divide="ignore"):
            vals = ((w(pts) + kind.eps) / (1 + kind.eps)) ** c
        return GridFunction(spec, np.where(inside, vals, 0.0), None, None, name)
    raise TypeError(f"unknown witness kind {kind!r}")


def dilate(f: GridFunction, delta: float) -> GridFunction:
    """``g(x) = f(delta * x)`` on the same grid."""
    if not delta > 0:
        raise ValueError("dilation factor must be positive")
    s = f.spec
    if f.support_extent / delta > s.R * (1 + 1e-12):
        raise ValueError(f"dilated support (radius {f.support_extent / delta:g}) leaves the domain")
    if delta == 1:
        return f
    if f.tag is not None:
        return GridFunction.from_tag(s, f.tag.dilated(delta), f.name)
    if s.n == 1:
        vals = np.interp(delta * s.axis, s.axis, f.values, left=0.0, right=0.0)
    else:
        coords = (delta * s.midpoints() + s.R) / s.h - 0.5
        vals = map_coordinates(f.values, [coords[..., 0], coords[..., 1]], order=1, cval=0.0)
    return GridFunction(s, vals, None, None, f.name)
