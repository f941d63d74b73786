"""Truncated Hilbert transform (n = 1) and a ratio probe for operator norms."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.signal import fftconvolve

from .discretize import GridFunction
from .params import MorreyParams
from .weights import INF, Weight


@dataclass(frozen=True)
class TruncationSpec:
    """Kernel support ``epsilon < |x - y| <= outer``; ``None`` means ``h`` and ``R``."""

    epsilon: float | None = None
    outer: float | None = None

    def resolve(self, h: float, R: float) -> tuple[float, float]:
        eps = h if self.epsilon is None else float(self.epsilon)
        outer = 2 * R if self.outer is None else float(self.outer)
        if not 0 < eps <= outer:
            raise ValueError(f"need 0 < epsilon <= outer, got {eps}, {outer}")
        return eps, outer


def hilbert_truncated(f: GridFunction, trunc: TruncationSpec = TruncationSpec()) -> GridFunction:
    """``Hf(x_i) = sum_{eps < |x_i - y_j| <= outer} f(y_j) h / (x_i - y_j)`` (no 1/pi)."""
    if f.n != 1:
        raise ValueError("the truncated Hilbert transform is implemented for n = 1 only")
    s = f.spec
    eps, outer = trunc.resolve(s.h, s.R)
    m = s.m
    k = np.arange(-(m - 1), m)
    dist = np.abs(k) * s.h
    kernel = np.zeros(k.shape)
    on = (dist > eps * (1 + 1e-12)) & (dist <= outer * (1 + 1e-12))
    kernel[on] = 1.0 / k[on]
    vals = f.values
    if not np.isfinite(vals).all():
        raise ValueError("the Hilbert transform needs finite input values")
    full = np.convolve(vals, kernel) if m <= 2048 else fftconvolve(vals, kernel)
    out = full[m - 1: 2 * m - 1]
    return GridFunction(s, out, None, None, f"H({f.name})")


def operator_norm_lower_bound(op: Callable[[GridFunction], GridFunction], w: Weight,
                              params: MorreyParams, family,
                              catalog: Sequence[GridFunction]) -> float:
    """``max_f morrey_norm(|op f|) / morrey_norm(f)`` over the catalog."""
    from .morrey import morrey_norm

    best = 0.0
    used = 0
    for f in catalog:
        den = morrey_norm(f, w, params, family).value
        if den == 0 or den == INF:
            warnings.warn(f"skipping {f.name or 'input'}: norm is {den}", RuntimeWarning, stacklevel=2)
            continue
        g = op(f)
        g = GridFunction(g.spec, np.abs(g.values), None, g.singular, g.name)
        best = max(best, morrey_norm(g, w, params, family).value / den)
        used += 1
    if used == 0:
        raise ValueError("no catalog function has a finite nonzero norm")
    return best
