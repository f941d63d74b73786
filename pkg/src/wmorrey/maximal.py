"""Hardy-Littlewood maximal function on grids.

1D: uncentered windows of ``2^j`` cells at every shift.  2D: centered
squares of half-width ``k`` cells, ``k`` in ``{0, 1, 2, 4, ...}``; cells
outside the domain count as zero.  Dyadic windows undershoot the maximal
function over all radii by at most a factor ``2^n``.

:func:`maximal_brute` sums every window directly; :func:`maximal_fast`
uses prefix sums (1D) or a summed-area table (2D).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.ndimage import maximum_filter1d

from .discretize import GridFunction

FLAVORS = {1: "uncentered-interval", 2: "centered-square"}


@dataclass(frozen=True)
class MaximalConfig:
    """Window lattice: ``scales`` lists window lengths (1D) or half-widths (2D) in cells."""

    flavor: str | None = None
    scales: tuple[int, ...] | None = None

    def resolve(self, n: int, m: int) -> tuple[str, tuple[int, ...]]:
        flavor = self.flavor or FLAVORS[n]
        if flavor != FLAVORS[n]:
            raise ValueError(f"flavor {flavor!r} is not available in dimension {n}")
        if self.scales is not None:
            scales = tuple(sorted(set(int(s) for s in self.scales)))
            if (scales[0] != 1 if n == 1 else scales[0] != 0):
                raise ValueError("the window lattice must contain the single-cell window")
            return flavor, scales
        if n == 1:
            return flavor, tuple(2**j for j in range(m.bit_length()) if 2**j <= m)
        return flavor, (0,) + tuple(2**j for j in range(m.bit_length()) if 2**j <= m // 2)


def _check(f: GridFunction) -> np.ndarray:
    v = f.values
    if (v < 0).any():
        raise ValueError("the maximal operator takes nonnegative input (pass |f|)")
    return v


def _wrap(f: GridFunction, out: np.ndarray, tag: str) -> GridFunction:
    bad = ~np.isfinite(out)
    return GridFunction(f.spec, out, None, bad if bad.any() else None, f"{tag}({f.name})")


def _spread_max(avg: np.ndarray, length: int, m: int) -> np.ndarray:
    """``out[i] = max(avg[s])`` over window starts ``s`` whose window covers ``i``."""
    pad = np.concatenate([np.full(length - 1, -np.inf), avg, np.full(length - 1, -np.inf)])
    filt = maximum_filter1d(pad, size=length, mode="constant", cval=-np.inf)
    return filt[length // 2: length // 2 + m]


def maximal_brute(f: GridFunction, cfg: MaximalConfig = MaximalConfig()) -> GridFunction:
    v = _check(f)
    _, scales = cfg.resolve(f.n, f.spec.m)
    m = f.spec.m
    out = np.zeros_like(v)
    if f.n == 1:
        for L in scales:
            avg = sliding_window_view(v, L).sum(axis=1) / L
            pad = np.concatenate([np.full(L - 1, -np.inf), avg, np.full(L - 1, -np.inf)])
            out = np.maximum(out, sliding_window_view(pad, L).max(axis=1))
        return _wrap(f, out, "M")
    for k in scales:
        side = 2 * k + 1
        padded = np.pad(v, k)
        sums = sliding_window_view(padded, (side, side)).sum(axis=(2, 3))
        out = np.maximum(out, sums / side**2)
    return _wrap(f, out, "M")


def maximal_fast(f: GridFunction, cfg: MaximalConfig = MaximalConfig()) -> GridFunction:
    v = _check(f)
    _, scales = cfg.resolve(f.n, f.spec.m)
    m = f.spec.m
    infs = ~np.isfinite(v)
    # extended precision keeps prefix differences accurate to the window, not the total
    fin = np.where(infs, 0.0, v).astype(np.longdouble)
    out = np.zeros_like(v)
    if f.n == 1:
        P = np.concatenate([[0.0], np.cumsum(fin)])
        C = np.concatenate([[0], np.cumsum(infs)])
        for L in scales:
            if L == 1:
                out = np.maximum(out, v)
                continue
            avg = ((P[L:] - P[:-L]) / L).astype(float)
            if infs.any():
                avg = np.where(C[L:] - C[:-L] > 0, np.inf, avg)
            out = np.maximum(out, _spread_max(avg, L, m))
        return _wrap(f, out, "M")
    S = np.zeros((m + 1, m + 1), dtype=np.longdouble)
    S[1:, 1:] = fin.cumsum(0).cumsum(1)
    Ci = np.zeros((m + 1, m + 1), dtype=np.int64)
    Ci[1:, 1:] = infs.cumsum(0).cumsum(1)
    idx = np.arange(m)
    for k in scales:
        if k == 0:
            # the single cell, taken verbatim so that Mf >= f holds exactly
            out = np.maximum(out, v)
            continue
        lo = np.clip(idx - k, 0, m)
        hi = np.clip(idx + k + 1, 0, m)
        box = S[np.ix_(hi, hi)] - S[np.ix_(lo, hi)] - S[np.ix_(hi, lo)] + S[np.ix_(lo, lo)]
        avg = (box / (2 * k + 1) ** 2).astype(float)
        if infs.any():
            cnt = Ci[np.ix_(hi, hi)] - Ci[np.ix_(lo, hi)] - Ci[np.ix_(hi, lo)] + Ci[np.ix_(lo, lo)]
            avg = np.where(cnt > 0, np.inf, avg)
        out = np.maximum(out, avg)
    return _wrap(f, out, "M")


def a1_from_maximal(h: GridFunction, s: float, cfg: MaximalConfig = MaximalConfig()) -> GridFunction:
    """``(M h)^{1/s}``, an A_1 weight with constant depending only on ``s``."""
    if not s > 1:
        raise ValueError("s must exceed 1")
    if not (h.values > 0).any():
        raise ValueError("h must not vanish identically")
    mh = maximal_fast(h, cfg)
    return GridFunction(h.spec, mh.values ** (1 / s), None, mh.singular, f"(Mh)^(1/{s:g})")
