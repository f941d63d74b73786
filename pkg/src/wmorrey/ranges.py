"""Closed-form parameter-range predicates.

All comparisons use a ``1e-12`` band: a value that lands within the band of
an endpoint gets the verdict ``"boundary"`` (with ``bounded`` still telling
whether that endpoint belongs to the range), never a silent bucket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .params import MorreyParams
from .weights import INF, conjugate

TOL = 1e-12

VERDICTS = ("bounded", "unbounded", "trivial-space", "boundary", "outside-theory", "nontrivial")


@dataclass(frozen=True)
class RangeVerdict:
    verdict: str
    citation: str
    binding: str = ""
    bounded: bool | None = None

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "citation": self.citation,
                "binding": self.binding, "bounded": self.bounded}


def _theta(beta: float, n: int) -> float:
    return 1 + beta / n


def _check_beta(beta: float, n: int) -> None:
    if not beta > -n:
        raise ValueError(f"power weight needs beta > -n (beta={beta}, n={n})")


def space_is_trivial(params: MorreyParams, beta: float) -> RangeVerdict:
    """Whether the space over ``|x|^beta`` reduces to ``{0}``.

    ``"boundary"`` marks the L-infinity type space at ``lambda1 + lambda2 = n``.
    """
    n = params.n
    _check_beta(beta, n)
    l1, l2 = params.lam
    eff = l1 + l2 * _theta(beta, n)
    total = l1 + l2
    if eff < -TOL:
        return RangeVerdict("trivial-space", "power-spaces(c)",
                            f"lambda1 + lambda2(1+beta/n) = {eff:g} < 0")
    if total > n + TOL:
        return RangeVerdict("trivial-space", "triviality", f"lambda1 + lambda2 = {total:g} > n")
    if abs(total - n) <= TOL:
        return RangeVerdict("boundary", "power-spaces(d)",
                            "lambda1 + lambda2 = n: |f|^p |x|^(beta(1-lambda2/n)) in L^inf")
    return RangeVerdict("nontrivial", "power-spaces", "")


def identify_space(params: MorreyParams, beta: float) -> tuple[MorreyParams, float]:
    """Map ``(p, (l1, l2), beta)`` to the equivalent ``(p, (l1 + l2, 0), beta (1 - l2/n))``."""
    n = params.n
    _check_beta(beta, n)
    l1, l2 = params.lam
    eff = l1 + l2 * _theta(beta, n)
    if not eff > 0:
        raise ValueError(f"identification needs lambda1 + lambda2(1+beta/n) > 0, got {eff:g}")
    if not 0 < l1 + l2 < n:
        raise ValueError(f"identification needs 0 < lambda1 + lambda2 < n, got {l1 + l2:g}")
    return params.replace(lambda1=l1 + l2, lambda2=0.0), beta * (1 - l2 / n)


def hl_necessity_class(params: MorreyParams) -> float:
    """Muckenhoupt index ``(np + l1)/(n - l2)`` forced by boundedness of M."""
    n, p = params.n, params.p
    l1, l2 = params.lam
    if l2 >= n:
        raise ValueError("necessity class needs lambda2 < n")
    if l1 < 0 or l2 < 0 or l1 + l2 >= n:
        raise ValueError("necessity class needs lambda1, lambda2 >= 0 and lambda1 + lambda2 < n")
    return (n * p + l1) / (n - l2)


def hl_power_range(params: MorreyParams) -> tuple[float, float, bool]:
    """``(lo, hi, lo_closed)``: the betas for which M is bounded on the space over ``|x|^beta``.

    The right endpoint is always open.  An empty range is reported as
    ``(inf, inf, False)``.
    """
    n, p = params.n, params.p
    l1, l2 = params.lam
    if l2 > n + TOL:
        raise ValueError("lambda2 > n is outside the scale")
    if l1 + l2 > n + TOL:
        raise ValueError(f"lambda1 + lambda2 = {l1 + l2:g} > n: the space is trivial")
    if abs(l2 - n) <= TOL:
        if l1 > TOL or l1 <= -n * p:
            return INF, INF, False
        if abs(l1) <= TOL:
            return -float(n), INF, False
        return -n - l1, INF, l1 > -n
    scale = n / (n - l2)
    lo = scale * (l1 + l2 - n)
    hi = scale * (l1 + l2 + n * (p - 1))
    if lo > -n + TOL:
        return lo, hi, True
    return -float(n), hi, False


def _in_range(beta: float, lo: float, hi: float, lo_closed: bool) -> tuple[str, bool, str]:
    if abs(beta - lo) <= TOL * max(1.0, abs(lo)):
        return "boundary", lo_closed, f"beta = left endpoint {lo:g} ({'closed' if lo_closed else 'open'})"
    if hi < INF and abs(beta - hi) <= TOL * max(1.0, abs(hi)):
        return "boundary", False, f"beta = right endpoint {hi:g} (open)"
    if beta < lo:
        return "unbounded", False, f"beta < {lo:g}"
    if beta > hi:
        return "unbounded", False, f"beta > {hi:g}"
    return "bounded", True, ""


def hl_power_verdict(params: MorreyParams, beta: float) -> RangeVerdict:
    """Analytic verdict for M on the space over ``|x|^beta``."""
    triv = space_is_trivial(params, beta)
    if triv.verdict == "trivial-space":
        return triv
    lo, hi, closed = hl_power_range(params)
    if lo == INF:
        return RangeVerdict("unbounded", "sharp-power-range", "empty range for these lambdas", False)
    verdict, bounded, binding = _in_range(beta, lo, hi, closed)
    return RangeVerdict(verdict, "sharp-power-range", binding, bounded)


def hl_general_sufficient(params: MorreyParams, sigma_w: float, theta: float) -> tuple[bool, float]:
    """``(admissible, alpha_hi)`` for M on the space over ``|x|^alpha w``, ``0 <= alpha < alpha_hi``."""
    n = params.n
    l1, l2 = params.lam
    if l2 < 0:
        raise ValueError("sufficiency needs lambda2 >= 0")
    if l2 > n + TOL:
        raise ValueError("sufficiency needs lambda2 <= n")
    eff = l1 * conjugate(sigma_w) + l2
    admissible = 0 < eff < n
    return admissible, alpha_upper(l1, l2, theta, n)


def alpha_upper(l1: float, l2: float, theta: float, n: int) -> float:
    if l2 >= n:
        return INF
    return n * (l1 + l2 * theta) / (n - l2)


@dataclass(frozen=True)
class Constraint:
    description: str
    test: Callable[[float, float, float], bool]


@dataclass(frozen=True)
class ExtrapolationRegion:
    """Conjunction of closed-form constraints in ``(lambda1, lambda2, alpha)``."""

    constraints: tuple[Constraint, ...]

    def contains(self, lambda1: float, lambda2: float, alpha: float = 0.0) -> bool:
        return all(c.test(lambda1, lambda2, alpha) for c in self.constraints)

    def failing(self, lambda1: float, lambda2: float, alpha: float = 0.0) -> list[str]:
        return [c.description for c in self.constraints if not c.test(lambda1, lambda2, alpha)]


def _region(n: int, sp: float, theta: float, upper: float) -> ExtrapolationRegion:
    return ExtrapolationRegion((
        Constraint("0 <= lambda2 <= n", lambda a, b, _: 0 <= b <= n),
        Constraint("0 < lambda1 sigma' + lambda2", lambda a, b, _: a * sp + b > 0),
        Constraint(f"lambda1 sigma' + lambda2 < {upper:g}", lambda a, b, _: a * sp + b < upper),
        Constraint("0 <= alpha < alpha_hi", lambda a, b, al: 0 <= al < alpha_upper(a, b, theta, n)),
    ))


def extrapolation_region_full(p: float, sigma_w: float, theta: float, n: int) -> ExtrapolationRegion:
    if p < 1:
        raise ValueError("p must be >= 1")
    return _region(n, conjugate(sigma_w), theta, float(n))


def extrapolation_region_power(p: float, beta: float, lam: tuple[float, float], n: int) -> bool:
    _check_beta(beta, n)
    if p < 1:
        raise ValueError("p must be >= 1")
    l1, l2 = lam
    eff = l1 + l2 * _theta(beta, n)
    return l1 + l2 < n and max(0.0, beta - n * (p - 1)) < eff < n + beta


def _check_window(p: float, p_minus: float, p_plus: float) -> None:
    if not (0 < p_minus < p < p_plus):
        raise ValueError(f"need 0 < p_minus < p < p_plus, got {p_minus}, {p}, {p_plus}")


def extrapolation_region_limited(p: float, p_minus: float, p_plus: float, sigma_w: float,
                                 theta: float, lam: tuple[float, float], alpha: float, n: int) -> bool:
    _check_window(p, p_minus, p_plus)
    ratio = 0.0 if p_plus == INF else p / p_plus
    if ratio > 0 and not sigma_w > conjugate(p_plus / p):
        return False
    sp = conjugate(sigma_w)
    return _region(n, sp, theta, n * (1 - ratio * sp)).contains(lam[0], lam[1], alpha)


def extrapolation_region_power_limited(p: float, p_minus: float, p_plus: float, beta: float,
                                       lam: tuple[float, float], n: int) -> bool:
    _check_window(p, p_minus, p_plus)
    _check_beta(beta, n)
    l1, l2 = lam
    eff = l1 + l2 * _theta(beta, n)
    ratio = 0.0 if p_plus == INF else p / p_plus
    top = n * (1 - (0.0 if p_plus == INF else p_minus / p_plus)) + beta
    return l1 + l2 < n * (1 - ratio) and max(0.0, beta - n * (p / p_minus - 1)) < eff < top


def embedding_exponents(params: MorreyParams) -> tuple[float, float]:
    """``(q, s)`` with ``L^q(w^s)`` embedded in the space (constant 1 per ball)."""
    n, p = params.n, params.p
    l1, l2 = params.lam
    if l1 + l2 >= n:
        raise ValueError("embedding needs lambda1 + lambda2 < n")
    if l1 < 0 or l2 < 0:
        raise ValueError("embedding needs lambda1, lambda2 >= 0")
    d = n - l1 - l2
    return p * n / d, (n - l2) / d


def reduction_condition(params: MorreyParams, beta: float | None = None,
                        sigma_w: float | None = None) -> float:
    """Left side of the type II reduction inequality (must be > 0)."""
    l1, l2 = params.lam
    if beta is not None:
        return l1 + l2 * _theta(beta, params.n)
    if sigma_w is None:
        raise ValueError("need a power exponent or sigma_w")
    return l1 * conjugate(sigma_w) + l2

