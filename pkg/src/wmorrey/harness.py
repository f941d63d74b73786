"""Experiments tying analytic range verdicts to grid evidence.

An experiment is a JSON document; ``run_experiment`` turns it into rows,
``run_report`` writes them as CSV plus a JSON summary.  Nothing here draws
random numbers, so a config always reproduces the same bytes.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from .czops import hilbert_truncated, operator_norm_lower_bound
from .discretize import (CharBall, DualPower, GridFunction, GridSpec, OffsetBump, RadialPower,
                         SingularPower, Tent, WitnessKind, build_witness, dilate, witness_name)
from .geometry import Ball, BallFamily, Strategy, iter_type2_extremal, reduction_admissible
from .maximal import maximal_fast
from .morrey import lebesgue_norm, morrey_norm, weak_morrey_norm, weight_power
from .params import MorreyParams
from .ranges import (embedding_exponents, extrapolation_region_power, hl_power_verdict,
                     identify_space, space_is_trivial)
from .weights import INF, PowerWeight

COLUMNS = ("experiment", "n", "p", "lambda1", "lambda2", "beta", "alpha", "witness", "refinement",
           "value", "slope", "analytic_verdict", "citation", "agreement")
KINDS = ("norm", "maximal-range", "equivalence", "embedding", "extrapolation", "scaling-law", "reduction")
OUTCOMES = ("agree", "disagree", "unstable", "trivial")

BOUNDED_SLOPE = 0.05
UNBOUNDED_SLOPE = 0.1
DOMAIN_TOL = 0.01


# -- configuration ---------------------------------------------------------


@dataclass
class ExperimentConfig:
    experiment: str = "maximal-range"
    n: int = 1
    R: float = 16.0
    refinements: list[int] = field(default_factory=lambda: [2048, 4096])
    p: list[float] = field(default_factory=lambda: [2.0])
    lambda1: list[float] = field(default_factory=lambda: [0.5])
    lambda2: list[float] = field(default_factory=lambda: [0.0])
    beta: list[float] = field(default_factory=lambda: [0.0])
    alpha: list[float] = field(default_factory=lambda: [0.0])
    cells: list[dict] | None = None
    witnesses: list | None = None
    family: dict = field(default_factory=dict)
    k_min: int = 4
    k_max: int = 20
    dilations: list[float] = field(default_factory=lambda: [1.0, 2.0, 4.0])
    output: str | None = None
    workers: int = 1
    tag: str | None = None

    def __post_init__(self) -> None:
        if self.experiment not in KINDS:
            raise ValueError(f"experiment must be one of {KINDS}, got {self.experiment!r}")
        if len(self.refinements) < 2:
            raise ValueError("at least two refinement levels are needed")
        self.refinements = sorted(int(m) for m in self.refinements)
        for name in ("p", "lambda1", "lambda2", "beta", "alpha"):
            val = getattr(self, name)
            if not isinstance(val, list):
                val = [val]
            if not val:
                raise ValueError(f"parameter grid {name!r} is empty")
            setattr(self, name, [float(v) for v in val])
        if self.k_max - self.k_min < 2:
            raise ValueError("need at least three dyadic scales to fit a slope")

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path, overrides: Sequence[str] = ()) -> "ExperimentConfig":
        data = json.loads(Path(path).read_text()) if path else {}
        for item in overrides:
            key, _, raw = item.partition("=")
            if not key or not _:
                raise ValueError(f"override must look like key=value, got {item!r}")
            try:
                data[key] = json.loads(raw)
            except json.JSONDecodeError:
                data[key] = raw
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return asdict(self)

    def grid(self, m: int, R: float | None = None) -> GridSpec:
        return GridSpec(self.n, self.R if R is None else R, m)

    def ball_family(self, **changes) -> BallFamily:
        opts = dict(self.family)
        opts.update(changes)
        if "type3_factors" in opts:
            opts["type3_factors"] = tuple(opts["type3_factors"])
        return BallFamily(**opts)

    def parameter_cells(self) -> list[dict]:
        if self.cells is not None:
            out = []
            for c in self.cells:
                cell = {"p": 2.0, "lambda1": 0.0, "lambda2": 0.0, "beta": 0.0, "alpha": 0.0}
                cell.update({k: float(v) for k, v in c.items()})
                out.append(cell)
            return out
        keys = ("p", "lambda1", "lambda2", "beta", "alpha")
        return [dict(zip(keys, combo)) for combo in itertools.product(*(getattr(self, k) for k in keys))]


_WITNESS_TYPES = {
    "char_ball": CharBall, "offset_bump": OffsetBump, "singular_power": SingularPower,
    "dual_power": DualPower, "radial_power": RadialPower, "tent": Tent,
}


def parse_witness(item) -> WitnessKind:
    """``"char_ball"`` or ``{"kind": "tent", "center": 0.5, "radius": 1}``."""
    if isinstance(item, str):
        item = {"kind": item}
    item = dict(item)
    kind = item.pop("kind")
    if kind not in _WITNESS_TYPES:
        raise ValueError(f"unknown witness {kind!r}; choose from {sorted(_WITNESS_TYPES)}")
    if "center" in item:
        c = item["center"]
        item["center"] = tuple(c) if isinstance(c, list) else c
    return _WITNESS_TYPES[kind](**item)


DEFAULT_WITNESSES = {
    "maximal-range": ["char_ball", "offset_bump", "singular_power", "dual_power"],
    "scaling-law": ["char_ball", {"kind": "char_ball", "center": 1.0, "radius": 0.5}],
    "norm": ["char_ball", "offset_bump", "singular_power"],
    "embedding": ["char_ball", "offset_bump", {"kind": "tent", "center": 0.5, "radius": 1.0},
                  {"kind": "char_ball", "center": -3.0, "radius": 2.0}],
    "extrapolation": [{"kind": "tent", "center": 0.0, "radius": 1.0},
                      {"kind": "tent", "center": 2.0, "radius": 0.5},
                      {"kind": "tent", "center": -1.0, "radius": 2.0}],
    "reduction": ["char_ball", "offset_bump", {"kind": "tent", "center": 0.5, "radius": 1.0},
                  {"kind": "char_ball", "center": 0.25, "radius": 0.125}],
}


def equivalence_catalog(n: int = 1) -> list:
    """Twenty deterministic witnesses: indicators, tents and radial bumps."""
    out: list = []
    for c, r in [(0, 1), (0, 0.25), (0.5, 0.25), (2, 0.5), (-1, 0.5), (4, 2), (0.125, 0.0625)]:
        out.append({"kind": "char_ball", "center": c, "radius": r})
    for c, r in [(0, 1), (0.5, 0.5), (-2, 1), (3, 1.5), (0.25, 0.125), (1, 4)]:
        out.append({"kind": "tent", "center": c, "radius": r})
    for g, r in [(0.5, 1), (1, 2), (-0.25, 1), (-0.1, 0.5), (2, 1), (0.25, 4)]:
        out.append({"kind": "radial_power", "gamma": g, "radius": r})
    out.append("offset_bump")
    return out


def witness_kinds(cfg: ExperimentConfig) -> list[WitnessKind]:
    items = cfg.witnesses
    if items is None:
        items = equivalence_catalog(cfg.n) if cfg.experiment == "equivalence" else DEFAULT_WITNESSES[cfg.experiment]
    return [parse_witness(i) for i in items]


# -- rows ------------------------------------------------------------------


@dataclass
class ExperimentRow:
    experiment: str
    n: int
    p: float
    lambda1: float
    lambda2: float
    beta: float
    alpha: float
    witness: str
    refinement: str
    value: float
    slope: float
    analytic_verdict: str
    citation: str
    agreement: str
    tag: str = ""
    evidence: dict = field(default_factory=dict)

    def csv_fields(self) -> list[str]:
        return [_fmt(getattr(self, c)) for c in COLUMNS]


def _fmt(v) -> str:
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".10g")
    return str(v)


def _row(cfg: ExperimentConfig, cell: dict, **kw) -> ExperimentRow:
    base = dict(experiment=cfg.experiment, n=cfg.n, p=cell["p"], lambda1=cell["lambda1"],
                lambda2=cell["lambda2"], beta=cell["beta"], alpha=cell["alpha"], witness="",
                refinement=";".join(str(m) for m in cfg.refinements), value=math.nan, slope=math.nan,
                tag=cfg.tag or TAGS[cfg.experiment])
    base.update(kw)
    return ExperimentRow(**base)


TAGS = {
    "norm": "norm", "maximal-range": "sharp-power-range", "equivalence": "power-spaces(a)",
    "embedding": "embedding", "extrapolation": "power-extrapolation", "scaling-law": "dilation",
    "reduction": "reduction",
}


def _params(cfg: ExperimentConfig, cell: dict) -> MorreyParams:
    return MorreyParams(cell["p"], cell["lambda1"], cell["lambda2"], cfg.n)


def fit_slope(ks: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of ``log2 values`` against ``ks``; ``inf`` on divergence."""
    a = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(a)):
        return INF
    if np.all(a == 0):
        return -INF
    if np.any(a <= 0):
        return math.nan
    return float(np.polyfit(np.asarray(ks, dtype=float), np.log2(a), 1)[0])


def classify_slope(s: float) -> str:
    if s == INF or s > UNBOUNDED_SLOPE:
        return "unbounded"
    if s < BOUNDED_SLOPE:
        return "bounded"
    return "unstable"


# -- maximal-range ---------------------------------------------------------


def _scale_sequence(fn: Callable[[list[Ball]], float], n: int, ks) -> tuple[list[float], list[list[Ball]]]:
    vals, balls = [], []
    for _, bs in iter_type2_extremal(n, ks):
        vals.append(fn(bs))
        balls.append(bs)
    return vals, balls


def _witness_evidence(cfg, kind, spec, params, w, ks) -> dict:
    f = build_witness(kind, spec, params, w)
    p = params.p
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        type2, _ = _scale_sequence(
            lambda bs: morrey_norm(f, w, params, bs, normalization="measure").value ** p, cfg.n, ks)
        type1 = [morrey_norm(f, w, params, [Ball((0.0,) * cfg.n, 2.0**-k)],
                             normalization="measure").value ** p for k in ks]
        s_in = max(fit_slope(ks, type2), fit_slope(ks, type1))
        admitted = not math.isnan(s_in) and s_in < BOUNDED_SLOPE
        ev = {"witness": witness_name(kind), "input_slope": s_in, "admitted": admitted}
        if not admitted:
            return ev
        size = morrey_norm(f, w, params, cfg.ball_family()).value
        if not 0 < size < INF:
            ev["admitted"] = False
            return ev
        Mf = maximal_fast(f)
        out, balls = _scale_sequence(lambda bs: weak_morrey_norm(Mf, w, params, bs).value ** p, cfg.n, ks)
    out = [v / size**p for v in out]
    ev["slope"] = fit_slope(ks, out)
    ev["values"] = out
    j = int(np.argmax(out)) if np.all(np.isfinite(out)) else len(out) - 1
    ev["extremal"] = (int(ks[j]), out[j])
    return ev


def _domain_change(cfg, kind, spec, params, w, ks, ev) -> float:
    """Relative change of the extremal value when the domain radius doubles."""
    k, val = ev["extremal"]
    if not math.isfinite(val) or val == 0:
        return 0.0
    big = spec.enlarge(2)
    f = build_witness(kind, big, params, w)
    p = params.p
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        size = morrey_norm(f, w, params, cfg.ball_family()).value
        Mf = maximal_fast(f)
        _, bs = next(iter_type2_extremal(cfg.n, [k]))
        other = weak_morrey_norm(Mf, w, params, bs).value ** p / size**p
    return abs(other - val) / val


def run_maximal_range_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _maximal_cell)


def _maximal_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    beta = cell["beta"]
    verdict = hl_power_verdict(params, beta)
    row = lambda **kw: _row(cfg, cell, analytic_verdict=verdict.verdict, citation=verdict.citation, **kw)
    if verdict.verdict == "trivial-space":
        return row(agreement="trivial")
    w = PowerWeight(beta, cfg.n)
    ks = np.arange(cfg.k_min, cfg.k_max + 1)
    kinds = witness_kinds(cfg)
    classes, per_level = [], []
    for m in cfg.refinements[-2:]:
        spec = cfg.grid(m)
        evs = [_witness_evidence(cfg, kind, spec, params, w, ks) for kind in kinds]
        evs = [(kind, e) for kind, e in zip(kinds, evs) if e["admitted"]]
        if not evs:
            classes.append("unstable")
            per_level.append(None)
            continue
        kind, best = max(evs, key=lambda ke: ke[1]["slope"])
        slopes = [e["slope"] for _, e in evs]
        if any(classify_slope(s) == "unbounded" for s in slopes):
            cls = "unbounded"
        elif all(classify_slope(s) == "bounded" for s in slopes):
            cls = "bounded"
        else:
            cls = "unstable"
        classes.append(cls)
        per_level.append((spec, kind, best))
    top = per_level[-1]
    if top is None:
        return row(agreement="unstable")
    spec, kind, best = top
    value = best["extremal"][1]
    evidence = {"classes": classes}
    if classes[0] != classes[1] or classes[1] == "unstable":
        agreement = "unstable"
    else:
        agreement = "agree" if (classes[1] == "bounded") == bool(verdict.bounded) else "disagree"
        change = _domain_change(cfg, kind, spec, _params(cfg, cell), w, ks, best)
        evidence["domain_change"] = change
        if change > DOMAIN_TOL:
            agreement = "domain-sensitive"
    return row(witness=witness_name(kind), value=value, slope=best["slope"], agreement=agreement,
               evidence=evidence)


# -- scaling law -----------------------------------------------------------


def scaling_exponent(params: MorreyParams, beta: float) -> float:
    n = params.n
    return (params.lambda1 + params.lambda2 * (1 + beta / n) - (n + beta)) / params.p


def _scaling_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    beta = cell["beta"]
    pred = scaling_exponent(params, beta)
    row = lambda **kw: _row(cfg, cell, analytic_verdict=f"exponent={pred:.10g}", citation="dilation", **kw)
    w = PowerWeight(beta, cfg.n)
    family = cfg.ball_family(base=2.0)
    tol = max(0.03 * abs(pred), 0.003)
    logs = np.log2(cfg.dilations)
    worst, worst_kind, errs = -1.0, None, []
    fitted = math.nan
    for m in cfg.refinements[-2:]:
        spec = cfg.grid(m)
        for kind in witness_kinds(cfg):
            f = build_witness(kind, spec, params, w)
            vals = []
            for d in cfg.dilations:
                try:
                    vals.append(morrey_norm(dilate(f, d), w, params, family).value)
                except ValueError as exc:
                    raise ValueError(f"dilation by {d} rejected: {exc}") from None
            if not all(0 < v < INF for v in vals):
                continue
            s = float(np.polyfit(logs, np.log2(vals), 1)[0])
            err = abs(s - pred)
            if err > worst:
                worst, worst_kind, fitted = err, kind, s
            errs.append(err)
    if worst_kind is None:
        return row(agreement="unstable")
    agreement = "agree" if worst <= tol else "disagree"
    return row(witness=witness_name(worst_kind), value=worst, slope=fitted, agreement=agreement)


def run_scaling_law_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _scaling_cell)


# -- space identification --------------------------------------------------


def equivalence_band(cfg: ExperimentConfig, params: MorreyParams, beta: float, m: int) -> tuple[float, float]:
    """``(min, max)`` over the catalog of the ratio of the two identified norms."""
    target, beta2 = identify_space(params, beta)
    spec = cfg.grid(m)
    family = cfg.ball_family()
    w1, w2 = PowerWeight(beta, cfg.n), PowerWeight(beta2, cfg.n)
    ratios = []
    for kind in witness_kinds(cfg):
        f = build_witness(kind, spec, params, w1)
        a = morrey_norm(f, w1, params, family).value
        b = morrey_norm(f, w2, target, family).value
        if 0 < a < INF and 0 < b < INF:
            ratios.append(a / b)
    if not ratios:
        raise ValueError("no witness has finite nonzero norms in both spaces")
    return min(ratios), max(ratios)


def _equivalence_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    beta = cell["beta"]
    try:
        identify_space(params, beta)
    except ValueError as exc:
        return _row(cfg, cell, analytic_verdict="rejected", citation="power-spaces(a)",
                    agreement="trivial", evidence={"reason": str(exc)})
    spreads = []
    for m in cfg.refinements[-2:]:
        lo, hi = equivalence_band(cfg, params, beta, m)
        spreads.append(hi / lo)
    drift = abs(spreads[1] - spreads[0]) / spreads[1]
    return _row(cfg, cell, analytic_verdict="equivalent", citation="power-spaces(a)",
                value=spreads[1], slope=drift, agreement="agree" if drift < 0.10 else "unstable",
                evidence={"spreads": spreads})


def run_equivalence_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _equivalence_cell)


# -- embedding -------------------------------------------------------------


def _embedding_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    try:
        q, s = embedding_exponents(params)
    except ValueError as exc:
        return _row(cfg, cell, analytic_verdict="rejected", citation="embedding", agreement="trivial",
                    evidence={"reason": str(exc)})
    w = PowerWeight(cell["beta"], cfg.n)
    ws = weight_power(w, s)
    family = cfg.ball_family()
    worst, worst_kind = 0.0, None
    for m in cfg.refinements[-2:]:
        spec = cfg.grid(m)
        for kind in witness_kinds(cfg):
            f = build_witness(kind, spec, params, w)
            top = morrey_norm(f, w, params, family, normalization="measure").value
            bottom = lebesgue_norm(f, ws, q)
            if bottom == INF or bottom == 0:
                continue
            ratio = top / bottom
            if ratio > worst:
                worst, worst_kind = ratio, kind
    name = witness_name(worst_kind) if worst_kind is not None else ""
    return _row(cfg, cell, analytic_verdict=f"ratio<=1 (q={q:.6g}, s={s:.6g})", citation="embedding",
                witness=name, value=worst, agreement="agree" if worst <= 1.02 else "disagree")


def run_embedding_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _embedding_cell)


# -- extrapolation (Hilbert transform) -------------------------------------


def _extrapolation_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    beta = cell["beta"]
    inside = extrapolation_region_power(params.p, beta, params.lam, cfg.n)
    verdict = "bounded" if inside else "outside-theory"
    w = PowerWeight(beta, cfg.n)
    family = cfg.ball_family()
    bounds = []
    for m in cfg.refinements:
        spec = cfg.grid(m)
        catalog = [build_witness(k, spec, params, w) for k in witness_kinds(cfg)]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            bounds.append(operator_norm_lower_bound(hilbert_truncated, w, params, family, catalog))
    growth = max(b2 / b1 - 1 for b1, b2 in zip(bounds, bounds[1:]))
    if inside:
        agreement = "agree" if growth < 0.05 else "disagree"
    else:
        agreement = "unstable"
    return _row(cfg, cell, analytic_verdict=verdict, citation="power-extrapolation", value=bounds[-1],
                slope=growth, agreement=agreement, evidence={"bounds": bounds})


def run_extrapolation_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _extrapolation_cell)


# -- reduction to type II balls --------------------------------------------


def reduction_ratio(cfg: ExperimentConfig, params: MorreyParams, w, spec: GridSpec) -> float:
    """``max_f norm_All(f) / norm_TypeII(f)`` over the catalog."""
    best = 0.0
    full = cfg.ball_family(strategy=Strategy.ALL)
    only2 = cfg.ball_family(strategy=Strategy.TYPE_II_ONLY)
    for kind in witness_kinds(cfg):
        f = build_witness(kind, spec, params, w)
        a = morrey_norm(f, w, params, full).value
        b = morrey_norm(f, w, params, only2).value
        if b == 0:
            continue
        best = max(best, a / b)
    return best


def _reduction_cell(cfg: ExperimentConfig, cell: dict) -> ExperimentRow:
    params = _params(cfg, cell)
    w = PowerWeight(cell["beta"], cfg.n)
    admissible = reduction_admissible(params, w)
    verdict = "reducible" if admissible else "not-reducible"
    if admissible:
        ratios = [reduction_ratio(cfg, params, w, cfg.grid(m)) for m in cfg.refinements[-2:]]
        drift = abs(ratios[1] - ratios[0]) / ratios[1] if ratios[1] else math.inf
        ok = all(math.isfinite(r) for r in ratios) and drift < 0.10
        return _row(cfg, cell, analytic_verdict=verdict, citation="reduction", value=ratios[1],
                    slope=drift, agreement="agree" if ok else "disagree", evidence={"ratios": ratios})
    # no reduction: the ratio should grow with the domain radius
    spec = cfg.grid(cfg.refinements[-1])
    ratios = [reduction_ratio(cfg, params, w, spec.enlarge(2**j)) for j in range(3)]
    growth = fit_slope(range(3), ratios)
    agreement = "agree" if classify_slope(growth) == "unbounded" else "unstable"
    return _row(cfg, cell, analytic_verdict=verdict, citation="reduction", value=ratios[-1],
                slope=growth, agreement=agreement, evidence={"ratios": ratios})


def run_reduction_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _reduction_cell)


# -- plain norms -----------------------------------------------------------


def _norm_cell(cfg: ExperimentConfig, cell: dict) -> list[ExperimentRow]:
    params = _params(cfg, cell)
    beta = cell["beta"]
    triv = space_is_trivial(params, beta)
    w = PowerWeight(beta, cfg.n)
    spec = cfg.grid(cfg.refinements[-1])
    family = cfg.ball_family()
    rows = []
    for kind in witness_kinds(cfg):
        f = build_witness(kind, spec, params, w)
        est = morrey_norm(f, w, params, family)
        rows.append(_row(cfg, cell, witness=witness_name(kind), refinement=str(spec.m), value=est.value,
                         analytic_verdict=triv.verdict, citation=triv.citation,
                         agreement="trivial" if triv.verdict == "trivial-space" else "agree"))
    return rows


def run_norm_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _norm_cell)


# -- dispatch --------------------------------------------------------------


_CELL_RUNNERS = {
    "norm": _norm_cell, "maximal-range": _maximal_cell, "equivalence": _equivalence_cell,
    "embedding": _embedding_cell, "extrapolation": _extrapolation_cell,
    "scaling-law": _scaling_cell, "reduction": _reduction_cell,
}


def _run_cell(args) -> list[ExperimentRow]:
    runner, cfg, cell = args
    out = runner(cfg, cell)
    return out if isinstance(out, list) else [out]


def _map(cfg: ExperimentConfig, runner) -> list[ExperimentRow]:
    jobs = [(runner, cfg, c) for c in cfg.parameter_cells()]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_cell, jobs))
    else:
        chunks = [_run_cell(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    return _map(cfg, _CELL_RUNNERS[cfg.experiment])


# -- reporting -------------------------------------------------------------


def summarize(rows: Sequence[ExperimentRow]) -> dict:
    """``{tag: {agree, disagree, unstable, trivial}}``; domain-sensitive rows count as unstable."""
    out: dict[str, dict[str, int]] = {}
    for r in rows:
        counts = out.setdefault(r.tag or TAGS.get(r.experiment, r.experiment),
                                {k: 0 for k in OUTCOMES})
        key = r.agreement if r.agreement in OUTCOMES else "unstable"
        counts[key] += 1
    return out


def render_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(COLUMNS)
    for r in rows:
        wr.writerow(r.csv_fields())
    return buf.getvalue()


def run_report(rows: Sequence[ExperimentRow], path) -> tuple[Path, Path]:
    """Write ``path`` (CSV) and ``path`` with a ``.json`` suffix (summary)."""
    path = Path(path)
    path.write_text(render_csv(rows))
    summary_path = path.with_suffix(".json")
    summary_path.write_text(json.dumps(summarize(rows), indent=2, sort_keys=True) + "\n")
    return path, summary_path


def read_rows(path) -> list[ExperimentRow]:
    """Parse a CSV written by :func:`run_report`."""
    rows = []
    with Path(path).open() as fh:
        for rec in csv.DictReader(fh):
            kw: dict[str, Any] = dict(rec)
            for k in ("p", "lambda1", "lambda2", "beta", "alpha", "value", "slope"):
                kw[k] = float(kw[k])
            kw["n"] = int(kw["n"])
            rows.append(ExperimentRow(**kw, tag=TAGS.get(kw["experiment"], kw["experiment"])))
    return rows


def exit_code(rows: Sequence[ExperimentRow]) -> int:
    return 0 if not any(r.agreement == "disagree" for r in rows) else 1
