"""Travel-demand regression, elasticity-to-rebound conversion, PRE categories
and the fuel-based emissions identity."""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from .exceptions import ConfigError, DegenerateModelError, InsufficientDataError
from .kernels import OlsFit, ols_fit
from .series import Dataset

DEPENDENT = "lnVKM"
REGRESSORS = ("lnY", "lnP", "lnV")
MIN_USABLE = 10
EQ_TOL = 1e-9
DEGENERATE_TOL = 1e-9


class Convention(str, enum.Enum):
    """How a price elasticity is turned into a rebound figure.

    ``REPORTED`` gives ``-eta - 1`` (short run) and ``-eta/(1 - lag) - 1`` (long
    run). ``EQ_ALGEBRA`` drops the ``- 1``. The two always differ by exactly 1.
    """

    REPORTED = "reported"
    EQ_ALGEBRA = "eq-algebra"


class PreCategory(str, enum.Enum):
    NEGATIVE_EFFECT = "negative-effect"
    COMPLETELY_INEFFECTIVE = "completely-ineffective"
    PARTIALLY_INEFFECTIVE = "partially-ineffective"
    FULLY_EFFECTIVE = "fully-effective"
    POSITIVE_EFFECT = "positive-effect"

    @property
    def rebound_exists(self) -> bool:
        return self in _REBOUND

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def implication(self) -> str:
        return _IMPLICATIONS[self]


_REBOUND = {
    PreCategory.NEGATIVE_EFFECT,
    PreCategory.COMPLETELY_INEFFECTIVE,
    PreCategory.PARTIALLY_INEFFECTIVE,
}
_LABELS = {
    PreCategory.NEGATIVE_EFFECT: "Negative effect",
    PreCategory.COMPLETELY_INEFFECTIVE: "Completely ineffective",
    PreCategory.PARTIALLY_INEFFECTIVE: "Partially ineffective",
    PreCategory.FULLY_EFFECTIVE: "Fully effective",
    PreCategory.POSITIVE_EFFECT: "Positive effect",
}
_IMPLICATIONS = {
    PreCategory.NEGATIVE_EFFECT: "Emissions rose despite the efficiency policy (PRE > 1).",
    PreCategory.COMPLETELY_INEFFECTIVE: "Induced travel cancelled the whole planned emission cut (PRE = 1).",
    PreCategory.PARTIALLY_INEFFECTIVE: "Part of the planned emission cut was lost to induced travel (0 < PRE < 1).",
    PreCategory.FULLY_EFFECTIVE: "The planned emission cut was achieved exactly (PRE = 0).",
    PreCategory.POSITIVE_EFFECT: "Actual emission cuts exceeded the planned cut (PRE < 0).",
}


def classify_pre(pre: float) -> PreCategory:
    """Place a PRE value in one of the five policy-effect categories.

    Equality with 0 and 1 is judged within an absolute tolerance of 1e-9.
    """
    pre = float(pre)
    if not math.isfinite(pre):
        raise ValueError(f"PRE must be finite, got {pre!r}")
    if abs(pre - 1.0) <= EQ_TOL:
        return PreCategory.COMPLETELY_INEFFECTIVE
    if abs(pre) <= EQ_TOL:
        return PreCategory.FULLY_EFFECTIVE
    if pre > 1.0:
        return PreCategory.NEGATIVE_EFFECT
    if pre > 0.0:
        return PreCategory.PARTIALLY_INEFFECTIVE
    return PreCategory.POSITIVE_EFFECT


@dataclass(frozen=True, eq=False)
class VkmModelFit:
    """Coefficients of the log-log travel demand equation.

    ``lambda_vkm`` is the coefficient on ``lnVKM_{t-dep_lag}``. Extra dependent
    lags, when requested, sit in ``extra_lags`` keyed by lag order; the long-run
    multiplier uses the sum of all dependent-lag coefficients.
    """

    lambda_0: float
    lambda_Y: float
    lambda_P: float
    lambda_V: float
    lambda_vkm: float
    ols: OlsFit = field(repr=False)
    dep_lag: int = 2
    extra_lags: Dict[int, float] = field(default_factory=dict)
    years: Tuple[int, int] = (0, 0)

    @property
    def term_names(self) -> list:
        lags = [self.dep_lag, *self.extra_lags]
        return ["const", *REGRESSORS, *(f"{DEPENDENT}_lag{q}" for q in lags)]

    @property
    def lag_sum(self) -> float:
        return self.lambda_vkm + sum(self.extra_lags.values())


def fit_vkm_model(data: Dataset, dep_lag: int = 2, extra_dep_lags: Sequence[int] = ()) -> VkmModelFit:
    """OLS of lnVKM_t on a constant, lnY_t, lnP_t, lnV_t and lnVKM_{t-dep_lag}.

    Columns are looked up by name, so their order in ``data`` is irrelevant.
    ``extra_dep_lags`` adds further lnVKM lags (the distributed-lag form).
    """
    if dep_lag < 1:
        raise ValueError("dep_lag must be >= 1")
    extra = [int(q) for q in extra_dep_lags]
    if any(q < 1 for q in extra) or dep_lag in extra or len(set(extra)) != len(extra):
        raise ValueError("extra_dep_lags must be distinct positive lags different from dep_lag")
    missing = [c for c in (DEPENDENT, *REGRESSORS) if c not in data]
    if missing:
        raise KeyError(f"dataset lacks required columns {missing}")

    y_all = data[DEPENDENT].values
    max_lag = max([dep_lag, *extra])
    n = len(data) - max_lag
    if n < MIN_USABLE:
        raise InsufficientDataError(f"{n} usable observations after lagging; need {MIN_USABLE}")
    cols = [data[c].values[max_lag:] for c in REGRESSORS]
    for q in (dep_lag, *extra):
        cols.append(y_all[max_lag - q : max_lag - q + n])
    fit = ols_fit(y_all[max_lag:], np.column_stack(cols), intercept=True)
    b = fit.coefficients
    first = data.year_range[0] + max_lag
    return VkmModelFit(
        lambda_0=float(b[0]),
        lambda_Y=float(b[1]),
        lambda_P=float(b[2]),
        lambda_V=float(b[3]),
        lambda_vkm=float(b[4]),
        ols=fit,
        dep_lag=dep_lag,
        extra_lags={q: float(c) for q, c in zip(extra, b[5:])},
        years=(first, data.year_range[1]),
    )


@dataclass(frozen=True)
class PreResult:
    short_run: float
    long_run: float
    convention: Convention
    category_short: PreCategory
    category_long: PreCategory


def pre_from_coefficients(lambda_P: float, lag_sum: float, convention="reported") -> PreResult:
    """Short- and long-run PRE from the price elasticity and the dependent-lag coefficient(s)."""
    convention = Convention(convention)
    denom = 1.0 - lag_sum
    if abs(denom) <= DEGENERATE_TOL:
        raise DegenerateModelError(f"lagged-dependent coefficient {lag_sum!r} is 1; no long run exists")
    offset = 1.0 if convention is Convention.REPORTED else 0.0
    short = -lambda_P - offset
    long = -lambda_P / denom - offset
    return PreResult(short, long, convention, classify_pre(short), classify_pre(long))


def compute_pre(fit: VkmModelFit, convention="reported") -> PreResult:
    return pre_from_coefficients(fit.lambda_P, fit.lag_sum, convention)


class EmissionFactors:
    """Mass of each pollutant emitted per unit of each fuel; all factors >= 0."""

    def __init__(self, factors: Mapping[Tuple[str, str], float], units: Mapping[Tuple[str, str], str] = None):
        clean = {}
        for (fuel, pollutant), value in factors.items():
            value = float(value)
            if not math.isfinite(value) or value < 0:
                raise ConfigError(f"emission factor for ({fuel}, {pollutant}) must be finite and >= 0")
            clean[(fuel, pollutant)] = value
        self.factors = clean
        self.units = dict(units or {})

    def __getitem__(self, key: Tuple[str, str]) -> float:
        return self.factors[key]

    def __contains__(self, key) -> bool:
        return key in self.factors

    @property
    def pollutants(self) -> list:
        return sorted({p for _, p in self.factors})

    @classmethod
    def load(cls, path) -> "EmissionFactors":
        """Read a ``fuel,pollutant,factor,unit`` CSV table; ``#`` lines are comments."""
        path = Path(path)
        try:
            lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            raise ConfigError(f"cannot read emission factors {path}: {exc}") from exc
        reader = csv.DictReader(lines)
        expected = ["fuel", "pollutant", "factor", "unit"]
        if [h.strip() for h in (reader.fieldnames or [])] != expected:
            raise ConfigError(f"{path}: header must be {','.join(expected)}")
        factors, units = {}, {}
        for lineno, row in enumerate(reader, start=2):
            key = (row["fuel"].strip(), row["pollutant"].strip())
            if key in factors:
                raise ConfigError(f"{path}: duplicate factor for {key}")
            try:
                factors[key] = float(row["factor"])
            except (TypeError, ValueError):
                raise ConfigError(f"{path}: row {lineno}: factor {row['factor']!r} is not a number") from None
            units[key] = (row["unit"] or "").strip()
        return cls(factors, units)


def emissions_from_fuel(fuel: Mapping[str, float], factors: EmissionFactors, pollutant: str) -> float:
    """Emissions of one pollutant: sum over fuels of quantity times factor."""
    total = 0.0
    for fuel_type, quantity in fuel.items():
        if (fuel_type, pollutant) not in factors:
            raise ConfigError(f"no emission factor for fuel {fuel_type!r}, pollutant {pollutant!r}")
        total += float(quantity) * factors[(fuel_type, pollutant)]
    return total
