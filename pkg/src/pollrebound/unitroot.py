"""Dickey-Fuller / ADF and Phillips-Perron unit-root tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, Optional, Union

import numpy as np

from .exceptions import InsufficientDataError
from .kernels import OlsFit, default_bandwidth, newey_west_lrv, ols_fit
from .series import TimeSeries

LEVELS = ("1%", "5%", "10%")
SPECS = ("c", "ct")
MIN_USABLE = 8

_LEVEL_ALIASES = {"1%": "1%", "5%": "5%", "10%": "10%", 0.01: "1%", 0.05: "5%", 0.1: "10%"}


def _level_key(level) -> str:
    try:
        return _LEVEL_ALIASES[level]
    except (KeyError, TypeError):
        raise ValueError(f"unsupported significance level {level!r}; use one of {LEVELS}") from None


@lru_cache(maxsize=None)
def _surface() -> Dict[tuple, tuple]:
    text = resources.files("pollrebound.data").joinpath("df_response_surface.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        spec, level, *coefs = line.split()
        table[(spec, level)] = tuple(float(c) for c in coefs)
    return table


def unit_root_critical_values(n_usable: int, spec: str = "c", level="5%") -> float:
    """Left-tail critical value of the DF tau statistic at sample size ``n_usable``."""
    key = _level_key(level)
    if spec not in SPECS:
        raise ValueError(f"unsupported deterministic spec {spec!r}; use one of {SPECS}")
    if n_usable < MIN_USABLE:
        raise InsufficientDataError(f"critical values need n_usable >= {MIN_USABLE}, got {n_usable}")
    b_inf, b1, b2 = _surface()[(spec, key)]
    return b_inf + b1 / n_usable + b2 / n_usable**2


@dataclass(frozen=True)
class UnitRootResult:
    """Test statistic with its critical values; rejection means no unit root."""

    test: str
    statistic: float
    critical_values: Dict[str, float]
    reject_at: Dict[str, bool]
    spec: str
    lags_or_bandwidth: int
    n_usable: int
    series_name: Optional[str] = None

    @property
    def stars(self) -> str:
        """'***', '**', '*' for rejection at 1%, 5%, 10%; empty otherwise."""
        for level, mark in zip(LEVELS, ("***", "**", "*")):
            if self.reject_at[level]:
                return mark
        return ""


@dataclass(frozen=True, eq=False)
class DFRegression:
    """The Dickey-Fuller auxiliary regression behind both tests."""

    statistic: float
    fit: OlsFit = field(repr=False)
    n_usable: int
    rho_index: int


def _values(s) -> tuple:
    if isinstance(s, TimeSeries):
        return s.values, s.name
    return np.asarray(s, dtype=float).reshape(-1), None


def df_regression(s, lags: int = 0, spec: str = "c") -> DFRegression:
    """Regress dy_t on [1, (t), y_{t-1}, dy_{t-1}, ..., dy_{t-lags}].

    Only requires a positive residual degree of freedom, so it also serves
    samples too short for :func:`adf_test`'s critical values.
    """
    if spec not in SPECS:
        raise ValueError(f"unsupported deterministic spec {spec!r}; use one of {SPECS}")
    if lags < 0:
        raise ValueError("lags must be non-negative")
    y, _ = _values(s)
    dy = np.diff(y)
    n = dy.size - lags
    if n < 1:
        raise InsufficientDataError(f"{y.size} observations cannot support {lags} lags")
    cols = []
    if spec == "ct":
        cols.append(np.arange(1, n + 1, dtype=float))
    cols.append(y[lags : lags + n])
    for j in range(1, lags + 1):
        cols.append(dy[lags - j : lags - j + n])
    X = np.column_stack(cols)
    fit = ols_fit(dy[lags:], X, intercept=True)
    idx = 2 if spec == "ct" else 1
    return DFRegression(float(fit.t_stats[idx]), fit, n, idx)


def pp_statistic(reg: DFRegression, bandwidth: int) -> float:
    """Phillips-Perron Z_t from a lags=0 DF regression.

    ``Z_t = sqrt(g0/lrv) * t - (lrv - g0) * T * se(rho) / (2 * sqrt(lrv) * s)``
    with ``g0`` the residual variance over T, ``lrv`` its Bartlett long-run
    variance and ``s`` the residual standard error. Equals ``t`` at bandwidth 0.
    """
    fit = reg.fit
    T = fit.n_obs
    u = fit.residuals
    g0 = float(u @ u) / T
    lrv = newey_west_lrv(u, bandwidth)
    if bandwidth == 0:
        return reg.statistic
    if lrv <= 0:
        raise InsufficientDataError("long-run variance estimate is zero")
    se_rho = float(fit.std_errors[reg.rho_index])
    s = fit.sigma
    return math.sqrt(g0 / lrv) * reg.statistic - 0.5 * (lrv - g0) / math.sqrt(lrv) * T * se_rho / s


def _result(test, stat, spec, order, n, name) -> UnitRootResult:
    cvs = {lv: unit_root_critical_values(n, spec, lv) for lv in LEVELS}
    return UnitRootResult(
        test=test,
        statistic=stat,
        critical_values=cvs,
        reject_at={lv: bool(stat < cv) for lv, cv in cvs.items()},
        spec=spec,
        lags_or_bandwidth=order,
        n_usable=n,
        series_name=name,
    )


def _check_usable(n: int):
    if n < MIN_USABLE:
        raise InsufficientDataError(f"unit-root tests need at least {MIN_USABLE} usable observations, got {n}")


def adf_test(s: Union[TimeSeries, np.ndarray], lags: int = 0, spec: str = "c") -> UnitRootResult:
    """Augmented Dickey-Fuller test; ``lags=0`` is the plain DF test.

    The statistic is the t-ratio on y_{t-1}; the null of a unit root is rejected
    at a level when the statistic falls below that level's critical value.
    """
    y, name = _values(s)
    _check_usable(y.size - 1 - lags)
    reg = df_regression(y, lags, spec)
    return _result("DF" if lags == 0 else "ADF", reg.statistic, spec, lags, reg.n_usable, name)


def pp_test(
    s: Union[TimeSeries, np.ndarray], bandwidth: Optional[int] = None, spec: str = "c"
) -> UnitRootResult:
    """Phillips-Perron Z_t test with a Bartlett long-run variance.

    ``bandwidth=None`` uses the automatic rule on the usable sample size.
    """
    y, name = _values(s)
    _check_usable(y.size - 1)
    reg = df_regression(y, 0, spec)
    if bandwidth is None:
        bandwidth = default_bandwidth(reg.n_usable)
    return _result("PP", pp_statistic(reg, bandwidth), spec, bandwidth, reg.n_usable, name)
