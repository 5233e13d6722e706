"""Johansen reduced-rank test for cointegration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from .exceptions import DecompositionError, InsufficientDataError, NumericError
from .kernels import residualize, solve_gev
from .series import Dataset

DET_SPECS = ("none", "rconstant", "constant", "rtrend", "trend")
STATISTICS = ("trace", "max")
MAX_K_MINUS_R = 6


@lru_cache(maxsize=None)
def _cv_table(det_spec: str) -> Dict[int, Dict[str, float]]:
    fname = f"johansen_cv_{det_spec}.txt"
    text = resources.files("pollrebound.data").joinpath(fname).read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        k_r, trace, mx = line.split()
        table[int(k_r)] = {"trace": float(trace), "max": float(mx)}
    return table


def johansen_critical_values(k_minus_r: int, statistic_kind: str = "trace", det_spec: str = "trend") -> float:
    """5% critical value for the trace or max-eigenvalue statistic."""
    if det_spec not in DET_SPECS:
        raise ValueError(f"unknown det_spec {det_spec!r}; use one of {DET_SPECS}")
    if statistic_kind not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic_kind!r}; use one of {STATISTICS}")
    if not 1 <= k_minus_r <= MAX_K_MINUS_R:
        raise ValueError(f"k - r = {k_minus_r} outside the bundled range 1..{MAX_K_MINUS_R}")
    return _cv_table(det_spec)[k_minus_r][statistic_kind]


@dataclass(frozen=True)
class RankRow:
    rank: int
    log_likelihood: float
    eigenvalue: float
    trace_stat: float
    trace_cv_5: float
    max_stat: float
    max_cv_5: float

    @property
    def trace_rejects(self) -> bool:
        return self.trace_stat > self.trace_cv_5

    @property
    def max_rejects(self) -> bool:
        return self.max_stat > self.max_cv_5


@dataclass(frozen=True)
class CointegrationResult:
    """One row per null hypothesis ``rank <= r``, r = 0..k-1.

    ``selected_rank`` is the first r whose trace statistic does not exceed its
    5% critical value (k when every null is rejected). ``selected_rank_max`` is
    the same rule applied to the max-eigenvalue statistic, reported only.
    """

    rows: List[RankRow]
    selected_rank: int
    selected_rank_max: int
    n_obs: int
    var_lags: int
    det_spec: str
    names: Optional[List[str]] = None

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([r.eigenvalue for r in self.rows])

    @property
    def trace_stats(self) -> np.ndarray:
        return np.array([r.trace_stat for r in self.rows])

    @property
    def max_stats(self) -> np.ndarray:
        return np.array([r.max_stat for r in self.rows])


def _select(stats: Sequence[float], cvs: Sequence[float]) -> int:
    for r, (s, cv) in enumerate(zip(stats, cvs)):
        if s <= cv:
            return r
    return len(stats)


def johansen_test(
    data: Union[Dataset, np.ndarray],
    var_lags: int = 1,
    det_spec: str = "trend",
) -> CointegrationResult:
    """Johansen trace and max-eigenvalue statistics.

    Parameters
    ----------
    data : Dataset or array of shape (n_years, k)
        Levels of the k series.
    var_lags : int
        Lag order p of the VAR in levels; the VECM carries p-1 lagged differences.
    det_spec : str
        ``none``, ``rconstant`` (constant inside the cointegrating relation),
        ``constant``, ``rtrend`` (trend inside the relation, free constant) or
        ``trend`` (free constant and trend).
    """
    if det_spec not in DET_SPECS:
        raise ValueError(f"unknown det_spec {det_spec!r}; use one of {DET_SPECS}")
    if var_lags < 1:
        raise ValueError("var_lags must be a positive integer")
    names = None
    if isinstance(data, Dataset):
        names = data.names
        Y = data.matrix()
    else:
        Y = np.asarray(data, dtype=float)
    if Y.ndim != 2 or Y.shape[1] < 2:
        raise ValueError("need a 2-D array with at least two series")
    n_total, k = Y.shape
    if k > MAX_K_MINUS_R:
        raise ValueError(f"at most {MAX_K_MINUS_R} series are supported by the bundled tables")
    p = var_lags
    T = n_total - p
    if T < 5 * k:
        raise InsufficientDataError(f"{T} usable observations; need at least {5 * k} for {k} series")

    dY = np.diff(Y, axis=0)
    Z0 = dY[p - 1 :]
    Z1 = Y[p - 1 : -1]
    short_run = [dY[p - 1 - j : n_total - 1 - j] for j in range(1, p)]
    ones = np.ones((T, 1))
    trend = np.arange(1, T + 1, dtype=float)[:, None]
    if det_spec == "rconstant":
        Z1 = np.hstack([Z1, ones])
    elif det_spec == "constant":
        short_run.append(ones)
    elif det_spec == "rtrend":
        Z1 = np.hstack([Z1, trend])
        short_run.append(ones)
    elif det_spec == "trend":
        short_run.extend([ones, trend])
    Z2 = np.hstack(short_run) if short_run else None

    try:
        R0 = residualize(Z0, Z2)
        R1 = residualize(Z1, Z2)
    except NumericError as exc:
        raise DecompositionError(f"short-run regressors are collinear: {exc}") from exc
    S00 = R0.T @ R0 / T
    S01 = R0.T @ R1 / T
    S11 = R1.T @ R1 / T
    try:
        L00 = np.linalg.cholesky(S00)
    except np.linalg.LinAlgError as exc:
        raise DecompositionError("residual moment matrix S00 is singular") from exc
    W = np.linalg.solve(L00, S01)
    try:
        pairs = solve_gev(W.T @ W, S11)
    except DecompositionError as exc:
        raise DecompositionError("residual moment matrix S11 is singular") from exc

    lam = np.clip([pr.eigenvalue for pr in pairs[:k]], 0.0, None)
    if lam[0] >= 1.0:
        raise DecompositionError("eigenvalue at or above 1; moment matrices are degenerate")
    log1m = np.log1p(-lam)
    max_stats = -T * log1m
    trace_stats = np.cumsum(max_stats[::-1])[::-1]
    logdet00 = 2.0 * float(np.sum(np.log(np.diag(L00))))
    ll0 = -0.5 * T * k * (math.log(2.0 * math.pi) + 1.0) - 0.5 * T * logdet00
    ll = ll0 - 0.5 * T * np.concatenate([[0.0], np.cumsum(log1m)])

    rows = []
    for r in range(k):
        rows.append(
            RankRow(
                rank=r,
                log_likelihood=float(ll[r]),
                eigenvalue=float(lam[r]),
                trace_stat=float(trace_stats[r]),
                trace_cv_5=johansen_critical_values(k - r, "trace", det_spec),
                max_stat=float(max_stats[r]),
                max_cv_5=johansen_critical_values(k - r, "max", det_spec),
            )
        )
    return CointegrationResult(
        rows=rows,
        selected_rank=_select(trace_stats, [row.trace_cv_5 for row in rows]),
        selected_rank_max=_select(max_stats, [row.max_cv_5 for row in rows]),
        n_obs=T,
        var_lags=p,
        det_spec=det_spec,
        names=names,
    )
