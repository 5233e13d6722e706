"""Seeded synthetic processes for Monte-Carlo checks and the demo dataset.

All draws come from numpy's PCG64 bit generator seeded with the integer in the
:class:`GenSpec`, through ``Generator.standard_normal``. Nothing reads global RNG state, so
a given :class:`GenSpec` always yields the same numbers. Replicate ``i`` of a
study should use ``seed + i``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping

import numpy as np

from .series import Dataset, TimeSeries

KINDS = ("random-walk", "ar1", "cointegrated-pair", "vkm-model")
MIN_NOISE = 1e-6

VKM_DEFAULTS: Dict[str, Any] = {
    "lambda_0": 0.5,
    "lambda_Y": 0.6,
    "lambda_P": 0.4,
    "lambda_V": 0.06,
    "lambda_vkm": -0.7,
    "dep_lag": 2,
    "sigma": 0.01,
    "start_year": 1986,
    "lnY0": 2.7, "lnY_drift": 0.055, "lnY_sigma": 0.03,
    "lnP0": 3.0, "lnP_drift": 0.03, "lnP_sigma": 0.08,
    "lnV0": 5.0, "lnV_drift": 0.06, "lnV_sigma": 0.05,
    "lnVKM0": 2.3,
    "population0": 1.05e9, "population_growth": 0.008,
}


@dataclass(frozen=True)
class GenSpec:
    kind: str
    length: int
    seed: int = 0
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; use one of {KINDS}")
        if int(self.length) < 2:
            raise ValueError("length must be at least 2")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        for key, value in self.params.items():
            if "sigma" in key and float(value) < 0:
                raise ValueError(f"{key} must be non-negative")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(int(self.seed)))

    def get(self, key, default):
        return self.params.get(key, default)


def _expect(spec: GenSpec, kind: str):
    if spec.kind != kind:
        raise ValueError(f"spec kind {spec.kind!r} passed to the {kind!r} generator")


def gen_random_walk(spec: GenSpec) -> TimeSeries:
    """``y_t = y_{t-1} + drift + sigma * e_t`` from ``y_0 = 0``."""
    _expect(spec, "random-walk")
    drift = float(spec.get("drift", 0.0))
    sigma = float(spec.get("sigma", 1.0))
    eps = spec.rng().standard_normal(spec.length - 1)
    y = np.concatenate([[0.0], np.cumsum(drift + sigma * eps)])
    return TimeSeries(spec.get("name", "rw"), spec.get("start_year", 1), y)


def gen_ar1(spec: GenSpec) -> TimeSeries:
    """``y_t = phi * y_{t-1} + sigma * e_t``; ``y0`` (default 0) sets the first value."""
    _expect(spec, "ar1")
    phi = float(spec.get("phi", 0.5))
    if abs(phi) >= 1:
        raise ValueError("|phi| must be < 1; use the random-walk generator for unit roots")
    sigma = float(spec.get("sigma", 1.0))
    eps = spec.rng().standard_normal(spec.length - 1)
    y = np.empty(spec.length)
    y[0] = float(spec.get("y0", 0.0))
    for t in range(1, spec.length):
        y[t] = phi * y[t - 1] + sigma * eps[t - 1]
    return TimeSeries(spec.get("name", "ar1"), spec.get("start_year", 1), y)


def gen_cointegrated_pair(spec: GenSpec) -> Dataset:
    """``x`` a driftless random walk, ``y = beta * x + sigma_noise * u``."""
    _expect(spec, "cointegrated-pair")
    beta = float(spec.get("beta", 1.0))
    sigma = float(spec.get("sigma", 1.0))
    noise = float(spec.get("sigma_noise", 0.1))
    if noise < MIN_NOISE:
        raise ValueError(f"sigma_noise below {MIN_NOISE} makes the pair degenerate")
    draws = spec.rng().standard_normal((2, spec.length))
    x = np.concatenate([[0.0], np.cumsum(sigma * draws[0, 1:])])
    y = beta * x + noise * draws[1]
    start = spec.get("start_year", 1)
    return Dataset([TimeSeries("x", start, x), TimeSeries("y", start, y)])


def gen_vkm_dataset(spec: GenSpec) -> Dataset:
    """Forward-simulate the travel demand equation.

    lnY, lnP and lnV are drifting random walks; lnVKM follows
    ``l0 + lY lnY_t + lP lnP_t + lV lnV_t + lvkm lnVKM_{t-q} + sigma e_t`` with the
    first q values held at ``lnVKM0``. A deterministic population path is added
    so raw per-capita levels can be reconstructed for CSV output.
    """
    _expect(spec, "vkm-model")
    p = {**VKM_DEFAULTS, **spec.params}
    unknown = set(spec.params) - set(VKM_DEFAULTS)
    if unknown:
        raise ValueError(f"unknown vkm-model parameters: {sorted(unknown)}")
    if abs(p["lambda_vkm"]) >= 1:
        raise ValueError("|lambda_vkm| must be < 1 for a stable simulation")
    q = int(p["dep_lag"])
    n = spec.length
    if q < 1 or n <= q:
        raise ValueError("need 1 <= dep_lag < length")

    draws = spec.rng().standard_normal((4, n))
    cols = {}
    for i, name in enumerate(("lnY", "lnP", "lnV")):
        steps = p[f"{name}_drift"] + p[f"{name}_sigma"] * draws[i, 1:]
        cols[name] = p[f"{name}0"] + np.concatenate([[0.0], np.cumsum(steps)])
    vkm = np.full(n, float(p["lnVKM0"]))
    for t in range(q, n):
        vkm[t] = (
            p["lambda_0"]
            + p["lambda_Y"] * cols["lnY"][t]
            + p["lambda_P"] * cols["lnP"][t]
            + p["lambda_V"] * cols["lnV"][t]
            + p["lambda_vkm"] * vkm[t - q]
            + p["sigma"] * draws[3, t]
        )
    population = p["population0"] * (1.0 + p["population_growth"]) ** np.arange(n)
    start = int(p["start_year"])
    return Dataset(
        [
            TimeSeries("lnVKM", start, vkm),
            TimeSeries("lnY", start, cols["lnY"]),
            TimeSeries("lnP", start, cols["lnP"]),
            TimeSeries("lnV", start, cols["lnV"]),
            TimeSeries("population", start, population),
        ]
    )


DEMO_COLUMNS = ("year", "passenger_km", "disposable_income", "diesel_price", "vehicles", "population")


def write_demo_csv(data: Dataset, path) -> Path:
    """Write raw levels in the pipeline's input schema.

    passenger-km and income become national totals (per-capita value times
    population), price and vehicle stock stay as levels, so the default demo
    config recovers the simulated logs through per-capita and log transforms.
    """
    path = Path(path)
    pop = data["population"].values
    raw = {
        "passenger_km": np.exp(data["lnVKM"].values) * pop,
        "disposable_income": np.exp(data["lnY"].values) * pop,
        "diesel_price": np.exp(data["lnP"].values),
        "vehicles": np.exp(data["lnV"].values),
        "population": pop,
    }
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(DEMO_COLUMNS)
        for i, year in enumerate(data.years):
            w.writerow([int(year), *(repr(float(raw[c][i])) for c in DEMO_COLUMNS[1:])])
    return path
