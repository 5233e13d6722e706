"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import filecmp
import json
import time
from pathlib import Path

import numpy as np

from conftest import record_criterion
from oracles import normal_equation_ols
from pollrebound import cli
from pollrebound.coint import johansen_critical_values, johansen_test
from pollrebound.kernels import ols_fit
from pollrebound.rebound import PreCategory, classify_pre, fit_vkm_model, pre_from_coefficients
from pollrebound.series import Dataset
from pollrebound.synth import GenSpec, gen_ar1, gen_cointegrated_pair, gen_random_walk, gen_vkm_dataset
from pollrebound.unitroot import adf_test, pp_test, unit_root_critical_values
from report_lint import lint_report

DEMO_CONFIG = Path(__file__).resolve().parent.parent / "demo" / "demo.yaml"
TRUE_COEFS = {"lambda_0": 0.5, "lambda_Y": 0.6, "lambda_P": 0.4, "lambda_V": 0.06, "lambda_vkm": -0.7}


def test_criterion_1_pre_chain():
    res = pre_from_coefficients(0.4105, -0.6690, "reported")
    short_ok = abs(res.short_run - (-1.4105)) <= 1e-12 and f"{res.short_run:.4f}" == "-1.4105"
    long_ok = abs(res.long_run - (-1.246)) <= 5e-4
    ok = short_ok and long_ok
    record_criterion(1, "PRE chain", ok, f"short={res.short_run!r} long={res.long_run!r}")
    assert ok


def test_criterion_2_critical_value_anchors():
    df_expected = {
        (28, "1%"): -3.730,
        (28, "5%"): -2.992,
        (28, "10%"): -2.626,
        (27, "1%"): -3.736,
        (27, "5%"): -2.994,
        (27, "10%"): -2.628,
    }
    df_err = max(abs(unit_root_critical_values(n, "c", lv) - v) for (n, lv), v in df_expected.items())
    jo_expected = {
        (4, "trace"): 54.64,
        (3, "trace"): 34.55,
        (2, "trace"): 18.17,
        (1, "trace"): 3.74,
        (4, "max"): 30.33,
        (3, "max"): 23.78,
        (2, "max"): 16.87,
        (1, "max"): 3.74,
    }
    jo_exact = all(johansen_critical_values(kr, kind, "trend") == v for (kr, kind), v in jo_expected.items())
    ok = df_err <= 0.02 and jo_exact
    record_criterion(2, "critical-value anchors", ok, f"max DF error={df_err:.4f} (tol 0.02); Johansen exact={jo_exact}")
    assert ok


def _ols_instance(rng):
    while True:
        k = int(rng.integers(1, 5))
        n = int(rng.integers(k + 2, 13))
        X = rng.uniform(-1, 1, (n, k))
        y = rng.uniform(-1, 1, n)
        design = np.column_stack([np.ones(n), X])
        if np.linalg.cond(design) < 1e4:
            return X, y, design


def test_criterion_3_ols_oracle_equivalence():
    rng = np.random.default_rng(20240303)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        X, y, design = _ols_instance(rng)
        b_oracle, _, _ = normal_equation_ols(y.tolist(), design.tolist())
        worst = max(worst, float(np.max(np.abs(ols_fit(y, X).coefficients - b_oracle))))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 5
    record_criterion(3, "OLS oracle equivalence", ok, f"1000 instances, max |diff|={worst:.2e} (tol 1e-9), {elapsed:.2f}s (<5s)")
    assert ok


def test_criterion_4_unit_root_size_power():
    t0 = time.perf_counter()
    size_hits = power_hits = 0
    pp_mismatch = 0
    reps = 2000
    for i in range(reps):
        rw = gen_random_walk(GenSpec("random-walk", 200, 100_000 + i))
        res = adf_test(rw, 0)
        size_hits += res.reject_at["5%"]
        pp_mismatch += pp_test(rw, 0).statistic != res.statistic
        ar = gen_ar1(GenSpec("ar1", 200, 200_000 + i, {"phi": 0.5}))
        res = adf_test(ar, 0)
        power_hits += res.reject_at["5%"]
        pp_mismatch += pp_test(ar, 0).statistic != res.statistic
    elapsed = time.perf_counter() - t0
    size, power = size_hits / reps, power_hits / reps
    ok = 0.02 <= size <= 0.09 and power >= 0.90 and pp_mismatch == 0 and elapsed < 60
    record_criterion(
        4,
        "unit-root size/power",
        ok,
        f"size={size:.4f} in [0.02,0.09], power={power:.4f} >= 0.90, PP(0)!=DF on {pp_mismatch} runs, {elapsed:.1f}s (<60s)",
    )
    assert ok


def test_criterion_5_johansen_detection():
    t0 = time.perf_counter()
    reps = 500
    det = "rconstant"
    pair_rank1 = null_rank0 = 0
    identity_ok = True
    for i in range(reps):
        pair = gen_cointegrated_pair(GenSpec("cointegrated-pair", 400, 300_000 + i, {"beta": 1.0, "sigma_noise": 0.1}))
        res = johansen_test(pair, 1, det)
        pair_rank1 += res.selected_rank == 1
        identity_ok &= res.trace_stats[-1] == res.max_stats[-1]
        walks = Dataset(
            [
                gen_random_walk(GenSpec("random-walk", 400, 400_000 + 2 * i, {"name": "a"})),
                gen_random_walk(GenSpec("random-walk", 400, 400_001 + 2 * i, {"name": "b"})),
            ]
        )
        res = johansen_test(walks, 1, det)
        null_rank0 += res.selected_rank == 0
        identity_ok &= res.trace_stats[-1] == res.max_stats[-1]
    elapsed = time.perf_counter() - t0
    r1, r0 = pair_rank1 / reps, null_rank0 / reps
    ok = r1 >= 0.80 and r0 >= 0.90 and identity_ok and elapsed < 60
    record_criterion(
        5,
        "Johansen detection",
        ok,
        f"det_spec={det}: rank1 on pairs={r1:.3f} (>=0.80), rank0 on walks={r0:.3f} (>=0.90), trace(k-1)==max(k-1) all runs={identity_ok}, {elapsed:.1f}s (<60s)",
    )
    assert ok


def test_criterion_6_model_recovery():
    t0 = time.perf_counter()
    exact = gen_vkm_dataset(GenSpec("vkm-model", 200, 1, {**TRUE_COEFS, "sigma": 0.0}))
    fit = fit_vkm_model(exact)
    exact_err = max(abs(getattr(fit, k) - v) for k, v in TRUE_COEFS.items())
    passes = 0
    for seed in range(200):
        data = gen_vkm_dataset(GenSpec("vkm-model", 200, 500_000 + seed, {**TRUE_COEFS, "sigma": 0.01}))
        fit = fit_vkm_model(data)
        passes += all(abs(getattr(fit, k) - v) <= 0.05 for k, v in TRUE_COEFS.items())
    elapsed = time.perf_counter() - t0
    rate = passes / 200
    ok = exact_err <= 1e-6 and rate >= 0.95 and elapsed < 30
    record_criterion(6, "model recovery", ok, f"noise-free max err={exact_err:.2e} (<=1e-6), noisy pass rate={rate:.3f} (>=0.95), {elapsed:.1f}s (<30s)")
    assert ok


def test_criterion_7_classification_totality():
    rng = np.random.default_rng(77)
    n = 100_000
    pools = [
        rng.uniform(-1e6, 1e6, n // 4),
        rng.uniform(-2, 3, n // 4),
        rng.normal(0, 1e-9, n // 8),
        1 + rng.normal(0, 1e-9, n // 8),
    ]
    bits = rng.integers(0, 2**63 - 1, n - sum(len(p) for p in pools), dtype=np.int64).view(np.float64)
    values = np.concatenate(pools + [bits[np.isfinite(bits)]])
    values = np.concatenate([values, rng.uniform(-1, 1, n - values.size)])
    predicates = {
        PreCategory.NEGATIVE_EFFECT: lambda x: x > 1 and abs(x - 1) > 1e-9,
        PreCategory.COMPLETELY_INEFFECTIVE: lambda x: abs(x - 1) <= 1e-9,
        PreCategory.PARTIALLY_INEFFECTIVE: lambda x: 0 < x < 1 and abs(x) > 1e-9 and abs(x - 1) > 1e-9,
        PreCategory.FULLY_EFFECTIVE: lambda x: abs(x) <= 1e-9,
        PreCategory.POSITIVE_EFFECT: lambda x: x < 0 and abs(x) > 1e-9,
    }
    bad = 0
    for x in values.tolist():
        matches = [c for c, pred in predicates.items() if pred(x)]
        if len(matches) != 1 or classify_pre(x) is not matches[0]:
            bad += 1
    boundaries = classify_pre(0.0) is PreCategory.FULLY_EFFECTIVE and classify_pre(1.0) is PreCategory.COMPLETELY_INEFFECTIVE
    ok = values.size == n and bad == 0 and boundaries
    record_criterion(7, "classification totality", ok, f"{values.size} finite reals, {bad} inconsistent, boundaries 0/1 ok={boundaries}")
    assert ok


def test_criterion_8_pipeline_determinism(tmp_path):
    t0 = time.perf_counter()
    outs = [tmp_path / "run1", tmp_path / "run2"]
    codes = [cli.main(["run", "--config", str(DEMO_CONFIG), "--out", str(o)]) for o in outs]
    identical = all(
        filecmp.cmp(outs[0] / name, outs[1] / name, shallow=False) for name in ("report.json", "report.md", "plotdata.csv")
    )
    problems = lint_report(json.loads((outs[0] / "report.json").read_text()))
    elapsed = time.perf_counter() - t0
    ok = codes == [0, 0] and identical and not problems and elapsed < 10
    record_criterion(8, "pipeline determinism", ok, f"exit codes={codes}, byte-identical={identical}, lint problems={len(problems)}, {elapsed:.2f}s (<10s)")
    assert ok, problems
