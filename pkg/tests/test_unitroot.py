import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import df_tstat, pp_zt
from pollrebound.exceptions import InsufficientDataError, SingularDesignError
from pollrebound.series import TimeSeries
from pollrebound.synth import GenSpec, gen_random_walk
from pollrebound.unitroot import (
    LEVELS,
    UnitRootResult,
    adf_test,
    df_regression,
    pp_statistic,
    pp_test,
    unit_root_critical_values,
)

S6 = [1.0, 1.8, 1.2, 2.1, 1.6, 2.4]
# frozen from tests/oracles.py (normal equations by Gaussian elimination)
S6_DF_T = -2.606043975100402
S6_PP_BW1 = -2.5859756507036074


def walk(seed, n=60):
    return gen_random_walk(GenSpec("random-walk", n, seed))


class TestCriticalValues:
    @pytest.mark.parametrize(
        "n,level,expected",
        [
            (28, "1%", -3.730),
            (28, "5%", -2.992),
            (28, "10%", -2.626),
            (27, "1%", -3.736),
            (27, "5%", -2.994),
            (27, "10%", -2.628),
        ],
    )
    def test_table_anchors(self, n, level, expected):
        assert unit_root_critical_values(n, "c", level) == pytest.approx(expected, abs=0.02)

    @pytest.mark.parametrize("spec", ["c", "ct"])
    @pytest.mark.parametrize("n", [8, 20, 50, 500, 10**6])
    def test_ordering(self, spec, n):
        cvs = [unit_root_critical_values(n, spec, lv) for lv in LEVELS]
        assert cvs[0] < cvs[1] < cvs[2]

    def test_trend_more_negative(self):
        assert unit_root_critical_values(100, "ct", "5%") < unit_root_critical_values(100, "c", "5%")

    def test_numeric_level_alias(self):
        assert unit_root_critical_values(40, "c", 0.05) == unit_root_critical_values(40, "c", "5%")

    @pytest.mark.parametrize("args", [(28, "nc", "5%"), (28, "c", "2.5%"), (7, "c", "5%")])
    def test_unsupported(self, args):
        with pytest.raises(ValueError):
            unit_root_critical_values(*args)


class TestAdf:
    def test_s6_statistic_matches_oracle(self):
        assert df_tstat(S6) == pytest.approx(S6_DF_T, rel=1e-12)
        assert df_regression(S6, 0, "c").statistic == pytest.approx(S6_DF_T, rel=1e-10)

    def test_s6_too_short_for_critical_values(self):
        with pytest.raises(InsufficientDataError):
            adf_test(S6)

    def test_constant_is_singular(self):
        with pytest.raises(SingularDesignError):
            adf_test([2.0] * 9)

    def test_decision_rule(self):
        res = adf_test(walk(1, 29))
        assert res.n_usable == 28
        for lv in LEVELS:
            assert res.reject_at[lv] == (res.statistic < res.critical_values[lv])

    def test_table_statistic_rejects_at_one_percent(self):
        cvs = {lv: unit_root_critical_values(27, "c", lv) for lv in LEVELS}
        r = UnitRootResult("DF", -5.190, cvs, {lv: -5.190 < cv for lv, cv in cvs.items()}, "c", 0, 27)
        assert r.reject_at["1%"] and r.stars == "***"
        r = UnitRootResult("PP", -5.193, cvs, {lv: -5.193 < cv for lv, cv in cvs.items()}, "c", 0, 27)
        assert r.reject_at["1%"]

    def test_lagged_differences(self):
        y = walk(4, 80).values
        res = adf_test(y, lags=3)
        assert res.n_usable == 76 and res.test == "ADF"
        # oracle: dy_t on 1, y_{t-1}, dy_{t-1..t-3}
        from oracles import normal_equation_ols

        dy = np.diff(y)
        rows = [[1.0, y[t], dy[t - 1], dy[t - 2], dy[t - 3]] for t in range(3, len(dy))]
        b, se, _ = normal_equation_ols(dy[3:].tolist(), rows)
        assert res.statistic == pytest.approx(b[1] / se[1], rel=1e-9)

    def test_trend_spec(self):
        res = adf_test(walk(5, 50), spec="ct")
        assert res.spec == "ct"
        assert res.critical_values["5%"] < -3.4

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6), st.floats(-1e3, 1e3), st.floats(1e-3, 1e3))
    def test_location_scale_invariance(self, seed, shift, scale):
        y = walk(seed, 40).values
        base = adf_test(y)
        assert adf_test(y + shift).statistic == pytest.approx(base.statistic, abs=1e-9)
        assert adf_test(scale * y).statistic == pytest.approx(base.statistic, abs=1e-9)
        assert pp_test(scale * y, 3).statistic == pytest.approx(pp_test(y, 3).statistic, abs=1e-9)


class TestPp:
    def test_bandwidth_zero_equals_df(self):
        for seed in range(20):
            y = walk(seed)
            assert pp_test(y, 0).statistic == adf_test(y, 0).statistic

    def test_s6_bandwidth_one_matches_oracle(self):
        assert pp_zt(S6, 1) == pytest.approx(S6_PP_BW1, rel=1e-12)
        reg = df_regression(S6, 0, "c")
        assert pp_statistic(reg, 1) == pytest.approx(S6_PP_BW1, rel=1e-10)

    def test_default_bandwidth(self):
        res = pp_test(walk(2, 29))
        assert res.lags_or_bandwidth == 3

    def test_pp_on_series_object(self):
        s = TimeSeries("lnVKM", 1986, walk(3, 29).values)
        res = pp_test(s, 2)
        assert res.series_name == "lnVKM" and res.test == "PP"
