"""Batch pipeline: config, CSV ingestion, the full analysis chain, rendering."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

import yaml

from . import __version__
from .coint import DET_SPECS, johansen_test
from .exceptions import AlignmentError, ConfigError, IngestError, NumericError
from .rebound import (
    DEPENDENT,
    Convention,
    EmissionFactors,
    compute_pre,
    emissions_from_fuel,
    fit_vkm_model,
)
from .series import Dataset, TimeSeries, describe, difference, log_transform, per_capita
from .unitroot import LEVELS, SPECS, adf_test, pp_test

log = logging.getLogger(__name__)

VARIABLES = {"vkm": "lnVKM", "income": "lnY", "price": "lnP", "vehicles": "lnV"}
FORMATS = ("json", "markdown", "csv-plotdata")
OUTPUT_FILES = {"json": "report.json", "markdown": "report.md", "csv-plotdata": "plotdata.csv"}
SPURIOUS_WARNING = (
    "Johansen trace test retains rank 0: no long-run relation among the variables was found, "
    "so the levels regression below may be spurious."
)

_SCHEMA = {
    "input": None,
    "columns": {"year", "vkm", "income", "price", "vehicles", "population"},
    "transforms": {"per_capita", "log"},
    "model": {"dep_lag", "extra_dep_lags"},
    "unit_root": {"spec", "lags", "bandwidth"},
    "johansen": {"var_lags", "det_spec"},
    "pre": {"convention"},
    "emissions": {"factors", "fuel_columns"},
    "output": {"dir", "formats"},
}


@dataclass
class PipelineConfig:
    """Validated pipeline settings. Relative paths resolve against ``base_dir``."""

    input: str
    columns: Dict[str, str]
    per_capita: List[str] = field(default_factory=lambda: ["vkm", "income"])
    log: bool = True
    dep_lag: int = 2
    extra_dep_lags: List[int] = field(default_factory=list)
    unit_root_spec: str = "c"
    unit_root_lags: int = 0
    pp_bandwidth: Optional[int] = None
    var_lags: int = 1
    det_spec: str = "trend"
    convention: str = "reported"
    emission_factors: Optional[str] = None
    fuel_columns: Dict[str, str] = field(default_factory=dict)
    output_dir: str = "out"
    formats: List[str] = field(default_factory=lambda: list(FORMATS))
    base_dir: str = field(default=".", compare=False)

    def __post_init__(self):
        self.validate()

    def validate(self):
        cols = dict(self.columns)
        cols.setdefault("year", "year")
        self.columns = cols
        missing = [v for v in VARIABLES if v not in cols]
        if missing:
            raise ConfigError(f"columns: no mapping for {missing}")
        bad = [v for v in self.per_capita if v not in VARIABLES]
        if bad:
            raise ConfigError(f"transforms.per_capita: unknown variables {bad}")
        if self.per_capita and "population" not in cols:
            raise ConfigError("transforms.per_capita needs a columns.population mapping")
        if not _is_int(self.dep_lag) or self.dep_lag < 1:
            raise ConfigError(f"model.dep_lag must be an integer >= 1, got {self.dep_lag!r}")
        if any(not _is_int(q) or q < 1 or q == self.dep_lag for q in self.extra_dep_lags):
            raise ConfigError("model.extra_dep_lags must be positive integers other than dep_lag")
        if self.unit_root_spec not in SPECS:
            raise ConfigError(f"unit_root.spec must be one of {SPECS}")
        if not _is_int(self.unit_root_lags) or self.unit_root_lags < 0:
            raise ConfigError("unit_root.lags must be a non-negative integer")
        if self.pp_bandwidth is not None and (not _is_int(self.pp_bandwidth) or self.pp_bandwidth < 0):
            raise ConfigError("unit_root.bandwidth must be null or a non-negative integer")
        if not _is_int(self.var_lags) or self.var_lags < 1:
            raise ConfigError("johansen.var_lags must be an integer >= 1")
        if self.det_spec not in DET_SPECS:
            raise ConfigError(f"johansen.det_spec must be one of {DET_SPECS}")
        if self.convention not in {c.value for c in Convention}:
            raise ConfigError(f"pre.convention must be one of {[c.value for c in Convention]}")
        if not self.formats or any(f not in FORMATS for f in self.formats):
            raise ConfigError(f"output.formats must be a non-empty subset of {FORMATS}")
        if self.fuel_columns and not self.emission_factors:
            raise ConfigError("emissions.fuel_columns given without emissions.factors")

    def resolve(self, path: str) -> Path:
        p = Path(path)
        return p if p.is_absolute() else Path(self.base_dir) / p

    def canonical(self) -> dict:
        d = asdict(self)
        d.pop("base_dir")
        return d

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _section(raw: dict, name: str) -> dict:
    sec = raw.get(name) or {}
    if not isinstance(sec, dict):
        raise ConfigError(f"{name} must be a mapping")
    unknown = set(sec) - _SCHEMA[name]
    if unknown:
        raise ConfigError(f"{name}: unknown keys {sorted(unknown)}")
    return sec


def config_from_dict(raw: Mapping, base_dir=".") -> PipelineConfig:
    if not isinstance(raw, Mapping):
        raise ConfigError("config must be a mapping at the top level")
    unknown = set(raw) - set(_SCHEMA)
    if unknown:
        raise ConfigError(f"unknown top-level keys {sorted(unknown)}")
    if "input" not in raw:
        raise ConfigError("config needs an 'input' path")
    cols = _section(raw, "columns")
    tr = _section(raw, "transforms")
    model = _section(raw, "model")
    ur = _section(raw, "unit_root")
    jo = _section(raw, "johansen")
    pre = _section(raw, "pre")
    em = _section(raw, "emissions")
    out = _section(raw, "output")
    kwargs = dict(
        input=str(raw["input"]),
        columns={str(k): str(v) for k, v in cols.items()},
        per_capita=list(tr.get("per_capita", ["vkm", "income"]) or []),
        log=bool(tr.get("log", True)),
        dep_lag=model.get("dep_lag", 2),
        extra_dep_lags=list(model.get("extra_dep_lags", []) or []),
        unit_root_spec=ur.get("spec", "c"),
        unit_root_lags=ur.get("lags", 0),
        pp_bandwidth=ur.get("bandwidth"),
        var_lags=jo.get("var_lags", 1),
        det_spec=jo.get("det_spec", "trend"),
        convention=pre.get("convention", "reported"),
        emission_factors=em.get("factors"),
        fuel_columns={str(k): str(v) for k, v in (em.get("fuel_columns") or {}).items()},
        output_dir=str(out.get("dir", "out")),
        formats=list(out.get("formats", FORMATS)),
        base_dir=str(base_dir),
    )
    return PipelineConfig(**kwargs)


def load_config(path) -> PipelineConfig:
    """Parse a YAML config file; unknown keys anywhere are errors."""
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"config {path} is not valid YAML: {exc}") from exc
    return config_from_dict(raw, base_dir=path.parent)


# --- ingestion -------------------------------------------------------------


def read_csv_columns(path, headers: Sequence[str], year_column: str = "year") -> Dict[str, TimeSeries]:
    """Read the requested columns of an annual CSV as TimeSeries keyed by header.

    Years must be integers, strictly increasing and consecutive. A column may be
    blank only at its leading or trailing rows; the series then covers the
    years in between. Any other blank or non-numeric cell is an error.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from exc
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise IngestError(f"{path} is empty") from None
    dupes = sorted({h for h in header if header.count(h) > 1})
    if dupes:
        raise IngestError(f"{path}: duplicate headers {dupes}")
    wanted = [year_column, *headers]
    missing = [h for h in wanted if h not in header]
    if missing:
        raise IngestError(f"{path}: missing columns {missing}")
    idx = {h: header.index(h) for h in wanted}

    years: List[int] = []
    cells: Dict[str, List[Optional[float]]] = {h: [] for h in headers}
    for rownum, row in enumerate(reader, start=2):
        if not any(c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise IngestError(f"{path}: row {rownum} has {len(row)} cells, header has {len(header)}")
        ycell = row[idx[year_column]].strip()
        try:
            year = int(ycell)
        except ValueError:
            raise IngestError(f"{path}: row {rownum}, column {year_column!r}: {ycell!r} is not an integer year") from None
        if years and year <= years[-1]:
            raise AlignmentError(f"{path}: row {rownum}: year {year} is not after {years[-1]}")
        if years and year != years[-1] + 1:
            raise AlignmentError(f"{path}: years {years[-1] + 1}-{year - 1} are missing (gap before row {rownum})")
        years.append(year)
        for h in headers:
            cell = row[idx[h]].strip()
            if cell == "":
                cells[h].append(None)
                continue
            try:
                value = float(cell)
            except ValueError:
                raise IngestError(f"{path}: row {rownum}, column {h!r}: {cell!r} is not a number") from None
            if not math.isfinite(value):
                raise IngestError(f"{path}: row {rownum}, column {h!r}: non-finite value {cell!r}")
            cells[h].append(value)
    if not years:
        raise IngestError(f"{path} has a header but no data rows")

    out = {}
    for h in headers:
        present = [i for i, v in enumerate(cells[h]) if v is not None]
        if not present:
            raise IngestError(f"{path}: column {h!r} has no values")
        lo, hi = present[0], present[-1]
        holes = [years[i] for i in range(lo, hi + 1) if cells[h][i] is None]
        if holes:
            raise AlignmentError(f"{path}: column {h!r} has gaps in years {holes}")
        out[h] = TimeSeries(h, years[lo], cells[h][lo : hi + 1])
    return out


def ingest_csv(path, mappings: Mapping[str, str], per_capita_vars: Sequence[str] = ("vkm", "income"), log: bool = True) -> Dataset:
    """Load the model variables as an aligned Dataset named lnVKM, lnY, lnP, lnV.

    ``mappings`` maps vkm/income/price/vehicles (plus population and year) to
    CSV headers. Per-capita division happens before the log. With
    ``log=False`` the mapped columns are taken to hold logs already.
    """
    year_col = mappings.get("year", "year")
    needed = [mappings[v] for v in VARIABLES]
    if per_capita_vars:
        needed.append(mappings["population"])
    raw = read_csv_columns(path, list(dict.fromkeys(needed)), year_col)
    series = []
    try:
        for var, name in VARIABLES.items():
            s = raw[mappings[var]]
            if var in per_capita_vars:
                s = per_capita(s, raw[mappings["population"]])
            s = log_transform(s) if log else s
            series.append(s.rename(name))
    except NumericError as exc:
        raise IngestError(f"{path}: {exc}") from exc
    return Dataset(series)


# --- analysis --------------------------------------------------------------


def _finite(x):
    x = float(x)
    return x if math.isfinite(x) else None


def num(x) -> dict:
    """Full-precision value paired with its 4-decimal display string."""
    v = None if x is None else _finite(x)
    return {"value": v, "display": "NA" if v is None else f"{v:.4f}"}


def p_stars(p) -> str:
    if p is None or not math.isfinite(p):
        return ""
    return "***" if p < 0.01 else "**" if p < 0.05 else "*" if p < 0.10 else ""


@dataclass
class AnalysisReport:
    """Sections mirror the descriptive, unit-root, cointegration, regression
    and PRE tables; every value is plain JSON data."""

    provenance: dict
    descriptive: list
    unit_root: dict
    cointegration: dict
    regression: dict
    pre: dict
    warnings: list
    plotdata: list = field(repr=False)
    emissions: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {
            "provenance": self.provenance,
            "warnings": self.warnings,
            "descriptive": self.descriptive,
            "unit_root": self.unit_root,
            "cointegration": self.cointegration,
            "regression": self.regression,
            "pre": self.pre,
        }
        if self.emissions is not None:
            d["emissions"] = self.emissions
        return d


def _descriptive(data: Dataset) -> list:
    rows = []
    for name in VARIABLES.values():
        st = describe(data[name])
        rows.append(
            {
                "variable": name,
                "n": st.n,
                "min": num(st.min),
                "max": num(st.max),
                "mean": num(st.mean),
                "std_dev": num(st.std_dev),
                "skewness": num(st.skewness),
                "kurtosis": num(st.kurtosis),
            }
        )
    return rows


def _unit_root_row(res, variable: str, transform: str) -> dict:
    return {
        "variable": variable,
        "transform": transform,
        "test": res.test,
        "statistic": num(res.statistic),
        "critical_values": {lv: num(res.critical_values[lv]) for lv in LEVELS},
        "reject": dict(res.reject_at),
        "stars": res.stars,
        "lags_or_bandwidth": res.lags_or_bandwidth,
        "n_usable": res.n_usable,
    }


def _unit_roots(data: Dataset, cfg: PipelineConfig) -> dict:
    rows = []
    for test in ("df", "pp"):
        for transform in ("level", "difference"):
            for name in VARIABLES.values():
                s = data[name] if transform == "level" else difference(data[name])
                if test == "df":
                    res = adf_test(s, cfg.unit_root_lags, cfg.unit_root_spec)
                else:
                    res = pp_test(s, cfg.pp_bandwidth, cfg.unit_root_spec)
                rows.append(_unit_root_row(res, name, transform))
    levels_nonstationary = all(not r["reject"]["10%"] for r in rows if r["transform"] == "level")
    diffs_stationary = all(r["reject"]["10%"] for r in rows if r["transform"] == "difference")
    return {
        "spec": cfg.unit_root_spec,
        "rows": rows,
        "all_integrated_order_one": levels_nonstationary and diffs_stationary,
    }


def _cointegration(data: Dataset, cfg: PipelineConfig):
    res = johansen_test(data.select(list(VARIABLES.values())), cfg.var_lags, cfg.det_spec)
    rows = [
        {
            "rank": r.rank,
            "log_likelihood": num(r.log_likelihood),
            "eigenvalue": num(r.eigenvalue),
            "trace_stat": num(r.trace_stat),
            "trace_cv_5": num(r.trace_cv_5),
            "trace_rejects": r.trace_rejects,
            "max_stat": num(r.max_stat),
            "max_cv_5": num(r.max_cv_5),
            "max_rejects": r.max_rejects,
        }
        for r in res.rows
    ]
    return res, {
        "variables": res.names,
        "det_spec": res.det_spec,
        "var_lags": res.var_lags,
        "n_obs": res.n_obs,
        "rows": rows,
        "selected_rank": res.selected_rank,
        "selected_rank_max": res.selected_rank_max,
    }


def _regression(fit, spurious: bool) -> dict:
    ols = fit.ols
    terms = []
    for name, b, se, t, p in zip(fit.term_names, ols.coefficients, ols.std_errors, ols.t_stats, ols.p_values):
        terms.append(
            {
                "term": name,
                "coefficient": num(b),
                "std_error": num(se),
                "t_stat": num(t),
                "p_value": num(p),
                "stars": p_stars(p),
            }
        )
    return {
        "dependent": DEPENDENT,
        "dep_lag": fit.dep_lag,
        "years": list(fit.years),
        "n_obs": ols.n_obs,
        "df_resid": ols.df_resid,
        "terms": terms,
        "r_squared": num(ols.r_squared),
        "adj_r_squared": num(ols.adj_r_squared),
        "flagged_spurious": spurious,
    }


def _category(cat) -> dict:
    return {
        "category": cat.value,
        "label": cat.label,
        "rebound_exists": cat.rebound_exists,
        "implication": cat.implication,
    }


def _pre(fit, selected: str) -> dict:
    out = {
        "selected_convention": selected,
        "inputs": {"lambda_P": num(fit.lambda_P), "lagged_dependent_sum": num(fit.lag_sum)},
        "conventions": {},
    }
    for conv in Convention:
        res = compute_pre(fit, conv)
        out["conventions"][conv.value] = {
            "short_run": num(res.short_run),
            "long_run": num(res.long_run),
            "category_short": _category(res.category_short),
            "category_long": _category(res.category_long),
        }
    return out


def _emissions(cfg: PipelineConfig) -> dict:
    factors = EmissionFactors.load(cfg.resolve(cfg.emission_factors))
    fuel_cols = cfg.fuel_columns
    if not fuel_cols:
        return {"pollutants": factors.pollutants, "series": {}}
    raw = read_csv_columns(cfg.resolve(cfg.input), list(fuel_cols.values()), cfg.columns["year"])
    fuel = Dataset(raw[h].rename(f) for f, h in fuel_cols.items())
    series = {}
    for pol in factors.pollutants:
        if not all((f, pol) in factors for f in fuel_cols):
            continue
        series[pol] = [
            {"year": int(y), "value": num(emissions_from_fuel({f: fuel[f].values[i] for f in fuel_cols}, factors, pol))}
            for i, y in enumerate(fuel.years)
        ]
    return {"pollutants": factors.pollutants, "series": series}


def _plotdata(data: Dataset, fit) -> list:
    rows = []
    for name in VARIABLES.values():
        s = data[name]
        rows.extend((int(y), name, float(v)) for y, v in zip(s.years, s.values))
    y0 = fit.years[0]
    resid = fit.ols.residuals
    actual = data[DEPENDENT].window(y0, fit.years[1]).values
    for i, (a, e) in enumerate(zip(actual, resid)):
        rows.append((y0 + i, f"fitted_{DEPENDENT}", float(a - e)))
    for i, e in enumerate(resid):
        rows.append((y0 + i, "residual", float(e)))
    return rows


def _sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def run_pipeline(config: PipelineConfig) -> AnalysisReport:
    """describe, unit roots on levels and differences, Johansen, demand regression, PRE.

    A Johansen rank of 0 does not stop the run; the regression is still
    reported, flagged, with a spurious-regression warning.
    """
    config.validate()
    input_path = config.resolve(config.input)
    data = ingest_csv(input_path, config.columns, config.per_capita, config.log)
    log.info("ingested %s: %s", input_path, data)
    warnings = []

    descriptive = _descriptive(data)
    unit_root = _unit_roots(data, config)
    if not unit_root["all_integrated_order_one"]:
        warnings.append("Not every variable tests as integrated of order one at the 10% level.")
    coint_res, coint = _cointegration(data, config)
    spurious = coint_res.selected_rank == 0
    if spurious:
        warnings.append(SPURIOUS_WARNING)
    coint["warning"] = SPURIOUS_WARNING if spurious else None

    fit = fit_vkm_model(data, config.dep_lag, config.extra_dep_lags)
    regression = _regression(fit, spurious)
    pre = _pre(fit, config.convention)
    emissions = _emissions(config) if config.emission_factors else None

    provenance = {
        "tool": "pollrebound",
        "version": __version__,
        "config_sha256": config.digest(),
        "data_sha256": _sha256_file(input_path),
        "years": [int(data.year_range[0]), int(data.year_range[1])],
    }
    return AnalysisReport(
        provenance=provenance,
        descriptive=descriptive,
        unit_root=unit_root,
        cointegration=coint,
        regression=regression,
        pre=pre,
        warnings=warnings,
        plotdata=_plotdata(data, fit),
        emissions=emissions,
    )


# --- rendering -------------------------------------------------------------


def _render_json(report: AnalysisReport) -> str:
    return json.dumps(report.to_dict(), indent=2, allow_nan=False) + "\n"


def _md_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return lines


def _render_markdown(report: AnalysisReport) -> str:
    d = report.to_dict()
    out = ["# Pollution rebound analysis", ""]
    prov = d["provenance"]
    out += [
        f"Tool {prov['tool']} {prov['version']}; years {prov['years'][0]}-{prov['years'][1]}.",
        f"Config sha256 `{prov['config_sha256']}`, data sha256 `{prov['data_sha256']}`.",
        "",
    ]
    if d["warnings"]:
        out += ["## Warnings", ""] + [f"- {w}" for w in d["warnings"]] + [""]

    out += ["## Descriptive statistics", ""]
    stats = ("min", "max", "mean", "std_dev", "skewness", "kurtosis")
    labels = ("Minimum", "Maximum", "Mean", "Std. Dev.", "Skewness", "Kurtosis")
    rows = [[lab, *(r[k]["display"] for r in d["descriptive"])] for lab, k in zip(labels, stats)]
    rows.append(["Observations", *(str(r["n"]) for r in d["descriptive"])])
    out += _md_table(["Variable", *(r["variable"] for r in d["descriptive"])], rows) + [""]

    ur = d["unit_root"]
    out += ["## Unit-root tests", ""]
    for test in ("DF", "PP"):
        rows = []
        for r in ur["rows"]:
            if (r["test"] == "PP") != (test == "PP"):
                continue
            var = r["variable"] if r["transform"] == "level" else "D." + r["variable"]
            rows.append([var, r["statistic"]["display"] + r["stars"], *(r["critical_values"][lv]["display"] for lv in LEVELS)])
        out += _md_table(["Variable", f"{test} test", *(f"{lv} critical value" for lv in LEVELS)], rows) + [""]
    out += ["*, **, *** denote rejection of a unit root at the 10%, 5% and 1% level.", ""]

    co = d["cointegration"]
    out += [f"## Johansen cointegration (det_spec={co['det_spec']}, var_lags={co['var_lags']}, T={co['n_obs']})", ""]
    rows = [
        [
            r["rank"],
            r["log_likelihood"]["display"],
            r["eigenvalue"]["display"],
            r["trace_stat"]["display"],
            r["trace_cv_5"]["display"],
            r["max_stat"]["display"],
            r["max_cv_5"]["display"],
        ]
        for r in co["rows"]
    ]
    out += _md_table(["Rank", "LL", "Eigenvalue", "Trace statistic", "5% critical value", "Max statistic", "5% critical value"], rows)
    out += ["", f"Selected rank (trace): {co['selected_rank']}; by max statistic: {co['selected_rank_max']}.", ""]

    reg = d["regression"]
    out += [f"## Demand regression (dependent {reg['dependent']}, years {reg['years'][0]}-{reg['years'][1]})", ""]
    if reg["flagged_spurious"]:
        out += ["**Flagged: possible spurious regression.**", ""]
    rows = [
        [t["term"], t["coefficient"]["display"], t["std_error"]["display"], t["t_stat"]["display"], t["p_value"]["display"] + t["stars"]]
        for t in reg["terms"]
    ]
    out += _md_table(["Term", "Coefficient", "SE", "t-statistic", "P value"], rows)
    out += ["", f"Adjusted R-squared: {reg['adj_r_squared']['display']} (n = {reg['n_obs']})", ""]
    out += ["*, **, *** denote significance at the 10%, 5% and 1% level.", ""]

    pre = d["pre"]
    out += [f"## Pollution rebound effect (selected convention: {pre['selected_convention']})", ""]
    rows = []
    for conv, res in pre["conventions"].items():
        for horizon in ("short", "long"):
            cat = res[f"category_{horizon}"]
            rows.append([conv, f"{horizon}-run", res[f"{horizon}_run"]["display"], cat["label"], "Yes" if cat["rebound_exists"] else "No", cat["implication"]])
    out += _md_table(["Convention", "Horizon", "PRE", "Category", "Rebound", "Implication"], rows) + [""]

    if "emissions" in d:
        out += ["## Emissions from fuel", ""]
        for pol, series in d["emissions"]["series"].items():
            out += [f"### {pol}", ""]
            out += _md_table(["Year", pol], [[p["year"], p["value"]["display"]] for p in series]) + [""]
    return "\n".join(out)


def _render_plotdata(report: AnalysisReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["year", "series", "value"])
    for year, series, value in report.plotdata:
        w.writerow([year, series, repr(value)])
    return buf.getvalue()


_RENDERERS = {"json": _render_json, "markdown": _render_markdown, "csv-plotdata": _render_plotdata}


def render_report(report: AnalysisReport, fmt: str) -> str:
    try:
        return _RENDERERS[fmt](report)
    except KeyError:
        raise ConfigError(f"unsupported report format {fmt!r}; use one of {FORMATS}") from None


def write_outputs(report: AnalysisReport, out_dir, formats: Sequence[str] = FORMATS) -> List[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for fmt in formats:
        path = out_dir / OUTPUT_FILES[fmt]
        path.write_text(render_report(report, fmt), encoding="utf-8")
        written.append(path)
    return written
