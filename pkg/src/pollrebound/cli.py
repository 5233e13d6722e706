"""Command-line front end: ``pollrebound run | gen | cv``.

Exit codes: 0 success, 1 unexpected failure, 2 usage error, 3 config error,
4 ingestion error, 5 numeric error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import yaml

from .coint import DET_SPECS, johansen_critical_values
from .exceptions import ConfigError, IngestError, NumericError
from .pipeline import FORMATS, load_config, run_pipeline, write_outputs
from .synth import DEMO_COLUMNS, GenSpec, gen_vkm_dataset, write_demo_csv
from .unitroot import LEVELS, SPECS, unit_root_critical_values

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_INGEST = 4
EXIT_NUMERIC = 5

log = logging.getLogger("pollrebound")


def demo_config(csv_name: str = "demo.csv") -> dict:
    return {
        "input": csv_name,
        "columns": dict(zip(("year", "vkm", "income", "price", "vehicles", "population"), DEMO_COLUMNS)),
        "transforms": {"per_capita": ["vkm", "income"], "log": True},
        "model": {"dep_lag": 2, "extra_dep_lags": []},
        "unit_root": {"spec": "c", "lags": 0, "bandwidth": None},
        "johansen": {"var_lags": 1, "det_spec": "trend"},
        "pre": {"convention": "reported"},
        "output": {"dir": "report", "formats": list(FORMATS)},
    }


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    report = run_pipeline(cfg)
    out = Path(args.out) if args.out else cfg.resolve(cfg.output_dir)
    for path in write_outputs(report, out, cfg.formats):
        print(path)
    for w in report.warnings:
        log.warning(w)
    return EXIT_OK


def cmd_gen(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    data = gen_vkm_dataset(GenSpec("vkm-model", args.length, args.seed, {"sigma": args.sigma}))
    write_demo_csv(data, out / "demo.csv")
    cfg_path = out / "demo.yaml"
    cfg_path.write_text(
        f"# Synthetic demo: vkm-model generator, seed {args.seed}, length {args.length}, sigma {args.sigma}\n"
        + yaml.safe_dump(demo_config(), sort_keys=False),
        encoding="utf-8",
    )
    print(out / "demo.csv")
    print(cfg_path)
    return EXIT_OK


def cmd_cv(args) -> int:
    if args.kind == "df":
        levels = [args.level] if args.level else list(LEVELS)
        for lv in levels:
            print(f"{lv}\t{unit_root_critical_values(args.n, args.spec, lv):.4f}")
    else:
        print(f"5%\t{johansen_critical_values(args.k_minus_r, args.stat, args.det_spec):.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pollrebound", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the full analysis pipeline")
    run.add_argument("--config", required=True, help="YAML pipeline config")
    run.add_argument("--out", help="output directory (overrides output.dir)")
    run.set_defaults(func=cmd_run)

    gen = sub.add_parser("gen", help="write a synthetic demo dataset and config")
    gen.add_argument("--out", required=True, help="directory for demo.csv and demo.yaml")
    gen.add_argument("--seed", type=int, default=2014)
    gen.add_argument("--length", type=int, default=29)
    gen.add_argument("--sigma", type=float, default=0.01, help="noise sd of the demand equation")
    gen.set_defaults(func=cmd_gen)

    cv = sub.add_parser("cv", help="look up critical values")
    cvsub = cv.add_subparsers(dest="kind", required=True)
    df = cvsub.add_parser("df", help="Dickey-Fuller tau (response surface)")
    df.add_argument("--n", type=int, required=True, help="usable observations")
    df.add_argument("--spec", choices=SPECS, default="c")
    df.add_argument("--level", choices=LEVELS)
    jo = cvsub.add_parser("johansen", help="Johansen 5% critical value")
    jo.add_argument("--k-minus-r", type=int, required=True)
    jo.add_argument("--stat", choices=("trace", "max"), default="trace")
    jo.add_argument("--det-spec", choices=DET_SPECS, default="trend")
    cv.set_defaults(func=cmd_cv)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except IngestError as exc:
        log.error("ingestion error: %s", exc)
        return EXIT_INGEST
    except NumericError as exc:
        log.error("numeric error: %s", exc)
        return EXIT_NUMERIC
    except ValueError as exc:
        log.error("invalid argument: %s", exc)
        return EXIT_USAGE
    except Exception:
        log.exception("unexpected failure")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
