"""Command-line entry point: ``ordfuzz {fit,cluster,compare,plotdata,synth}``."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .clusterer import fit_model
from .errors import ConfigError, DataError, IngestError, ModelError, RankError
from .pipeline import (ENCODINGS, METRICS, emit_plot_data, emit_report, ingest_csv,
                       load_config, run_cluster, run_compare, synth_dataset, _metadata)

EXIT_OK, EXIT_CONFIG, EXIT_INGEST, EXIT_MODEL = 0, 2, 3, 4


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON config file")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--smoothing", type=float, help="Laplace smoothing lambda")
    common.add_argument("--metric", choices=METRICS)
    common.add_argument("--seed", type=int)

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("data", help="UTF-8 CSV with a header row")
    data.add_argument("--format", choices=("json", "csv"), default="json")

    p = argparse.ArgumentParser(prog="ordfuzz", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("fit", parents=[common, data], help="fit and emit the model")
    sub.add_parser("cluster", parents=[common, data], help="fit and assign memberships")
    cmp_ = sub.add_parser("compare", parents=[common, data],
                          help="memberships next to a fuzzy c-means baseline")
    cmp_.add_argument("--beta", type=float)
    cmp_.add_argument("--baseline-encoding", choices=ENCODINGS)
    sub.add_parser("plotdata", parents=[common], help="membership-function knots as CSV") \
        .add_argument("data")
    syn = sub.add_parser("synth", parents=[common], help="draw a synthetic CSV")
    syn.add_argument("--n", type=int, required=True, help="number of observations")
    syn.add_argument("--probs", action="append",
                     help="comma-separated rank probabilities, once per column")
    return p


def _config(args):
    cfg = load_config(args.config)
    over = {}
    if args.smoothing is not None:
        over["smoothing"] = args.smoothing
    if args.metric is not None:
        over["metric"] = args.metric
    if args.seed is not None:
        over["seed"] = args.seed
    if getattr(args, "beta", None) is not None:
        over["beta"] = args.beta
    if getattr(args, "baseline_encoding", None) is not None:
        over["encoding"] = args.baseline_encoding
    return dataclasses.replace(cfg, **over) if over else cfg


def _write(blob: bytes, out):
    if out:
        Path(out).write_bytes(blob)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.flush()


def _synth(args, cfg):
    if args.probs:
        try:
            probs = [[float(v) for v in s.split(",")] for s in args.probs]
        except ValueError:
            raise ConfigError("--probs takes comma-separated numbers") from None
    else:
        m = len(cfg.labels[cfg.columns[0]])
        probs = [cfg.probabilities.get(c, [1.0 / m] * m) for c in cfg.columns]
    if len(probs) != len(cfg.columns):
        raise ConfigError(f"{len(cfg.columns)} columns configured but {len(probs)} "
                          "probability vectors given")
    seed = 0 if cfg.seed is None else cfg.seed
    _, blob = synth_dataset(probs, args.n, seed, cfg.scales, cfg.columns)
    return blob


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "synth":
            _write(_synth(args, cfg), args.out)
            return EXIT_OK
        data = ingest_csv(args.data, cfg)
        if args.command == "fit":
            model = fit_model(data, cfg.smoothing, cfg.metric)
            if args.format == "csv":
                blob = emit_plot_data(model)
            else:
                doc = {"metadata": _metadata(cfg, data, "fit", cfg.seed),
                       "model": model.summary()}
                blob = (json.dumps(doc, indent=2) + "\n").encode("utf-8")
        elif args.command == "plotdata":
            blob = emit_plot_data(fit_model(data, cfg.smoothing, cfg.metric))
        elif args.command == "cluster":
            report, _ = run_cluster(data, cfg)
            blob = emit_report(report, args.format)
        else:
            blob = emit_report(run_compare(data, cfg), args.format)
        _write(blob, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IngestError as exc:
        print(f"ingest error: {exc}", file=sys.stderr)
        return EXIT_INGEST
    except (ModelError, DataError, RankError) as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
