"""Configuration, CSV ingestion, report serialisation and synthetic data."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .clusterer import (FCMResult, FuzzyModel, MembershipRow, baseline_fcm,
                        cluster_dataset, METRICS)
from .errors import ConfigError, IngestError
from .fuzzifier import knots
from .ordinal_stats import Dataset, OrdinalScale

ENCODINGS = ("fuzzified", "ranks")


@dataclass
class ScaleConfig:
    """Column scales plus run options.

    JSON layout::

        {"columns": [{"name": "math", "labels": ["Poor", "Fair", "Good"]}, ...],
         "smoothing": 0.0, "metric": "euclidean",
         "baseline": {"beta": 2.0, "tol": 1e-6, "max_iter": 300,
                      "encoding": "fuzzified"},
         "seed": null}

    A top-level ``"labels"`` list applies to every column given by name only,
    e.g. ``"columns": ["math", "physics"]``. A column may carry
    ``"probabilities"`` for ``synth``.
    """

    columns: list
    labels: dict
    smoothing: float = 0.0
    metric: str = "euclidean"
    beta: float = 2.0
    tol: float = 1e-6
    max_iter: int = 300
    encoding: str = "fuzzified"
    seed: Optional[int] = None
    probabilities: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.columns:
            raise ConfigError("at least one column must be configured")
        if len(set(self.columns)) != len(self.columns):
            raise ConfigError("column names must be distinct")
        ms = set()
        for name in self.columns:
            labs = self.labels.get(name)
            if not labs:
                raise ConfigError(f"column {name!r} has no rank labels")
            if len(set(labs)) != len(labs):
                raise ConfigError(f"column {name!r} has repeated labels")
            if len(labs) < 2:
                raise ConfigError(f"column {name!r} needs at least two labels")
            ms.add(len(labs))
        if len(ms) > 1:
            raise ConfigError(f"all columns must declare the same number of ranks, got {sorted(ms)}")
        if not (self.smoothing >= 0 and np.isfinite(self.smoothing)):
            raise ConfigError("smoothing must be a finite non-negative number")
        if self.metric not in METRICS:
            raise ConfigError(f"metric must be one of {METRICS}")
        if not self.beta > 1:
            raise ConfigError("beta must be greater than 1")
        if self.encoding not in ENCODINGS:
            raise ConfigError(f"baseline encoding must be one of {ENCODINGS}")
        if self.max_iter < 1 or not self.tol > 0:
            raise ConfigError("max_iter must be >= 1 and tol > 0")

    @property
    def scales(self) -> tuple:
        return tuple(OrdinalScale(tuple(self.labels[c])) for c in self.columns)

    @classmethod
    def from_dict(cls, doc: dict) -> "ScaleConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        shared = doc.get("labels")
        columns, labels, probs = [], {}, {}
        for col in doc.get("columns", []):
            if isinstance(col, str):
                name, labs, p = col, shared, None
            elif isinstance(col, dict) and "name" in col:
                name, labs, p = col["name"], col.get("labels", shared), col.get("probabilities")
            else:
                raise ConfigError(f"bad column entry: {col!r}")
            columns.append(str(name))
            labels[str(name)] = [str(s) for s in labs] if labs else []
            if p is not None:
                probs[str(name)] = [float(v) for v in p]
        base = doc.get("baseline", {}) or {}
        try:
            return cls(
                columns=columns,
                labels=labels,
                smoothing=float(doc.get("smoothing", 0.0)),
                metric=str(doc.get("metric", "euclidean")),
                beta=float(base.get("beta", 2.0)),
                tol=float(base.get("tol", 1e-6)),
                max_iter=int(base.get("max_iter", 300)),
                encoding=str(base.get("encoding", "fuzzified")),
                seed=None if doc.get("seed") is None else int(doc["seed"]),
                probabilities=probs,
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad config value: {exc}") from None

    def to_dict(self) -> dict:
        cols = []
        for c in self.columns:
            entry = {"name": c, "labels": list(self.labels[c])}
            if c in self.probabilities:
                entry["probabilities"] = list(self.probabilities[c])
            cols.append(entry)
        return {
            "columns": cols,
            "smoothing": self.smoothing,
            "metric": self.metric,
            "baseline": {"beta": self.beta, "tol": self.tol,
                         "max_iter": self.max_iter, "encoding": self.encoding},
            "seed": self.seed,
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def load_config(path) -> ScaleConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    return ScaleConfig.from_dict(doc)


def read_csv_text(text: str, config: ScaleConfig) -> Dataset:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise IngestError("CSV is empty; a header row is required")
    header = [h.strip() for h in header]
    missing = [c for c in config.columns if c not in header]
    if missing:
        raise ConfigError(f"configured columns missing from CSV header: {missing}")
    pos = [header.index(c) for c in config.columns]
    lookup = [{lab: j + 1 for j, lab in enumerate(config.labels[c])} for c in config.columns]
    ranks = []
    for rowno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < len(header):
            raise IngestError(f"line {rowno}: expected {len(header)} fields, got {len(row)}",
                              row=rowno)
        out = []
        for c, p, lk in zip(config.columns, pos, lookup):
            label = row[p].strip()
            if label not in lk:
                raise IngestError(f"line {rowno}, column {c!r}: unknown label {label!r}",
                                  row=rowno, column=c, label=label)
            out.append(lk[label])
        ranks.append(out)
    if not ranks:
        raise IngestError("CSV has no data rows; at least one observation is required")
    return Dataset(np.array(ranks, dtype=np.int64), config.scales, tuple(config.columns))


def ingest_csv(path, config: ScaleConfig) -> Dataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IngestError(f"cannot read {path}: {exc}") from None
    return read_csv_text(text, config)


def dataset_to_csv(data: Dataset) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(data.names)
    w.writerows(data.labels())
    return buf.getvalue().encode("utf-8")


@dataclass
class Report:
    rows: list
    model: list
    metadata: dict
    baseline: Optional[list] = None

    def to_dict(self) -> dict:
        doc = {
            "metadata": self.metadata,
            "model": self.model,
            "mbfcm": [_row_dict(r) for r in self.rows],
        }
        if self.baseline is not None:
            doc["baseline"] = [_row_dict(r) for r in self.baseline]
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "Report":
        base = doc.get("baseline")
        return cls(
            rows=[_row_from(d) for d in doc["mbfcm"]],
            model=doc["model"],
            metadata=doc["metadata"],
            baseline=None if base is None else [_row_from(d) for d in base],
        )


def _row_dict(r: MembershipRow) -> dict:
    return {
        "obs": r.obs_index,
        "mode": r.mode,
        "clusters": [j for j, _ in r.entries],
        "weights": [w for _, w in r.entries],
        "adjacency_override": r.adjacency_override,
    }


def _row_from(d: dict) -> MembershipRow:
    return MembershipRow(int(d["obs"]), d["mode"],
                         tuple((int(j), float(w)) for j, w in zip(d["clusters"], d["weights"])),
                         bool(d.get("adjacency_override", False)))


def format_row_csv(r: MembershipRow) -> str:
    if r.mode == "crisp":
        (j, w), = r.entries
        return f"{r.obs_index},crisp,{j},{w:.6f}"
    cells = ",".join(f"{j}:{w:.6f}" for j, w in r.entries)
    return f"{r.obs_index},{r.mode},{cells}"


def parse_report(blob: bytes) -> Report:
    return Report.from_dict(json.loads(blob.decode("utf-8")))


def emit_report(report: Report, format: str = "json") -> bytes:
    """JSON keeps full float precision; CSV lists MBFCM rows then baseline rows."""
    if format == "json":
        return (json.dumps(report.to_dict(), indent=2) + "\n").encode("utf-8")
    if format == "csv":
        lines = [format_row_csv(r) for r in report.rows]
        if report.baseline is not None:
            lines += [format_row_csv(r) for r in report.baseline]
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ConfigError(f"unknown report format {format!r}")


PLOT_FIELDS = ("dim", "name", "rank", "label", "center", "support_left", "support_right",
               "zone_left", "zone_right", "alpha_left", "alpha_right")


def emit_plot_data(model: FuzzyModel) -> bytes:
    """Membership-function knots per dimension and rank, as CSV."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PLOT_FIELDS)
    for i, (name, sc, t) in enumerate(zip(model.names, model.scales, model.tables), start=1):
        for k in knots(t):
            num = [k[f] for f in PLOT_FIELDS[4:]]
            w.writerow([i, name, k["rank"], sc.label_of(k["rank"])] +
                       ["" if v is None else f"{v:.6f}" for v in num])
    return buf.getvalue().encode("utf-8")


def synth_dataset(probs: Sequence[Sequence[float]], n: int, seed: int,
                  scales=None, names=None):
    """Draw N observations with independent per-dimension rank distributions.

    Returns ``(dataset, csv_bytes)``.
    """
    if n is None or int(n) < 1:
        raise ConfigError("synth needs N >= 1 observations")
    if not probs:
        raise ConfigError("synth needs at least one dimension")
    p = [np.asarray(row, dtype=float) for row in probs]
    m = len(p[0])
    for i, row in enumerate(p, start=1):
        if len(row) != m:
            raise ConfigError("every dimension must have the same number of ranks")
        if m < 2 or np.any(~np.isfinite(row)) or np.any(row < 0) or abs(row.sum() - 1) > 1e-9:
            raise ConfigError(f"dimension {i}: probabilities must be >= 0 and sum to 1")
    if scales is None:
        scales = [OrdinalScale(tuple(f"r{j}" for j in range(1, m + 1)))] * len(p)
    rng = np.random.default_rng(seed)
    ranks = np.column_stack([rng.choice(m, size=int(n), p=row) + 1 for row in p])
    data = Dataset(ranks, tuple(scales), None if names is None else tuple(names))
    return data, dataset_to_csv(data)


def _metadata(config: ScaleConfig, data: Dataset, command: str, seed) -> dict:
    return {
        "command": command,
        "version": __version__,
        "n_obs": data.n_obs,
        "n_dims": data.n_dims,
        "m": data.m,
        "smoothing": config.smoothing,
        "metric": config.metric,
        "seed": seed,
        "config_sha256": config.digest(),
    }


def run_cluster(data: Dataset, config: ScaleConfig, command: str = "cluster"):
    rows, model = cluster_dataset(data, config.smoothing, config.metric)
    return Report(rows, model.summary(), _metadata(config, data, command, config.seed)), model


def run_baseline(data: Dataset, model: FuzzyModel, config: ScaleConfig) -> FCMResult:
    pts = model.transform(data.ranks) if config.encoding == "fuzzified" else data.ranks.astype(float)
    return baseline_fcm(pts, model.m, config.beta, config.tol, config.max_iter, config.seed)


def run_compare(data: Dataset, config: ScaleConfig) -> Report:
    report, model = run_cluster(data, config, "compare")
    res = run_baseline(data, model, config)
    report.baseline = res.rows()
    report.metadata["baseline"] = {
        "beta": config.beta, "tol": config.tol, "max_iter": config.max_iter,
        "encoding": config.encoding, "n_iter": res.n_iter, "converged": res.converged,
        "objective": res.objective[-1],
        "centroids": res.centroids.tolist(),
    }
    return report
