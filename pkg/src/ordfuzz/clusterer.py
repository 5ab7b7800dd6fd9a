"""Rank-cluster centroids, zone tests and membership assignment.

Cluster j collects the rank-j center of every dimension. An observation
falling inside the zone (orthotope) of a centroid belongs to it crisply;
otherwise its weight is split between the nearest centroid and the nearer of
that centroid's two ordinal neighbours, with inverse squared distances.

A classic iterative fuzzy c-means is included as a comparison baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DataError, ScaleMismatch
from .fuzzifier import InfluenceZoneSpec, MembershipFamily, fuzzify, influence_spec
from .ordinal_stats import Dataset, FrequencyTable, fit_tables, _frozen

METRICS = ("euclidean", "manhattan")


@dataclass(frozen=True)
class CentroidSet:
    """``centroids[j-1]`` is the centroid of rank j; zones are closed boxes."""

    centroids: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    metric: str = "euclidean"

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}; choose from {METRICS}")

    @property
    def m(self) -> int:
        return self.centroids.shape[0]

    @property
    def n_dims(self) -> int:
        return self.centroids.shape[1]


def build_centroids(tables: Sequence[FrequencyTable], metric: str = "euclidean") -> CentroidSet:
    ms = {t.m for t in tables}
    if len(ms) != 1:
        raise ScaleMismatch(f"dimensions disagree on rank count: {sorted(ms)}")
    specs = [influence_spec(t) for t in tables]
    centroids = np.column_stack([t.centers for t in tables])
    lower = np.column_stack([s.lower for s in specs])
    upper = np.column_stack([s.upper for s in specs])
    return CentroidSet(_frozen(centroids), _frozen(lower), _frozen(upper), metric)


def _as_points(x, n):
    x = np.asarray(x, dtype=float)
    single = x.ndim <= 1
    x = x.reshape(-1, n) if single else x
    if x.shape[1] != n:
        raise DataError(f"expected {n} coordinates per point, got {x.shape[1]}")
    return x, single


def in_zone(x, j: int, cs: CentroidSet) -> bool:
    x = np.asarray(x, dtype=float).reshape(-1)
    return bool(np.all((cs.lower[j - 1] <= x) & (x <= cs.upper[j - 1])))


def _pairwise(x, c, metric):
    diff = x[:, None, :] - c[None, :, :]
    if metric == "manhattan":
        return np.abs(diff).sum(axis=2)
    return np.sqrt((diff * diff).sum(axis=2))


def distances(x, cs: CentroidSet) -> np.ndarray:
    """Distances to all m centroids; ``(m,)`` for one point, ``(N, m)`` for many."""
    pts, single = _as_points(x, cs.n_dims)
    d = _pairwise(pts, cs.centroids, cs.metric)
    return d[0] if single else d


def _inverse_square_weights(d):
    # rows with a zero distance go entirely to the first such cluster
    d = np.atleast_2d(d)
    out = np.zeros_like(d)
    zero = d <= 0.0
    hit = zero.any(axis=1)
    out[hit, np.argmax(zero[hit], axis=1)] = 1.0
    rest = ~hit
    if rest.any():
        inv = d[rest] ** -2.0
        out[rest] = inv / inv.sum(axis=1, keepdims=True)
    return out


def fcm_memberships(x, cs: CentroidSet) -> np.ndarray:
    """Inverse-squared-distance weights over all m clusters (beta = 2)."""
    d = distances(x, cs)
    w = _inverse_square_weights(d)
    return w[0] if d.ndim == 1 else w


@dataclass(frozen=True)
class MembershipRow:
    """Membership result for one observation.

    ``entries`` holds ``(cluster, weight)`` pairs with 1-based cluster indices
    in ascending order. ``mode`` is ``"crisp"``, ``"fuzzy"`` or ``"full"``.
    """

    obs_index: int
    mode: str
    entries: tuple
    adjacency_override: bool = False

    def weights(self, m: int) -> np.ndarray:
        w = np.zeros(m)
        for j, v in self.entries:
            w[j - 1] = v
        return w

    @property
    def clusters(self) -> tuple:
        return tuple(j for j, _ in self.entries)


def _assign(points: np.ndarray, cs: CentroidSet):
    """Core of the two-neighbour rule, vectorised over points.

    Returns crisp flag, nearest cluster j, partner l (0-based, -1 when crisp),
    their weights and the override flag.
    """
    N = points.shape[0]
    m = cs.m
    inside = np.all((cs.lower[None] <= points[:, None, :]) &
                    (points[:, None, :] <= cs.upper[None]), axis=2)
    zone_hit = inside.any(axis=1)
    zone_j = np.argmax(inside, axis=1)

    d = _pairwise(points, cs.centroids, cs.metric)
    j = np.argmin(d, axis=1)
    rows = np.arange(N)
    dj = d[rows, j]

    crisp = zone_hit | (dj <= 0.0)
    j = np.where(zone_hit, zone_j, j)

    left = np.where(j > 0, d[rows, np.maximum(j - 1, 0)], np.inf)
    right = np.where(j < m - 1, d[rows, np.minimum(j + 1, m - 1)], np.inf)
    l = np.where(left <= right, j - 1, j + 1)
    dl = np.minimum(left, right)

    masked = d.copy()
    masked[rows, j] = np.inf
    second = masked.min(axis=1) if m > 1 else np.full(N, np.inf)
    override = ~crisp & (dl > second)

    with np.errstate(divide="ignore", invalid="ignore"):
        inv_j = dj ** -2.0
        inv_l = dl ** -2.0
        wj = inv_j / (inv_j + inv_l)
        wl = inv_l / (inv_j + inv_l)
    wj = np.where(crisp, 1.0, wj)
    wl = np.where(crisp, 0.0, wl)
    l = np.where(crisp, -1, l)
    return crisp, j, l, wj, wl, override


def _rows(crisp, j, l, wj, wl, override, start=1):
    out = []
    for k in range(len(j)):
        if crisp[k]:
            out.append(MembershipRow(start + k, "crisp", ((int(j[k]) + 1, 1.0),)))
            continue
        a = (int(j[k]) + 1, float(wj[k]))
        b = (int(l[k]) + 1, float(wl[k]))
        entries = (a, b) if a[0] < b[0] else (b, a)
        out.append(MembershipRow(start + k, "fuzzy", entries, bool(override[k])))
    return out


def mbfcm_memberships(x, cs: CentroidSet, obs_index: int = 1) -> MembershipRow:
    """Crisp row inside a zone, else a two-adjacent-cluster split."""
    pts, _ = _as_points(x, cs.n_dims)
    if pts.shape[0] != 1:
        raise DataError("mbfcm_memberships takes a single point; use assign_points")
    return _rows(*_assign(pts, cs), start=obs_index)[0]


def assign_points(points, cs: CentroidSet) -> list:
    """:func:`mbfcm_memberships` for every row of ``points``, in order."""
    pts, _ = _as_points(points, cs.n_dims)
    return _rows(*_assign(pts, cs))


@dataclass(frozen=True)
class FuzzyModel:
    """Everything fitted from a rank dataset."""

    tables: tuple
    families: tuple
    zones: tuple
    centroids: CentroidSet
    scales: tuple
    names: tuple
    smoothing: float = 0.0

    @property
    def m(self) -> int:
        return self.centroids.m

    @property
    def n_dims(self) -> int:
        return self.centroids.n_dims

    @property
    def metric(self) -> str:
        return self.centroids.metric

    def transform(self, ranks) -> np.ndarray:
        return fuzzify(ranks, self.tables)

    def assign(self, ranks) -> list:
        return assign_points(self.transform(ranks), self.centroids)

    def summary(self) -> list:
        dims = []
        for name, sc, t, z in zip(self.names, self.scales, self.tables, self.zones):
            dims.append({
                "name": name,
                "labels": list(sc.labels),
                "counts": [int(v) for v in t.counts],
                "rel_freq": [float(v) for v in t.rel_freq],
                "centers": [float(v) for v in t.centers],
                "cumulative": [float(v) for v in t.cumulative],
                "zones": [[float(a), float(b)] for a, b in zip(z.lower, z.upper)],
                "alpha_right": [float(v) for v in z.alpha_right],
                "alpha_left": [float(v) for v in z.alpha_left],
            })
        return dims


def fit_model(data: Dataset, smoothing: float = 0.0, metric: str = "euclidean") -> FuzzyModel:
    tables = tuple(fit_tables(data, smoothing))
    cs = build_centroids(tables, metric)
    return FuzzyModel(
        tables=tables,
        families=tuple(MembershipFamily.from_table(t) for t in tables),
        zones=tuple(influence_spec(t) for t in tables),
        centroids=cs,
        scales=data.scales,
        names=data.names,
        smoothing=float(smoothing),
    )


def cluster_dataset(data: Dataset, smoothing: float = 0.0, metric: str = "euclidean"):
    """Fit on ``data`` and assign each of its observations.

    Returns ``(rows, model)``.
    """
    model = fit_model(data, smoothing, metric)
    return model.assign(data.ranks), model


@dataclass
class FCMResult:
    centroids: np.ndarray
    weights: np.ndarray
    objective: list = field(default_factory=list)
    n_iter: int = 0
    converged: bool = False

    def rows(self) -> list:
        m = self.weights.shape[1]
        return [MembershipRow(k + 1, "full",
                              tuple((j + 1, float(w[j])) for j in range(m)))
                for k, w in enumerate(self.weights)]


def _fcm_weights(x, v, beta):
    d2 = ((x[:, None, :] - v[None, :, :]) ** 2).sum(axis=2)
    out = np.zeros_like(d2)
    zero = d2 <= 0.0
    hit = zero.any(axis=1)
    out[hit, np.argmax(zero[hit], axis=1)] = 1.0
    rest = ~hit
    if rest.any():
        r = d2[rest]
        # scale by the row minimum so the power cannot overflow
        ratio = (r.min(axis=1, keepdims=True) / r) ** (1.0 / (beta - 1.0))
        out[rest] = ratio / ratio.sum(axis=1, keepdims=True)
    return out, d2


def _objective(u, d2, beta):
    return float((u ** beta * d2).sum())


def _quantile_init(x, m):
    uniq = np.unique(x, axis=0)
    pool = uniq if len(uniq) >= m else x
    order = np.argsort(pool.mean(axis=1), kind="stable")
    idx = np.round((np.arange(m) + 0.5) / m * (len(pool) - 1)).astype(int)
    return pool[order[idx]].copy()


def baseline_fcm(points, m: int, beta: float = 2.0, tol: float = 1e-6,
                 max_iter: int = 300, seed: Optional[int] = None) -> FCMResult:
    """Alternating-optimisation fuzzy c-means.

    Deterministic quantile-spread initialisation unless ``seed`` is given, in
    which case m distinct points are drawn at random. Clusters are relabelled
    at the end so cluster 1 has the smallest mean centroid coordinate, which
    lines them up with ranks for side-by-side reporting.
    """
    x = np.asarray(points, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2 or not np.all(np.isfinite(x)):
        raise DataError("points must be a finite 2-D array")
    if not beta > 1.0:
        raise DataError("beta must be greater than 1")
    if m < 1 or x.shape[0] < m:
        raise DataError(f"need 1 <= m <= N, got m={m}, N={x.shape[0]}")

    if seed is None:
        v = _quantile_init(x, m)
    else:
        rng = np.random.default_rng(seed)
        v = x[rng.choice(x.shape[0], size=m, replace=False)].copy()

    history = []
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        u, d2 = _fcm_weights(x, v, beta)
        history.append(_objective(u, d2, beta))
        ub = u ** beta
        mass = ub.sum(axis=0)
        v_new = v.copy()
        ok = mass > 0
        v_new[ok] = (ub.T @ x)[ok] / mass[ok, None]
        shift = np.sqrt(((v_new - v) ** 2).sum(axis=1)).max()
        v = v_new
        if shift < tol:
            converged = True
            break

    u, d2 = _fcm_weights(x, v, beta)
    history.append(_objective(u, d2, beta))

    order = np.argsort(v.mean(axis=1), kind="stable")
    return FCMResult(v[order], u[:, order], history, it, converged)
