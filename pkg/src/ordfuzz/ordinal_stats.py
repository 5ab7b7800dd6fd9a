"""Ordinal scales, rank datasets and per-dimension frequency statistics.

Ranks are 1-based everywhere: rank ``j`` of an m-label scale is the
``j``-th label from the low end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DataError, RankError, ScaleMismatch, ZeroFrequencyRank

TOL = 1e-12


def _frozen(a, dtype=float):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class OrdinalScale:
    """Ordered rank labels, lowest first."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        if len(labels) < 2:
            raise ScaleMismatch("an ordinal scale needs at least two labels")
        if len(set(labels)) != len(labels):
            raise ScaleMismatch(f"scale labels must be distinct: {labels!r}")
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.labels)

    def rank_of(self, label: str) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise RankError(f"label {label!r} is not on the scale {self.labels!r}") from None

    def label_of(self, rank: int) -> str:
        if not 1 <= rank <= self.m:
            raise RankError(f"rank {rank} outside 1..{self.m}")
        return self.labels[rank - 1]


@dataclass(frozen=True)
class Dataset:
    """N x n matrix of 1-based rank indices with one scale per column."""

    ranks: np.ndarray
    scales: tuple
    names: Optional[tuple] = None

    def __post_init__(self):
        ranks = np.asarray(self.ranks)
        if ranks.ndim == 1:
            ranks = ranks[:, None]
        if ranks.ndim != 2:
            raise DataError("ranks must be a 2-D array (observations x dimensions)")
        if ranks.size and not np.issubdtype(ranks.dtype, np.integer):
            if not np.all(ranks == np.round(ranks)):
                raise RankError("rank indices must be integers")
        scales = tuple(s if isinstance(s, OrdinalScale) else OrdinalScale(tuple(s))
                       for s in self.scales)
        if len(scales) != ranks.shape[1]:
            raise DataError(
                f"{ranks.shape[1]} columns but {len(scales)} scales were given"
            )
        ms = {s.m for s in scales}
        if len(ms) > 1:
            raise ScaleMismatch(f"all dimensions must share one rank count, got {sorted(ms)}")
        m = scales[0].m
        if ranks.size and (ranks.min() < 1 or ranks.max() > m):
            raise RankError(f"rank indices must lie in 1..{m}")
        names = self.names
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(len(scales)))
        elif len(names) != len(scales):
            raise DataError("one column name per dimension is required")
        object.__setattr__(self, "ranks", _frozen(ranks, dtype=np.int64))
        object.__setattr__(self, "scales", scales)
        object.__setattr__(self, "names", tuple(names))

    @classmethod
    def from_labels(cls, rows: Sequence[Sequence[str]], scales, names=None) -> "Dataset":
        scales = [s if isinstance(s, OrdinalScale) else OrdinalScale(tuple(s)) for s in scales]
        ranks = [[sc.rank_of(v) for sc, v in zip(scales, row)] for row in rows]
        return cls(np.array(ranks, dtype=np.int64).reshape(len(ranks), len(scales)),
                   tuple(scales), names)

    @property
    def n_obs(self) -> int:
        return self.ranks.shape[0]

    @property
    def n_dims(self) -> int:
        return self.ranks.shape[1]

    @property
    def m(self) -> int:
        return self.scales[0].m

    def labels(self) -> list:
        return [[sc.label_of(int(r)) for sc, r in zip(self.scales, row)] for row in self.ranks]


@dataclass(frozen=True)
class FrequencyTable:
    """Rank statistics for one dimension.

    ``centers`` and ``cumulative`` stay ``None`` until :func:`compute_centers`
    fills them.
    """

    counts: np.ndarray
    rel_freq: np.ndarray
    centers: Optional[np.ndarray] = None
    cumulative: Optional[np.ndarray] = None
    dim: int = 0
    smoothing: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "counts", _frozen(self.counts, dtype=np.int64))
        object.__setattr__(self, "rel_freq", _frozen(self.rel_freq))
        if self.centers is not None:
            object.__setattr__(self, "centers", _frozen(self.centers))
        if self.cumulative is not None:
            object.__setattr__(self, "cumulative", _frozen(self.cumulative))

    @property
    def m(self) -> int:
        return len(self.rel_freq)

    @property
    def n_obs(self) -> int:
        return int(self.counts.sum())

    def center(self, rank: int) -> float:
        if self.centers is None:
            raise ValueError("centers not computed yet; call compute_centers first")
        if not 1 <= rank <= self.m:
            raise RankError(f"rank {rank} outside 1..{self.m} in dimension {self.dim + 1}")
        return float(self.centers[rank - 1])


def compute_frequencies(data: Dataset, dim: int, smoothing: float = 0.0) -> FrequencyTable:
    """Count ranks in column ``dim`` (0-based) and turn counts into f_j.

    With ``smoothing`` = lambda > 0 the Laplace estimate
    ``(N_j + lambda) / (N + m * lambda)`` is used.
    """
    if not 0 <= dim < data.n_dims:
        raise DataError(f"dimension {dim} outside 0..{data.n_dims - 1}")
    if data.n_obs < 1:
        raise DataError("at least one observation is required")
    if smoothing < 0 or not np.isfinite(smoothing):
        raise DataError("smoothing must be a finite non-negative number")
    m = data.m
    counts = np.bincount(data.ranks[:, dim], minlength=m + 1)[1:]
    total = counts.sum() + m * smoothing
    rel = (counts + smoothing) / total
    zero = np.flatnonzero(rel <= 0)
    if zero.size:
        raise ZeroFrequencyRank(dim + 1, int(zero[0]) + 1)
    return FrequencyTable(counts, rel, dim=dim, smoothing=float(smoothing))


def compute_centers(freq: FrequencyTable) -> FrequencyTable:
    """Fill in rank centers by the recurrence and the cumulative frequencies.

    The two are computed by separate routes and must agree to 1e-12.
    """
    f = freq.rel_freq
    if np.any(f <= 0):
        j = int(np.flatnonzero(f <= 0)[0]) + 1
        raise ZeroFrequencyRank(freq.dim + 1, j)
    if abs(f.sum() - 1.0) > 1e-9:
        raise DataError(f"relative frequencies sum to {f.sum()!r}, not 1")

    centers = np.empty_like(f)
    centers[0] = 0.5 * f[0]
    for j in range(1, len(f)):
        centers[j] = centers[j - 1] + 0.5 * (f[j - 1] + f[j])

    below = np.concatenate(([0.0], np.cumsum(f)[:-1]))
    cumulative = 0.5 * f + below

    return FrequencyTable(freq.counts, f, centers, cumulative,
                          dim=freq.dim, smoothing=freq.smoothing)


def table_from_frequencies(f: Sequence[float], dim: int = 0) -> FrequencyTable:
    """Build a centered table straight from relative frequencies.

    Counts are not meaningful here and are left at zero.
    """
    f = np.asarray(f, dtype=float)
    return compute_centers(FrequencyTable(np.zeros(len(f), dtype=np.int64), f, dim=dim))


def fit_tables(data: Dataset, smoothing: float = 0.0) -> list:
    """Centered frequency tables for every dimension of ``data``."""
    return [compute_centers(compute_frequencies(data, i, smoothing)) for i in range(data.n_dims)]
