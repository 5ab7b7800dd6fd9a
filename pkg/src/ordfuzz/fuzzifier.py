"""Frequency-driven membership functions and influence intervals.

Each dimension gets m piecewise-linear membership functions peaking at the
rank centers. The first and last are flat out to the ends of [0, 1], so the
family forms a unity partition over the whole domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, RankError
from .ordinal_stats import FrequencyTable, TOL, _frozen

SHAPES = ("triangular",)


@dataclass(frozen=True)
class MembershipFamily:
    centers: np.ndarray
    shape: str = "triangular"

    def __post_init__(self):
        c = np.asarray(self.centers, dtype=float)
        if c.ndim != 1 or len(c) < 2:
            raise ValueError("a membership family needs at least two centers")
        if np.any(np.diff(c) <= 0):
            raise ValueError("centers must be strictly increasing")
        if self.shape not in SHAPES:
            # other finite-support shapes plug in here
            raise NotImplementedError(f"membership shape {self.shape!r} is not implemented")
        object.__setattr__(self, "centers", _frozen(c))

    @classmethod
    def from_table(cls, table: FrequencyTable) -> "MembershipFamily":
        return cls(table.centers)

    @property
    def m(self) -> int:
        return len(self.centers)

    def support(self, j: int) -> tuple:
        """Closed support of mu_j, edge plateaus included."""
        c = self.centers
        lo = 0.0 if j == 1 else float(c[j - 2])
        hi = 1.0 if j == self.m else float(c[j])
        return lo, hi


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(x < 0.0) or np.any(x > 1.0):
        raise DomainError("membership arguments must lie in [0, 1]")
    return x


def membership(x: float, j: int, fam: MembershipFamily) -> float:
    """Degree of ``x`` in rank ``j`` (1-based)."""
    _check_x(x)
    m = fam.m
    if not 1 <= j <= m:
        raise RankError(f"rank {j} outside 1..{m}")
    c = fam.centers
    cj = c[j - 1]
    if x == cj:
        return 1.0
    if x < cj:
        if j == 1:
            return 1.0
        prev = c[j - 2]
        if x <= prev:
            return 0.0
        return float((x - prev) / (cj - prev))
    if j == m:
        return 1.0
    nxt = c[j]
    if x >= nxt:
        return 0.0
    return float((nxt - x) / (nxt - cj))


def membership_matrix(xs, fam: MembershipFamily) -> np.ndarray:
    """Degrees for many positions at once, shape ``(len(xs), m)``.

    Every row has at most two nonzero entries, on adjacent ranks.
    """
    xs = _check_x(np.atleast_1d(xs))
    c = fam.centers
    m = fam.m
    out = np.zeros((xs.size, m))
    below = xs <= c[0]
    above = xs >= c[-1]
    out[below, 0] = 1.0
    out[above, m - 1] = 1.0
    mid = ~(below | above)
    xm = xs[mid]
    # k is the 0-based index of the left center of the bracketing pair
    k = np.searchsorted(c, xm, side="right") - 1
    left, right = c[k], c[k + 1]
    rows = np.flatnonzero(mid)
    out[rows, k] = (right - xm) / (right - left)
    out[rows, k + 1] = (xm - left) / (right - left)
    return out


def memberships(x: float, fam: MembershipFamily) -> np.ndarray:
    """All m degrees of a single position."""
    return membership_matrix(np.array([x], dtype=float), fam)[0]


@dataclass(frozen=True)
class InfluenceZoneSpec:
    """Influence intervals and alpha-cut thresholds of one dimension.

    ``alpha_right[k]`` is the right threshold of rank k+1 (ranks 1..m-1);
    ``alpha_left[k]`` is the left threshold of rank k+2 (ranks 2..m).
    """

    lower: np.ndarray
    upper: np.ndarray
    alpha_right: np.ndarray
    alpha_left: np.ndarray

    @property
    def m(self) -> int:
        return len(self.lower)

    def interval(self, j: int) -> tuple:
        return float(self.lower[j - 1]), float(self.upper[j - 1])

    def rank_of(self, x: float) -> int:
        """Rank whose closed interval holds ``x``; lower rank wins on a shared edge."""
        x = float(_check_x(x))
        for j in range(1, self.m + 1):
            if self.lower[j - 1] <= x <= self.upper[j - 1]:
                return j
        raise DomainError(f"{x!r} is not covered by any interval")


def influence_spec(freq: FrequencyTable) -> InfluenceZoneSpec:
    f = freq.rel_freq
    c = freq.centers
    if c is None:
        raise ValueError("frequency table has no centers; call compute_centers first")
    if np.any(f <= 0):
        raise ValueError("influence intervals need every relative frequency > 0")
    half = 0.5 * f
    # edges are shared between neighbours and pinned to 0 and 1 so the
    # intervals tile [0, 1] exactly instead of to within rounding
    upper = np.clip(c + half, 0.0, 1.0)
    upper[-1] = 1.0
    lower = np.concatenate(([0.0], upper[:-1]))
    gap = np.diff(c)
    alpha_right = 1.0 - half[:-1] / gap
    alpha_left = 1.0 - half[1:] / gap
    return InfluenceZoneSpec(_frozen(lower), _frozen(upper),
                             _frozen(alpha_right), _frozen(alpha_left))


def fuzzify_observation(ranks: Sequence[int], tables: Sequence[FrequencyTable]) -> np.ndarray:
    """Map a rank vector to the centers of its ranks, one per dimension."""
    if len(ranks) != len(tables):
        raise RankError(f"expected {len(tables)} ranks, got {len(ranks)}")
    return np.array([t.center(int(r)) for r, t in zip(ranks, tables)])


def fuzzify(ranks, tables: Sequence[FrequencyTable]) -> np.ndarray:
    """Vectorised :func:`fuzzify_observation` for an ``(N, n)`` rank matrix."""
    ranks = np.asarray(ranks)
    if ranks.ndim == 1:
        ranks = ranks[None, :]
    if ranks.shape[1] != len(tables):
        raise RankError(f"expected {len(tables)} rank columns, got {ranks.shape[1]}")
    out = np.empty(ranks.shape, dtype=float)
    for i, t in enumerate(tables):
        col = ranks[:, i]
        if col.size and (col.min() < 1 or col.max() > t.m):
            raise RankError(f"rank outside 1..{t.m} in dimension {i + 1}")
        out[:, i] = t.centers[col - 1]
    return out


def knots(table: FrequencyTable) -> list:
    """Per-rank plotting knots: center, support, influence interval, thresholds."""
    fam = MembershipFamily.from_table(table)
    spec = influence_spec(table)
    rows = []
    for j in range(1, table.m + 1):
        lo, hi = fam.support(j)
        zlo, zhi = spec.interval(j)
        rows.append({
            "rank": j,
            "center": float(table.centers[j - 1]),
            "support_left": lo,
            "support_right": hi,
            "zone_left": zlo,
            "zone_right": zhi,
            "alpha_left": float(spec.alpha_left[j - 2]) if j > 1 else None,
            "alpha_right": float(spec.alpha_right[j - 1]) if j < table.m else None,
        })
    return rows


def check_tiling(spec: InfluenceZoneSpec, tol: float = TOL) -> bool:
    return (abs(spec.lower[0]) <= tol and abs(spec.upper[-1] - 1.0) <= tol
            and bool(np.all(np.abs(spec.upper[:-1] - spec.lower[1:]) <= tol)))
