"""Straight-from-the-formulas reference used to cross-check the package.

Plain Python floats and loops only; nothing here imports ordfuzz.
"""

import math


def centers_from_freqs(f):
    c = []
    for j, fj in enumerate(f):
        c.append(fj / 2 if j == 0 else c[-1] + (f[j - 1] + fj) / 2)
    return c


def zone_box(freqs, j):
    """Closed per-dimension interval of zone j (0-based), clipped to [0, 1]."""
    box = []
    for f in freqs:
        c = centers_from_freqs(f)
        # the outermost intervals reach the ends of the domain
        lo = 0.0 if j == 0 else c[j] - f[j] / 2
        hi = 1.0 if j == len(f) - 1 else c[j] + f[j] / 2
        box.append((lo, hi))
    return box


def centroid(freqs, j):
    return [centers_from_freqs(f)[j] for f in freqs]


def euclid(a, b):
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def two_neighbour_weights(x, freqs, dist=euclid):
    """Dense m-vector of weights for point x under the two-neighbour rule."""
    m = len(freqs[0])
    for j in range(m):
        if all(lo <= xi <= hi for xi, (lo, hi) in zip(x, zone_box(freqs, j))):
            w = [0.0] * m
            w[j] = 1.0
            return w
    d = [dist(x, centroid(freqs, j)) for j in range(m)]
    j = min(range(m), key=lambda i: (d[i], i))
    w = [0.0] * m
    if d[j] == 0:
        w[j] = 1.0
        return w
    cands = [i for i in (j - 1, j + 1) if 0 <= i < m]
    l = min(cands, key=lambda i: (d[i], i))
    a, b = 1 / d[j] ** 2, 1 / d[l] ** 2
    w[j] = a / (a + b)
    w[l] = b / (a + b)
    return w


def full_weights(x, freqs, dist=euclid):
    m = len(freqs[0])
    d = [dist(x, centroid(freqs, j)) for j in range(m)]
    if min(d) == 0:
        w = [0.0] * m
        w[d.index(0.0)] = 1.0
        return w
    inv = [1 / v ** 2 for v in d]
    s = sum(inv)
    return [v / s for v in inv]
