## Fuzzifying one ordinal variable
##
## Grades in a single subject are turned into membership functions whose
## centers sit at the cumulative relative frequency of each grade. Frequent
## grades get wide influence intervals, rare ones narrow intervals.
##
## Run:  python demos/01_fuzzify_one_subject.py [--plot]

import sys

import numpy as np

from ordfuzz import (Dataset, OrdinalScale, compute_centers, compute_frequencies,
                     influence_spec, MembershipFamily, memberships)

scale = OrdinalScale(("Poor", "Fair", "Good", "Excellent"))

## Ten students: two Poor, three Fair, four Good, one Excellent
grades = ["Poor", "Poor", "Fair", "Fair", "Fair", "Good", "Good", "Good", "Good", "Excellent"]
data = Dataset.from_labels([[g] for g in grades], [scale])

table = compute_centers(compute_frequencies(data, 0))
print("relative frequencies:", table.rel_freq)
print("centers:             ", table.centers)
print("cumulative F_j:      ", table.cumulative, "(same numbers, other route)")

## Influence intervals tile [0, 1]; thresholds are where neighbours cross
spec = influence_spec(table)
for j, label in enumerate(scale.labels, start=1):
    lo, hi = spec.interval(j)
    print(f"{label:>9}: center {table.centers[j - 1]:.3f}  interval [{lo:.3f}, {hi:.3f}]")
print("right thresholds:", np.round(spec.alpha_right, 4))
print("left thresholds: ", np.round(spec.alpha_left, 4))

## Membership degrees at a few positions sum to one
fam = MembershipFamily.from_table(table)
for x in (0.0, 0.2, 0.5, 0.8, 1.0):
    mu = memberships(x, fam)
    print(f"x={x:.1f}  mu={np.round(mu, 3)}  sum={mu.sum():.3f}")

if "--plot" in sys.argv:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from ordfuzz import membership_matrix

    xs = np.linspace(0, 1, 501)
    mu = membership_matrix(xs, fam)
    fig, ax = plt.subplots(figsize=(7, 3))
    for j, label in enumerate(scale.labels):
        ax.plot(xs, mu[:, j], label=label)
        ax.axvspan(*spec.interval(j + 1), alpha=0.08 * (j + 1))
    ax.legend(loc="upper right")
    ax.set_xlabel("fuzzified position")
    ax.set_ylabel("membership")
    fig.tight_layout()
    fig.savefig("membership_functions.png")
    print("wrote membership_functions.png")
