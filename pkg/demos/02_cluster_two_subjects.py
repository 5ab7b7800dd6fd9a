## Clustering two-subject grade vectors
##
## Each grade becomes the center of its rank in that subject, and cluster j is
## the vector of rank-j centers. A student with the same grade everywhere
## lands inside that cluster's zone and belongs to it outright; a mixed
## profile is split between two neighbouring grades only.

import numpy as np

from ordfuzz import Dataset, OrdinalScale, cluster_dataset, fcm_memberships

scale = OrdinalScale(("Poor", "Fair", "Good", "Excellent"))
rng = np.random.default_rng(0)

## Subject 1 skews towards Good, subject 2 towards Excellent
s1 = rng.choice(4, size=200, p=[0.2, 0.3, 0.4, 0.1]) + 1
s2 = rng.choice(4, size=200, p=[0.1, 0.2, 0.3, 0.4]) + 1
data = Dataset(np.column_stack([s1, s2]), (scale, scale), ("algebra", "physics"))

rows, model = cluster_dataset(data)
print("centroids (one row per grade):")
print(np.round(model.centroids.centroids, 3))

## A few students, two-neighbour rule next to the plain inverse-distance split
probe = np.array([[2, 2], [2, 3], [1, 4], [4, 1]])
x = model.transform(probe)
for ranks, point, row in zip(probe, x, model.assign(probe)):
    labels = [scale.label_of(int(r)) for r in ranks]
    w = row.weights(model.m)
    full = fcm_memberships(point, model.centroids)
    flag = "  (second-nearest was not adjacent)" if row.adjacency_override else ""
    print(f"{labels!s:28} {row.mode:5}  two-neighbour {np.round(w, 3)}"
          f"  all-clusters {np.round(full, 3)}{flag}")

n_crisp = sum(r.mode == "crisp" for r in rows)
print(f"{n_crisp} of {len(rows)} students were assigned crisply")
