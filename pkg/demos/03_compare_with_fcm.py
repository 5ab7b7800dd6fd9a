## Two-neighbour memberships versus fuzzy c-means
##
## A synthetic cohort of 135 students and six subjects on a Fair < Good <
## Excellent scale. Grades are correlated through a latent ability. Two of the
## students carry mixed profiles; fuzzy c-means gives them weight on every
## grade cluster, while the two-neighbour rule leaves the far cluster at zero.

import numpy as np

from ordfuzz import Dataset, OrdinalScale, baseline_fcm, cluster_dataset

scale = OrdinalScale(("Fair", "Good", "Excellent"))
rng = np.random.default_rng(2)

ability = rng.normal(0.0, 1.0, 133)
latent = ability[:, None] + rng.normal(0.0, 0.6, (133, 6)) + rng.normal(0.0, 0.3, 6)
ranks = np.digitize(latent, [-0.5, 0.5]) + 1
mixed = np.array([[1, 3, 3, 3, 3, 3],
                  [1, 3, 1, 2, 1, 1]])
data = Dataset(np.vstack([ranks, mixed]), (scale,) * 6)

rows, model = cluster_dataset(data)
fcm = baseline_fcm(model.transform(data.ranks), model.m, beta=2.0)

print(f"{'':10}{'obs':>4}  " + "  ".join(f"{lab:>9}" for lab in scale.labels))
for k, name in ((-2, 1), (-1, 2)):
    print(f"{'FCM':10}{name:>4}  " + "  ".join(f"{w:9.2f}" for w in fcm.weights[k]))
for k, name in ((-2, 1), (-1, 2)):
    print(f"{'two-nbr':10}{name:>4}  " + "  ".join(f"{w:9.2f}" for w in rows[k].weights(3)))

print(f"fcm converged after {fcm.n_iter} iterations, objective {fcm.objective[-1]:.4f}")
