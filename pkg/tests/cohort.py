"""Synthetic grade cohort with correlated subjects."""

import numpy as np

from ordfuzz import Dataset, OrdinalScale

GRADES3 = OrdinalScale(("Fair", "Good", "Excellent"))

# two mixed-profile students: strong overall with one weak subject, and weak
# overall with one strong subject
PROFILES = np.array([
    [1, 3, 3, 3, 3, 3],  # Fair, Excellent, Excellent | Excellent, Excellent, Excellent
    [1, 3, 1, 2, 1, 1],  # Fair, Excellent, Fair      | Good, Fair, Fair
])


def grade_cohort(seed, n_students=133, n_subjects=6, noise=0.6):
    """Latent ability plus per-subject noise, cut into three grades."""
    rng = np.random.default_rng(seed)
    ability = rng.normal(0.0, 1.0, n_students)
    latent = (ability[:, None] + rng.normal(0.0, noise, (n_students, n_subjects))
              + rng.normal(0.0, 0.3, n_subjects))
    ranks = np.digitize(latent, [-0.5, 0.5]) + 1
    ranks = np.vstack([ranks, PROFILES[:, :n_subjects]])
    names = tuple(f"subject{i + 1}" for i in range(n_subjects))
    return Dataset(ranks, (GRADES3,) * n_subjects, names)
