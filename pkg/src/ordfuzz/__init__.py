"""Fuzzy clustering of multidimensional ordinal data."""

__version__ = "0.1.0"

from .errors import (ConfigError, DataError, DomainError, IngestError, ModelError,
                     OrdFuzzError, RankError, ScaleMismatch, ZeroFrequencyRank)
from .ordinal_stats import (Dataset, FrequencyTable, OrdinalScale, compute_centers,
                            compute_frequencies, fit_tables, table_from_frequencies)
from .fuzzifier import (InfluenceZoneSpec, MembershipFamily, fuzzify, fuzzify_observation,
                        influence_spec, knots, membership, membership_matrix, memberships)
from .clusterer import (CentroidSet, FCMResult, FuzzyModel, MembershipRow, assign_points,
                        baseline_fcm, build_centroids, cluster_dataset, distances,
                        fcm_memberships, fit_model, in_zone, mbfcm_memberships)
