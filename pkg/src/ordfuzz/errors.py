"""Exception types raised by ordfuzz."""


class OrdFuzzError(Exception):
    """Base class for all package errors."""


class ModelError(OrdFuzzError):
    """A model cannot be fitted from the given data."""


class ZeroFrequencyRank(ModelError):
    def __init__(self, dim, rank):
        self.dim = dim
        self.rank = rank
        super().__init__(
            f"rank {rank} never occurs in dimension {dim}; "
            "enable smoothing or drop the rank from the scale"
        )


class ScaleMismatch(ModelError):
    """Dimensions disagree on the number of ranks."""


class DomainError(OrdFuzzError, ValueError):
    """A numeric position lies outside [0, 1]."""


class RankError(OrdFuzzError, ValueError):
    """A rank index lies outside 1..m."""


class DataError(OrdFuzzError, ValueError):
    """Numeric input is malformed (non-finite, wrong shape, too few rows)."""


class ConfigError(OrdFuzzError):
    """Invalid configuration."""


class IngestError(OrdFuzzError):
    def __init__(self, message, row=None, column=None, label=None):
        self.row = row
        self.column = column
        self.label = label
        super().__init__(message)
