"""Exception types shared across the package."""


class SkewsepError(Exception):
    """Base class for every package-specific error."""


class DimensionMismatch(SkewsepError):
    """Operand shapes or bipartite dimensions are incompatible."""


class NotHermitian(SkewsepError):
    """Hermiticity defect exceeds the stated tolerance."""


class NotPSD(SkewsepError):
    """An eigenvalue lies below the negativity tolerance."""


class NoConvergence(SkewsepError):
    """The underlying eigen/SVD iteration failed to converge."""


class NonRealCorrelation(SkewsepError):
    """Correlation-matrix entries carry a non-negligible imaginary part."""


class NotOrthogonal(SkewsepError):
    """A claimed orthogonal matrix fails O^T O = 1 within tolerance."""


class BadWeights(SkewsepError):
    """Mixture weights are negative or do not sum to one."""


class RangeError(SkewsepError):
    """A state-family parameter lies outside its admissible range."""


class NonMonotone(SkewsepError):
    """Threshold pre-scan found more than one detection flip."""


class InternalInconsistency(SkewsepError):
    """Two independent evaluation routes disagree beyond tolerance."""


class InvalidState(SkewsepError):
    """A matrix fails the density-matrix invariants."""


class InvalidStateFile(SkewsepError):
    """A density-matrix file is malformed or fails validation."""


class ConfigError(SkewsepError):
    """Experiment configuration is incomplete or inconsistent."""
