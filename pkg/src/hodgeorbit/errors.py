"""Exception types shared across the package.

``HodgeOrbitError`` is the base for every error raised on invalid
mathematical input, so the CLI can map them uniformly to exit code 3.
"""


class HodgeOrbitError(Exception):
    """Base class for invalid mathematical input."""


class InvalidRank(HodgeOrbitError):
    """Rank outside the bounds of the requested family."""


class NotARoot(HodgeOrbitError):
    """Coordinate vector is not a root of the system."""


class NotStronglyOrthogonal(HodgeOrbitError):
    """A supposedly strongly orthogonal set fails the pairwise test."""


class IndexOutOfRange(HodgeOrbitError):
    """Simple-root index outside 1..rank."""


class NotDominant(HodgeOrbitError):
    """Weight is not dominant integral."""


class DimensionCapExceeded(HodgeOrbitError):
    """Representation dimension exceeds the configured cap."""


class NotMaximalParabolic(HodgeOrbitError):
    """Operation requires an index set of size one."""


class NotDegreeOne(HodgeOrbitError):
    """Root does not lie in the degree-one eigenspace."""


class InvalidSOS(HodgeOrbitError):
    """Strongly orthogonal set failed validation."""


class NotFundamentalAdjoint(HodgeOrbitError):
    """Operation requires a fundamental adjoint parabolic."""


class LengthMismatch(HodgeOrbitError):
    """Roots of different lengths cannot be Weyl conjugate."""


class CompactRoot(HodgeOrbitError):
    """Operation requires a noncompact root."""
