"""Exception types shared across the package."""


class NPSpecError(Exception):
    """Base class for domain-specific failures."""


class DegenerateParametrization(NPSpecError):
    """Boundary speed fell below the positivity floor; the map is (numerically) non-injective."""


class OutOfRange(NPSpecError):
    """Argument outside the validity range of a closed-form expression."""


class CurveOverlap(NPSpecError):
    """Two boundary curves intersect or nearly touch; block quadrature is meaningless."""


class GramNotPositive(NPSpecError):
    """The single-layer Gram form lost positivity; discretization failure."""


class NearSingular(NPSpecError):
    """Resolvent system conditioning beyond the trust threshold."""


class ExactPole(NPSpecError):
    """Evaluation exactly on a pole of a closed-form rational expression."""


class SeriesPole(NPSpecError):
    """Series evaluation hit a term denominator of zero."""


class NoContrast(NPSpecError):
    """Permittivity ratio equal to one carries no spectral information."""


class NoPeaks(NPSpecError):
    """No local maximum above the prominence threshold."""


class Inconsistent(NPSpecError):
    """Measured resonance pair incompatible with the model family."""


class IllConditioned(NPSpecError):
    """Inputs admit an answer only with error amplification beyond the trust threshold."""
