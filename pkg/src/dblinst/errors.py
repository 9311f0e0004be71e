"""Error taxonomy for the engine.

Errors signal "cannot compute" situations (non-finite closures, missing
structure); axiom violations are reported through validation reports
instead of raised.
"""


class DblinstError(Exception):
    """Base class for all engine errors."""


class ClosureNotFinite(DblinstError):
    """A theory presentation kept producing new arrows at the word bound."""


class IllFormedRelation(DblinstError):
    """A relation equates non-parallel words."""


class FreeCategoryNotFinite(DblinstError):
    """A free (signed) category has paths at the configured length bound."""


class HomSetNotFinite(DblinstError):
    """Word enumeration of a presented category did not stabilize."""


class HomSetTooLarge(DblinstError):
    """An enumeration exceeded the configured cardinality cap."""


class NotDiscreteOpfibration(DblinstError):
    """A witness was required but the morphism is not a discrete opfibration."""


class NoExtension(DblinstError):
    """Object components do not extend to a morphism of discrete opfibrations."""


class MiddleNotCartesian(DblinstError):
    """The middle object of a cartesian factorization failed cartesianness."""


class MarkedSquareNotPullback(DblinstError):
    """A sketch model sends a marked square to a non-pullback."""


class UnknownVerb(DblinstError):
    """The CLI was invoked with an unrecognized subcommand."""
