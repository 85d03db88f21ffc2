"""Exception hierarchy shared by all modules.

Every error derives from :class:`HopfSpernerError` so callers (and the CLI)
can separate bad input from genuine bugs.
"""

from __future__ import annotations


class HopfSpernerError(ValueError):
    """Base class for input and precondition failures."""


# core complex
class NonPure(HopfSpernerError):
    pass


class DuplicateSimplex(HopfSpernerError):
    pass


class RepeatedVertex(HopfSpernerError):
    pass


class UnknownVertex(HopfSpernerError):
    pass


class NotPseudomanifold(HopfSpernerError):
    pass


class NotStronglyConnected(HopfSpernerError):
    pass


class NonOrientable(HopfSpernerError):
    pass


class IncoherentOrientation(HopfSpernerError):
    pass


# homology
class DegreeOutOfRange(HopfSpernerError):
    pass


class DegreeMismatch(HopfSpernerError):
    pass


class NotACycle(HopfSpernerError):
    pass


class NotABoundary(HopfSpernerError):
    pass


class NotACocycle(HopfSpernerError):
    pass


# labeling / degree
class UnknownLabel(HopfSpernerError):
    pass


class DimensionMismatch(HopfSpernerError):
    pass


class ClosedManifold(HopfSpernerError):
    pass


class NotClosed(HopfSpernerError):
    pass


class NotOriented(HopfSpernerError):
    pass


class FullyLabeledSimplexPresent(HopfSpernerError):
    pass


class HypothesisViolated(HopfSpernerError):
    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


# preimage
class BadFacet(HopfSpernerError):
    pass


class NotASolidTorus(HopfSpernerError):
    pass


class NotASimpleChain(HopfSpernerError):
    pass


class BadAlphabet(HopfSpernerError):
    pass


# hopf
class NotASphere(HopfSpernerError):
    pass


class GeneratorRankUnexpected(HopfSpernerError):
    pass


# constructions
class NoLabelMatching(HopfSpernerError):
    pass


class OrientationClash(HopfSpernerError):
    pass


class BadBoundarySpec(HopfSpernerError):
    pass


class AssetMissing(HopfSpernerError):
    pass


class AssetVerificationFailed(HopfSpernerError):
    pass


# bounds
class UnsupportedSignature(HopfSpernerError):
    pass
