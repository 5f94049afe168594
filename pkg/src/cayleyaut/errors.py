"""Exception types shared across the package."""


class CayleyAutError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(CayleyAutError):
    """An enumeration or search grew past its configured budget."""


class HypothesisViolated(CayleyAutError):
    """The fast path was asked to run on an instance outside its hypotheses."""


class NotSFixing(CayleyAutError):
    """A group automorphism does not map the generating set onto itself."""


class NoLift(CayleyAutError):
    """A line-graph automorphism is not induced by any automorphism of the base graph."""


class InvalidParams(CayleyAutError):
    """Topology parameters are outside the family's valid range."""


class Mismatch(CayleyAutError):
    """The fast path and the brute-force oracle disagree."""
