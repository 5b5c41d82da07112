"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its domain."""


class GuardExceeded(ValueError):
    """A size guard (brute force, enumeration, canonical search) was exceeded."""


class HypothesisNotMet(ValueError):
    """A lemma checker was called on an input outside the lemma's hypotheses."""
