"""Domain errors. Argument misuse raises plain ValueError instead."""


class DeBruijnError(Exception):
    """Base class for domain-level failures (bad language, bad graph, size limits)."""


class NotIrreducibleError(DeBruijnError):
    """The language is too sparse for the requested computation."""


class AmbiguousComponentError(DeBruijnError):
    """Two or more strongly connected components tie for the maximal arc count."""


class EmptyGraphError(DeBruijnError):
    """No arc survives the construction at the requested span."""


class NotEulerianError(DeBruijnError):
    """The graph admits no Eulerian circuit (unbalanced or disconnected)."""


class TooLargeError(DeBruijnError):
    """Instance exceeds the configured exhaustive-search bound."""


class TheoremViolationError(DeBruijnError):
    """The two independent decision criteria disagree; indicates a bug."""
