class GuardExceeded(RuntimeError):
    """A sweep or product would exceed its configured work limit."""


class CrossCheckFailure(AssertionError):
    """Two independent computations of the same quantity disagree."""
