from typing import Optional


class CycleError(ValueError):
    """
    Raised when the reflexive-transitive closure of a cover relation is not
    antisymmetric, that is, when the covers contain a cycle.
    """


class NotDirectedError(ValueError):
    """
    Raised when a set is not directed but a directed set was expected.
    """


class EmptySetError(ValueError):
    """
    Raised when an empty set is passed where a nonempty set is required.
    """


class BoundExceededError(ValueError):
    """
    Raised when a size or bound argument exceeds its configured cap.
    """


class NotALatticeError(ValueError):
    """
    Raised when an order or family of sets does not form a lattice.
    """


class PosetParseError(ValueError):
    """
    Raised when a poset file cannot be parsed. The offending line number is
    available as ``lineno`` (``None`` when the problem is not tied to a line).
    """

    def __init__(self, msg: str, lineno: Optional[int] = None):
        self.lineno = lineno

        if lineno is not None:
            msg = f"line {lineno}: {msg}"

        super().__init__(msg)


class RedundantCoverWarning(UserWarning):
    """
    Raised when a poset file lists a pair that is implied by transitivity of
    the other pairs. This is not forbidden, but such a file does not
    round-trip exactly, since only covers are written back.
    """
