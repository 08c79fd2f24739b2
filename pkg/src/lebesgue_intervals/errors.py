"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (the class name) so the
CLI can emit ``{"error": code, "detail": text}`` without a lookup table.
"""


class LebesgueError(ValueError):
    @property
    def code(self) -> str:
        return type(self).__name__


class NotIncreasing(LebesgueError):
    pass


class BadBoundary(LebesgueError):
    pass


class DuplicateNode(LebesgueError):
    pass


class NodeOutsideSet(LebesgueError):
    pass


class PoleOnSet(LebesgueError):
    pass


class DegenerateInput(LebesgueError):
    pass


class EndpointAlreadyNode(LebesgueError):
    pass


class EndpointOutsideHost(LebesgueError):
    pass


class DomainError(LebesgueError):
    pass


class PoleHit(LebesgueError):
    pass


class NonMonotoneMap(LebesgueError):
    pass


class QuadratureNotConverged(LebesgueError):
    pass


class AlphaOnGap(LebesgueError):
    pass


class DeltaNotInBand(LebesgueError):
    pass


class NoSolution(LebesgueError):
    pass


class MultipleSolutions(LebesgueError):
    pass


class TargetOnPlateau(LebesgueError):
    pass


class ConsistencyError(LebesgueError):
    """An identity guaranteed by construction failed numerically."""


class UsageError(LebesgueError):
    pass
