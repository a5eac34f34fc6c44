"""Exception hierarchy shared by every module of the package."""


class GradloopError(Exception):
    """Base class. ``location`` names the offending entry when there is one."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class GroupOrderExceeded(GradloopError):
    pass


class GroupMismatch(GradloopError):
    pass


class NotASubgroup(GradloopError):
    pass


class NotSurjective(GradloopError):
    pass


class HomNotWellDefined(GradloopError):
    pass


class InfiniteTarget(GradloopError):
    pass


class UnrepresentableValue(GradloopError):
    pass


class Inconsistent(GradloopError):
    """Unsolvable linear system; ``certificate`` is y with y*A = 0 and y*b != 0."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NoSolution(GradloopError):
    """Unsolvable integer congruence system.

    ``certificate`` is a pair ``(u, g)``: every entry of ``u*A`` is divisible by
    ``g`` (all zero when ``g == 0``) while ``u*t`` is not, where ``A`` is the
    integer matrix of the system with modulus slack columns appended.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class CocycleError(GradloopError):
    pass


class CocycleIdentityViolation(CocycleError):
    pass


class NotSymmetric(CocycleError):
    pass


class NotNormalized(CocycleError):
    pass


class SectionInvalid(CocycleError):
    pass


class ExtensionFailure(CocycleError):
    pass


class ClassMismatch(CocycleError):
    pass


class GradingViolation(GradloopError):
    pass


class DimensionExceeded(GradloopError):
    pass


class CentroidNotGradedField(GradloopError):
    pass


class CentroidNotSplit(GradloopError):
    pass


class NotGradedCentral(GradloopError):
    pass


class SimplicityUnknown(GradloopError):
    pass


class NotGradedSimple(GradloopError):
    pass


class CertificateFailure(GradloopError):
    pass


class DocumentError(GradloopError):
    pass
