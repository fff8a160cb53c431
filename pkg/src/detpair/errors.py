"""Exception hierarchy shared by all solvers."""


class DetPairError(Exception):
    """Base class for every error raised by this package."""


class NotATree(DetPairError):
    pass


class Disconnected(DetPairError):
    pass


class TooLarge(DetPairError):
    """Input exceeds the configured size ceiling of an exponential or quadratic routine."""


class NoSolutionWithin(DetPairError):
    def __init__(self, k_max):
        super().__init__(f"no solution of size <= {k_max}")
        self.k_max = k_max


class NotSpecialBranchingPoint(DetPairError):
    pass


class StemPresent(DetPairError):
    pass


class BadParam(DetPairError):
    pass


class Uncoverable(DetPairError):
    pass
