"""Exception hierarchy shared by all lpmkit modules."""


class LpmError(Exception):
    """Base class for lpmkit errors."""


class InvalidPathError(LpmError, ValueError):
    pass


class InvalidPairError(LpmError, ValueError):
    pass


class PreconditionError(LpmError, ValueError):
    """An operation was called on an input outside its domain."""


class HasLoopsError(PreconditionError):
    def __init__(self, loops, msg=None):
        self.loops = tuple(sorted(loops))
        super().__init__(msg or f"matroid has a loop: {list(self.loops)}")


class HasParallelError(PreconditionError):
    def __init__(self, pair, msg=None):
        self.pair = tuple(pair)
        super().__init__(msg or f"matroid has parallel elements {self.pair}")


class RankTooSmallError(PreconditionError):
    pass


class NotNorthStepError(PreconditionError):
    pass


class RepresentationError(LpmError, RuntimeError):
    """A rational representation failed to realize the matroid."""

    def __init__(self, msg, subset=None):
        self.subset = subset
        super().__init__(msg)


class FalsificationError(LpmError, RuntimeError):
    """A search that a theorem guarantees to succeed came up empty.

    ``artifact`` is a JSON-serializable dump of the instance and the
    exhausted search space.
    """

    def __init__(self, msg, artifact=None):
        self.artifact = artifact or {}
        super().__init__(msg)
