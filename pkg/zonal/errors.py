"""Exception hierarchy shared by every module."""


class ZonalError(ValueError):
    """Root of all library errors."""


class PartitionError(ZonalError):
    pass


class SymPolyError(ZonalError):
    pass


class DegenerateEigenvalueError(ZonalError):
    pass


class HyperError(ZonalError):
    pass


class QuadratureError(ZonalError):
    pass


class EnsembleError(ZonalError):
    pass


class ConfigError(ZonalError):
    pass
