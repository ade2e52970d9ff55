"""Exception hierarchy. Each class carries a machine-readable ``category``."""


class WscError(Exception):
    category = "error"


class InvalidParameterError(WscError, ValueError):
    category = "invalid-parameter"


class DegenerateGeometryError(InvalidParameterError):
    category = "degenerate-geometry"


class ConfigError(WscError, ValueError):
    category = "config"


class NumericalGuardError(WscError, ArithmeticError):
    category = "numerical-guard"


class InsufficientSamplesError(NumericalGuardError):
    category = "insufficient-samples"
