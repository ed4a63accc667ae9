"""Exception types shared across the engine."""


class InvalidParameterError(ValueError):
    """Raised when an operation receives non-finite or out-of-contract inputs."""


class ShapeError(ValueError):
    """Raised when array shapes do not match the declared layout."""


class ContractViolationError(RuntimeError):
    """Raised when paired forward/backward state does not match."""


class EmptyFlowError(RuntimeError):
    """Raised when flow lifting drops every masked pixel."""


class UndefinedMetricError(ValueError):
    """Raised when a metric is requested over an empty pixel set."""


class OptimizationDivergedError(RuntimeError):
    """Raised when too many optimization iterations produce non-finite gradients."""


class SceneValidationError(ValueError):
    """Raised when a synthetic scene spec is inconsistent (e.g. object leaves the room)."""


class SequenceLoadError(ValueError):
    """Raised on malformed or missing sequence files; message names the offending file."""


class ConfigError(ValueError):
    """Raised on unknown or invalid configuration keys."""
