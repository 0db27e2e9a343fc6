"""Exception types shared across the package."""


class NdgError(Exception):
    """Base class for all ndgauss errors."""


class InvalidParameterError(NdgError):
    """A raw parameter is non-finite or structurally invalid.

    Carries enough context (component, parameter block, entry) to locate the
    offending value.
    """

    def __init__(self, message, component=None, block=None, entry=None):
        super().__init__(message)
        self.component = component
        self.block = block
        self.entry = entry


class DegenerateSliceError(NdgError):
    """Conditioning hit a singular fixed-block covariance."""


class NonFiniteGradientError(NdgError):
    """The backward pass produced a non-finite gradient."""

    def __init__(self, message, component=None, block=None, batch_index=None):
        super().__init__(message)
        self.component = component
        self.block = block
        self.batch_index = batch_index


class ConfigError(NdgError):
    """Config file could not be parsed or validated."""

    def __init__(self, message, line=None, field=None):
        super().__init__(message)
        self.line = line
        self.field = field


class FileFormatError(NdgError):
    """A binary file failed its magic/version/shape checks."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class TrainingAborted(NdgError):
    """Training hit a non-finite loss and stopped early."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration
