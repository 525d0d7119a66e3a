"""
Exception types shared by all packages.

Every validation error is a ``ValueError`` subclass so callers that already
catch ``ValueError`` keep working.
"""


class ParameterError(ValueError):
    """Invalid code, decoder or simulation parameter."""


class LengthMismatchError(ValueError):
    """Two vectors that must agree in length do not."""


class DimensionTooLargeError(ValueError):
    """Exhaustive search requested over too many codewords."""


class ConfigError(ValueError):
    """Invalid or unknown configuration key."""


class ResultsWriteError(OSError):
    """Simulation output could not be written."""

    def __init__(self, path, reason):
        self.path = str(path)
        super().__init__(f"Cannot write results to {self.path}: {reason}")
