"""Exception taxonomy shared by the library and the CLI exit codes."""

from __future__ import annotations


class FullersimError(Exception):
    """Base class for all fullersim errors."""


class ConfigError(FullersimError):
    """Bad user input: malformed files, missing paths, invalid flag values."""


class GraphFormatError(ConfigError):
    """Edge-list text violates the documented format or graph invariants."""


class ScheduleFormatError(ConfigError):
    """Schedule CSV violates the documented grammar."""


class StaleCacheError(ConfigError):
    """A cached manifold was built for a different graph."""


class UnsupportedSizeError(FullersimError):
    """Problem size exceeds what this implementation supports."""


class ConvergenceError(FullersimError):
    """An iterative computation failed to converge or gave an ambiguous result."""


class CalibrationError(ConvergenceError):
    """Equivalent-time inversion found no match or an ambiguous match."""


class ConsistencyError(FullersimError):
    """Internal cross-check failed (incomplete manifold, corrupt cache)."""
