"""Exception hierarchy shared across the package.

Each error maps to a distinct process exit status in the command line
interface, so the classes stay deliberately small and concrete.
"""


class BrickEntropyError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(BrickEntropyError):
    """Malformed run configuration (bad key, unparsable value, missing file)."""

    exit_status = 2


class CapExceededError(BrickEntropyError):
    """A sign enumeration was requested past the hard combinatorial cap."""

    exit_status = 3


class KernelInvariantError(BrickEntropyError):
    """An internal cross-check failed; results cannot be trusted."""

    exit_status = 4


class PreconditionError(BrickEntropyError):
    """Operation preconditions not met (e.g. net requested for an unbounded set)."""


class BudgetError(BrickEntropyError):
    """A grid or sample budget would be exceeded."""
