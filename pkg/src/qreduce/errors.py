"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Scenario configuration is missing keys or holds out-of-range values."""


class CapExceededError(RuntimeError):
    """A hard size cap was hit (environment qubits, coarse-graining enumeration)."""


class NumericalContractError(RuntimeError):
    """A cross-check between two independent computation routes failed."""


class ConvergenceError(RuntimeError):
    """The eigensolver did not reach its target within the sweep cap."""
