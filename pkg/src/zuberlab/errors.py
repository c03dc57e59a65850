"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the region where a quantity is defined."""


class ConfigError(ValueError):
    """A campaign or CLI configuration is invalid."""


class CapExceededError(ConfigError):
    """A fusion graph would exceed the desk-scale vertex cap."""


class VerificationError(RuntimeError):
    """A mathematical check failed.

    Raised when an identity that should hold exactly (or within the stated
    tolerance) does not. Under correct code this never happens, so it signals a
    bug or a convention mismatch rather than bad input.
    """
