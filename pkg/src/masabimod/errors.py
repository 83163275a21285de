"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (dimension mismatch, bad document, ...)."""


class InvariantViolation(RuntimeError):
    """A structural identity that must hold by construction did not hold."""
