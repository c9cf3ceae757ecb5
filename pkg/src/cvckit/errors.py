"""Exception types shared across the package."""


class CvcKitError(Exception):
    """Base class for all package-specific errors."""


class InputError(CvcKitError, ValueError):
    """Invalid caller input: bad vertices, disconnected graph where a
    connected one is required, malformed parameters, missing variables."""


class DimacsError(InputError):
    """Malformed DIMACS text; the message names the offending line."""


class SizeCapError(InputError):
    """Instance exceeds a hard size cap of an exhaustive routine."""


class ContractError(CvcKitError, RuntimeError):
    """A documented precondition between internal components was violated."""
