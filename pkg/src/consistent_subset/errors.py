"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: input/contract problems exit 1,
internal invariant breaches exit 2, resource caps exit 3.
"""


class InputError(ValueError):
    """Malformed input data (bad file format, out-of-range ids, ...)."""


class ContractError(ValueError):
    """A precondition of an operation was violated by the caller."""


class InternalError(RuntimeError):
    """A solver produced an invalid result. Must never happen."""


class ResourceLimitError(RuntimeError):
    """An enumeration or instance size exceeded its configured cap."""
